//! Vector-valued nonsymmetric Jack polynomials for the symmetric group with
//! exact coefficients in Q(κ), and checks of singular polynomials for
//! rectangular shapes.

pub mod combinatorics;
pub mod error;
pub mod field;
pub mod jack;
pub mod json;
pub mod operators;
pub mod poly;
pub mod singular;

pub use error::Error;
