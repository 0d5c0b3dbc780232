//! The module `P_τ` of vector-valued polynomials and the symmetric-group action.

mod irrep;
mod vector_poly;

pub use irrep::{Irrep, SparseMatrix};
pub use vector_poly::{TermKey, VectorPoly};
