//! Nonsymmetric Jack polynomials: spectral vectors, construction, and the
//! simple-reflection transformation rules.

mod construct;
mod reflect;
mod spectral;

pub use construct::{construct_jack, construct_jack_with_stats, leading_vector, ConstructionStats, JackLabel, JackPolynomial};
pub use reflect::{apply_simple_reflection, ReflectionCase, Transformation};
pub use spectral::{SpectralEntry, SpectralVector};
