use num_rational::BigRational;
use thiserror::Error;

use crate::combinatorics::Composition;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("pole at kappa = {kappa} ({} offending exponents)", exponents.len())]
    PoleAtKappa { kappa: BigRational, exponents: Vec<Composition> },

    #[error("no reverse standard tableau has content vector {0:?}")]
    NoSuchTableau(Vec<i64>),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("tableau is not reverse standard after swapping {0} and {1}")]
    NotAnRsyt(usize, usize),

    #[error("permissible-step reduction needs a two-row shape, got {0:?}")]
    NotReducible(Vec<usize>),

    #[error("bad shape parameters m={m}, k={k}: need m >= 1 and k >= 2")]
    BadShapeParams { m: usize, k: usize },

    #[error("bad parameters: {0}")]
    BadParams(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("spectral vector of {0:?} collides with another label at generic kappa")]
    SpectralCollision(Vec<u32>),

    #[error("b-value denominator vanishes identically at index {0}")]
    ZeroDenominator(usize),

    #[error("polynomial is not a simultaneous eigenvector of the Jucys-Murphy elements (index {0})")]
    NotIsotypic(usize),

    #[error("pair tableau order violated at cell ({0},{1})")]
    OrderViolation(usize, usize),

    #[error("closure violated: {0}")]
    ClosureViolation(String),

    #[error("Dunkl image D_{index} is nonzero for {label}")]
    NonzeroDunklImage { index: usize, label: String },

    #[error("parse error: {0}")]
    Parse(String),
}
