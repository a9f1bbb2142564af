use exactmath::MathError;
use rootdata::RootError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LatticeError {
    #[error(transparent)]
    Math(#[from] MathError),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error("unsupported glue component {0}")]
    UnsupportedComponent(String),
    #[error("glue digit {digit} out of range for component {component}")]
    BadDigit { component: usize, digit: u8 },
    #[error("assembly is not an even unimodular lattice: {0}")]
    NotEvenUnimodular(String),
    #[error("norm-2 vector outside the root sublattice")]
    ExtraRoots,
    #[error("isometry check failed: {0}")]
    NotIsometry(String),
    #[error("no order-3 standard lift: {0}")]
    NoStandardLift(String),
    #[error("rounding unverified: {0}")]
    RoundingUnverified(String),
    #[error("eigenvalues of order {0} are outside Q(ω)")]
    UnsupportedOrder(u32),
}
