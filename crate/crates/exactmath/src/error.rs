use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MathError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("eigen residual exceeded tolerance: {residual:e} >= {bound:e}")]
    ResidualExceeded { residual: f64, bound: f64 },
    #[error("Schur iteration did not converge in {0} steps")]
    NoConvergence(usize),
    #[error("division by zero")]
    DivisionByZero,
}
