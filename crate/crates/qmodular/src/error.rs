use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QError {
    #[error("truncation must be positive, got {0}")]
    NonPositiveTrunc(i64),
    #[error("eta scale must be positive")]
    NonPositiveScale,
    #[error("series has no known nonzero term below its truncation")]
    NotInvertible,
    #[error("inconsistent dimensions: formula gives {0}")]
    NegativeDimension(i64),
}
