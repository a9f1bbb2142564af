use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootError {
    #[error("invalid simple type {family}{rank}")]
    InvalidType { family: char, rank: usize },
    #[error("cannot parse type string {0:?}")]
    Parse(String),
    #[error("weight belongs to {got}, expected {expected}")]
    SystemMismatch { expected: String, got: String },
    #[error("weight has {got} coordinates, expected {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("weight {0} is not dominant integral")]
    NotDominantIntegral(String),
    #[error("invalid Kac coordinates: {0}")]
    InvalidKac(String),
    #[error("unsupported twisted diagram: {0}")]
    UnsupportedTwist(String),
    #[error("Cartan matrix is not of finite type: {0}")]
    UnknownDiagram(String),
}
