use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("operator undefined: {0}")]
    UndefinedOperator(&'static str),
    #[error("outside operator domain: {0}")]
    Domain(String),
    #[error("unsupported shape: {0}")]
    Unsupported(String),
    #[error("internal contract violation: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
