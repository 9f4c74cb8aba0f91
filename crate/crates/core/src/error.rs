use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("enumeration refused: predicted order {predicted} exceeds cap {cap}")]
    EnumerationCap { predicted: String, cap: u64 },
    #[error("not a character: {0}")]
    NotACharacter(String),
    #[error("invalid projection: {0}")]
    InvalidProjection(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
