use thiserror::Error;

/// Errors raised by the library's checked constructors and algorithms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ForgeError {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid profile: {0}")]
    InvalidProfile(String),
    #[error("partition {partition} does not fit in a {rows}x{cols} frame")]
    FrameTooSmall { partition: String, rows: usize, cols: usize },
    #[error("({i},{j}) is not an inversion of the profile")]
    NotAnInversion { i: usize, j: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant failed: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, ForgeError>;

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(ForgeError::Precondition(msg.into()))
}
