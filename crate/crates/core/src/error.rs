use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("label mismatch: cannot compose {left} after {right}")]
    LabelMismatch { left: String, right: String },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("vector does not lie in {0}")]
    NotInSubspace(String),

    #[error("matrix is singular")]
    Singular,

    #[error("parameters out of range: {0}")]
    OutOfRange(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("{0}")]
    Failed(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Shorthand for precondition failures.
pub(crate) fn out_of_range<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::OutOfRange(msg.into()))
}
