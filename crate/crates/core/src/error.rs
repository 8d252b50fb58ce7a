use thiserror::Error;

/// Errors raised by toolkit operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// An index or parameter is outside its admissible range.
    #[error("out of range: {0}")]
    OutOfRange(String),
    /// An input function violates a precondition (vanishing, symmetry, ...).
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// A dimension constraint attached to an explicit constant failed.
    #[error("constraint violated: {0}")]
    Constraint(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn out_of_range(msg: impl Into<String>) -> Error {
    Error::OutOfRange(msg.into())
}

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}
