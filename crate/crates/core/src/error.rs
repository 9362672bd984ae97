use thiserror::Error;

/// Errors raised while reading, validating or solving an instance.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("expected {expected} flow values, found {found}")]
    Arity { expected: usize, found: usize },

    #[error("graph contains a directed cycle; use the general cycle-oracle solver")]
    NotAcyclic,

    #[error("enumeration size {size} exceeds guard {guard}")]
    GuardExceeded { size: u128, guard: u128 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal error: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}
