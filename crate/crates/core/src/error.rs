use thiserror::Error;

/// Errors raised by parsing, solving and verification.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Ill-formed input file; `line` is 1-based.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A precondition of an operation does not hold.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A tree decomposition fails vertex coverage, edge coverage, connectivity
    /// or the nice-form rules.
    #[error("invalid tree decomposition: {0}")]
    InvalidDecomposition(String),

    /// The instance falls outside what the selected algorithm handles.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// An exhaustive search refused to start or ran past its budget.
    #[error("search cap exceeded: {0}")]
    CapExceeded(String),

    /// A constructive step failed an invariant it is supposed to guarantee.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

pub(crate) fn internal(msg: impl Into<String>) -> Error {
    Error::Internal(msg.into())
}
