use thiserror::Error;

/// Errors surfaced by the library.
///
/// Configuration and parameter problems are kept separate from verification
/// failures on purpose: a verification failure is a *result* (reported through
/// residuals and verdicts), never an `Err`.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("unsupported dimension n = {n}: {reason}")]
    UnsupportedDimension { n: usize, reason: String },

    #[error("index out of range: {0}")]
    InvalidIndex(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("no invariant spinors: {0}")]
    EmptyInvariantSpace(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
