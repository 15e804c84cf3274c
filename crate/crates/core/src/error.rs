use thiserror::Error;

/// Errors raised by constructors, engines and the instance reader.
///
/// A `No` answer is never an error: engines report it through
/// [`SolveResult::No`](crate::SolveResult::No).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    /// An engine was called on an input outside its class.
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    /// A constructed answer failed its own verification.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
