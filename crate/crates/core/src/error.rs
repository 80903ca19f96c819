use thiserror::Error;

/// Errors raised by ideal arithmetic, graph construction and the CLI layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input: bad names, out-of-range indices, mismatched contexts, bad documents.
    #[error("input error: {0}")]
    Input(String),

    /// Ideal expression could not be parsed.
    #[error("parse error at position {position}: expected {expected}")]
    Parse { position: usize, expected: String },

    /// The operation is not defined for this input (e.g. minimal primes of the unit ideal).
    #[error("domain error: {0}")]
    Domain(String),

    /// Too many variables for the word-sized subset representation, or for an oracle.
    #[error("capacity error: {0}")]
    Capacity(String),

    /// An internal consistency check failed.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// Process exit code used by the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Input(_) | Error::Parse { .. } | Error::Domain(_) => 1,
            Error::Capacity(_) => 2,
            Error::Invariant(_) => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
