use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A brute-force or per-element path was asked to run beyond its size limit.
    #[error("{path} refuses n = {n} (limit {limit}); {hint}")]
    Guard {
        path: &'static str,
        n: usize,
        limit: usize,
        hint: &'static str,
    },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("degree mismatch: permutation of {found} points, expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },

    /// An exact identity that must hold did not. Always a bug, never a user error.
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

impl Error {
    /// Process exit code for this error: 1 for consistency failures, 2 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Consistency(_) => 1,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
