//! Error type shared by every module.

use thiserror::Error;

/// Errors raised by the toolkit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// The (family, rank) pair does not name a simple root system.
    #[error("invalid root system {family}{rank}: {reason}")]
    InvalidType {
        family: String,
        rank: usize,
        reason: String,
    },
    /// A weight has the wrong number of coordinates or failed to parse.
    #[error("malformed weight: {0}")]
    MalformedWeight(String),
    /// A weight that should be a root is not one.
    #[error("{0} is not a root")]
    NotARoot(String),
    /// An input violates an operation's precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// A computation exceeded its iteration cap.
    #[error("iteration cap exceeded: {0}")]
    IterationCap(String),
    /// Supplied data (fixture, provider table) is internally inconsistent.
    #[error("inconsistent data: {0}")]
    Inconsistent(String),
    /// Reading or writing a file failed.
    #[error("i/o error: {0}")]
    Io(String),
}

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Io(e.to_string())
    }
}
