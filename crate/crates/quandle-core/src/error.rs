use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

/// Error kinds, mirrored by the CLI exit codes (input = 2, domain = 1,
/// resource = 3).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed input: out-of-range entries, size mismatches, non-units.
    Input(String),
    /// Structurally valid input outside the operation's domain
    /// (e.g. a matrix that is not a twist matrix).
    Domain(String),
    /// A configured cap was exceeded.
    Resource(String),
    /// An internal consistency check failed; indicates a bug or a
    /// non-quandle table smuggled past construction.
    Internal(String),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
    pub fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }
    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    pub fn message(&self) -> &str {
        match self {
            Error::Input(m) | Error::Domain(m) | Error::Resource(m) | Error::Internal(m) => m,
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Input(m) => write!(f, "input error: {m}"),
            Error::Domain(m) => write!(f, "domain error: {m}"),
            Error::Resource(m) => write!(f, "resource error: {m}"),
            Error::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}
