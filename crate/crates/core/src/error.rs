use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed or inconsistent input data.
    #[error("input error: {0}")]
    Input(String),
    /// An operation was called outside its domain.
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// An enumeration would exceed its configured bound.
    #[error("resource guard exceeded: {what} (bound {bound})")]
    Resource { what: String, bound: usize },
    /// Input that is well-formed but outside what the library handles.
    #[error("unsupported input: {0}")]
    Unsupported(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn resource(what: impl Into<String>, bound: usize) -> Self {
        Error::Resource {
            what: what.into(),
            bound,
        }
    }

    /// Process exit code used by the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Input(_) | Error::Precondition(_) | Error::Unsupported(_) => 2,
            Error::Resource { .. } => 3,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
