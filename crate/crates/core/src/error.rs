use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A caller-supplied parameter is outside the supported domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// A closed-form evaluation produced a value that should have been an
    /// integer (or agreed with a second route) and did not.
    #[error("internal assertion failed: {0}")]
    Assertion(String),

    #[error("resource bound exceeded: {0}")]
    ResourceBound(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub fn assertion(msg: impl Into<String>) -> Self {
        Error::Assertion(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
