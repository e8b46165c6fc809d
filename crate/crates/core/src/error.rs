//! Error type shared by every module of the crate.

use thiserror::Error;

/// Failure modes of the exact-arithmetic layer and everything built on it.
///
/// `Usage` and `Domain` indicate bad input; `TooLarge` means the request is
/// well-posed but would need infeasibly large exact arithmetic; `Internal`
/// means a checked mathematical invariant failed and should never be seen.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("usage error: {0}")]
    Usage(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("size limit exceeded: {0}")]
    TooLarge(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
    pub fn too_large(msg: impl Into<String>) -> Self {
        Error::TooLarge(msg.into())
    }
    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
