//! Crate-wide error type.

use thiserror::Error;

/// Errors raised by the library.
///
/// `Domain` marks bad input (invalid shape, size mismatch, out-of-range
/// index). `Internal` marks a broken algebraic guarantee — e.g. a division
/// the theory promises is exact left a remainder — and always indicates a
/// bug, never bad input. `Inconsistent` marks a failed cross-check between
/// two routes that must agree (negative multiplicity in a filtration table,
/// weight sums off).
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid argument for the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// An exactness guarantee failed; this is an implementation bug.
    #[error("internal error: {0}")]
    Internal(String),

    /// A structural consistency check failed.
    #[error("consistency error: {0}")]
    Inconsistent(String),

    /// I/O failure while writing tables or reports.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    pub fn inconsistent(msg: impl Into<String>) -> Self {
        Error::Inconsistent(msg.into())
    }
}
