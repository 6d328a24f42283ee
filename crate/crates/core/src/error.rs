use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Argument outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Requested size exceeds a memory or overflow guard.
    #[error("size error: {what} = {requested} exceeds the limit {limit}")]
    Size {
        what: &'static str,
        requested: u64,
        limit: u64,
    },

    /// Query beyond what a sieve table covers.
    #[error("out of range: {what} = {requested} but the table only reaches {limit}")]
    OutOfRange {
        what: &'static str,
        requested: u64,
        limit: u64,
    },

    /// Malformed request (bad name, empty grid, non-coprime pair...).
    #[error("usage error: {0}")]
    Usage(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    /// Short machine-readable tag, used by the CLI's structured errors.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Domain(_) => "domain",
            Error::Size { .. } => "size",
            Error::OutOfRange { .. } => "out_of_range",
            Error::Usage(_) => "usage",
        }
    }
}
