use thiserror::Error;

/// Failures reported by the computation engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A theorem-gated computation was requested for a space that does not
    /// carry the required flag.
    #[error("hypothesis violated: space `{space}` is not {flag}")]
    Hypothesis { space: String, flag: &'static str },

    /// Arguments outside the operation's domain (bad sizes, malformed data).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An internal identity failed: a division that must be exact was not, a
    /// Betti number came out negative, two independent routes disagreed.
    #[error("consistency failure: {0}")]
    Consistency(String),

    /// An enumeration would exceed its configured size cap.
    #[error("cost cap exceeded: {what} (limit {limit})")]
    CapExceeded { what: String, limit: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn consistency(msg: impl Into<String>) -> Self {
        Error::Consistency(msg.into())
    }
}
