use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the domain where the quantity is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// A matrix or matrix recipe is malformed.
    #[error("construction error: {0}")]
    Construction(String),

    /// The dense oracle refuses matrices above its size limit.
    #[error("oracle scope exceeded: order {order} is above the limit of {limit}")]
    OracleScope { order: usize, limit: usize },

    /// Exact rational tables are only offered up to fixed bounds.
    #[error("exact mode supports n <= {n_limit} and k <= {k_limit}, got n = {n}, k = {k}")]
    ExactLimit {
        n: usize,
        k: usize,
        n_limit: usize,
        k_limit: usize,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
