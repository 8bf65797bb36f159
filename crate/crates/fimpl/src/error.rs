use thiserror::Error;

/// Errors reported by the operator factories and checkers.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    /// A candidate chain component violated monotonicity, range or
    /// boundary requirements; `witness` is a sample point exhibiting it.
    #[error("invalid chain: {reason} (witness t = {witness})")]
    InvalidChain { reason: String, witness: f64 },

    /// `F(c(t)) = t` failed on the validation grid.
    #[error("not an F-chain: |F(c(t)) - t| = {deviation:.3e} at t = {at}")]
    NotFChain { deviation: f64, at: f64 },

    #[error("missing context: {0}")]
    MissingContext(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
