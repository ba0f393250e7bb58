use thiserror::Error;

/// Errors raised by the identity engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Polynomial text could not be parsed.
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    /// A variable name outside `x1..xn` for the requested arity.
    #[error("unknown variable `{name}` at byte {position} (arity {arity})")]
    UnknownVariable {
        name: String,
        position: usize,
        arity: usize,
    },

    /// Two multivariate polynomials of different arity were combined.
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    /// Values of different weight (powers of pi) were added.
    #[error("weight mismatch: pi^{} vs pi^{}", 2 * .left, 2 * .right)]
    WeightMismatch { left: u32, right: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
