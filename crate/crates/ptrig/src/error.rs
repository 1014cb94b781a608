//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced by evaluation routines.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Argument outside the mathematical domain of the requested function.
    #[error("domain error: {0}")]
    Domain(String),

    /// Invalid parameter (e.g. a hypergeometric `c` at or near a pole).
    #[error("parameter error: {0}")]
    Parameter(String),

    /// The requested value diverges (e.g. F(a,b;c;1) with c-a-b <= 0).
    #[error("divergence error: {0}")]
    Divergence(String),

    /// An iteration or term cap was reached before the tolerance was met.
    /// Carries the best value obtained and its estimated error so callers
    /// that tolerate degraded accuracy can still use it.
    #[error("convergence error: {context} (best value {value}, est. error {abs_err})")]
    Convergence {
        value: f64,
        abs_err: f64,
        context: String,
    },

    /// Result overflowed or is otherwise not representable as a finite f64.
    #[error("range error: {0}")]
    Range(String),
}

pub type Result<T> = std::result::Result<T, Error>;
