//! Error type shared across the crate.

use thiserror::Error;

/// Failures surfaced by constructors and numerical routines.
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid argument: wrong dimensions, out-of-range parameters,
    /// zero vectors where nonzero data is required.
    #[error("domain error: {0}")]
    Domain(String),

    /// Shapes of two operands do not line up.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// An iterative solver ran out of its iteration budget.
    #[error("{what} did not converge: residual {residual:e} after {iterations} iterations")]
    NonConvergence {
        what: &'static str,
        residual: f64,
        iterations: usize,
    },

    /// A computation produced NaN/Inf or would overflow.
    #[error("numerical failure: {0}")]
    Numerical(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn numerical(msg: impl Into<String>) -> Self {
        Error::Numerical(msg.into())
    }
}
