//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by exact arithmetic, table lookups, and the numerical rail.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Division of a rational by zero.
    #[error("division by zero")]
    DivisionByZero,

    /// A string did not parse as a `num/den` rational.
    #[error("invalid rational literal {0:?}")]
    ParseRational(String),

    /// Table or polynomial index outside the constructed range.
    #[error("index {index} out of range (max {max})")]
    IndexOutOfRange { index: usize, max: usize },

    /// A Bernoulli table too small for the requested quantity.
    #[error("table of max index {max_index} too small: need index {needed}")]
    TableTooSmall { needed: usize, max_index: usize },

    /// Parameter outside an operation's domain.
    #[error("domain violation: {0}")]
    Domain(String),

    /// Tolerance must be positive and finite.
    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),

    /// Evaluation budget and depth caps must be positive.
    #[error("invalid quadrature budget: {0}")]
    InvalidBudget(String),

    /// The integrand returned NaN.
    #[error("integrand returned NaN at t = {at}")]
    NanIntegrand { at: f64 },

    /// Direct zeta series requested at a divergent argument.
    #[error("zeta series diverges for s = {0} (requires s > 1)")]
    SeriesDiverges(f64),

    /// An exponential sum failed to converge within its term cap.
    #[error("exponential sum did not converge within {cap} terms")]
    SumNotConverged { cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
