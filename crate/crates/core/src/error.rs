use thiserror::Error;

use crate::zeros::Bracket;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Polynomial-family parameters outside their admissible domain.
    #[error("invalid parameters: {0}")]
    Parameter(String),

    /// An argument outside the domain of an operation (x <= 0 for ln Γ, k = 1
    /// for the Hermite limit, ...).
    #[error("domain error: {0}")]
    Domain(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Scanning could not separate the expected number of sign changes.
    /// Either roots are (nearly) multiple or the expected count is wrong.
    #[error(
        "could not isolate {expected} sign changes on [{lo}, {hi}]: found {} after {points} scan points",
        found.len()
    )]
    Isolation {
        expected: usize,
        lo: f64,
        hi: f64,
        points: usize,
        found: Vec<Bracket>,
    },

    #[error("numeric failure: {0}")]
    Numeric(String),

    /// The quadrature backing the Gram-Schmidt oracle did not settle.
    #[error("oracle precision: {0}")]
    OraclePrecision(String),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// True for errors caused by the caller's inputs rather than by the
    /// numerics.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Parameter(_) | Error::Domain(_) | Error::Unsupported(_)
        )
    }
}
