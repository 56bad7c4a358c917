use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A physical parameter violates its constraint (positivity, finiteness, normalization).
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    /// An argument lies outside the domain of the operation (negative time, empty grid, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Adaptive quadrature could not meet its tolerance within the subdivision budget.
    #[error(
        "quadrature did not converge: estimate {re:.6e}{im:+.6e}i, error bound {error:.3e} \
         exceeds tolerance {tolerance:.3e} after {subdivisions} subdivisions",
        re = .estimate.re,
        im = .estimate.im
    )]
    ConvergenceFailure {
        estimate: num_complex::Complex64,
        error: f64,
        tolerance: f64,
        subdivisions: usize,
    },
}

impl Error {
    pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub(crate) fn check_time(t: f64) -> Result<()> {
    if !t.is_finite() || t < 0.0 {
        return Err(Error::domain(format!("time must be finite and >= 0, got {t}")));
    }
    Ok(())
}
