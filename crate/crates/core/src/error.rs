use thiserror::Error;

/// Errors raised by the model operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("magnetic length diverges at zero field")]
    SingularField,

    #[error("{what} is undefined for n = 0")]
    UndefinedAtZero { what: &'static str },

    #[error("pole in {what}")]
    Pole { what: &'static str },

    #[error("cannot invert a zero transport tensor")]
    SingularInversion,

    #[error("integer overflow in exact rational arithmetic")]
    Overflow,

    #[error("quadrature did not converge: best estimate {best_estimate:e}, error estimate {error_estimate:e}")]
    Accuracy {
        best_estimate: f64,
        error_estimate: f64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidParameter {
        name,
        reason: reason.into(),
    }
}

/// Rejects non-finite or non-positive values.
pub(crate) fn require_positive(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(invalid(
            name,
            format!("must be finite and > 0, got {value}"),
        ))
    }
}
