use crate::complex::Complex;

/// Errors surfaced by the numerical routines in this crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("signal must contain at least one sample")]
    Empty,

    #[error("length {len} is not a power of two")]
    NotPowerOfTwo { len: usize },

    #[error("non-finite value in {what}")]
    NonFinite { what: &'static str },

    #[error("invalid parameter `{name}` = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: String, actual: String },

    #[error("spectrum is not real-originating: imaginary residue {residue:e} exceeds {limit:e}")]
    ImaginaryResidue { residue: f64, limit: f64 },

    #[error("quadrature did not converge at {panels} panels (last estimate {estimate})")]
    QuadratureConvergence { estimate: Complex, panels: usize },

    #[error("series argument |z| = {modulus} lies outside the unit disc")]
    SeriesDomain { modulus: f64 },

    #[error("series did not converge after {terms} terms (partial sum {partial})")]
    SeriesConvergence { partial: Complex, terms: usize },

    #[error("parameter `{name}` = {value} sits on or too close to a pole")]
    Pole { name: &'static str, value: f64 },

    #[error("expression is singular at {name} = 0")]
    Singular { name: &'static str },

    #[error(
        "truncation at T = {horizon} leaves tail bound {tail:e}; widen horizon to at least {suggested}"
    )]
    Truncation {
        horizon: f64,
        tail: f64,
        suggested: f64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn ensure_finite(value: f64, what: &'static str) -> Result<()> {
    if value.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite { what })
    }
}

pub(crate) fn ensure_positive(value: f64, name: &'static str) -> Result<()> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name,
            value,
            reason: "must be finite and strictly positive",
        })
    }
}
