//! Binary cross-entropy and its exponential / frequency-domain forms.

use crate::complex::Complex;
use crate::error::{ensure_finite, Error, Result};

/// A label `y ∈ {0, 1}` and a predicted probability `p ∈ (0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BceInput {
    y: f64,
    p: f64,
}

impl BceInput {
    pub fn new(y: f64, p: f64) -> Result<Self> {
        if y != 0.0 && y != 1.0 {
            return Err(Error::InvalidParameter {
                name: "y",
                value: y,
                reason: "label must be 0 or 1",
            });
        }
        if !(p > 0.0 && p < 1.0) {
            return Err(Error::InvalidParameter {
                name: "p",
                value: p,
                reason: "probability must lie strictly inside (0, 1)",
            });
        }
        Ok(BceInput { y, p })
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn p(&self) -> f64 {
        self.p
    }
}

/// `−(y·ln p + (1 − y)·ln(1 − p))`.
///
/// `ln(1 − p)` is taken literally rather than through `ln_1p`, so that
/// `bce(1, p) == bce(0, 1 − p)` bit-for-bit whenever `1 − p` is exact.
pub fn bce(input: &BceInput) -> f64 {
    let BceInput { y, p } = *input;
    -(y * p.ln() + (1.0 - y) * (1.0 - p).ln())
}

/// `p^{−y}·(1 − p)^{y−1}`, which equals `exp(bce)`.
pub fn bce_exp_form(input: &BceInput) -> f64 {
    let BceInput { y, p } = *input;
    p.powf(-y) * (1.0 - p).powf(y - 1.0)
}

/// Both sides of `exp(bce) = p^{−y}(1 − p)^{y−1}`, as `(lhs, rhs)`.
pub fn bce_exp_identity_check(input: &BceInput) -> (f64, f64) {
    (bce(input).exp(), bce_exp_form(input))
}

/// `p^{−y}(1 − p)^{y−1}·e^{−iωx} / (−iω)`.
///
/// A formal antiderivative in `x`: its `x`-derivative is
/// `p^{−y}(1 − p)^{y−1}·e^{−iωx}`. Singular at `ω = 0`.
pub fn bce_ft_antiderivative(x: f64, omega: f64, input: &BceInput) -> Result<Complex> {
    ensure_finite(x, "x")?;
    ensure_finite(omega, "omega")?;
    if omega == 0.0 {
        return Err(Error::Singular { name: "omega" });
    }
    let amplitude = bce_exp_form(input);
    Ok(Complex::cis(-omega * x).scale(amplitude) / Complex::new(0.0, -omega))
}
