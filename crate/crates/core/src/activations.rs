//! Fourier-domain forms of the sigmoid, ReLU and Heaviside step.
//!
//! One-dimensional transforms here use angular frequency, `e^{-iωx}`.
//!
//! The sigmoid expression retains the spatial variable `x`; it is an
//! antiderivative of the transform integrand `S(x)·e^{-iωx}`, evaluated with
//! the ₂F₁ series and therefore restricted to `x < 0` where `|−eˣ| < 1`.

use std::f64::consts::PI;

use crate::complex::Complex;
use crate::error::{ensure_finite, ensure_positive, Error, Result};
use crate::hypergeometric::{hyp2f1, Hyp2F1Params, SeriesControl};
use crate::quadrature::{integrate, QuadratureSpec};

/// Below this value of `|ω|·k` the ReLU transform switches to its Taylor branch.
pub const RELU_SERIES_CROSSOVER: f64 = 1e-4;

/// Logistic sigmoid `1/(1 + e^{-x})`, evaluated without overflow.
pub fn sigmoid(x: f64) -> f64 {
    if x >= 0.0 {
        1.0 / (1.0 + (-x).exp())
    } else {
        let e = x.exp();
        e / (1.0 + e)
    }
}

/// `e^{(1−iω)x} / (eˣ + 1)`, i.e. `S(x)·e^{-iωx}`.
pub fn sigmoid_ft_integrand(x: f64, omega: f64) -> Complex {
    Complex::cis(-omega * x).scale(sigmoid(x))
}

/// `i·e^{x−iωx}/(ω+i) · ₂F₁(1, 1−iω; 2−iω; −eˣ)` for `x < 0`.
///
/// Its derivative in `x` is [`sigmoid_ft_integrand`].
pub fn sigmoid_ft_antiderivative(x: f64, omega: f64, ctl: &SeriesControl) -> Result<Complex> {
    ensure_finite(x, "x")?;
    ensure_finite(omega, "omega")?;
    if x >= 0.0 {
        return Err(Error::SeriesDomain { modulus: x.exp() });
    }
    let b = Complex::new(1.0, -omega);
    let params = Hyp2F1Params::new(Complex::ONE, b, b + Complex::ONE, Complex::real(-x.exp()));
    let series = hyp2f1(&params, ctl)?;
    let prefactor = Complex::I * Complex::new(x, -omega * x).exp() / Complex::new(omega, 1.0);
    Ok(prefactor * series.value)
}

/// `∂/∂x [e^{-iωx}/(e^{-x}+1)] = e^{x−iωx}(1 − iω(eˣ+1))/(eˣ+1)²`.
///
/// Evaluated as `e^{-iωx}·(S(1−S) − iωS)`, which is the same quantity
/// without the overflow of `eˣ` for large `x`.
pub fn sigmoid_ft_spatial_derivative(x: f64, omega: f64) -> Complex {
    let s = sigmoid(x);
    let sp = s * sigmoid(-x);
    Complex::cis(-omega * x) * Complex::new(sp, -omega * s)
}

/// `∫₀ᵏ x·e^{-iωx} dx = (e^{-iωk}(1 + iωk) − 1)/ω²`.
///
/// For `|ω|k < 1e-4` the Taylor branch `k²/2 − iωk³/3 − ω²k⁴/8` is used; at
/// `ω = 0` it returns exactly `k²/2`. Above the crossover the closed form is
/// evaluated with `θ = ωk` as
/// `Re = θ·sin θ − 2·sin²(θ/2)`, `Im = θ·cos θ − sin θ`, then divided by `ω²`,
/// which avoids the catastrophic `… − 1` cancellation at small `θ`.
pub fn relu_ft(omega: f64, k: f64) -> Result<Complex> {
    ensure_finite(omega, "omega")?;
    ensure_positive(k, "k")?;
    let theta = omega * k;
    if theta.abs() < RELU_SERIES_CROSSOVER {
        let k2 = k * k;
        return Ok(Complex::new(
            k2 / 2.0 - omega * omega * k2 * k2 / 8.0,
            -omega * k2 * k / 3.0,
        ));
    }
    let (s, c) = theta.sin_cos();
    let half = (theta / 2.0).sin();
    let numerator = Complex::new(theta * s - 2.0 * half * half, theta * c - s);
    Ok(numerator / (omega * omega))
}

/// `∂/∂x (x·e^{-iωx}) = e^{-iωx}(1 − iωx)`.
pub fn relu_ft_backward_integrand(x: f64, omega: f64) -> Complex {
    Complex::cis(-omega * x) * Complex::new(1.0, -omega * x)
}

/// Decay rate `β` and angular frequency `ω` of the damped step `e^{-βx}u(x)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LorentzianParams {
    beta: f64,
    omega: f64,
}

impl LorentzianParams {
    pub fn new(beta: f64, omega: f64) -> Result<Self> {
        ensure_positive(beta, "beta")?;
        ensure_finite(omega, "omega")?;
        Ok(LorentzianParams { beta, omega })
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }
}

/// Transform of the damped step: `1/(β + iω)`.
///
/// The undamped limit `πδ(ω) + 1/(iω)` is never evaluated pointwise; its
/// delta part is exercised through [`lorentzian_mass`].
pub fn heaviside_ft_regularized(params: &LorentzianParams) -> Complex {
    Complex::new(params.beta, params.omega).recip()
}

/// Real part of [`heaviside_ft_regularized`] as a function of `ω`:
/// the Lorentzian `β/(β² + ω²)`.
pub fn lorentzian(beta: f64, omega: f64) -> f64 {
    beta / (beta * beta + omega * omega)
}

/// `∫_{−W}^{W} β/(β² + ω²) dω` by quadrature.
///
/// The analytic value is `2·arctan(W/β)`, which tends to `π` as `W/β → ∞`.
/// Only the panel count and tolerance of `spec` are used; the interval is
/// replaced by `[−W, W]`.
pub fn lorentzian_mass(beta: f64, half_width: f64, spec: &QuadratureSpec) -> Result<f64> {
    ensure_positive(beta, "beta")?;
    ensure_positive(half_width, "half_width")?;
    let spec = spec.with_interval(-half_width, half_width)?;
    integrate(|w| lorentzian(beta, w), &spec)
}

/// Closed form of [`lorentzian_mass`].
pub fn lorentzian_mass_exact(beta: f64, half_width: f64) -> f64 {
    2.0 * (half_width / beta).atan()
}

/// Mass the Lorentzian carries in the limit `β → 0⁺`.
pub const LORENTZIAN_LIMIT_MASS: f64 = PI;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigmoid_basics() {
        assert_eq!(sigmoid(0.0), 0.5);
        for &x in &[0.1, 1.0, 7.5, 40.0, 800.0] {
            assert!((sigmoid(x) + sigmoid(-x) - 1.0).abs() < 1e-15);
        }
        assert_eq!(sigmoid(-800.0), 0.0);
        assert_eq!(sigmoid(800.0), 1.0);
    }

    #[test]
    fn integrand_at_origin() {
        assert_eq!(sigmoid_ft_integrand(0.0, 0.0), Complex::real(0.5));
    }

    #[test]
    fn spatial_derivative_at_origin() {
        let d = sigmoid_ft_spatial_derivative(0.0, 0.0);
        assert!((d - Complex::real(0.25)).abs() < 1e-16);
    }

    #[test]
    fn antiderivative_rejects_nonnegative_x() {
        let ctl = SeriesControl::default();
        assert!(matches!(
            sigmoid_ft_antiderivative(0.0, 1.0, &ctl),
            Err(Error::SeriesDomain { .. })
        ));
        assert!(sigmoid_ft_antiderivative(1.0, 1.0, &ctl).is_err());
    }

    #[test]
    fn antiderivative_at_zero_frequency_is_softplus() {
        // b = 1: e^x·₂F₁(1,1;2;−e^x) = ln(1 + e^x)
        let ctl = SeriesControl::default();
        for &x in &[-6.0, -2.0, -0.3] {
            let v = sigmoid_ft_antiderivative(x, 0.0, &ctl).unwrap();
            assert!((v.re - x.exp().ln_1p()).abs() < 1e-12);
            assert!(v.im.abs() < 1e-15);
        }
    }

    #[test]
    fn relu_limits() {
        assert_eq!(relu_ft(0.0, 1.0).unwrap(), Complex::real(0.5));
        assert_eq!(relu_ft(0.0, 3.0).unwrap(), Complex::real(4.5));
        let v = relu_ft(2.0 * PI, 1.0).unwrap();
        assert!((v - Complex::new(0.0, 1.0 / (2.0 * PI))).abs() < 1e-15);
        assert!(relu_ft(1.0, 0.0).is_err());
        assert!(relu_ft(1.0, -2.0).is_err());
    }

    #[test]
    fn relu_branch_continuity() {
        for &k in &[0.5, 1.0, 3.0] {
            let w = RELU_SERIES_CROSSOVER / k;
            let series = relu_ft(w * (1.0 - 1e-12), k).unwrap();
            let closed = relu_ft(w * (1.0 + 1e-12), k).unwrap();
            assert!((series - closed).abs() < 1e-9, "k = {k}");
        }
    }

    #[test]
    fn backward_integrand_trivial_values() {
        assert_eq!(relu_ft_backward_integrand(0.0, 3.7), Complex::ONE);
        assert_eq!(relu_ft_backward_integrand(2.2, 0.0), Complex::ONE);
    }

    #[test]
    fn heaviside_values() {
        let p = LorentzianParams::new(1.0, 0.0).unwrap();
        assert_eq!(heaviside_ft_regularized(&p), Complex::ONE);
        let p = LorentzianParams::new(1.0, 1.0).unwrap();
        assert!((heaviside_ft_regularized(&p) - Complex::new(0.5, -0.5)).abs() < 1e-16);
        assert!(LorentzianParams::new(0.0, 1.0).is_err());
        assert!(LorentzianParams::new(-1.0, 1.0).is_err());
    }

    #[test]
    fn lorentzian_mass_unit_case() {
        let spec = QuadratureSpec::new(-1.0, 1.0, 16, 1e-12).unwrap();
        let m = lorentzian_mass(1.0, 1.0, &spec).unwrap();
        assert!((m - PI / 2.0).abs() < 1e-10);
    }
}
