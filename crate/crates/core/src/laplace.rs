//! Real-exponent Laplace transforms.
//!
//! `F(p) = ∫₀^∞ f(t)·e^{−pt} dt` is evaluated for real `p > 0` only, so every
//! quantity in this module stays real. Infinite integrals are truncated at a
//! horizon `T` and guarded by the tail bound `e^{−pT}·max|f| < 1e-10`.

use std::fmt;
use std::sync::Arc;

use crate::activations::sigmoid;
use crate::error::{ensure_finite, ensure_positive, Error, Result};
use crate::finite_diff::central_difference;
use crate::hypergeometric::{hyp2f1, Hyp2F1Params, SeriesControl};
use crate::quadrature::{integrate, QuadratureSpec};

/// Largest admissible tail bound `e^{−pT}·max_{[0,T]}|f|`.
pub const TAIL_TOLERANCE: f64 = 1e-10;

/// Below this value of `p·k` the ReLU transform switches to its Taylor branch.
pub const RELU_LT_SERIES_CROSSOVER: f64 = 1e-4;

/// Distance from a pole of the sigmoid expression that is rejected.
pub const POLE_GUARD: f64 = 1e-8;

// Samples used to estimate max|f| on [0, T] for the tail bound.
const TAIL_SAMPLES: usize = 1024;
// Automatic horizon widening attempts before giving up.
const MAX_WIDENINGS: usize = 16;

/// A strictly positive real Laplace variable.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct LaplacePoint(f64);

impl LaplacePoint {
    pub fn new(p: f64) -> Result<Self> {
        ensure_positive(p, "p")?;
        Ok(LaplacePoint(p))
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }
}

type SampleFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// A function on `t ≥ 0`, zero for `t < 0`.
///
/// `support`, when set, promises `f(t) = 0` for `t > support`; integrals then
/// stop there exactly and no tail bound is needed. `horizon` pins the
/// truncation point `T`; without it a default is chosen per `p`.
#[derive(Clone)]
pub struct CausalSignal {
    func: SampleFn,
    support: Option<f64>,
    horizon: Option<f64>,
}

impl fmt::Debug for CausalSignal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CausalSignal")
            .field("support", &self.support)
            .field("horizon", &self.horizon)
            .finish_non_exhaustive()
    }
}

impl CausalSignal {
    pub fn new<F>(f: F) -> Self
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        CausalSignal {
            func: Arc::new(f),
            support: None,
            horizon: None,
        }
    }

    /// `f(t) = c`.
    pub fn constant(c: f64) -> Self {
        CausalSignal::new(move |_| c)
    }

    /// `f(t) = t`.
    pub fn ramp() -> Self {
        CausalSignal::new(|t| t)
    }

    /// `f(t) = e^{−rate·t}`.
    pub fn exponential(rate: f64) -> Self {
        CausalSignal::new(move |t| (-rate * t).exp())
    }

    /// Piecewise-linear interpolation of samples taken at `k·spacing`; zero
    /// beyond the last sample.
    pub fn from_samples(samples: Vec<f64>, spacing: f64) -> Result<Self> {
        ensure_positive(spacing, "spacing")?;
        if samples.is_empty() {
            return Err(Error::Empty);
        }
        if samples.iter().any(|s| !s.is_finite()) {
            return Err(Error::NonFinite {
                what: "signal samples",
            });
        }
        let last = (samples.len() - 1) as f64 * spacing;
        let samples: Arc<[f64]> = samples.into();
        let signal = CausalSignal::new(move |t| {
            let u = t / spacing;
            let i = u.floor() as usize;
            if i + 1 >= samples.len() {
                return samples[samples.len() - 1];
            }
            let w = u - i as f64;
            samples[i] * (1.0 - w) + samples[i + 1] * w
        });
        signal.with_support(last.max(f64::MIN_POSITIVE))
    }

    /// Declares `f(t) = 0` for `t > support`.
    pub fn with_support(mut self, support: f64) -> Result<Self> {
        ensure_positive(support, "support")?;
        self.support = Some(support);
        Ok(self)
    }

    /// Pins the truncation horizon `T`.
    pub fn with_horizon(mut self, horizon: f64) -> Result<Self> {
        ensure_positive(horizon, "horizon")?;
        self.horizon = Some(horizon);
        Ok(self)
    }

    pub fn support(&self) -> Option<f64> {
        self.support
    }

    pub fn horizon(&self) -> Option<f64> {
        self.horizon
    }

    /// `f(t)`, honoring causality and the declared support.
    pub fn eval(&self, t: f64) -> f64 {
        if t < 0.0 {
            return 0.0;
        }
        match self.support {
            Some(s) if t > s => 0.0,
            _ => (self.func)(t),
        }
    }
}

/// Default truncation horizon `max(30/p, 5·support)`.
pub fn default_horizon(point: LaplacePoint, support: Option<f64>) -> f64 {
    (30.0 / point.value()).max(5.0 * support.unwrap_or(0.0))
}

fn tail_bound(f: &CausalSignal, p: f64, horizon: f64) -> Result<f64> {
    let mut max_abs = 0.0f64;
    for i in 0..=TAIL_SAMPLES {
        let v = f.eval(horizon * i as f64 / TAIL_SAMPLES as f64);
        if !v.is_finite() {
            return Err(Error::NonFinite {
                what: "causal signal",
            });
        }
        max_abs = max_abs.max(v.abs());
    }
    Ok((-p * horizon).exp() * max_abs)
}

fn suggested_horizon(p: f64, horizon: f64, tail: f64) -> f64 {
    horizon + ((tail / TAIL_TOLERANCE).ln() + 1.0) / p
}

/// Upper integration limit for `f` at `p`: the support if it lies within the
/// horizon, otherwise a horizon that passes the tail bound. An explicit
/// horizon that fails the bound is an error; the default widens itself.
pub fn resolve_upper_limit(f: &CausalSignal, point: LaplacePoint) -> Result<f64> {
    let p = point.value();
    let mut horizon = f.horizon.unwrap_or_else(|| default_horizon(point, f.support));
    for _ in 0..=MAX_WIDENINGS {
        if let Some(s) = f.support {
            if s <= horizon {
                return Ok(s);
            }
        }
        let tail = tail_bound(f, p, horizon)?;
        if tail < TAIL_TOLERANCE {
            return Ok(horizon);
        }
        let suggested = suggested_horizon(p, horizon, tail);
        if f.horizon.is_some() {
            return Err(Error::Truncation {
                horizon,
                tail,
                suggested,
            });
        }
        horizon = suggested;
    }
    let tail = tail_bound(f, p, horizon)?;
    Err(Error::Truncation {
        horizon,
        tail,
        suggested: suggested_horizon(p, horizon, tail),
    })
}

/// `∫₀^T f(t)·e^{−pt} dt` by composite Simpson.
///
/// Only the panel count and tolerance of `spec` are used; the interval is
/// `[0, T]` with `T` from [`resolve_upper_limit`].
pub fn laplace_numeric(f: &CausalSignal, point: LaplacePoint, spec: &QuadratureSpec) -> Result<f64> {
    let p = point.value();
    let upper = resolve_upper_limit(f, point)?;
    let spec = spec.with_interval(0.0, upper)?;
    integrate(|t| f.eval(t) * (-p * t).exp(), &spec)
}

/// Finite convolution `∫₀ᵗ f₁(τ)·f₂(t − τ) dτ`.
///
/// The integration range is narrowed to where both factors can be nonzero
/// given their declared supports.
pub fn laplace_conv_direct(
    f1: &CausalSignal,
    f2: &CausalSignal,
    t: f64,
    spec: &QuadratureSpec,
) -> Result<f64> {
    ensure_finite(t, "t")?;
    if t < 0.0 {
        return Err(Error::InvalidParameter {
            name: "t",
            value: t,
            reason: "must be nonnegative",
        });
    }
    let lower = f2.support.map_or(0.0, |s| (t - s).max(0.0));
    let upper = f1.support.map_or(t, |s| s.min(t));
    if upper <= lower {
        return Ok(0.0);
    }
    let spec = spec.with_interval(lower, upper)?;
    integrate(|tau| f1.eval(tau) * f2.eval(t - tau), &spec)
}

/// The convolution `f₁ ∗ f₂` as a causal signal evaluated by quadrature.
///
/// A failed inner quadrature yields NaN, which any consumer integrating the
/// result reports as a non-finite integrand.
pub fn convolved_signal(f1: &CausalSignal, f2: &CausalSignal, spec: &QuadratureSpec) -> CausalSignal {
    let (a, b, spec) = (f1.clone(), f2.clone(), *spec);
    let support = match (f1.support, f2.support) {
        (Some(s1), Some(s2)) => Some(s1 + s2),
        _ => None,
    };
    CausalSignal {
        func: Arc::new(move |t| laplace_conv_direct(&a, &b, t, &spec).unwrap_or(f64::NAN)),
        support,
        horizon: None,
    }
}

/// Both sides of `L{f₁}·L{f₂} = L{f₁ ∗ f₂}` at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvTheoremCheck {
    /// Product of the two numerical transforms.
    pub lhs: f64,
    /// Numerical transform of the numerically convolved signal.
    pub rhs: f64,
}

impl ConvTheoremCheck {
    /// `|lhs − rhs| / max(|lhs|, 1)`.
    pub fn relative_gap(&self) -> f64 {
        (self.lhs - self.rhs).abs() / self.lhs.abs().max(1.0)
    }
}

/// Quadrature settings used by [`laplace_conv_theorem_check`].
pub fn conv_theorem_quadrature() -> QuadratureSpec {
    QuadratureSpec {
        lower: 0.0,
        upper: 1.0,
        panels: 16,
        target_rel_tol: 1e-9,
    }
}

pub fn laplace_conv_theorem_check(
    f1: &CausalSignal,
    f2: &CausalSignal,
    point: LaplacePoint,
) -> Result<ConvTheoremCheck> {
    let spec = conv_theorem_quadrature();
    let lhs = laplace_numeric(f1, point, &spec)? * laplace_numeric(f2, point, &spec)?;
    let conv = convolved_signal(f1, f2, &spec);
    let rhs = laplace_numeric(&conv, point, &spec)?;
    Ok(ConvTheoremCheck { lhs, rhs })
}

fn guard_pole(p: f64) -> Result<()> {
    // b = 1 − p vanishes at p = 1; c = 2 − p is a non-positive integer at p = 2, 3, …
    let nearest = p.round();
    if nearest >= 1.0 && (p - nearest).abs() < POLE_GUARD {
        return Err(Error::Pole { name: "p", value: p });
    }
    Ok(())
}

/// `e^{x−px}/(1 − p) · ₂F₁(1, 1−p; 2−p; −eˣ)` for `x < 0`.
///
/// An antiderivative in `x` of `e^{(1−p)x}/(eˣ + 1) = e^{−px}·S(x)`, computed
/// entirely in real arithmetic.
pub fn sigmoid_lt_antiderivative(x: f64, point: LaplacePoint, ctl: &SeriesControl) -> Result<f64> {
    ensure_finite(x, "x")?;
    let p = point.value();
    if x >= 0.0 {
        return Err(Error::SeriesDomain { modulus: x.exp() });
    }
    guard_pole(p)?;
    let b = 1.0 - p;
    let series = hyp2f1(&Hyp2F1Params::real(1.0, b, b + 1.0, -x.exp()), ctl)?;
    Ok((b * x).exp() / b * series.value.re)
}

/// `∂/∂x [e^{−px}/(e^{−x} + 1)] = e^{(1−p)x}(1 − p(eˣ + 1))/(eˣ + 1)²`.
///
/// Evaluated as `e^{−px}(S(1 − S) − p·S)`. Accepts any real `p`, including
/// `p = 0` where it reduces to the sigmoid derivative.
pub fn sigmoid_lt_spatial_derivative(x: f64, p: f64) -> f64 {
    let s = sigmoid(x);
    (-p * x).exp() * (s * sigmoid(-x) - p * s)
}

/// `∫₀ᵏ x·e^{−px} dx = (1 − e^{−pk}(1 + pk))/p²`.
///
/// Evaluated as `(−expm1(−pk) − pk·e^{−pk})/p²` to limit cancellation; below
/// `pk = 1e-4` the Taylor branch `k²/2 − pk³/3 + p²k⁴/8` is used.
pub fn relu_lt(point: LaplacePoint, k: f64) -> Result<f64> {
    ensure_positive(k, "k")?;
    let p = point.value();
    let theta = p * k;
    if theta < RELU_LT_SERIES_CROSSOVER {
        let k2 = k * k;
        return Ok(k2 / 2.0 - p * k2 * k / 3.0 + p * p * k2 * k2 / 8.0);
    }
    let e = (-theta).exp();
    Ok((-(-theta).exp_m1() - theta * e) / (p * p))
}

/// `−(e^{−pk}(1 + pk) + 1)/p²`: the ReLU transform with the lower-limit term
/// added instead of subtracted. Kept only so reports can show how far it is
/// from [`relu_lt`]; it is not a valid transform.
pub fn relu_lt_lower_limit_added(point: LaplacePoint, k: f64) -> f64 {
    let p = point.value();
    -((-p * k).exp() * (1.0 + p * k) + 1.0) / (p * p)
}

/// `∂/∂x (x·e^{−px}) = e^{−px}(1 − px)`.
pub fn relu_lt_integrand_derivative(x: f64, point: LaplacePoint) -> f64 {
    let p = point.value();
    (-p * x).exp() * (1.0 - p * x)
}

/// Candidate closed form `e^{−pk}(p²k² + 2pk + 2e^{pk} + 2)/p³` for the
/// `p`-derivative of the ReLU transform, evaluated at `x = k`.
pub fn relu_lt_p_derivative_candidate(point: LaplacePoint, k: f64) -> f64 {
    let p = point.value();
    let pk = p * k;
    (-pk).exp() * (pk * pk + 2.0 * pk + 2.0 * pk.exp() + 2.0) / (p * p * p)
}

/// Side-by-side values of `∂ relu_lt / ∂p`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PDerivativeComparison {
    /// Central finite difference of [`relu_lt`] in `p`.
    pub finite_difference: f64,
    /// [`relu_lt_p_derivative_candidate`] at the same point.
    pub candidate: f64,
}

impl PDerivativeComparison {
    pub fn discrepancy(&self) -> f64 {
        (self.finite_difference - self.candidate).abs()
    }
}

/// Evaluates the finite-difference `p`-derivative of [`relu_lt`] next to the
/// candidate closed form. Agreement is recorded, not asserted.
pub fn relu_lt_p_derivative_check(point: LaplacePoint, k: f64) -> Result<PDerivativeComparison> {
    ensure_positive(k, "k")?;
    let p = point.value();
    let h = 1e-4 * p;
    let mut failure = None;
    let finite_difference = central_difference(
        |q| match relu_lt(LaplacePoint(q), k) {
            Ok(v) => v,
            Err(e) => {
                failure = Some(e);
                f64::NAN
            }
        },
        p,
        h,
    );
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(PDerivativeComparison {
        finite_difference,
        candidate: relu_lt_p_derivative_candidate(point, k),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec() -> QuadratureSpec {
        QuadratureSpec::new(0.0, 1.0, 16, 1e-12).unwrap()
    }

    fn pt(p: f64) -> LaplacePoint {
        LaplacePoint::new(p).unwrap()
    }

    #[test]
    fn point_must_be_positive() {
        assert!(LaplacePoint::new(0.0).is_err());
        assert!(LaplacePoint::new(-1.0).is_err());
        assert!(LaplacePoint::new(f64::NAN).is_err());
    }

    #[test]
    fn textbook_transforms() {
        let one = CausalSignal::constant(1.0).with_horizon(20.0).unwrap();
        assert!((laplace_numeric(&one, pt(2.0), &spec()).unwrap() - 0.5).abs() < 1e-8);
        let ramp = CausalSignal::ramp().with_horizon(40.0).unwrap();
        assert!((laplace_numeric(&ramp, pt(1.0), &spec()).unwrap() - 1.0).abs() < 1e-7);
        let decay = CausalSignal::exponential(1.0);
        assert!((laplace_numeric(&decay, pt(1.5), &spec()).unwrap() - 0.4).abs() < 1e-8);
    }

    #[test]
    fn explicit_short_horizon_is_a_truncation_error() {
        let one = CausalSignal::constant(1.0).with_horizon(5.0).unwrap();
        match laplace_numeric(&one, pt(1.0), &spec()) {
            Err(Error::Truncation { suggested, .. }) => {
                assert!(suggested > 5.0);
                let widened = CausalSignal::constant(1.0).with_horizon(suggested).unwrap();
                assert!(laplace_numeric(&widened, pt(1.0), &spec()).is_ok());
            }
            other => panic!("expected truncation error, got {other:?}"),
        }
    }

    #[test]
    fn compact_support_needs_no_tail() {
        let truncated = CausalSignal::ramp().with_support(2.0).unwrap();
        assert_eq!(resolve_upper_limit(&truncated, pt(0.01)).unwrap(), 2.0);
        assert_eq!(truncated.eval(2.5), 0.0);
        assert_eq!(truncated.eval(-1.0), 0.0);
    }

    #[test]
    fn conv_direct_hand_values() {
        let s = spec();
        let one = CausalSignal::constant(1.0);
        let ramp = CausalSignal::ramp();
        let decay = CausalSignal::exponential(1.0);
        assert!((laplace_conv_direct(&one, &one, 3.0, &s).unwrap() - 3.0).abs() < 1e-12);
        assert!((laplace_conv_direct(&ramp, &one, 2.0, &s).unwrap() - 2.0).abs() < 1e-12);
        let want = (-1.0f64).exp();
        assert!((laplace_conv_direct(&decay, &ramp, 1.0, &s).unwrap() - want).abs() < 1e-10);
        assert_eq!(laplace_conv_direct(&one, &one, 0.0, &s).unwrap(), 0.0);
        assert!(laplace_conv_direct(&one, &one, -1.0, &s).is_err());
    }

    #[test]
    fn conv_direct_respects_supports() {
        // Box of width 1 convolved with itself: triangle peaking at t = 1.
        let b = CausalSignal::constant(1.0).with_support(1.0).unwrap();
        let s = spec();
        assert!((laplace_conv_direct(&b, &b, 1.0, &s).unwrap() - 1.0).abs() < 1e-13);
        assert!((laplace_conv_direct(&b, &b, 1.5, &s).unwrap() - 0.5).abs() < 1e-13);
        assert_eq!(laplace_conv_direct(&b, &b, 2.5, &s).unwrap(), 0.0);
    }

    #[test]
    fn conv_theorem_constant_pair() {
        let one = CausalSignal::constant(1.0);
        let c = laplace_conv_theorem_check(&one, &one, pt(2.0)).unwrap();
        assert!((c.lhs - 0.25).abs() < 1e-8);
        assert!((c.rhs - 0.25).abs() < 1e-8);
    }

    #[test]
    fn sigmoid_lt_guards() {
        let ctl = SeriesControl::default();
        assert!(matches!(
            sigmoid_lt_antiderivative(-1.0, pt(1.0), &ctl),
            Err(Error::Pole { .. })
        ));
        assert!(matches!(
            sigmoid_lt_antiderivative(-1.0, pt(3.0 + 1e-10), &ctl),
            Err(Error::Pole { .. })
        ));
        assert!(matches!(
            sigmoid_lt_antiderivative(0.5, pt(0.5), &ctl),
            Err(Error::SeriesDomain { .. })
        ));
        assert!(sigmoid_lt_antiderivative(-1.0, pt(1.5), &ctl).is_ok());
    }

    #[test]
    fn sigmoid_lt_spatial_derivative_values() {
        // e^{-x}/(e^{-x}+1) at p = 1 is 1/(1+e^x); derivative −1/4 at 0.
        assert!((sigmoid_lt_spatial_derivative(0.0, 1.0) + 0.25).abs() < 1e-16);
        for &x in &[-3.0, -0.2, 0.0, 1.4, 6.0] {
            let s = sigmoid(x);
            assert!((sigmoid_lt_spatial_derivative(x, 0.0) - s * (1.0 - s)).abs() < 1e-15);
        }
    }

    #[test]
    fn relu_lt_limits() {
        assert_eq!(relu_lt(pt(1e-12), 1.0).unwrap(), 0.5 - 1e-12 / 3.0 + 1e-24 / 8.0);
        assert!((relu_lt(pt(1.0), 60.0).unwrap() - 1.0).abs() < 1e-20 + 1e-15);
        assert!(relu_lt(pt(1.0), 0.0).is_err());
    }

    #[test]
    fn relu_lt_branch_continuity() {
        for &k in &[0.25, 1.0, 4.0] {
            let p = RELU_LT_SERIES_CROSSOVER / k;
            let below = relu_lt(pt(p * (1.0 - 1e-12)), k).unwrap();
            let above = relu_lt(pt(p * (1.0 + 1e-12)), k).unwrap();
            assert!((below - above).abs() < 1e-10 * below.abs());
        }
    }

    #[test]
    fn relu_lt_lower_limit_added_is_off() {
        let (p, k) = (1.0, 1.0);
        let good = relu_lt(pt(p), k).unwrap();
        let bad = relu_lt_lower_limit_added(pt(p), k);
        assert!((good - (1.0 - 2.0 / std::f64::consts::E)).abs() < 1e-15);
        assert!(bad < 0.0 && good > 0.0);
    }

    #[test]
    fn relu_lt_integrand_derivative_values() {
        assert_eq!(relu_lt_integrand_derivative(0.0, pt(2.0)), 1.0);
        assert_eq!(relu_lt_integrand_derivative(0.5, pt(2.0)), 0.0);
    }

    #[test]
    fn p_derivative_against_analytic() {
        // ∂/∂p R = k²e^{−pk}/p − 2R/p
        for &(p, k) in &[(1.0, 1.0), (2.0, 0.5), (0.3, 3.0)] {
            let r = relu_lt(pt(p), k).unwrap();
            let exact = k * k * (-p * k).exp() / p - 2.0 * r / p;
            let c = relu_lt_p_derivative_check(pt(p), k).unwrap();
            assert!((c.finite_difference - exact).abs() < 1e-8 * exact.abs().max(1.0));
        }
        // Series branch: ∂/∂p ≈ −k³/3 + pk⁴/4.
        let c = relu_lt_p_derivative_check(pt(1e-5), 2.0).unwrap();
        assert!((c.finite_difference - (-8.0 / 3.0 + 4e-5)).abs() < 1e-5);
    }
}
