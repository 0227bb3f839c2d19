use freqcnn::finite_diff::central_difference;
use freqcnn::hypergeometric::SeriesControl;
use freqcnn::laplace::{
    laplace_conv_direct, laplace_conv_theorem_check, laplace_numeric, relu_lt,
    relu_lt_integrand_derivative, sigmoid_lt_antiderivative, sigmoid_lt_spatial_derivative,
    CausalSignal, LaplacePoint,
};
use freqcnn::quadrature::QuadratureSpec;
use freqcnn::Result;

use super::{check, rel, Check, EXACT};
use crate::config::Suite;
use crate::rng::CheckRng;

pub(super) fn checks() -> Vec<Check> {
    let s = Suite::Laplace;
    vec![
        check(s, "laplace.textbook", "L{1} = 1/p, L{t} = 1/p^2, L{e^-t} = 1/(p+1)", 1e-7, textbook),
        check(s, "laplace.conv_direct", "(f1*f2)(t) = int_0^t f1(s) f2(t-s) ds", 1e-10, conv_direct),
        check(s, "laplace.conv_theorem", "L{f1*f2} = L{f1} L{f2}", 1e-4, conv_theorem),
        check(s, "laplace.linearity", "L{af + bg} = a L{f} + b L{g}", 1e-10, linearity),
        check(s, "laplace.monotone_in_p", "f >= 0 => L{f}(p) nonincreasing", EXACT, monotone_in_p),
        check(s, "laplace.relu_vs_quadrature", "int_0^k x e^{-px} dx = (1 - e^{-pk}(1+pk))/p^2", 1e-8, relu_vs_quadrature),
        check(s, "laplace.relu_integrand_derivative", "d/dx x e^{-px} = e^{-px}(1-px)", 1e-6, relu_integrand_derivative),
        check(s, "laplace.sigmoid_antiderivative", "d/dx [e^{(1-p)x}/(1-p) 2F1(1,1-p;2-p;-e^x)] = e^{(1-p)x}/(e^x+1)", 1e-6, sigmoid_antiderivative),
        check(s, "laplace.sigmoid_spatial_derivative", "d/dx e^{-px}S(x) = e^{(1-p)x}(1 - p(e^x+1))/(e^x+1)^2", 1e-6, sigmoid_spatial_derivative),
    ]
}

fn pt(p: f64) -> Result<LaplacePoint> {
    LaplacePoint::new(p)
}

fn spec() -> Result<QuadratureSpec> {
    QuadratureSpec::new(0.0, 1.0, 16, 1e-12)
}

fn textbook(_: &mut CheckRng) -> Result<f64> {
    let one = CausalSignal::constant(1.0).with_horizon(20.0)?;
    let ramp = CausalSignal::ramp().with_horizon(40.0)?;
    let decay = CausalSignal::exponential(1.0);
    Ok((laplace_numeric(&one, pt(2.0)?, &spec()?)? - 0.5)
        .abs()
        .max((laplace_numeric(&ramp, pt(1.0)?, &spec()?)? - 1.0).abs())
        .max((laplace_numeric(&decay, pt(1.5)?, &spec()?)? - 0.4).abs()))
}

fn conv_direct(_: &mut CheckRng) -> Result<f64> {
    let s = spec()?;
    let one = CausalSignal::constant(1.0);
    let ramp = CausalSignal::ramp();
    let decay = CausalSignal::exponential(1.0);
    Ok((laplace_conv_direct(&one, &one, 3.0, &s)? - 3.0)
        .abs()
        .max((laplace_conv_direct(&ramp, &one, 2.0, &s)? - 2.0).abs())
        .max((laplace_conv_direct(&decay, &ramp, 1.0, &s)? - (-1.0f64).exp()).abs()))
}

/// Three pairs × p ∈ {0.5, 1, 2, 5}: |lhs − rhs| / max(|lhs|, 1).
fn conv_theorem(_: &mut CheckRng) -> Result<f64> {
    let pairs = [
        (CausalSignal::constant(1.0), CausalSignal::constant(1.0)),
        (CausalSignal::exponential(1.0), CausalSignal::ramp()),
        (CausalSignal::ramp(), CausalSignal::ramp()),
    ];
    let mut worst = 0.0f64;
    for (f1, f2) in &pairs {
        for p in [0.5, 1.0, 2.0, 5.0] {
            worst = worst.max(laplace_conv_theorem_check(f1, f2, pt(p)?)?.relative_gap());
        }
    }
    Ok(worst)
}

fn linearity(rng: &mut CheckRng) -> Result<f64> {
    let mut worst = 0.0f64;
    for _ in 0..5 {
        let (a, b, p) = (2.0 * rng.uniform(), 2.0 * rng.uniform(), rng.uniform_in(0.5, 4.0));
        let mix = CausalSignal::new(move |t| a * (-0.7 * t).exp() + b * t);
        let lhs = laplace_numeric(&mix, pt(p)?, &spec()?)?;
        let rhs = a * laplace_numeric(&CausalSignal::exponential(0.7), pt(p)?, &spec()?)?
            + b * laplace_numeric(&CausalSignal::ramp(), pt(p)?, &spec()?)?;
        worst = worst.max((lhs - rhs).abs() / (1.0 + rhs.abs()));
    }
    Ok(worst)
}

/// Largest increase between consecutive p on a geometric grid.
fn monotone_in_p(_: &mut CheckRng) -> Result<f64> {
    let signals = [
        CausalSignal::constant(1.0),
        CausalSignal::ramp(),
        CausalSignal::exponential(0.3),
        CausalSignal::new(|t| t.sin().abs()),
    ];
    let loose = QuadratureSpec::new(0.0, 1.0, 16, 1e-8)?;
    let mut worst = 0.0f64;
    for f in &signals {
        let mut prev = f64::INFINITY;
        for i in 0..12 {
            let v = laplace_numeric(f, pt(0.25 * 1.5f64.powi(i))?, &loose)?;
            worst = worst.max(v - prev);
            prev = v;
        }
    }
    Ok(worst.max(0.0))
}

/// 10×10 grid p ∈ [0.25, 8] (geometric), k ∈ [0.25, 4].
fn relu_vs_quadrature(_: &mut CheckRng) -> Result<f64> {
    let mut worst = 0.0f64;
    for i in 0..10 {
        let p = 0.25 * 32.0f64.powf(i as f64 / 9.0);
        for j in 0..10 {
            let k = 0.25 + 3.75 * j as f64 / 9.0;
            let q = laplace_numeric(&CausalSignal::ramp().with_support(k)?, pt(p)?, &spec()?)?;
            worst = worst.max(rel(relu_lt(pt(p)?, k)?, q));
        }
    }
    Ok(worst)
}

fn relu_integrand_derivative(rng: &mut CheckRng) -> Result<f64> {
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let (x, p) = (rng.uniform_in(0.0, 5.0), rng.uniform_in(0.1, 4.0));
        let fd = central_difference(|t| t * (-p * t).exp(), x, 1e-5);
        let d = relu_lt_integrand_derivative(x, pt(p)?);
        worst = worst.max((fd - d).abs() / d.abs().max(1e-3));
    }
    Ok(worst)
}

fn sigmoid_antiderivative(_: &mut CheckRng) -> Result<f64> {
    let ctl = SeriesControl::default();
    let mut worst = 0.0f64;
    for (x, p) in [(-2.0, 0.5), (-3.0, 3.5), (-0.8, 1.7), (-4.5, 0.2)] {
        let mut failure = None;
        let fd = central_difference(
            |t| {
                sigmoid_lt_antiderivative(t, LaplacePoint::new(p).expect("positive"), &ctl).unwrap_or_else(|e| {
                    failure = Some(e);
                    0.0
                })
            },
            x,
            1e-5,
        );
        if let Some(e) = failure {
            return Err(e);
        }
        worst = worst.max(rel(fd, ((1.0 - p) * x).exp() / (x.exp() + 1.0)));
    }
    Ok(worst)
}

fn sigmoid_spatial_derivative(rng: &mut CheckRng) -> Result<f64> {
    let f = |x: f64, p: f64| (-p * x).exp() / ((-x).exp() + 1.0);
    let mut worst = 0.0f64;
    let mut cases = vec![(0.0, 1.0), (0.7, 0.0)];
    for _ in 0..20 {
        cases.push((rng.uniform_in(-4.0, 4.0), rng.uniform_in(0.0, 5.0)));
    }
    for (x, p) in cases {
        let d = sigmoid_lt_spatial_derivative(x, p);
        // Floor the scale so stationary points do not divide by zero.
        worst = worst.max((central_difference(|t| f(t, p), x, 1e-5) - d).abs() / d.abs().max(1e-3));
    }
    Ok(worst)
}
