use std::f64::consts::PI;

use freqcnn::activations::{
    heaviside_ft_regularized, lorentzian, lorentzian_mass, lorentzian_mass_exact, relu_ft,
    relu_ft_backward_integrand, sigmoid_ft_antiderivative, sigmoid_ft_integrand,
    sigmoid_ft_spatial_derivative, LorentzianParams, LORENTZIAN_LIMIT_MASS, RELU_SERIES_CROSSOVER,
};
use freqcnn::finite_diff::central_difference_complex;
use freqcnn::hypergeometric::{hyp2f1, Hyp2F1Params, SeriesControl};
use freqcnn::quadrature::{continuous_ft_quadrature, QuadratureSpec};
use freqcnn::{Complex, Result};

use super::{check, rel_c, Check, EXACT};
use crate::config::Suite;
use crate::rng::CheckRng;

pub(super) fn checks() -> Vec<Check> {
    let s = Suite::Activations;
    vec![
        check(s, "activations.hyp2f1_log", "2F1(1,1;2;z) = -ln(1-z)/z", 1e-10, hyp2f1_log),
        check(s, "activations.hyp2f1_complex", "2F1 = sum (a)n(b)n/(c)n z^n/n!", 1e-12, hyp2f1_complex),
        check(s, "activations.hyp2f1_zero_a", "2F1(0,b;c;z) = 1", 1e-15, hyp2f1_zero_a),
        check(s, "activations.sigmoid_antiderivative", "d/dx [i e^{(1-iw)x}/(w+i) 2F1(1,1-iw;2-iw;-e^x)] = e^{-iwx} S(x)", 1e-6, sigmoid_antiderivative),
        check(s, "activations.sigmoid_spatial_derivative", "d/dx e^{-iwx}S(x) = e^{(1-iw)x}(1-iw(e^x+1))/(e^x+1)^2", 1e-6, sigmoid_spatial_derivative),
        check(s, "activations.relu_vs_quadrature", "int_0^k x e^{-iwx} dx = (e^{-iwk}(1+iwk)-1)/w^2", 1e-8, relu_vs_quadrature),
        check(s, "activations.relu_branch_continuity", "series/closed form at |w|k = 1e-4", 1e-9, relu_branch_continuity),
        check(s, "activations.relu_zero_frequency", "relu_ft(0,k) = k^2/2", EXACT, relu_zero_frequency),
        check(s, "activations.relu_conjugate_symmetry", "R(-w) = conj R(w)", 1e-13, relu_conjugate_symmetry),
        check(s, "activations.relu_backward_integrand", "d/dx x e^{-iwx} = e^{-iwx}(1-iwx)", 1e-6, relu_backward_integrand),
        check(s, "activations.heaviside_split", "1/(b+iw) = b/(b^2+w^2) - i w/(b^2+w^2)", 1e-14, heaviside_split),
        check(s, "activations.lorentzian_mass", "int_{-W}^{W} b/(b^2+w^2) dw = 2 atan(W/b)", 1e-6, lorentzian_mass_check),
        check(s, "activations.lorentzian_limit", "b/(b^2+w^2) -> pi delta(w)", 1e-3, lorentzian_limit),
    ]
}

fn hyp2f1_log(_: &mut CheckRng) -> Result<f64> {
    let s = hyp2f1(&Hyp2F1Params::real(1.0, 1.0, 2.0, 0.5), &SeriesControl::default())?;
    Ok((s.value - Complex::real(-(0.5f64).ln() / 0.5)).abs())
}

// Explicit Pochhammer products, independent of the term-ratio recurrence.
fn pochhammer_sum(a: Complex, b: Complex, c: Complex, z: Complex, terms: usize) -> Complex {
    (0..terms)
        .map(|n| {
            let mut t = Complex::ONE;
            for k in 0..n {
                let kk = Complex::real(k as f64);
                t = t * (a + kk) * (b + kk) / (c + kk) * z / (k + 1) as f64;
            }
            t
        })
        .sum()
}

fn hyp2f1_complex(_: &mut CheckRng) -> Result<f64> {
    let (a, b, c, z) = (Complex::ONE, Complex::new(1.0, -1.0), Complex::new(2.0, -1.0), Complex::real(-0.1));
    let got = hyp2f1(&Hyp2F1Params::new(a, b, c, z), &SeriesControl::default())?;
    Ok((got.value - pochhammer_sum(a, b, c, z, 40)).abs())
}

fn hyp2f1_zero_a(rng: &mut CheckRng) -> Result<f64> {
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let p = Hyp2F1Params::new(
            Complex::ZERO,
            Complex::new(3.0 * rng.uniform(), rng.uniform()),
            Complex::new(rng.uniform_in(0.1, 4.0), rng.uniform()),
            Complex::new(0.7 * rng.uniform(), 0.7 * rng.uniform()),
        );
        worst = worst.max((hyp2f1(&p, &SeriesControl::default())?.value - Complex::ONE).abs());
    }
    Ok(worst)
}

/// 20-point grid x ∈ {−5, −3.5, −2, −0.5} × ω ∈ {0, ±0.5, ±2}, h = 1e-5.
fn sigmoid_antiderivative(_: &mut CheckRng) -> Result<f64> {
    let ctl = SeriesControl::default();
    let mut worst = 0.0f64;
    for x in [-5.0, -3.5, -2.0, -0.5] {
        for w in [0.0, 0.5, -0.5, 2.0, -2.0] {
            let mut failure = None;
            let fd = central_difference_complex(
                |t| {
                    sigmoid_ft_antiderivative(t, w, &ctl).unwrap_or_else(|e| {
                        failure = Some(e);
                        Complex::ZERO
                    })
                },
                x,
                1e-5,
            );
            if let Some(e) = failure {
                return Err(e);
            }
            worst = worst.max(rel_c(fd, sigmoid_ft_integrand(x, w)));
        }
    }
    Ok(worst)
}

fn sigmoid_spatial_derivative(rng: &mut CheckRng) -> Result<f64> {
    let mut worst = (sigmoid_ft_spatial_derivative(0.0, 0.0) - Complex::real(0.25)).abs();
    for _ in 0..20 {
        let (x, w) = (rng.uniform_in(-6.0, 6.0), rng.uniform_in(-4.0, 4.0));
        let fd = central_difference_complex(|t| sigmoid_ft_integrand(t, w), x, 1e-5);
        worst = worst.max(rel_c(fd, sigmoid_ft_spatial_derivative(x, w)));
    }
    Ok(worst)
}

/// 10×10 grid ω ∈ [−9, 9], k ∈ [0.3, 3] against Simpson quadrature of x on [0, k].
fn relu_vs_quadrature(_: &mut CheckRng) -> Result<f64> {
    let mut worst = 0.0f64;
    for i in 0..10 {
        let w = -9.0 + 2.0 * i as f64;
        for j in 0..10 {
            let k = 0.3 * (j + 1) as f64;
            let q = continuous_ft_quadrature(|x| x, w, &QuadratureSpec::new(0.0, k, 16, 1e-13)?)?;
            worst = worst.max(rel_c(relu_ft(w, k)?, q));
        }
    }
    Ok(worst)
}

fn relu_branch_continuity(_: &mut CheckRng) -> Result<f64> {
    let mut worst = 0.0f64;
    for k in [0.25, 0.5, 1.0, 2.0, 4.0] {
        let w = RELU_SERIES_CROSSOVER / k;
        for sign in [1.0, -1.0] {
            let below = relu_ft(sign * w * (1.0 - 1e-9), k)?;
            let above = relu_ft(sign * w * (1.0 + 1e-9), k)?;
            worst = worst.max((below - above).abs());
        }
    }
    Ok(worst)
}

fn relu_zero_frequency(_: &mut CheckRng) -> Result<f64> {
    let mut worst = 0.0f64;
    for k in [0.25, 1.0, 3.0] {
        worst = worst.max((relu_ft(0.0, k)? - Complex::real(k * k / 2.0)).abs());
    }
    Ok(worst)
}

fn relu_conjugate_symmetry(rng: &mut CheckRng) -> Result<f64> {
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let (w, k) = (rng.uniform_in(-20.0, 20.0), rng.uniform_in(0.01, 3.0));
        worst = worst.max((relu_ft(-w, k)? - relu_ft(w, k)?.conj()).abs());
    }
    Ok(worst)
}

fn relu_backward_integrand(rng: &mut CheckRng) -> Result<f64> {
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let (x, w) = (rng.uniform_in(0.0, 3.0), rng.uniform_in(-5.0, 5.0));
        let fd = central_difference_complex(|t| Complex::cis(-w * t).scale(t), x, 1e-5);
        worst = worst.max(rel_c(fd, relu_ft_backward_integrand(x, w)));
    }
    Ok(worst)
}

fn heaviside_split(rng: &mut CheckRng) -> Result<f64> {
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let (beta, w) = (rng.uniform_in(1e-3, 10.0), rng.uniform_in(-10.0, 10.0));
        let v = heaviside_ft_regularized(&LorentzianParams::new(beta, w)?);
        let d = beta * beta + w * w;
        worst = worst
            .max((v.re - lorentzian(beta, w)).abs() / (1.0 + (beta / d).abs()))
            .max((v.im + w / d).abs() / (1.0 + (w / d).abs()));
    }
    Ok(worst)
}

fn mass_spec() -> Result<QuadratureSpec> {
    QuadratureSpec::new(-1.0, 1.0, 16, 1e-10)
}

fn lorentzian_mass_check(_: &mut CheckRng) -> Result<f64> {
    let mut worst = 0.0f64;
    for (beta, w) in [(1.0, 1.0), (0.1, 50.0), (0.5, 3.0)] {
        worst = worst.max((lorentzian_mass(beta, w, &mass_spec()?)? - lorentzian_mass_exact(beta, w)).abs());
    }
    // Monotone in W and bounded by π, or the check fails outright.
    let mut prev = 0.0;
    for w in [0.1, 1.0, 10.0, 100.0] {
        let m = lorentzian_mass(0.5, w, &mass_spec()?)?;
        if !(m > prev && m <= PI) {
            return Ok(f64::INFINITY);
        }
        prev = m;
    }
    Ok(worst)
}

/// W/β ≥ 10⁴.
fn lorentzian_limit(_: &mut CheckRng) -> Result<f64> {
    let mut worst = 0.0f64;
    for (beta, w) in [(0.01, 100.0), (1e-3, 10.0), (0.05, 600.0)] {
        worst = worst.max((lorentzian_mass(beta, w, &mass_spec()?)? - LORENTZIAN_LIMIT_MASS).abs());
    }
    Ok(worst)
}
