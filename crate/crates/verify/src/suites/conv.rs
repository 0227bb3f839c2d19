use std::f64::consts::TAU;

use freqcnn::conv::{
    conv_direct_1d, conv_direct_2d, conv_spectral_1d, conv_spectral_2d, pointwise_product_grad,
    ConvMode, ConvPlan, ConvPlan2D,
};
use freqcnn::{Complex, ComplexSpectrum1D, RealSignal1D, RealSignal2D, Result};

use super::{check, max_abs_diff, Check, EXACT};
use crate::config::Suite;
use crate::rng::CheckRng;

pub(super) fn checks() -> Vec<Check> {
    let s = Suite::Conv;
    vec![
        check(s, "conv.hand_sums", "out[k] = sum f[j] g[k-j]", EXACT, hand_sums),
        check(s, "conv.spectral_vs_direct_1d", "f*g <-> F.G", 1e-10, spectral_vs_direct_1d),
        check(s, "conv.spectral_vs_direct_2d", "f**g <-> F.G (2D)", 1e-10, spectral_vs_direct_2d),
        check(s, "conv.commutativity", "f*g = g*f", 1e-12, commutativity),
        check(s, "conv.scalar_homogeneity", "(af)*g = a(f*g)", 1e-12, scalar_homogeneity),
        check(s, "conv.product_grad", "d(F1.F2)/dF1 = F2", 1e-5, product_grad),
    ]
}

fn sig(v: Vec<f64>) -> Result<RealSignal1D> {
    RealSignal1D::new(v)
}

fn spectral(f: &RealSignal1D, g: &RealSignal1D) -> Result<RealSignal1D> {
    conv_spectral_1d(f, g, &ConvPlan::for_signals(f, g, ConvMode::Full)?)
}

fn hand_sums(_: &mut CheckRng) -> Result<f64> {
    let f = sig(vec![1.0, 2.0])?;
    let g = sig(vec![3.0, 4.0, 5.0])?;
    let ones = sig(vec![1.0, 1.0])?;
    Ok(max_abs_diff(conv_direct_1d(&f, &g).samples(), &[3.0, 10.0, 13.0, 10.0])
        .max(max_abs_diff(conv_direct_1d(&ones, &ones).samples(), &[1.0, 2.0, 1.0])))
}

/// 50 random pairs with n, m ≤ 128; error normalized by the output length.
fn spectral_vs_direct_1d(rng: &mut CheckRng) -> Result<f64> {
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let (n, m) = (rng.int_in(1, 128), rng.int_in(1, 128));
        let f = sig(rng.uniform_vec(n))?;
        let g = sig(rng.uniform_vec(m))?;
        let err = max_abs_diff(spectral(&f, &g)?.samples(), conv_direct_1d(&f, &g).samples());
        worst = worst.max(err / (n + m - 1) as f64);
    }
    Ok(worst)
}

/// 20 random pairs up to 16×16 ⊛ 16×16; error normalized by H·W.
fn spectral_vs_direct_2d(rng: &mut CheckRng) -> Result<f64> {
    let mut worst = 0.0f64;
    for i in 0..20 {
        let ((h, w), (kh, kw)) = if i == 0 {
            ((16, 16), (16, 16))
        } else {
            ((rng.int_in(1, 16), rng.int_in(1, 16)), (rng.int_in(1, 16), rng.int_in(1, 16)))
        };
        let f = RealSignal2D::new(rng.uniform_vec(h * w), h, w)?;
        let g = RealSignal2D::new(rng.uniform_vec(kh * kw), kh, kw)?;
        let plan = ConvPlan2D::for_signals(&f, &g, ConvMode::Full)?;
        let err = max_abs_diff(conv_spectral_2d(&f, &g, &plan)?.data(), conv_direct_2d(&f, &g).data());
        worst = worst.max(err / (h * w) as f64);
    }
    Ok(worst)
}

/// Spectral path compared with itself under swapped arguments; the direct
/// path is required to agree bit-for-bit.
fn commutativity(rng: &mut CheckRng) -> Result<f64> {
    let mut worst = 0.0f64;
    for _ in 0..10 {
        let (n, m) = (rng_len(rng), rng_len(rng));
        let f = sig(rng.uniform_vec(n))?;
        let g = sig(rng.uniform_vec(m))?;
        if conv_direct_1d(&f, &g).samples() != conv_direct_1d(&g, &f).samples() {
            return Ok(f64::INFINITY);
        }
        worst = worst.max(max_abs_diff(spectral(&f, &g)?.samples(), spectral(&g, &f)?.samples()));
    }
    Ok(worst)
}

fn rng_len(rng: &mut CheckRng) -> usize {
    rng.int_in(1, 128)
}

fn scalar_homogeneity(rng: &mut CheckRng) -> Result<f64> {
    let mut worst = 0.0f64;
    for _ in 0..10 {
        let (n, m) = (rng_len(rng), rng_len(rng));
        let a = rng.uniform_in(-3.0, 3.0);
        let f = rng.uniform_vec(n);
        let g = sig(rng.uniform_vec(m))?;
        let lhs = spectral(&sig(f.iter().map(|v| a * v).collect())?, &g)?;
        let rhs: Vec<f64> = spectral(&sig(f)?, &g)?.samples().iter().map(|v| a * v).collect();
        worst = worst.max(max_abs_diff(lhs.samples(), &rhs) / (n + m - 1) as f64);
    }
    Ok(worst)
}

fn naive_dft(y: &[Complex], sign: f64) -> Vec<Complex> {
    let n = y.len();
    (0..n)
        .map(|j| {
            y.iter()
                .enumerate()
                .map(|(k, &v)| v * Complex::cis(sign * TAU * ((j * k) % n) as f64 / n as f64))
                .sum()
        })
        .collect()
}

fn loss(f1: &[Complex], f2: &[Complex]) -> f64 {
    let n = f1.len() as f64;
    let y: Vec<Complex> = f1.iter().zip(f2).map(|(&a, &b)| a * b).collect();
    0.5 * naive_dft(&y, 1.0).iter().map(|z| (*z / n).norm_sqr()).sum::<f64>()
}

/// Gradient of `½‖ifft(F₁F₂)‖²` with respect to the real and imaginary parts
/// of `F₁`, by central differences, against the pointwise-product rule.
fn product_grad(rng: &mut CheckRng) -> Result<f64> {
    let n = 16;
    let mut draw = || -> Vec<Complex> { (0..n).map(|_| Complex::new(rng.uniform(), rng.uniform())).collect() };
    let (f1, f2) = (draw(), draw());
    let y: Vec<Complex> = f1.iter().zip(&f2).map(|(&a, &b)| a * b).collect();
    let spatial: Vec<Complex> = naive_dft(&y, 1.0).iter().map(|z| *z / n as f64).collect();
    let upstream: Vec<Complex> = naive_dft(&spatial, -1.0).iter().map(|z| z.conj() / n as f64).collect();
    let grad = pointwise_product_grad(&ComplexSpectrum1D::new(upstream)?, &ComplexSpectrum1D::new(f2.clone())?)?;
    let h = 1e-6;
    let mut worst = 0.0f64;
    for j in 0..n {
        let bump = |dz: Complex| -> f64 {
            let (mut p, mut m) = (f1.clone(), f1.clone());
            p[j] += dz;
            m[j] -= dz;
            (loss(&p, &f2) - loss(&m, &f2)) / (2.0 * h)
        };
        let fd = Complex::new(bump(Complex::real(h)), -bump(Complex::new(0.0, h)));
        let g = grad.coeffs()[j];
        worst = worst.max((g - fd).abs() / g.abs().max(1e-3));
    }
    Ok(worst)
}
