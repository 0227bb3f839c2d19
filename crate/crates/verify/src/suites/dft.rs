use std::f64::consts::TAU;

use freqcnn::activations::relu_ft;
use freqcnn::dft::{
    dft_2d, dft_naive_1d, fft_1d, idft_2d, ifft_1d, spectral_derivative_1d, spectral_derivative_2d,
    Axis,
};
use freqcnn::finite_diff::central_difference_4;
use freqcnn::quadrature::{continuous_ft_quadrature, QuadratureSpec};
use freqcnn::{Complex, RealSignal1D, RealSignal2D, Result};

use super::{check, max_abs_diff, Check};
use crate::config::Suite;
use crate::rng::CheckRng;

pub(super) fn checks() -> Vec<Check> {
    let s = Suite::Dft;
    vec![
        check(s, "dft.fft_vs_naive", "X[k] = sum x[n] e^{-2pi ikn/N}", 1e-12, fft_vs_naive),
        check(s, "dft.round_trip", "x = IDFT(DFT(x))", 1e-12, round_trip),
        check(s, "dft.linearity", "DFT(af + bg) = a DFT(f) + b DFT(g)", 1e-12, linearity),
        check(s, "dft.conjugate_symmetry", "X[k] = conj X[N-k] for real x", 1e-12, conjugate_symmetry),
        check(s, "dft.parseval", "sum |x|^2 = (1/N) sum |X|^2", 1e-10, parseval),
        check(s, "dft.two_d_vs_naive", "F(u,v) = sum f(x,y) e^{-i2pi(ux+vy)}", 1e-11, two_d_vs_naive),
        check(s, "dft.derivative_sin", "f' <-> i omega F(omega)", 1e-10, derivative_sin),
        check(s, "dft.derivative_2d_sin", "df/dx <-> i2pi u F(u,v)", 1e-9, derivative_2d_sin),
        check(s, "dft.derivative_band_limited", "f' <-> i omega F(omega)", 1e-6, derivative_band_limited),
        check(s, "dft.quadrature_oracle", "int_0^1 x e^{-i omega x} dx", 1e-8, quadrature_oracle),
    ]
}

fn signal(v: Vec<f64>) -> Result<RealSignal1D> {
    RealSignal1D::new(v)
}

fn max_diff_c(a: &[Complex], b: &[Complex]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (*x - *y).abs()).fold(0.0, f64::max)
}

/// Worst per-coefficient error divided by `n`, over n = 2..1024.
fn fft_vs_naive(rng: &mut CheckRng) -> Result<f64> {
    let mut worst = 0.0f64;
    for e in 1..=10 {
        let n = 1usize << e;
        let s = signal(rng.uniform_vec(n))?;
        let err = max_diff_c(fft_1d(&s)?.coeffs(), dft_naive_1d(&s).coeffs());
        worst = worst.max(err / n as f64);
    }
    Ok(worst)
}

fn round_trip(rng: &mut CheckRng) -> Result<f64> {
    let mut worst = 0.0f64;
    for n in [4usize, 32, 256] {
        let s = signal(rng.uniform_vec(n))?;
        let back = ifft_1d(&fft_1d(&s)?)?;
        worst = worst.max(max_abs_diff(back.samples(), s.samples()) / n as f64);
    }
    Ok(worst)
}

fn linearity(rng: &mut CheckRng) -> Result<f64> {
    let n = 128;
    let (a, b) = (rng.uniform_in(-2.0, 2.0), rng.uniform_in(-2.0, 2.0));
    let f = rng.uniform_vec(n);
    let g = rng.uniform_vec(n);
    let mix: Vec<f64> = f.iter().zip(&g).map(|(x, y)| a * x + b * y).collect();
    let lhs = fft_1d(&signal(mix)?)?;
    let ff = fft_1d(&signal(f)?)?;
    let fg = fft_1d(&signal(g)?)?;
    let rhs: Vec<Complex> = ff
        .coeffs()
        .iter()
        .zip(fg.coeffs())
        .map(|(x, y)| x.scale(a) + y.scale(b))
        .collect();
    Ok(max_diff_c(lhs.coeffs(), &rhs) / n as f64)
}

fn conjugate_symmetry(rng: &mut CheckRng) -> Result<f64> {
    let n = 256;
    let spec = fft_1d(&signal(rng.uniform_vec(n))?)?;
    let c = spec.coeffs();
    let err = (0..n).map(|j| (c[j] - c[(n - j) % n].conj()).abs()).fold(0.0, f64::max);
    Ok(err / n as f64)
}

fn parseval(rng: &mut CheckRng) -> Result<f64> {
    let n = 512;
    let x = rng.uniform_vec(n);
    let energy: f64 = x.iter().map(|v| v * v).sum();
    let spec = fft_1d(&signal(x)?)?;
    let spectral = spec.coeffs().iter().map(|z| z.norm_sqr()).sum::<f64>() / n as f64;
    Ok((energy - spectral).abs() / n as f64)
}

fn two_d_vs_naive(rng: &mut CheckRng) -> Result<f64> {
    let (h, w) = (8, 8);
    let s = RealSignal2D::new(rng.uniform_vec(h * w), h, w)?;
    let fast = dft_2d(&s)?;
    let mut worst = 0.0f64;
    for u in 0..h {
        for v in 0..w {
            let mut acc = Complex::ZERO;
            for r in 0..h {
                for c in 0..w {
                    let phase = ((u * r) % h) as f64 / h as f64 + ((v * c) % w) as f64 / w as f64;
                    acc += Complex::cis(-TAU * phase).scale(s.get(r, c));
                }
            }
            worst = worst.max((fast.get(u, v) - acc).abs());
        }
    }
    let back = idft_2d(&fast)?;
    Ok(worst.max(max_abs_diff(back.data(), s.data()) / (h * w) as f64))
}

fn derivative_sin(_: &mut CheckRng) -> Result<f64> {
    let n = 64;
    let s = RealSignal1D::sample(n, TAU / n as f64, 0.0, f64::sin)?;
    let d = ifft_1d(&spectral_derivative_1d(&fft_1d(&s)?, TAU)?)?;
    let want: Vec<f64> = (0..n).map(|j| (TAU * j as f64 / n as f64).cos()).collect();
    Ok(max_abs_diff(d.samples(), &want))
}

fn derivative_2d_sin(_: &mut CheckRng) -> Result<f64> {
    let n = 32;
    let s = RealSignal2D::from_fn(n, n, |_, c| (TAU * c as f64 / n as f64).sin())?;
    let spec = dft_2d(&s)?;
    let dx = idft_2d(&spectral_derivative_2d(&spec, Axis::X, (1.0, 1.0))?)?;
    let dy = idft_2d(&spectral_derivative_2d(&spec, Axis::Y, (1.0, 1.0))?)?;
    let want = RealSignal2D::from_fn(n, n, |_, c| TAU * (TAU * c as f64 / n as f64).cos())?;
    let zero = vec![0.0; n * n];
    Ok(max_abs_diff(dx.data(), want.data()).max(max_abs_diff(dy.data(), &zero)))
}

/// Random trigonometric polynomial occupying the lower half of the band,
/// differentiated spectrally and by a fourth-order stencil (h = 1e-3).
fn derivative_band_limited(rng: &mut CheckRng) -> Result<f64> {
    let n = 32;
    let terms: Vec<(f64, f64, f64)> = (0..n / 4).map(|k| (k as f64, rng.uniform(), rng.uniform())).collect();
    let f = |x: f64| -> f64 {
        terms.iter().map(|&(k, a, b)| a * (k * x).cos() + b * (k * x).sin()).sum()
    };
    let dx = TAU / n as f64;
    let s = RealSignal1D::sample(n, dx, 0.0, f)?;
    let d = ifft_1d(&spectral_derivative_1d(&fft_1d(&s)?, TAU)?)?;
    let fd: Vec<f64> = (0..n).map(|j| central_difference_4(f, j as f64 * dx, 1e-3)).collect();
    Ok(max_abs_diff(d.samples(), &fd))
}

fn quadrature_oracle(_: &mut CheckRng) -> Result<f64> {
    let spec = QuadratureSpec::new(0.0, 1.0, 16, 1e-13)?;
    let q = continuous_ft_quadrature(|x| x, 1.0, &spec)?;
    let closed = Complex::cis(-1.0) * Complex::new(1.0, 1.0) - Complex::ONE;
    let mut worst = (q - closed).abs();
    worst = worst.max((q - relu_ft(1.0, 1.0)?).abs());
    let box_spec = QuadratureSpec::new(-0.5, 0.5, 16, 1e-13)?;
    worst = worst.max((continuous_ft_quadrature(|_| 1.0, 0.0, &box_spec)? - Complex::ONE).abs());
    worst = worst.max(continuous_ft_quadrature(|_| 1.0, TAU, &box_spec)?.abs());
    Ok(worst)
}
