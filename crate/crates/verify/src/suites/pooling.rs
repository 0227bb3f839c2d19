use std::f64::consts::TAU;

use freqcnn::dft::{dft_2d, idft_2d};
use freqcnn::pooling::{
    avg_pool_direct, box_ft, gap_spatial, gap_spectral, spectral_pool_truncate, BoxKernel,
    TruncationSpec,
};
use freqcnn::quadrature::{continuous_ft_quadrature_2d, QuadratureSpec};
use freqcnn::{RealSignal2D, Result};

use super::{check, max_abs_diff, Check, EXACT};
use crate::config::Suite;
use crate::rng::CheckRng;

pub(super) fn checks() -> Vec<Check> {
    let s = Suite::Pooling;
    vec![
        check(s, "pooling.box_ft_vs_quadrature", "box(W,H) <-> sinc(Wu) sinc(Hv)", 1e-7, box_ft_vs_quadrature),
        check(s, "pooling.box_ft_even", "sinc(Wu)sinc(Hv) even in u and v", EXACT, box_ft_even),
        check(s, "pooling.avg_pool_oracle", "window mean", 1e-14, avg_pool_oracle),
        check(s, "pooling.avg_pool_constant", "mean of a constant window", EXACT, avg_pool_constant),
        check(s, "pooling.truncation_constant", "low-pass truncation keeps DC", EXACT, truncation_constant),
        check(s, "pooling.truncation_cosine", "low-pass truncation keeps in-band tones", 1e-10, truncation_cosine),
        check(s, "pooling.truncation_energy", "truncation does not add energy", 1e-12, truncation_energy),
        check(s, "pooling.gap_equivalence", "mean(f) = F(0,0)/(HW)", 1e-12, gap_equivalence),
    ]
}

fn grid(rng: &mut CheckRng, h: usize, w: usize) -> Result<RealSignal2D> {
    RealSignal2D::new(rng.uniform_vec(h * w), h, w)
}

/// W = H = 2, 25 points off the sinc zeros plus (0.3, 0.7).
fn box_ft_vs_quadrature(_: &mut CheckRng) -> Result<f64> {
    let k = BoxKernel::new(2.0, 2.0)?;
    let spec = QuadratureSpec::new(-1.0, 1.0, 16, 1e-10)?;
    let mut points = vec![(0.3, 0.7)];
    for i in 0..5 {
        for j in 0..5 {
            points.push((-1.13 + 0.53 * i as f64, -0.93 + 0.47 * j as f64));
        }
    }
    let mut worst = 0.0f64;
    for (u, v) in points {
        let q = continuous_ft_quadrature_2d(|_, _| k.amplitude(), TAU * u, TAU * v, &spec, &spec)?;
        let want = box_ft(&k, u, v);
        worst = worst.max(((q.re - want).abs() + q.im.abs()) / want.abs());
    }
    Ok(worst)
}

fn box_ft_even(rng: &mut CheckRng) -> Result<f64> {
    let k = BoxKernel::new(1.5, 0.75)?;
    let mut worst = 0.0f64;
    for _ in 0..200 {
        let (u, v) = (rng.uniform_in(-4.0, 4.0), rng.uniform_in(-4.0, 4.0));
        let b = box_ft(&k, u, v);
        worst = worst
            .max((b - box_ft(&k, -u, v)).abs())
            .max((b - box_ft(&k, u, -v)).abs())
            .max((b.abs() - 1.0).max(0.0))
            .max((b - box_ft(&k, 0.0, 0.0)).max(0.0));
    }
    Ok(worst)
}

fn avg_pool_oracle(rng: &mut CheckRng) -> Result<f64> {
    let s = grid(rng, 8, 8)?;
    let p = avg_pool_direct(&s, (2, 2))?;
    let mut want = Vec::with_capacity(16);
    for r in 0..4 {
        for c in 0..4 {
            let mut acc = 0.0;
            for i in 0..2 {
                for j in 0..2 {
                    acc += s.get(2 * r + i, 2 * c + j);
                }
            }
            want.push(acc / 4.0);
        }
    }
    let hand = avg_pool_direct(&RealSignal2D::new(vec![1.0, 2.0, 3.0, 4.0], 2, 2)?, (2, 2))?;
    Ok(max_abs_diff(p.data(), &want).max((hand.get(0, 0) - 2.5).abs()))
}

fn avg_pool_constant(rng: &mut CheckRng) -> Result<f64> {
    let mut worst = 0.0f64;
    for (wh, ww) in [(1, 1), (2, 3), (4, 4), (3, 1)] {
        let c = 100.0 * rng.uniform();
        let p = avg_pool_direct(&RealSignal2D::constant(wh * 4, ww * 2, c)?, (wh, ww))?;
        worst = worst.max(p.data().iter().map(|v| (v - c).abs()).fold(0.0, f64::max));
    }
    Ok(worst)
}

fn truncation_constant(rng: &mut CheckRng) -> Result<f64> {
    let mut worst = 0.0f64;
    for (oh, ow) in [(8, 8), (4, 16), (1, 1), (16, 2)] {
        let c = 5.0 * rng.uniform();
        let s = RealSignal2D::constant(16, 16, c)?;
        let back = idft_2d(&spectral_pool_truncate(&dft_2d(&s)?, &TruncationSpec::new(oh, ow)?)?)?;
        worst = worst.max(back.data().iter().map(|v| (v - c).abs()).fold(0.0, f64::max));
    }
    Ok(worst)
}

fn truncation_cosine(_: &mut CheckRng) -> Result<f64> {
    let n = 16;
    let s = RealSignal2D::from_fn(n, n, |r, c| (TAU * (2.0 * r as f64 + c as f64) / n as f64).cos())?;
    let back = idft_2d(&spectral_pool_truncate(&dft_2d(&s)?, &TruncationSpec::new(8, 8)?)?)?;
    let want = RealSignal2D::from_fn(8, 8, |r, c| (TAU * (2.0 * r as f64 + c as f64) / 8.0).cos())?;
    Ok(max_abs_diff(back.data(), want.data()))
}

/// Mean square after pooling relative to before; the error is any excess.
fn truncation_energy(rng: &mut CheckRng) -> Result<f64> {
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let (h, w) = (1usize << rng.int_in(1, 5), 1usize << rng.int_in(1, 5));
        let (oh, ow) = (1usize << rng.int_in(0, h.trailing_zeros() as usize), 1usize << rng.int_in(0, w.trailing_zeros() as usize));
        let s = grid(rng, h, w)?;
        let pooled = idft_2d(&spectral_pool_truncate(&dft_2d(&s)?, &TruncationSpec::new(oh, ow)?)?)?;
        let ms_in = s.data().iter().map(|v| v * v).sum::<f64>() / (h * w) as f64;
        let ms_out = pooled.data().iter().map(|v| v * v).sum::<f64>() / (oh * ow) as f64;
        worst = worst.max(ms_out / ms_in - 1.0);
    }
    Ok(worst.max(0.0))
}

/// 20 random grids with power-of-two sides up to 32.
fn gap_equivalence(rng: &mut CheckRng) -> Result<f64> {
    let mut worst = 0.0f64;
    for i in 0..20 {
        let (h, w) = if i == 0 { (8, 8) } else { (1usize << rng.int_in(0, 5), 1usize << rng.int_in(0, 5)) };
        let s = grid(rng, h, w)?;
        worst = worst.max((gap_spatial(&s) - gap_spectral(&dft_2d(&s)?)?).abs());
    }
    Ok(worst)
}
