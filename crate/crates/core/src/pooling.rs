//! Average pooling and its frequency-domain counterparts.
//!
//! Two-dimensional transforms in this module use ordinary frequency,
//! `e^{-i2π(ux + vy)}`.

use std::f64::consts::PI;

use crate::complex::Complex;
use crate::error::{ensure_positive, Error, Result};
use crate::signal::{signed_index, ComplexSpectrum2D, RealSignal2D};

/// Normalized sinc, `sin(πt)/(πt)` with `sinc(0) = 1`.
pub fn sinc(t: f64) -> f64 {
    let x = PI * t;
    if x.abs() < 1e-4 {
        // 1 − x²/6 + x⁴/120; the next term is below 1e-18.
        let x2 = x * x;
        1.0 - x2 / 6.0 + x2 * x2 / 120.0
    } else {
        x.sin() / x
    }
}

/// Continuous average-pooling window of width `W` (along x) and height `H`
/// (along y), with amplitude `1/(WH)` so its total mass is one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoxKernel {
    width: f64,
    height: f64,
}

impl BoxKernel {
    pub fn new(width: f64, height: f64) -> Result<Self> {
        ensure_positive(width, "width")?;
        ensure_positive(height, "height")?;
        Ok(BoxKernel { width, height })
    }

    pub fn width(&self) -> f64 {
        self.width
    }

    pub fn height(&self) -> f64 {
        self.height
    }

    pub fn amplitude(&self) -> f64 {
        1.0 / (self.width * self.height)
    }

    /// Kernel value at `(x, y)`; zero on and outside the boundary.
    pub fn eval(&self, x: f64, y: f64) -> f64 {
        if x.abs() < self.width / 2.0 && y.abs() < self.height / 2.0 {
            self.amplitude()
        } else {
            0.0
        }
    }
}

/// Fourier transform of the box kernel: `sinc(W·u)·sinc(H·v)`.
pub fn box_ft(kernel: &BoxKernel, u: f64, v: f64) -> f64 {
    sinc(kernel.width * u) * sinc(kernel.height * v)
}

/// Non-overlapping window means. `window` is `(rows, cols)` and must divide
/// the grid dimensions exactly.
pub fn avg_pool_direct(signal: &RealSignal2D, window: (usize, usize)) -> Result<RealSignal2D> {
    let (h, w) = signal.dims();
    let (wh, ww) = window;
    if wh == 0 || ww == 0 || h % wh != 0 || w % ww != 0 {
        return Err(Error::DimensionMismatch {
            expected: format!("window dividing {h}x{w}"),
            actual: format!("{wh}x{ww}"),
        });
    }
    let (oh, ow) = (h / wh, w / ww);
    let count = (wh * ww) as f64;
    let mut out = Vec::with_capacity(oh * ow);
    for r in 0..oh {
        for c in 0..ow {
            // Shifted by the window's first sample, so constant windows are exact.
            let pivot = signal.get(r * wh, c * ww);
            let mut acc = 0.0;
            for i in 0..wh {
                acc += signal.row(r * wh + i)[c * ww..(c + 1) * ww]
                    .iter()
                    .map(|v| v - pivot)
                    .sum::<f64>();
            }
            out.push(pivot + acc / count);
        }
    }
    let (dy, dx) = signal.spacing();
    RealSignal2D::with_spacing(out, oh, ow, dy * wh as f64, dx * ww as f64)
}

/// Output size of spectral truncation pooling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TruncationSpec {
    pub out_h: usize,
    pub out_w: usize,
}

impl TruncationSpec {
    pub fn new(out_h: usize, out_w: usize) -> Result<Self> {
        if out_h == 0 || out_w == 0 {
            return Err(Error::Empty);
        }
        Ok(TruncationSpec { out_h, out_w })
    }
}

/// Source bins feeding output bin `j` of an `m`-point axis cut from `n` points.
///
/// Kept frequencies are the signed indices `|k| < m/2`. For even `m` the
/// output Nyquist bin averages input frequencies `+m/2` and `−m/2`, which keeps
/// the result conjugate-symmetric. With `m = n` both coincide.
fn source_bins(j: usize, m: usize, n: usize) -> (usize, Option<usize>) {
    let k = signed_index(j, m);
    if m.is_multiple_of(2) && 2 * j == m {
        let pos = j;
        let neg = n - j;
        if pos == neg {
            (pos, None)
        } else {
            (pos, Some(neg))
        }
    } else {
        (k.rem_euclid(n as i64) as usize, None)
    }
}

/// Spectral pooling: keep the `out_h × out_w` lowest frequencies.
///
/// The kept block is centered on DC in standard ordering and handled
/// conjugate-symmetrically so the inverse stays real. Coefficients are scaled
/// by `(out_h·out_w)/(H·W)` so that a constant image maps to the same constant
/// after the (1/n-normalized) inverse. The output grid spacing grows by `H/out_h`
/// and `W/out_w`.
pub fn spectral_pool_truncate(
    spectrum: &ComplexSpectrum2D,
    spec: &TruncationSpec,
) -> Result<ComplexSpectrum2D> {
    let (h, w) = spectrum.dims();
    let (oh, ow) = (spec.out_h, spec.out_w);
    if oh == 0 || ow == 0 || oh > h || ow > w {
        return Err(Error::DimensionMismatch {
            expected: format!("output dims within 1..={h} x 1..={w}"),
            actual: format!("{oh}x{ow}"),
        });
    }
    let scale = (oh * ow) as f64 / (h * w) as f64;
    let mut out = Vec::with_capacity(oh * ow);
    for r in 0..oh {
        let (r0, r1) = source_bins(r, oh, h);
        for c in 0..ow {
            let (c0, c1) = source_bins(c, ow, w);
            let rows: &[usize] = &match r1 {
                Some(r1) => vec![r0, r1],
                None => vec![r0],
            };
            let cols: &[usize] = &match c1 {
                Some(c1) => vec![c0, c1],
                None => vec![c0],
            };
            let mut acc = Complex::ZERO;
            for &rr in rows {
                for &cc in cols {
                    acc += spectrum.get(rr, cc);
                }
            }
            let weight = scale / (rows.len() * cols.len()) as f64;
            out.push(acc.scale(weight));
        }
    }
    let (dy, dx) = spectrum.spacing();
    ComplexSpectrum2D::with_spacing(
        out,
        oh,
        ow,
        dy * h as f64 / oh as f64,
        dx * w as f64 / ow as f64,
    )
}

/// Global average pooling in the spatial domain: the arithmetic mean.
pub fn gap_spatial(signal: &RealSignal2D) -> f64 {
    signal.data().iter().sum::<f64>() / signal.data().len() as f64
}

/// Global average pooling read off the spectrum: `Re(X[0,0])/(H·W)`.
///
/// The DC coefficient of a real signal is real; an imaginary part larger than
/// `1e-10·max(1, |Re X[0,0]|)` is rejected.
pub fn gap_spectral(spectrum: &ComplexSpectrum2D) -> Result<f64> {
    let dc = spectrum.get(0, 0);
    let limit = 1e-10 * dc.re.abs().max(1.0);
    if dc.im.abs() > limit {
        return Err(Error::ImaginaryResidue {
            residue: dc.im.abs(),
            limit,
        });
    }
    let (h, w) = spectrum.dims();
    Ok(dc.re / (h * w) as f64)
}
