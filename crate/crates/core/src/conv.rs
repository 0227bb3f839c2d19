//! Linear convolution by direct summation and by the FFT product route.
//!
//! The direct routines are the reference; the spectral routines zero-pad both
//! operands to a power of two at least `n + m − 1` long (per axis), multiply
//! the spectra pointwise and invert. The kernel is not flipped: this is true
//! convolution, `out[k] = Σ_j f[j]·g[k−j]`, not cross-correlation.

use crate::complex::Complex;
use crate::dft::{dft_2d, fft_1d, idft_2d, ifft_1d};
use crate::error::{Error, Result};
use crate::signal::{ComplexSpectrum1D, RealSignal1D, RealSignal2D};

/// Output window of a convolution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ConvMode {
    /// All `n + m − 1` samples.
    #[default]
    Full,
    /// `n` samples (input length) centered on the full output. When the
    /// excess `m − 1` is odd the window leans left, i.e. starts at
    /// `⌊(m − 1)/2⌋`.
    Same,
}

impl ConvMode {
    /// `(start, len)` of the output window inside a full convolution of an
    /// `n`-sample input with an `m`-sample kernel.
    pub fn window(self, n: usize, m: usize) -> (usize, usize) {
        match self {
            ConvMode::Full => (0, n + m - 1),
            ConvMode::Same => ((m - 1) / 2, n),
        }
    }
}

/// Padding and trimming plan for a 1D spectral convolution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConvPlan {
    pub input_len: usize,
    pub kernel_len: usize,
    pub padded_len: usize,
    pub mode: ConvMode,
}

impl ConvPlan {
    pub fn new(input_len: usize, kernel_len: usize, mode: ConvMode) -> Result<Self> {
        if input_len == 0 || kernel_len == 0 {
            return Err(Error::Empty);
        }
        Ok(ConvPlan {
            input_len,
            kernel_len,
            padded_len: (input_len + kernel_len - 1).next_power_of_two(),
            mode,
        })
    }

    pub fn for_signals(f: &RealSignal1D, g: &RealSignal1D, mode: ConvMode) -> Result<Self> {
        Self::new(f.len(), g.len(), mode)
    }

    pub fn full_len(&self) -> usize {
        self.input_len + self.kernel_len - 1
    }

    fn check(&self, f: usize, g: usize) -> Result<()> {
        let consistent = self.input_len == f
            && self.kernel_len == g
            && self.padded_len.is_power_of_two()
            && self.padded_len >= self.full_len();
        if consistent {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: format!(
                    "plan for {}*{} padded to {}",
                    self.input_len, self.kernel_len, self.padded_len
                ),
                actual: format!("{f}*{g}"),
            })
        }
    }
}

/// Padding and trimming plan for a 2D spectral convolution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConvPlan2D {
    pub input_dims: (usize, usize),
    pub kernel_dims: (usize, usize),
    pub padded_dims: (usize, usize),
    pub mode: ConvMode,
}

impl ConvPlan2D {
    pub fn new(input_dims: (usize, usize), kernel_dims: (usize, usize), mode: ConvMode) -> Result<Self> {
        let (h, w) = input_dims;
        let (kh, kw) = kernel_dims;
        if h == 0 || w == 0 || kh == 0 || kw == 0 {
            return Err(Error::Empty);
        }
        Ok(ConvPlan2D {
            input_dims,
            kernel_dims,
            padded_dims: ((h + kh - 1).next_power_of_two(), (w + kw - 1).next_power_of_two()),
            mode,
        })
    }

    pub fn for_signals(f: &RealSignal2D, g: &RealSignal2D, mode: ConvMode) -> Result<Self> {
        Self::new(f.dims(), g.dims(), mode)
    }

    fn check(&self, f: (usize, usize), g: (usize, usize)) -> Result<()> {
        let (ph, pw) = self.padded_dims;
        let consistent = self.input_dims == f
            && self.kernel_dims == g
            && ph.is_power_of_two()
            && pw.is_power_of_two()
            && ph >= f.0 + g.0 - 1
            && pw >= f.1 + g.1 - 1;
        if consistent {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: format!("plan for {:?}*{:?}", self.input_dims, self.kernel_dims),
                actual: format!("{f:?}*{g:?}"),
            })
        }
    }
}

/// Sums `term(0) + … + term(count − 1)` as `(t₀ + t_last) + (t₁ + t_last−1) + …`.
///
/// Reversing the term order leaves the result bit-identical, which makes the
/// direct convolutions exactly commutative.
fn symmetric_sum<T: Fn(usize) -> f64>(count: usize, term: T) -> f64 {
    let mut acc = 0.0;
    for t in 0..count / 2 {
        acc += term(t) + term(count - 1 - t);
    }
    if count % 2 == 1 {
        acc += term(count / 2);
    }
    acc
}

/// Full linear convolution by nested-loop summation, length `n + m − 1`.
///
/// The output takes `f`'s spacing; its origin is the sum of both origins.
pub fn conv_direct_1d(f: &RealSignal1D, g: &RealSignal1D) -> RealSignal1D {
    let (a, b) = (f.samples(), g.samples());
    let (n, m) = (a.len(), b.len());
    let out = (0..n + m - 1)
        .map(|k| {
            let lo = k.saturating_sub(m - 1);
            let hi = k.min(n - 1);
            symmetric_sum(hi - lo + 1, |t| a[lo + t] * b[k - lo - t])
        })
        .collect();
    RealSignal1D::with_grid(out, f.spacing(), f.origin() + g.origin())
        .expect("products of finite samples stay finite")
}

/// Convolution via zero-padded FFTs and a pointwise spectral product.
pub fn conv_spectral_1d(f: &RealSignal1D, g: &RealSignal1D, plan: &ConvPlan) -> Result<RealSignal1D> {
    plan.check(f.len(), g.len())?;
    let ff = fft_1d(&f.zero_padded(plan.padded_len)?)?;
    let gg = fft_1d(&g.zero_padded(plan.padded_len)?)?;
    let product: Vec<Complex> = ff
        .coeffs()
        .iter()
        .zip(gg.coeffs())
        .map(|(&x, &y)| x * y)
        .collect();
    let full = ifft_1d(&ComplexSpectrum1D::with_grid(product, f.spacing(), 0.0)?)?;
    let (start, len) = plan.mode.window(plan.input_len, plan.kernel_len);
    RealSignal1D::with_grid(
        full.samples()[start..start + len].to_vec(),
        f.spacing(),
        f.origin() + g.origin(),
    )
}

/// Full 2D linear convolution by nested summation, dims `(H+KH−1, W+KW−1)`.
pub fn conv_direct_2d(f: &RealSignal2D, g: &RealSignal2D) -> RealSignal2D {
    let (h, w) = f.dims();
    let (kh, kw) = g.dims();
    let (oh, ow) = (h + kh - 1, w + kw - 1);
    let mut out = Vec::with_capacity(oh * ow);
    for y in 0..oh {
        let (r0, r1) = (y.saturating_sub(kh - 1), y.min(h - 1));
        for x in 0..ow {
            let (c0, c1) = (x.saturating_sub(kw - 1), x.min(w - 1));
            let span = c1 - c0 + 1;
            out.push(symmetric_sum((r1 - r0 + 1) * span, |t| {
                let (r, c) = (r0 + t / span, c0 + t % span);
                f.get(r, c) * g.get(y - r, x - c)
            }));
        }
    }
    let (dy, dx) = f.spacing();
    RealSignal2D::with_spacing(out, oh, ow, dy, dx).expect("products of finite samples stay finite")
}

/// 2D convolution via zero-padded 2D FFTs and a pointwise product.
pub fn conv_spectral_2d(f: &RealSignal2D, g: &RealSignal2D, plan: &ConvPlan2D) -> Result<RealSignal2D> {
    plan.check(f.dims(), g.dims())?;
    let (ph, pw) = plan.padded_dims;
    let ff = dft_2d(&f.zero_padded(ph, pw)?)?;
    let gg = dft_2d(&g.zero_padded(ph, pw)?)?;
    let product: Vec<Complex> = ff
        .coeffs()
        .iter()
        .zip(gg.coeffs())
        .map(|(&x, &y)| x * y)
        .collect();
    let full = idft_2d(&ff.map_coeffs(product))?;

    let (h, w) = plan.input_dims;
    let (kh, kw) = plan.kernel_dims;
    let (r0, oh) = plan.mode.window(h, kh);
    let (c0, ow) = plan.mode.window(w, kw);
    let mut out = Vec::with_capacity(oh * ow);
    for r in r0..r0 + oh {
        out.extend_from_slice(&full.row(r)[c0..c0 + ow]);
    }
    let (dy, dx) = f.spacing();
    RealSignal2D::with_spacing(out, oh, ow, dy, dx)
}

/// Back-propagates through the pointwise spectral product `Y = F₁ ⊙ F₂`.
///
/// Gradients of a real loss `L` with respect to a complex coefficient
/// `z = a + ib` are represented as `∂L/∂a − i·∂L/∂b`. Under that convention
/// the product is holomorphic in `F₁`, so the gradient with respect to `F₁`
/// is `upstream ⊙ F₂`, where `upstream` is the gradient with respect to `Y`.
pub fn pointwise_product_grad(
    upstream: &ComplexSpectrum1D,
    other_factor: &ComplexSpectrum1D,
) -> Result<ComplexSpectrum1D> {
    if upstream.len() != other_factor.len() {
        return Err(Error::DimensionMismatch {
            expected: format!("{} coefficients", upstream.len()),
            actual: other_factor.len().to_string(),
        });
    }
    let coeffs = upstream
        .coeffs()
        .iter()
        .zip(other_factor.coeffs())
        .map(|(&u, &v)| u * v)
        .collect();
    Ok(upstream.map_coeffs(coeffs))
}
