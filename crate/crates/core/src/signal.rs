//! Sampled signals and their spectra.
//!
//! Spectra use the standard DFT ordering throughout the crate: index `j`
//! holds frequency `j` for `j < n/2` and frequency `j - n` otherwise. For
//! even `n` the bin `j = n/2` is the Nyquist bin. See [`signed_index`].

use crate::complex::Complex;
use crate::error::{ensure_finite, ensure_positive, Error, Result};

/// Signed frequency index of bin `j` in a length-`n` spectrum.
///
/// The Nyquist bin of an even-length spectrum maps to `+n/2`.
#[inline]
pub fn signed_index(j: usize, n: usize) -> i64 {
    if 2 * j <= n {
        j as i64
    } else {
        j as i64 - n as i64
    }
}

/// Uniformly sampled real signal on a line.
#[derive(Debug, Clone, PartialEq)]
pub struct RealSignal1D {
    samples: Vec<f64>,
    spacing: f64,
    origin: f64,
}

impl RealSignal1D {
    /// Unit spacing, origin at zero.
    pub fn new(samples: Vec<f64>) -> Result<Self> {
        Self::with_grid(samples, 1.0, 0.0)
    }

    pub fn with_grid(samples: Vec<f64>, spacing: f64, origin: f64) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::Empty);
        }
        ensure_positive(spacing, "spacing")?;
        ensure_finite(origin, "signal origin")?;
        if samples.iter().any(|s| !s.is_finite()) {
            return Err(Error::NonFinite {
                what: "signal samples",
            });
        }
        Ok(RealSignal1D {
            samples,
            spacing,
            origin,
        })
    }

    /// Samples `f` at `origin + k·spacing` for `k in 0..len`.
    pub fn sample<F: Fn(f64) -> f64>(len: usize, spacing: f64, origin: f64, f: F) -> Result<Self> {
        let samples = (0..len).map(|k| f(origin + k as f64 * spacing)).collect();
        Self::with_grid(samples, spacing, origin)
    }

    #[inline]
    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn into_samples(self) -> Vec<f64> {
        self.samples
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.samples.len()
    }

    /// Always false; kept for API symmetry with slices.
    #[inline]
    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    #[inline]
    pub fn spacing(&self) -> f64 {
        self.spacing
    }

    #[inline]
    pub fn origin(&self) -> f64 {
        self.origin
    }

    /// Extent `len · spacing` of the periodic domain the samples tile.
    pub fn domain_length(&self) -> f64 {
        self.len() as f64 * self.spacing
    }

    pub fn scaled(&self, k: f64) -> Result<Self> {
        Self::with_grid(
            self.samples.iter().map(|s| s * k).collect(),
            self.spacing,
            self.origin,
        )
    }

    /// Zero-pads on the right to `len` samples.
    pub fn zero_padded(&self, len: usize) -> Result<Self> {
        if len < self.len() {
            return Err(Error::DimensionMismatch {
                expected: format!("padded length >= {}", self.len()),
                actual: len.to_string(),
            });
        }
        let mut samples = self.samples.clone();
        samples.resize(len, 0.0);
        Ok(RealSignal1D {
            samples,
            spacing: self.spacing,
            origin: self.origin,
        })
    }
}

/// Uniformly sampled real signal on a rectangular grid, stored row-major.
///
/// Rows run along `y` (height `H`), columns along `x` (width `W`).
#[derive(Debug, Clone, PartialEq)]
pub struct RealSignal2D {
    data: Vec<f64>,
    rows: usize,
    cols: usize,
    dy: f64,
    dx: f64,
}

impl RealSignal2D {
    pub fn new(data: Vec<f64>, rows: usize, cols: usize) -> Result<Self> {
        Self::with_spacing(data, rows, cols, 1.0, 1.0)
    }

    pub fn with_spacing(data: Vec<f64>, rows: usize, cols: usize, dy: f64, dx: f64) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Empty);
        }
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: format!("{rows}x{cols} = {} values", rows * cols),
                actual: data.len().to_string(),
            });
        }
        ensure_positive(dy, "row spacing")?;
        ensure_positive(dx, "column spacing")?;
        if data.iter().any(|s| !s.is_finite()) {
            return Err(Error::NonFinite {
                what: "signal samples",
            });
        }
        Ok(RealSignal2D {
            data,
            rows,
            cols,
            dy,
            dx,
        })
    }

    /// Builds a grid from `f(row, col)`.
    pub fn from_fn<F: FnMut(usize, usize) -> f64>(rows: usize, cols: usize, mut f: F) -> Result<Self> {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self::new(data, rows, cols)
    }

    pub fn constant(rows: usize, cols: usize, value: f64) -> Result<Self> {
        Self::new(vec![value; rows * cols], rows, cols)
    }

    #[inline]
    pub fn data(&self) -> &[f64] {
        &self.data
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn dims(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn spacing(&self) -> (f64, f64) {
        (self.dy, self.dx)
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[f64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn with_grid_spacing(mut self, dy: f64, dx: f64) -> Result<Self> {
        ensure_positive(dy, "row spacing")?;
        ensure_positive(dx, "column spacing")?;
        self.dy = dy;
        self.dx = dx;
        Ok(self)
    }

    pub fn scaled(&self, k: f64) -> Result<Self> {
        Self::with_spacing(
            self.data.iter().map(|s| s * k).collect(),
            self.rows,
            self.cols,
            self.dy,
            self.dx,
        )
    }

    /// Zero-pads on the bottom and right to `rows × cols`.
    pub fn zero_padded(&self, rows: usize, cols: usize) -> Result<Self> {
        if rows < self.rows || cols < self.cols {
            return Err(Error::DimensionMismatch {
                expected: format!("padded dims >= {}x{}", self.rows, self.cols),
                actual: format!("{rows}x{cols}"),
            });
        }
        let mut data = vec![0.0; rows * cols];
        for r in 0..self.rows {
            data[r * cols..r * cols + self.cols].copy_from_slice(self.row(r));
        }
        Ok(RealSignal2D {
            data,
            rows,
            cols,
            dy: self.dy,
            dx: self.dx,
        })
    }
}

/// Complex DFT coefficients of a 1D signal in standard ordering.
///
/// Carries the sample spacing and origin of the originating signal so the
/// inverse transform can restore the grid.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexSpectrum1D {
    coeffs: Vec<Complex>,
    spacing: f64,
    origin: f64,
}

impl ComplexSpectrum1D {
    pub fn new(coeffs: Vec<Complex>) -> Result<Self> {
        Self::with_grid(coeffs, 1.0, 0.0)
    }

    pub fn with_grid(coeffs: Vec<Complex>, spacing: f64, origin: f64) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Empty);
        }
        if coeffs.iter().any(|z| !z.is_finite()) {
            return Err(Error::NonFinite {
                what: "spectrum coefficients",
            });
        }
        ensure_positive(spacing, "spacing")?;
        ensure_finite(origin, "signal origin")?;
        Ok(ComplexSpectrum1D {
            coeffs,
            spacing,
            origin,
        })
    }

    #[inline]
    pub fn coeffs(&self) -> &[Complex] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Complex> {
        self.coeffs
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    #[inline]
    pub fn spacing(&self) -> f64 {
        self.spacing
    }

    #[inline]
    pub fn origin(&self) -> f64 {
        self.origin
    }

    /// Same grid metadata, new coefficients. Length must match.
    pub(crate) fn map_coeffs(&self, coeffs: Vec<Complex>) -> Self {
        debug_assert_eq!(coeffs.len(), self.coeffs.len());
        ComplexSpectrum1D {
            coeffs,
            spacing: self.spacing,
            origin: self.origin,
        }
    }
}

/// Complex 2D DFT coefficients, row-major, standard ordering on both axes.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexSpectrum2D {
    coeffs: Vec<Complex>,
    rows: usize,
    cols: usize,
    dy: f64,
    dx: f64,
}

impl ComplexSpectrum2D {
    pub fn new(coeffs: Vec<Complex>, rows: usize, cols: usize) -> Result<Self> {
        Self::with_spacing(coeffs, rows, cols, 1.0, 1.0)
    }

    pub fn with_spacing(
        coeffs: Vec<Complex>,
        rows: usize,
        cols: usize,
        dy: f64,
        dx: f64,
    ) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Empty);
        }
        if coeffs.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: format!("{rows}x{cols} = {} values", rows * cols),
                actual: coeffs.len().to_string(),
            });
        }
        if coeffs.iter().any(|z| !z.is_finite()) {
            return Err(Error::NonFinite {
                what: "spectrum coefficients",
            });
        }
        ensure_positive(dy, "row spacing")?;
        ensure_positive(dx, "column spacing")?;
        Ok(ComplexSpectrum2D {
            coeffs,
            rows,
            cols,
            dy,
            dx,
        })
    }

    #[inline]
    pub fn coeffs(&self) -> &[Complex] {
        &self.coeffs
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn dims(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn spacing(&self) -> (f64, f64) {
        (self.dy, self.dx)
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Complex {
        self.coeffs[r * self.cols + c]
    }

    pub(crate) fn map_coeffs(&self, coeffs: Vec<Complex>) -> Self {
        debug_assert_eq!(coeffs.len(), self.coeffs.len());
        ComplexSpectrum2D {
            coeffs,
            rows: self.rows,
            cols: self.cols,
            dy: self.dy,
            dx: self.dx,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signed_index_ordering() {
        let got: Vec<i64> = (0..8).map(|j| signed_index(j, 8)).collect();
        assert_eq!(got, vec![0, 1, 2, 3, 4, -3, -2, -1]);
        let got: Vec<i64> = (0..5).map(|j| signed_index(j, 5)).collect();
        assert_eq!(got, vec![0, 1, 2, -2, -1]);
    }

    #[test]
    fn rejects_bad_signals() {
        assert_eq!(RealSignal1D::new(vec![]), Err(Error::Empty));
        assert!(RealSignal1D::with_grid(vec![1.0], 0.0, 0.0).is_err());
        assert!(RealSignal1D::with_grid(vec![1.0], -1.0, 0.0).is_err());
        assert!(RealSignal1D::new(vec![f64::NAN]).is_err());
        assert!(RealSignal2D::new(vec![1.0; 5], 2, 3).is_err());
        assert!(RealSignal2D::new(vec![], 0, 3).is_err());
        assert!(ComplexSpectrum1D::new(vec![Complex::new(f64::INFINITY, 0.0)]).is_err());
    }

    #[test]
    fn zero_padding_2d_keeps_layout() {
        let s = RealSignal2D::new(vec![1.0, 2.0, 3.0, 4.0], 2, 2).unwrap();
        let p = s.zero_padded(3, 4).unwrap();
        assert_eq!(
            p.data(),
            &[1.0, 2.0, 0.0, 0.0, 3.0, 4.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]
        );
    }
}
