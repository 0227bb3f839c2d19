use std::f64::consts::TAU;

use crate::complex::Complex;
use crate::error::{ensure_positive, Result};
use crate::signal::{signed_index, ComplexSpectrum1D, ComplexSpectrum2D};

/// Axis of differentiation on a 2D grid. `X` runs along columns, `Y` along rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
}

/// Multiplier for bin `j` of an `n`-point axis; Nyquist is zeroed.
fn derivative_factor(j: usize, n: usize, domain_length: f64) -> Complex {
    if n.is_multiple_of(2) && 2 * j == n {
        return Complex::ZERO;
    }
    let k = signed_index(j, n) as f64;
    Complex::new(0.0, TAU * k / domain_length)
}

/// Differentiates a periodic signal in the frequency domain.
///
/// Each coefficient is multiplied by `iω_j` with angular frequency
/// `ω_j = 2π·j/L` for signed index `j` and period `L = domain_length`. The
/// Nyquist bin of an even-length spectrum is set to zero, since its sign is
/// ambiguous for real signals.
pub fn spectral_derivative_1d(
    spectrum: &ComplexSpectrum1D,
    domain_length: f64,
) -> Result<ComplexSpectrum1D> {
    ensure_positive(domain_length, "domain_length")?;
    let n = spectrum.len();
    let coeffs = spectrum
        .coeffs()
        .iter()
        .enumerate()
        .map(|(j, &z)| derivative_factor(j, n, domain_length) * z)
        .collect();
    Ok(spectrum.map_coeffs(coeffs))
}

/// Partial derivative of a periodic 2D signal in the frequency domain.
///
/// Uses ordinary frequency: bin `j` along the chosen axis is multiplied by
/// `i2π·u_j` with `u_j = j/L`. `domain_lengths` is `(L_y, L_x)`, matching the
/// `(rows, cols)` order of the grid.
pub fn spectral_derivative_2d(
    spectrum: &ComplexSpectrum2D,
    axis: Axis,
    domain_lengths: (f64, f64),
) -> Result<ComplexSpectrum2D> {
    let (ly, lx) = domain_lengths;
    ensure_positive(ly, "domain length along y")?;
    ensure_positive(lx, "domain length along x")?;
    let (rows, cols) = spectrum.dims();
    let coeffs = spectrum
        .coeffs()
        .iter()
        .enumerate()
        .map(|(idx, &z)| {
            let (r, c) = (idx / cols, idx % cols);
            let factor = match axis {
                Axis::X => derivative_factor(c, cols, lx),
                Axis::Y => derivative_factor(r, rows, ly),
            };
            factor * z
        })
        .collect();
    Ok(spectrum.map_coeffs(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dft::{dft_2d, fft_1d, idft_2d, ifft_1d};
    use crate::signal::{RealSignal1D, RealSignal2D};

    #[test]
    fn sine_to_cosine() {
        let n = 64;
        let h = TAU / n as f64;
        let s = RealSignal1D::sample(n, h, 0.0, f64::sin).unwrap();
        let d = spectral_derivative_1d(&fft_1d(&s).unwrap(), TAU).unwrap();
        let back = ifft_1d(&d).unwrap();
        for (k, v) in back.samples().iter().enumerate() {
            assert!((v - (k as f64 * h).cos()).abs() <= 1e-10);
        }
    }

    #[test]
    fn constant_has_zero_derivative() {
        let s = RealSignal1D::new(vec![3.0; 16]).unwrap();
        let d = spectral_derivative_1d(&fft_1d(&s).unwrap(), 16.0).unwrap();
        assert!(d.coeffs().iter().all(|z| z.abs() == 0.0));
    }

    #[test]
    fn nyquist_bin_is_zeroed() {
        // Alternating signal lives entirely in the Nyquist bin.
        let s = RealSignal1D::new(vec![1.0, -1.0, 1.0, -1.0, 1.0, -1.0, 1.0, -1.0]).unwrap();
        let d = spectral_derivative_1d(&fft_1d(&s).unwrap(), 8.0).unwrap();
        assert!(d.coeffs().iter().all(|z| z.abs() == 0.0));
    }

    #[test]
    fn rejects_nonpositive_length() {
        let s = fft_1d(&RealSignal1D::new(vec![1.0, 2.0]).unwrap()).unwrap();
        assert!(spectral_derivative_1d(&s, 0.0).is_err());
    }

    #[test]
    fn x_only_signal_has_zero_y_derivative() {
        let n = 16;
        let s = RealSignal2D::from_fn(n, n, |_, c| (TAU * c as f64 / n as f64).sin()).unwrap();
        let d = spectral_derivative_2d(&dft_2d(&s).unwrap(), Axis::Y, (1.0, 1.0)).unwrap();
        let back = idft_2d(&d).unwrap();
        assert!(back.data().iter().all(|v| v.abs() < 1e-13));
    }

    #[test]
    fn sin_2pi_x_on_unit_square() {
        let n = 32;
        let s = RealSignal2D::from_fn(n, n, |_, c| (TAU * c as f64 / n as f64).sin()).unwrap();
        let d = spectral_derivative_2d(&dft_2d(&s).unwrap(), Axis::X, (1.0, 1.0)).unwrap();
        let back = idft_2d(&d).unwrap();
        for r in 0..n {
            for c in 0..n {
                let want = TAU * (TAU * c as f64 / n as f64).cos();
                assert!((back.get(r, c) - want).abs() <= 1e-9);
            }
        }
    }
}
