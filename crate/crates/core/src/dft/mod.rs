//! Discrete Fourier transforms and spectral differentiation.
//!
//! Normalization: the forward transform is unnormalized,
//! `X[j] = Σ_k x[k]·e^{-i2πjk/n}`, and the inverse carries the `1/n`.
//! Coefficients use the standard ordering documented in [`crate::signal`].

mod derivative;
mod fft;
mod naive;
mod two_d;

pub use derivative::{spectral_derivative_1d, spectral_derivative_2d, Axis};
pub use fft::{fft_1d, fft_complex, ifft_1d, ifft_complex};
pub use naive::dft_naive_1d;
pub use two_d::{dft_2d, idft_2d};

use crate::complex::Complex;
use crate::error::{Error, Result};

/// Imaginary residue below `IMAG_RESIDUE_REL · max|coeff|` is dropped by the
/// real-valued inverse transforms; anything larger is reported as an error.
pub const IMAG_RESIDUE_REL: f64 = 1e-10;

pub(crate) fn require_power_of_two(len: usize) -> Result<()> {
    if len.is_power_of_two() {
        Ok(())
    } else {
        Err(Error::NotPowerOfTwo { len })
    }
}

/// Real parts of `values`, or an error if the imaginary residue is too large
/// relative to the largest input coefficient.
pub(crate) fn take_real(values: &[Complex], input: &[Complex]) -> Result<Vec<f64>> {
    let scale = input.iter().map(|z| z.abs()).fold(0.0, f64::max);
    let residue = values.iter().map(|z| z.im.abs()).fold(0.0, f64::max);
    let limit = IMAG_RESIDUE_REL * scale;
    if residue > limit {
        return Err(Error::ImaginaryResidue { residue, limit });
    }
    Ok(values.iter().map(|z| z.re).collect())
}
