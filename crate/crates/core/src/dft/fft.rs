use std::f64::consts::TAU;

use super::{require_power_of_two, take_real};
use crate::complex::Complex;
use crate::error::Result;
use crate::signal::{ComplexSpectrum1D, RealSignal1D};

fn bit_reverse_permute(data: &mut [Complex]) {
    let n = data.len();
    let bits = n.trailing_zeros();
    if bits == 0 {
        return;
    }
    for i in 0..n {
        let j = i.reverse_bits() >> (usize::BITS - bits);
        if i < j {
            data.swap(i, j);
        }
    }
}

/// In-place iterative radix-2 decimation-in-time FFT.
///
/// `data.len()` must be a power of two. The inverse direction flips the
/// twiddle sign and does not apply the `1/n` factor.
pub(crate) fn radix2_in_place(data: &mut [Complex], inverse: bool) {
    let n = data.len();
    debug_assert!(n.is_power_of_two());
    if n <= 1 {
        return;
    }
    bit_reverse_permute(data);

    // Twiddles evaluated directly per index; a running product drifts.
    let sign = if inverse { 1.0 } else { -1.0 };
    let twiddles: Vec<Complex> = (0..n / 2)
        .map(|k| Complex::cis(sign * TAU * k as f64 / n as f64))
        .collect();

    let mut len = 2;
    while len <= n {
        let half = len / 2;
        let stride = n / len;
        for start in (0..n).step_by(len) {
            for k in 0..half {
                let w = twiddles[k * stride];
                let a = data[start + k];
                let b = data[start + k + half] * w;
                data[start + k] = a + b;
                data[start + k + half] = a - b;
            }
        }
        len <<= 1;
    }
}

/// Forward FFT of complex data. Length must be a power of two.
pub fn fft_complex(data: &[Complex]) -> Result<Vec<Complex>> {
    require_power_of_two(data.len())?;
    let mut out = data.to_vec();
    radix2_in_place(&mut out, false);
    Ok(out)
}

/// Inverse FFT of complex data, including the `1/n` factor.
pub fn ifft_complex(data: &[Complex]) -> Result<Vec<Complex>> {
    require_power_of_two(data.len())?;
    let mut out = data.to_vec();
    radix2_in_place(&mut out, true);
    let inv_n = 1.0 / out.len() as f64;
    for z in &mut out {
        *z = z.scale(inv_n);
    }
    Ok(out)
}

/// Forward FFT of a real signal whose length is a power of two.
///
/// Callers zero-pad other lengths first; see [`RealSignal1D::zero_padded`].
pub fn fft_1d(signal: &RealSignal1D) -> Result<ComplexSpectrum1D> {
    require_power_of_two(signal.len())?;
    let mut data: Vec<Complex> = signal.samples().iter().map(|&x| Complex::real(x)).collect();
    radix2_in_place(&mut data, false);
    ComplexSpectrum1D::with_grid(data, signal.spacing(), signal.origin())
}

/// Inverse FFT back to a real signal.
///
/// Fails with [`crate::Error::ImaginaryResidue`] when the spectrum did not
/// come from a real signal (imaginary residue above `1e-10·max|coeff|`).
pub fn ifft_1d(spectrum: &ComplexSpectrum1D) -> Result<RealSignal1D> {
    let values = ifft_complex(spectrum.coeffs())?;
    let samples = take_real(&values, spectrum.coeffs())?;
    RealSignal1D::with_grid(samples, spectrum.spacing(), spectrum.origin())
}
