use super::fft::radix2_in_place;
use super::{require_power_of_two, take_real};
use crate::complex::Complex;
use crate::error::Result;
use crate::signal::{ComplexSpectrum2D, RealSignal2D};

/// Row-column application of the 1D FFT; works on a row-major buffer.
pub(crate) fn fft2_in_place(data: &mut [Complex], rows: usize, cols: usize, inverse: bool) {
    for row in data.chunks_exact_mut(cols) {
        radix2_in_place(row, inverse);
    }
    let mut column = vec![Complex::ZERO; rows];
    for c in 0..cols {
        for (r, slot) in column.iter_mut().enumerate() {
            *slot = data[r * cols + c];
        }
        radix2_in_place(&mut column, inverse);
        for (r, value) in column.iter().enumerate() {
            data[r * cols + c] = *value;
        }
    }
}

/// 2D DFT of a real grid. Both dimensions must be powers of two.
pub fn dft_2d(signal: &RealSignal2D) -> Result<ComplexSpectrum2D> {
    let (rows, cols) = signal.dims();
    require_power_of_two(rows)?;
    require_power_of_two(cols)?;
    let mut data: Vec<Complex> = signal.data().iter().map(|&x| Complex::real(x)).collect();
    fft2_in_place(&mut data, rows, cols, false);
    let (dy, dx) = signal.spacing();
    ComplexSpectrum2D::with_spacing(data, rows, cols, dy, dx)
}

/// Inverse of [`dft_2d`], with `1/(H·W)` normalization.
pub fn idft_2d(spectrum: &ComplexSpectrum2D) -> Result<RealSignal2D> {
    let (rows, cols) = spectrum.dims();
    require_power_of_two(rows)?;
    require_power_of_two(cols)?;
    let mut data = spectrum.coeffs().to_vec();
    fft2_in_place(&mut data, rows, cols, true);
    let inv = 1.0 / (rows * cols) as f64;
    for z in &mut data {
        *z = z.scale(inv);
    }
    let real = take_real(&data, spectrum.coeffs())?;
    let (dy, dx) = spectrum.spacing();
    RealSignal2D::with_spacing(real, rows, cols, dy, dx)
}
