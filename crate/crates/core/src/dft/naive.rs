use std::f64::consts::TAU;

use crate::complex::Complex;
use crate::signal::{ComplexSpectrum1D, RealSignal1D};

/// O(n²) DFT by direct summation, any length.
///
/// Terms are accumulated in ascending `k`. The phase `jk mod n` is reduced
/// before the trig call so large products do not lose accuracy.
pub fn dft_naive_1d(signal: &RealSignal1D) -> ComplexSpectrum1D {
    let x = signal.samples();
    let n = x.len();
    let coeffs = (0..n)
        .map(|j| {
            let mut acc = Complex::ZERO;
            for (k, &xk) in x.iter().enumerate() {
                let m = (j * k) % n;
                acc += Complex::cis(-TAU * m as f64 / n as f64).scale(xk);
            }
            acc
        })
        .collect();
    ComplexSpectrum1D::with_grid(coeffs, signal.spacing(), signal.origin())
        .expect("finite input yields finite spectrum")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spectrum(x: &[f64]) -> Vec<Complex> {
        dft_naive_1d(&RealSignal1D::new(x.to_vec()).unwrap()).into_coeffs()
    }

    #[test]
    fn constant_is_dc_only() {
        let c = spectrum(&[1.0, 1.0, 1.0, 1.0]);
        assert!((c[0] - Complex::real(4.0)).abs() < 1e-15);
        for z in &c[1..] {
            assert!(z.abs() < 1e-15);
        }
    }

    #[test]
    fn impulse_is_flat() {
        for z in spectrum(&[1.0, 0.0, 0.0, 0.0]) {
            assert!((z - Complex::ONE).abs() < 1e-15);
        }
    }

    #[test]
    fn odd_length_works() {
        // [1, 2, 3]: X0 = 6, X1 = -1.5 + i·(√3/2), X2 = conj(X1)
        let c = spectrum(&[1.0, 2.0, 3.0]);
        let s = 3f64.sqrt() / 2.0;
        assert!((c[0] - Complex::real(6.0)).abs() < 1e-14);
        assert!((c[1] - Complex::new(-1.5, s)).abs() < 1e-14);
        assert!((c[2] - Complex::new(-1.5, -s)).abs() < 1e-14);
    }
}
