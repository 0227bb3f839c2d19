//! Central finite differences.

use crate::complex::Complex;

/// `(f(x + h) − f(x − h)) / 2h`.
pub fn central_difference<F>(mut f: F, x: f64, h: f64) -> f64
where
    F: FnMut(f64) -> f64,
{
    (f(x + h) - f(x - h)) / (2.0 * h)
}

/// Fourth-order stencil `(−f(x+2h) + 8f(x+h) − 8f(x−h) + f(x−2h)) / 12h`.
pub fn central_difference_4<F>(mut f: F, x: f64, h: f64) -> f64
where
    F: FnMut(f64) -> f64,
{
    (-f(x + 2.0 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2.0 * h)) / (12.0 * h)
}

/// Central difference of a complex-valued function of a real variable.
pub fn central_difference_complex<F>(mut f: F, x: f64, h: f64) -> Complex
where
    F: FnMut(f64) -> Complex,
{
    (f(x + h) - f(x - h)) / (2.0 * h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_on_low_degree_polynomials() {
        let d = central_difference(|x| x * x, 3.0, 0.5);
        assert!((d - 6.0).abs() < 1e-14);
        let d = central_difference_4(|x| x * x * x * x, 1.0, 0.25);
        assert!((d - 4.0).abs() < 1e-13);
    }

    #[test]
    fn complex_exponential() {
        let d = central_difference_complex(Complex::cis, 0.0, 1e-5);
        assert!((d - Complex::I).abs() < 1e-10);
    }
}
