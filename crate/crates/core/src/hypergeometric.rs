//! Gauss hypergeometric function ₂F₁ by direct power series.
//!
//! ```text
//! ₂F₁(a, b; c; z) = Σ_{n≥0} (a)_n (b)_n / (c)_n · zⁿ / n!
//! ```
//!
//! Only the disc `|z| < 1` is supported. Terms are generated by the ratio
//! `t_{n+1} = t_n · (a+n)(b+n) / ((c+n)(n+1)) · z`, and the sum stops at the
//! first term with `|t_n| < rel_tol · |S_n|`.

use crate::complex::Complex;
use crate::error::{Error, Result};

/// Parameters of ₂F₁(a, b; c; z), all complex.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hyp2F1Params {
    pub a: Complex,
    pub b: Complex,
    pub c: Complex,
    pub z: Complex,
}

impl Hyp2F1Params {
    pub fn new(a: Complex, b: Complex, c: Complex, z: Complex) -> Self {
        Hyp2F1Params { a, b, c, z }
    }

    pub fn real(a: f64, b: f64, c: f64, z: f64) -> Self {
        Hyp2F1Params::new(a.into(), b.into(), c.into(), z.into())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesControl {
    pub rel_tol: f64,
    pub max_terms: usize,
}

impl Default for SeriesControl {
    fn default() -> Self {
        SeriesControl {
            rel_tol: 1e-12,
            max_terms: 100_000,
        }
    }
}

/// Converged partial sum and the number of terms added after the leading 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesSum {
    pub value: Complex,
    pub terms: usize,
}

fn is_nonpositive_integer(c: Complex) -> bool {
    c.im == 0.0 && c.re <= 0.0 && c.re.fract() == 0.0
}

pub fn hyp2f1(params: &Hyp2F1Params, ctl: &SeriesControl) -> Result<SeriesSum> {
    let Hyp2F1Params { a, b, c, z } = *params;
    for (name, v) in [("a", a), ("b", b), ("c", c), ("z", z)] {
        if !v.is_finite() {
            return Err(Error::NonFinite { what: name });
        }
    }
    if ctl.rel_tol.is_nan() || ctl.rel_tol <= 0.0 {
        return Err(Error::InvalidParameter {
            name: "rel_tol",
            value: ctl.rel_tol,
            reason: "must be strictly positive",
        });
    }
    if is_nonpositive_integer(c) {
        return Err(Error::Pole { name: "c", value: c.re });
    }
    let modulus = z.abs();
    if modulus >= 1.0 {
        return Err(Error::SeriesDomain { modulus });
    }

    let mut sum = Complex::ONE;
    let mut term = Complex::ONE;
    for n in 0..ctl.max_terms {
        let k = n as f64;
        term = term * (a + Complex::real(k)) * (b + Complex::real(k)) * z
            / ((c + Complex::real(k)) * Complex::real(k + 1.0));
        sum += term;
        let t = term.abs();
        if t == 0.0 || t < ctl.rel_tol * sum.abs() {
            return Ok(SeriesSum {
                value: sum,
                terms: n + 1,
            });
        }
    }
    Err(Error::SeriesConvergence {
        partial: sum,
        terms: ctl.max_terms,
    })
}
