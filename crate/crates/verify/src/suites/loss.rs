use std::f64::consts::LN_2;

use freqcnn::finite_diff::central_difference_complex;
use freqcnn::loss::{bce, bce_exp_form, bce_exp_identity_check, bce_ft_antiderivative, BceInput};
use freqcnn::{Complex, Result};

use super::{check, rel_c, Check, EXACT};
use crate::config::Suite;
use crate::rng::CheckRng;

pub(super) fn checks() -> Vec<Check> {
    let s = Suite::Loss;
    vec![
        check(s, "loss.bce_values", "-(y ln p + (1-y) ln(1-p))", 1e-15, bce_values),
        check(s, "loss.exp_identity", "exp(bce) = p^{-y}(1-p)^{y-1}", 1e-12, exp_identity),
        check(s, "loss.antiderivative", "d/dx p^{-y}(1-p)^{y-1} e^{-iwx}/(-iw) = p^{-y}(1-p)^{y-1} e^{-iwx}", 1e-6, antiderivative),
        check(s, "loss.label_symmetry", "bce(1,p) = bce(0,1-p)", EXACT, label_symmetry),
    ]
}

fn bce_values(_: &mut CheckRng) -> Result<f64> {
    Ok((bce(&BceInput::new(1.0, 0.5)?) - LN_2)
        .abs()
        .max((bce(&BceInput::new(0.0, 0.5)?) - LN_2).abs())
        .max((bce(&BceInput::new(1.0, 0.9)?) - 0.105_360_515_657_826_3).abs()))
}

/// 99-point p grid × y ∈ {0, 1}, relative error.
fn exp_identity(_: &mut CheckRng) -> Result<f64> {
    let mut worst = 0.0f64;
    for y in [0.0, 1.0] {
        for i in 1..=99 {
            let (lhs, rhs) = bce_exp_identity_check(&BceInput::new(y, i as f64 / 100.0)?);
            worst = worst.max((lhs - rhs).abs() / rhs);
        }
    }
    Ok(worst)
}

/// 5×5 (x, ω) grid per label plus the (0.3, 2, 1, 0.6) example.
fn antiderivative(_: &mut CheckRng) -> Result<f64> {
    let mut worst = 0.0f64;
    let mut cases = vec![(0.3, 2.0, BceInput::new(1.0, 0.6)?)];
    for y in [0.0, 1.0] {
        for x in [-2.0, -0.7, 0.0, 1.1, 3.0] {
            for w in [-3.0, -0.5, 0.25, 1.0, 4.0] {
                cases.push((x, w, BceInput::new(y, 0.35)?));
            }
        }
    }
    for (x, w, input) in cases {
        let mut failure = None;
        let fd = central_difference_complex(
            |t| {
                bce_ft_antiderivative(t, w, &input).unwrap_or_else(|e| {
                    failure = Some(e);
                    Complex::ZERO
                })
            },
            x,
            1e-5,
        );
        if let Some(e) = failure {
            return Err(e);
        }
        worst = worst.max(rel_c(fd, Complex::cis(-w * x).scale(bce_exp_form(&input))));
    }
    Ok(worst)
}

/// Dyadic p keeps 1 − p exact, so the symmetry must hold bit-for-bit.
fn label_symmetry(_: &mut CheckRng) -> Result<f64> {
    let mut worst = 0.0f64;
    for k in 1..1024 {
        let p = k as f64 / 1024.0;
        worst = worst.max((bce(&BceInput::new(1.0, p)?) - bce(&BceInput::new(0.0, 1.0 - p)?)).abs());
    }
    Ok(worst)
}
