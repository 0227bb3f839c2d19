use freqcnn::finite_diff::central_difference_complex;
use freqcnn::loss::{bce, bce_exp_form, bce_exp_identity_check, bce_ft_antiderivative, BceInput};
use freqcnn::Complex;
use proptest::prelude::*;

fn input(y: f64, p: f64) -> BceInput {
    BceInput::new(y, p).unwrap()
}

#[test]
fn exp_identity_on_grid() {
    for y in [0.0, 1.0] {
        for i in 1..=99 {
            let (lhs, rhs) = bce_exp_identity_check(&input(y, i as f64 / 100.0));
            assert!((lhs - rhs).abs() <= 1e-12 * rhs, "y={y} p={}", i as f64 / 100.0);
        }
    }
}

#[test]
fn hand_values() {
    assert!((bce(&input(1.0, 0.9)) - 0.105_360_515_657_826_3).abs() < 1e-15);
    let (l, r) = bce_exp_identity_check(&input(0.0, 0.3));
    assert!((l - 1.0 / 0.7).abs() < 1e-12 && (r - 1.0 / 0.7).abs() < 1e-12);
}

#[test]
fn antiderivative_example() {
    let inp = input(1.0, 0.6);
    let fd = central_difference_complex(|t| bce_ft_antiderivative(t, 2.0, &inp).unwrap(), 0.3, 1e-5);
    let want = Complex::cis(-0.6).scale(1.0 / 0.6);
    assert!((fd - want).abs() <= 1e-6 * want.abs());
}

#[test]
fn antiderivative_property_grid() {
    for y in [0.0, 1.0] {
        let inp = input(y, 0.35);
        for &x in &[-2.0, -0.7, 0.0, 1.1, 3.0] {
            for &w in &[-3.0, -0.5, 0.25, 1.0, 4.0] {
                let fd = central_difference_complex(|t| bce_ft_antiderivative(t, w, &inp).unwrap(), x, 1e-5);
                let want = Complex::cis(-w * x).scale(bce_exp_form(&inp));
                assert!((fd - want).abs() <= 1e-6 * want.abs(), "x={x} w={w}");
            }
        }
    }
}

proptest! {
    #[test]
    fn label_symmetry_is_exact(k in 1u32..1024) {
        // Dyadic p keeps 1 − p exact.
        let p = k as f64 / 1024.0;
        prop_assert_eq!(bce(&input(1.0, p)), bce(&input(0.0, 1.0 - p)));
    }

    #[test]
    fn nonnegative_and_decreasing_toward_label(p in 0.01f64..0.98) {
        let q = p + 0.01;
        prop_assert!(bce(&input(1.0, p)) >= 0.0 && bce(&input(0.0, p)) >= 0.0);
        prop_assert!(bce(&input(1.0, q)) < bce(&input(1.0, p)));
        prop_assert!(bce(&input(0.0, q)) > bce(&input(0.0, p)));
    }
}
