use std::f64::consts::TAU;

use freqcnn::dft::{dft_2d, idft_2d};
use freqcnn::pooling::{
    avg_pool_direct, box_ft, gap_spatial, gap_spectral, spectral_pool_truncate, BoxKernel,
    TruncationSpec,
};
use freqcnn::quadrature::{continuous_ft_quadrature_2d, QuadratureSpec};
use freqcnn::RealSignal2D;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_grid(rng: &mut ChaCha8Rng, h: usize, w: usize) -> RealSignal2D {
    RealSignal2D::new((0..h * w).map(|_| rng.gen_range(-1.0..=1.0)).collect(), h, w).unwrap()
}

#[test]
fn box_ft_matches_tensor_quadrature() {
    let k = BoxKernel::new(2.0, 2.0).unwrap();
    let sx = QuadratureSpec::new(-1.0, 1.0, 16, 1e-10).unwrap();
    let sy = sx;
    let mut points = vec![(0.3, 0.7)];
    for i in 0..5 {
        for j in 0..5 {
            // Offsets keep W·u and H·v away from the sinc zeros.
            points.push((-1.13 + 0.53 * i as f64, -0.93 + 0.47 * j as f64));
        }
    }
    for (u, v) in points {
        // The box integrated over its support, where it equals its amplitude.
        let q = continuous_ft_quadrature_2d(|_, _| k.amplitude(), TAU * u, TAU * v, &sx, &sy).unwrap();
        let want = box_ft(&k, u, v);
        assert!(q.im.abs() <= 1e-12);
        assert!((q.re - want).abs() <= 1e-7 * want.abs(), "u={u} v={v}: {} vs {want}", q.re);
    }
}

#[test]
fn box_ft_examples() {
    let unit = BoxKernel::new(1.0, 1.0).unwrap();
    assert_eq!(box_ft(&unit, 0.0, 0.0), 1.0);
    assert!(box_ft(&unit, 1.0, 0.0).abs() < 1e-16);
}

#[test]
fn box_ft_even_and_bounded() {
    let k = BoxKernel::new(1.5, 0.75).unwrap();
    for i in -20..=20 {
        for j in -20..=20 {
            let (u, v) = (0.137 * i as f64, 0.291 * j as f64);
            let b = box_ft(&k, u, v);
            assert_eq!(b, box_ft(&k, -u, v));
            assert_eq!(b, box_ft(&k, u, -v));
            assert!((-1.0..=1.0).contains(&b));
            assert!(b <= box_ft(&k, 0.0, 0.0));
        }
    }
}

#[test]
fn avg_pool_matches_nested_loop_mean() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let s = random_grid(&mut rng, 8, 8);
    let p = avg_pool_direct(&s, (2, 2)).unwrap();
    for r in 0..4 {
        for c in 0..4 {
            let mut acc = 0.0;
            for i in 0..2 {
                for j in 0..2 {
                    acc += s.get(2 * r + i, 2 * c + j);
                }
            }
            assert!((p.get(r, c) - acc / 4.0).abs() < 1e-15);
        }
    }
    let s = RealSignal2D::new(vec![1.0, 2.0, 3.0, 4.0], 2, 2).unwrap();
    assert_eq!(avg_pool_direct(&s, (2, 2)).unwrap().data(), &[2.5]);
}

#[test]
fn truncation_reconstructs_in_band_cosine() {
    let n = 16;
    let s = RealSignal2D::from_fn(n, n, |r, c| (TAU * (2.0 * r as f64 + c as f64) / n as f64).cos()).unwrap();
    let t = spectral_pool_truncate(&dft_2d(&s).unwrap(), &TruncationSpec::new(8, 8).unwrap()).unwrap();
    let back = idft_2d(&t).unwrap();
    for r in 0..8 {
        for c in 0..8 {
            let want = (TAU * (2.0 * r as f64 + c as f64) / 8.0).cos();
            assert!((back.get(r, c) - want).abs() <= 1e-10);
        }
    }
}

#[test]
fn truncation_preserves_constants_and_dc() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for &(oh, ow) in &[(8, 8), (4, 16), (1, 1), (16, 2)] {
        let c = rng.gen_range(-5.0..5.0);
        let s = RealSignal2D::constant(16, 16, c).unwrap();
        let back = idft_2d(&spectral_pool_truncate(&dft_2d(&s).unwrap(), &TruncationSpec::new(oh, ow).unwrap()).unwrap()).unwrap();
        assert!(back.data().iter().all(|&v| v == c));

        let s = random_grid(&mut rng, 16, 16);
        let spec = dft_2d(&s).unwrap();
        let t = spectral_pool_truncate(&spec, &TruncationSpec::new(oh, ow).unwrap()).unwrap();
        // DC scales by exactly (oh·ow)/(H·W), so the mean is preserved.
        let scale = (oh * ow) as f64 / 256.0;
        assert_eq!(t.get(0, 0), spec.get(0, 0).scale(scale));
    }
}

#[test]
fn truncation_never_increases_mean_square() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..20 {
        let (h, w) = (1usize << rng.gen_range(1..=5), 1usize << rng.gen_range(1..=5));
        let (oh, ow) = (rng.gen_range(1..=h), rng.gen_range(1..=w));
        let s = random_grid(&mut rng, h, w);
        let pooled = idft_2d(&spectral_pool_truncate(&dft_2d(&s).unwrap(), &TruncationSpec::new(oh, ow).unwrap()).unwrap());
        // Odd output sizes are fine for the truncation itself; only the
        // inverse needs powers of two.
        let Ok(pooled) = pooled else { continue };
        let ms_in = s.data().iter().map(|v| v * v).sum::<f64>() / (h * w) as f64;
        let ms_out = pooled.data().iter().map(|v| v * v).sum::<f64>() / (oh * ow) as f64;
        assert!(ms_out <= ms_in * (1.0 + 1e-12), "{h}x{w} -> {oh}x{ow}");
    }
}

#[test]
fn gap_equivalence_on_random_grids() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    for i in 0..20 {
        let (h, w) = if i == 0 { (8, 8) } else { (1usize << rng.gen_range(0..=5), 1usize << rng.gen_range(0..=5)) };
        let s = random_grid(&mut rng, h, w);
        let a = gap_spatial(&s);
        let b = gap_spectral(&dft_2d(&s).unwrap()).unwrap();
        assert!((a - b).abs() <= 1e-12);
    }
}

#[test]
fn gap_examples() {
    let s = RealSignal2D::constant(8, 4, -0.75).unwrap();
    assert_eq!(gap_spatial(&s), -0.75);
    assert!((gap_spectral(&dft_2d(&s).unwrap()).unwrap() + 0.75).abs() < 1e-15);
    let zero_mean = RealSignal2D::from_fn(4, 4, |r, c| if (r + c) % 2 == 0 { 1.0 } else { -1.0 }).unwrap();
    assert_eq!(gap_spatial(&zero_mean), 0.0);
    assert!(gap_spectral(&dft_2d(&zero_mean).unwrap()).unwrap().abs() < 1e-15);
}

proptest! {
    #[test]
    fn avg_pool_of_constant_is_exact(c in -1e3f64..1e3, wh in 1usize..5, ww in 1usize..5, m in 1usize..4) {
        let s = RealSignal2D::constant(wh * m, ww * m, c).unwrap();
        let p = avg_pool_direct(&s, (wh, ww)).unwrap();
        prop_assert!(p.data().iter().all(|&v| v == c));
    }
}
