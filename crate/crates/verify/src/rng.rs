//! Seeded random instances.
//!
//! Every check draws from its own ChaCha8 stream, keyed through
//! `rand_core::SeedableRng::seed_from_u64(seed + fnv1a64(check_name))`
//! (wrapping addition). Uniform reals on `[−1, 1]` are
//! `2·(next_u64() >> 11)·2⁻⁵³ − 1`; integers in `[lo, hi]` are
//! `lo + next_u64() mod (hi − lo + 1)`. Checks therefore see the same numbers
//! regardless of scheduling or which other suites run.

use std::hash::Hasher;

use fnv::FnvHasher;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

pub fn fnv1a64(name: &str) -> u64 {
    let mut h = FnvHasher::default();
    h.write(name.as_bytes());
    h.finish()
}

pub struct CheckRng(ChaCha8Rng);

impl CheckRng {
    pub fn for_check(seed: u64, name: &str) -> Self {
        CheckRng(ChaCha8Rng::seed_from_u64(seed.wrapping_add(fnv1a64(name))))
    }

    /// Uniform on `[−1, 1]`.
    pub fn uniform(&mut self) -> f64 {
        let unit = (self.0.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
        unit * 2.0 - 1.0
    }

    /// Uniform on `[lo, hi]`.
    pub fn uniform_in(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (self.uniform() + 1.0) * 0.5 * (hi - lo)
    }

    pub fn uniform_vec(&mut self, n: usize) -> Vec<f64> {
        (0..n).map(|_| self.uniform()).collect()
    }

    /// Integer in `[lo, hi]`.
    pub fn int_in(&mut self, lo: usize, hi: usize) -> usize {
        lo + (self.0.next_u64() % (hi - lo + 1) as u64) as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fnv_reference_values() {
        assert_eq!(fnv1a64(""), 0xcbf2_9ce4_8422_2325);
        assert_eq!(fnv1a64("a"), 0xaf63_dc4c_8601_ec8c);
    }

    #[test]
    fn streams_are_reproducible_and_bounded() {
        let mut a = CheckRng::for_check(7, "dft.parseval");
        let mut b = CheckRng::for_check(7, "dft.parseval");
        for _ in 0..1000 {
            let x = a.uniform();
            assert_eq!(x, b.uniform());
            assert!((-1.0..=1.0).contains(&x));
            let k = a.int_in(3, 9);
            assert_eq!(k, b.int_in(3, 9));
            assert!((3..=9).contains(&k));
        }
        let mut c = CheckRng::for_check(7, "dft.linearity");
        assert_ne!(CheckRng::for_check(7, "dft.parseval").uniform(), c.uniform());
    }
}
