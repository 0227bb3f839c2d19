//! Registry of verification checks.
//!
//! A check returns a single measured error; it passes when that error is
//! finite and strictly below its tolerance. Checks of exact identities carry
//! the tolerance [`EXACT`], so only a zero error passes.

use freqcnn::Complex;

use crate::config::Suite;
use crate::rng::CheckRng;

mod activations;
mod conv;
mod dft;
mod laplace;
mod loss;
mod pooling;

/// Smallest positive tolerance: passes only an error of exactly zero.
pub const EXACT: f64 = f64::MIN_POSITIVE;

pub type CheckFn = fn(&mut CheckRng) -> freqcnn::Result<f64>;

#[derive(Clone, Copy)]
pub struct Check {
    pub name: &'static str,
    /// The identity or closed form the check exercises.
    pub anchor: &'static str,
    pub suite: Suite,
    pub tolerance: f64,
    pub run: CheckFn,
}

impl std::fmt::Debug for Check {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Check")
            .field("name", &self.name)
            .field("suite", &self.suite)
            .field("tolerance", &self.tolerance)
            .finish()
    }
}

/// Every check, in registration order.
pub fn registry() -> Vec<Check> {
    let mut all = Vec::new();
    all.extend(dft::checks());
    all.extend(conv::checks());
    all.extend(activations::checks());
    all.extend(pooling::checks());
    all.extend(loss::checks());
    all.extend(laplace::checks());
    all
}

pub fn find(name: &str) -> Option<Check> {
    registry().into_iter().find(|c| c.name == name)
}

const fn check(
    suite: Suite,
    name: &'static str,
    anchor: &'static str,
    tolerance: f64,
    run: CheckFn,
) -> Check {
    Check {
        name,
        anchor,
        suite,
        tolerance,
        run,
    }
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn rel_c(a: Complex, b: Complex) -> f64 {
    (a - b).abs() / b.abs()
}

fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn names_are_unique_and_prefixed() {
        let reg = registry();
        let mut seen = HashSet::new();
        for c in &reg {
            assert!(seen.insert(c.name), "duplicate {}", c.name);
            assert!(c.name.starts_with(&format!("{}.", c.suite)), "{}", c.name);
            assert!(c.tolerance > 0.0);
            assert!(!c.name.contains(','));
        }
    }

    #[test]
    fn every_check_passes_with_seed_zero() {
        for c in registry() {
            let mut rng = CheckRng::for_check(0, c.name);
            let e = (c.run)(&mut rng).unwrap_or_else(|err| panic!("{}: {err}", c.name));
            assert!(e.is_finite() && e < c.tolerance, "{}: {e:e} vs {:e}", c.name, c.tolerance);
        }
    }
}
