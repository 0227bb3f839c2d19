//! Verification suites, convolution benchmark and report emitter for
//! [`freqcnn`].
//!
//! [`run_suites`] executes every registered check of the selected suites,
//! each with its own seeded random stream, and returns a
//! [`VerificationReport`] whose record order is the registration order.

pub mod bench;
pub mod config;
pub mod error;
pub mod report;
pub mod rng;
pub mod suites;

use std::time::Instant;

use freqcnn::laplace::{
    relu_lt, relu_lt_lower_limit_added, relu_lt_p_derivative_check, sigmoid_lt_spatial_derivative,
    LaplacePoint,
};
use rayon::prelude::*;

pub use bench::{run_bench, BenchRecord};
pub use config::{Format, Suite, SuiteConfig};
pub use error::{Result, VerifyError};
pub use report::{emit_report, CheckRecord, Summary, VerificationReport};

use crate::bench::{bench_size, gate_check_name, gate_limit};
use crate::rng::CheckRng;
use crate::suites::{registry, Check};

fn known_check(name: &str, config: &SuiteConfig) -> bool {
    registry().iter().any(|c| c.name == name)
        || config.sizes.iter().any(|&n| gate_check_name(n) == name)
}

fn run_check(check: &Check, config: &SuiteConfig) -> (CheckRecord, Option<String>) {
    let tolerance = config
        .tolerance_overrides
        .get(check.name)
        .copied()
        .unwrap_or(check.tolerance);
    let mut rng = CheckRng::for_check(config.seed, check.name);
    let start = Instant::now();
    let outcome = (check.run)(&mut rng);
    let ns = start.elapsed().as_nanos() as u64;
    match outcome {
        Ok(error) => (CheckRecord::new(check.name, check.anchor, error, tolerance, ns), None),
        Err(e) => (
            CheckRecord::new(check.name, check.anchor, f64::INFINITY, tolerance, ns),
            Some(format!("{}: {e}", check.name)),
        ),
    }
}

/// Runs the selected suites.
///
/// Checks run in parallel; results are merged in registration order, so the
/// report differs between runs with the same seed only in its `ns` fields and
/// bench timings.
pub fn run_suites(config: &SuiteConfig) -> Result<VerificationReport> {
    config.validate()?;
    for name in config.tolerance_overrides.keys() {
        if !known_check(name, config) {
            return Err(VerifyError::UnknownCheck(name.clone()));
        }
    }
    let selected: Vec<Check> = registry()
        .into_iter()
        .filter(|c| config.suites.contains(&c.suite))
        .collect();
    let results: Vec<(CheckRecord, Option<String>)> =
        selected.par_iter().map(|c| run_check(c, config)).collect();

    let mut checks = Vec::with_capacity(results.len());
    let mut notes = Vec::new();
    for (record, note) in results {
        checks.push(record);
        notes.extend(note);
    }
    if config.suites.contains(&Suite::Laplace) {
        notes.extend(laplace_notes()?);
    }
    let mut bench = Vec::new();
    if config.suites.contains(&Suite::Bench) {
        for &n in &config.sizes {
            let name = gate_check_name(n);
            let tolerance = config.tolerance_overrides.get(&name).copied().unwrap_or(gate_limit(n));
            let start = Instant::now();
            let (gate, record) = bench_size(config.seed, n, tolerance)?;
            let ns = start.elapsed().as_nanos() as u64;
            checks.push(CheckRecord::new(
                name,
                "spectral conv output = direct conv output",
                gate.error,
                tolerance,
                ns,
            ));
            bench.extend(record);
        }
        notes.extend(bench_notes(&bench));
    }
    Ok(VerificationReport::new(checks, notes, bench))
}

/// Informational comparisons of closed forms that are reported, not asserted.
pub fn laplace_notes() -> Result<Vec<String>> {
    let mut notes = Vec::new();
    let one = LaplacePoint::new(1.0)?;
    notes.push(format!(
        "relu_lt sign: int_0^1 x e^(-x) dx = {:.12} from (1 - e^(-pk)(1+pk))/p^2; \
         the form -(e^(-pk)(1+pk) + 1)/p^2 gives {:.12}, which has the wrong sign \
         (it adds the lower-limit term instead of subtracting it)",
        relu_lt(one, 1.0)?,
        relu_lt_lower_limit_added(one, 1.0),
    ));
    notes.push(format!(
        "sigmoid Laplace x-derivative sign: d/dx e^(-px)S(x) at x=0, p=1 is {:.6}; \
         the form e^(x-px)(p e^x + p - 1)/(e^x+1)^2 gives {:.6}, the opposite sign",
        sigmoid_lt_spatial_derivative(0.0, 1.0),
        1.0 * (1.0 + 1.0 - 1.0) / 4.0,
    ));
    for (p, k) in [(1.0, 1.0), (2.0, 0.5), (1e-3, 1.0)] {
        let c = relu_lt_p_derivative_check(LaplacePoint::new(p)?, k)?;
        notes.push(format!(
            "relu_lt d/dp at p={p}, k={k}: finite difference {:.9e}, \
             candidate e^(-pk)(p^2k^2 + 2pk + 2e^(pk) + 2)/p^3 = {:.9e}, |difference| = {:.3e}",
            c.finite_difference,
            c.candidate,
            c.discrepancy(),
        ));
    }
    Ok(notes)
}

fn bench_notes(records: &[BenchRecord]) -> Vec<String> {
    let mut notes: Vec<String> = records
        .iter()
        .map(|r| {
            format!(
                "bench n={}: direct {} ns, spectral {} ns, ratio {:.2} (median of {})",
                r.n, r.direct_ns, r.spectral_ns, r.ratio, r.repetitions
            )
        })
        .collect();
    if let (Some(first), Some(last)) = (records.first(), records.last()) {
        if records.len() > 1 {
            let trend = if last.ratio > first.ratio { "grows" } else { "does not grow" };
            notes.push(format!(
                "bench ratio {trend} from n={} ({:.2}) to n={} ({:.2})",
                first.n, first.ratio, last.n, last.ratio
            ));
        }
    }
    notes
}
