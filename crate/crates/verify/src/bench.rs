//! Direct versus spectral 1D convolution timings.

use std::time::Instant;

use freqcnn::conv::{conv_direct_1d, conv_spectral_1d, ConvMode, ConvPlan};
use freqcnn::RealSignal1D;
use serde::{Deserialize, Serialize};

use crate::config::{validate_sizes, SuiteConfig};
use crate::error::{Result, VerifyError};
use crate::rng::CheckRng;

pub const REPETITIONS: usize = 5;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub n: usize,
    pub direct_ns: u64,
    pub spectral_ns: u64,
    /// `direct_ns / spectral_ns`.
    pub ratio: f64,
    pub repetitions: usize,
}

/// Outcome of the correctness gate at one size.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Gate {
    pub n: usize,
    pub error: f64,
    pub limit: f64,
}

impl Gate {
    pub fn passed(&self) -> bool {
        self.error.is_finite() && self.error < self.limit
    }
}

pub fn gate_limit(n: usize) -> f64 {
    1e-10 * (2 * n - 1) as f64
}

pub fn gate_check_name(n: usize) -> String {
    format!("bench.gate_{n}")
}

fn median(mut v: Vec<u64>) -> u64 {
    v.sort_unstable();
    v[v.len() / 2]
}

fn time_ns<F: FnMut()>(mut f: F) -> u64 {
    let start = Instant::now();
    f();
    start.elapsed().as_nanos() as u64
}

/// Runs the gate at size `n` against `limit` and, only if it passes, the timings.
pub fn bench_size(seed: u64, n: usize, limit: f64) -> Result<(Gate, Option<BenchRecord>)> {
    let mut rng = CheckRng::for_check(seed, &gate_check_name(n));
    let f = RealSignal1D::new(rng.uniform_vec(n))?;
    let g = RealSignal1D::new(rng.uniform_vec(n))?;
    let plan = ConvPlan::for_signals(&f, &g, ConvMode::Full)?;
    let direct = conv_direct_1d(&f, &g);
    let spectral = conv_spectral_1d(&f, &g, &plan)?;
    let error = direct
        .samples()
        .iter()
        .zip(spectral.samples())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    let gate = Gate { n, error, limit };
    if !gate.passed() {
        return Ok((gate, None));
    }
    let mut direct_times = Vec::with_capacity(REPETITIONS);
    let mut spectral_times = Vec::with_capacity(REPETITIONS);
    for _ in 0..REPETITIONS {
        direct_times.push(time_ns(|| {
            std::hint::black_box(conv_direct_1d(std::hint::black_box(&f), &g));
        }));
        spectral_times.push(time_ns(|| {
            std::hint::black_box(conv_spectral_1d(std::hint::black_box(&f), &g, &plan).ok());
        }));
    }
    let (direct_ns, spectral_ns) = (median(direct_times), median(spectral_times).max(1));
    Ok((
        gate,
        Some(BenchRecord {
            n,
            direct_ns,
            spectral_ns,
            ratio: direct_ns as f64 / spectral_ns as f64,
            repetitions: REPETITIONS,
        }),
    ))
}

/// Times both convolutions at every configured size. A size whose spectral
/// output disagrees with the direct oracle aborts the sweep.
pub fn run_bench(config: &SuiteConfig) -> Result<Vec<BenchRecord>> {
    validate_sizes(&config.sizes)?;
    let mut out = Vec::with_capacity(config.sizes.len());
    for &n in &config.sizes {
        match bench_size(config.seed, n, gate_limit(n))? {
            (_, Some(record)) => out.push(record),
            (gate, None) => {
                return Err(VerifyError::Correctness {
                    n,
                    error: gate.error,
                    limit: gate.limit,
                })
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn median_of_five() {
        assert_eq!(median(vec![5, 1, 4, 2, 3]), 3);
    }

    #[test]
    fn gate_passes_at_small_sizes() {
        for n in [2, 64, 256] {
            let (gate, record) = bench_size(1, n, gate_limit(n)).unwrap();
            assert!(gate.passed());
            let r = record.unwrap();
            assert_eq!(r.repetitions, REPETITIONS);
            assert!(r.ratio > 0.0);
        }
    }

    #[test]
    fn failed_gate_reports_no_timings() {
        let (gate, record) = bench_size(1, 64, 0.0).unwrap();
        assert!(!gate.passed());
        assert!(record.is_none());
    }
}
