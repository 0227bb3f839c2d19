//! Acceptance gate: one line per criterion, nonzero exit on any failure.

use std::process::ExitCode;

use freqcnn_verify::config::DEFAULT_BENCH_SIZES;
use freqcnn_verify::{run_suites, CheckRecord, Suite, SuiteConfig, VerificationReport};

struct Criterion {
    id: &'static str,
    title: &'static str,
    checks: &'static [&'static str],
}

const CRITERIA: [Criterion; 11] = [
    Criterion {
        id: "C1",
        title: "1D convolution theorem, 50 seeded pairs",
        checks: &["conv.spectral_vs_direct_1d"],
    },
    Criterion {
        id: "C2",
        title: "2D convolution theorem, 20 seeded pairs",
        checks: &["conv.spectral_vs_direct_2d"],
    },
    Criterion {
        id: "C3",
        title: "spectral derivatives of sin in 1D and 2D",
        checks: &["dft.derivative_sin", "dft.derivative_2d_sin"],
    },
    Criterion {
        id: "C4",
        title: "ReLU transform vs quadrature, branch continuity, zero frequency",
        checks: &[
            "activations.relu_vs_quadrature",
            "activations.relu_branch_continuity",
            "activations.relu_zero_frequency",
        ],
    },
    Criterion {
        id: "C5",
        title: "sigmoid antiderivative and 2F1 log identity",
        checks: &["activations.sigmoid_antiderivative", "activations.hyp2f1_log"],
    },
    Criterion {
        id: "C6",
        title: "Lorentzian mass and its pi limit",
        checks: &["activations.lorentzian_mass", "activations.lorentzian_limit"],
    },
    Criterion {
        id: "C7",
        title: "box transform vs 2D quadrature, truncation of constants and tones",
        checks: &[
            "pooling.box_ft_vs_quadrature",
            "pooling.truncation_constant",
            "pooling.truncation_cosine",
        ],
    },
    Criterion {
        id: "C8",
        title: "global average pooling equals DC/(HW)",
        checks: &["pooling.gap_equivalence"],
    },
    Criterion {
        id: "C9",
        title: "cross-entropy exponential identity and antiderivative",
        checks: &["loss.exp_identity", "loss.antiderivative"],
    },
    Criterion {
        id: "C10",
        title: "Laplace textbook transforms and convolution theorem",
        checks: &["laplace.textbook", "laplace.conv_theorem"],
    },
    Criterion {
        id: "C11",
        title: "Laplace ReLU vs quadrature",
        checks: &["laplace.relu_vs_quadrature"],
    },
];

fn record<'a>(report: &'a VerificationReport, name: &str) -> Option<&'a CheckRecord> {
    report.checks.iter().find(|r| r.check == name)
}

fn detail(records: &[Option<&CheckRecord>], names: &[&str]) -> String {
    records
        .iter()
        .zip(names)
        .map(|(r, n)| match r {
            Some(r) => format!("{n} {:.2e}<{:.0e}", r.error, r.tolerance),
            None => format!("{n} missing"),
        })
        .collect::<Vec<_>>()
        .join("; ")
}

fn line(pass: bool, id: &str, title: &str, detail: &str) {
    let tag = if pass { "PASS" } else { "FAIL" };
    println!("[{tag}] {id} {title} ({detail})");
}

fn main() -> ExitCode {
    let config = SuiteConfig::all(0);
    let report = match run_suites(&config) {
        Ok(r) => r,
        Err(e) => {
            println!("[FAIL] run_suites: {e}");
            return ExitCode::FAILURE;
        }
    };
    let mut failures = 0;

    for c in &CRITERIA {
        let records: Vec<_> = c.checks.iter().map(|n| record(&report, n)).collect();
        let mut pass = records.iter().all(|r| r.is_some_and(|r| r.pass));
        let mut text = detail(&records, c.checks);
        if c.id == "C11" {
            let noted = report.notes.iter().any(|n| n.starts_with("relu_lt sign"));
            pass &= noted;
            text.push_str(if noted {
                "; sign discrepancy documented in report notes"
            } else {
                "; sign discrepancy note missing"
            });
        }
        failures += usize::from(!pass);
        line(pass, c.id, c.title, &text);
    }

    let gates: Vec<_> = DEFAULT_BENCH_SIZES
        .iter()
        .map(|&n| record(&report, &format!("bench.gate_{n}")))
        .collect();
    let gates_pass = gates.iter().all(|g| g.is_some_and(|g| g.pass))
        && report.bench.len() == DEFAULT_BENCH_SIZES.len()
        && report.bench.iter().all(|b| b.ratio > 0.0);
    let ratios = report
        .bench
        .iter()
        .map(|b| format!("n={} ratio {:.2}", b.n, b.ratio))
        .collect::<Vec<_>>()
        .join(", ");
    failures += usize::from(!gates_pass);
    line(gates_pass, "C12", "bench correctness gate at every size", &ratios);

    assert_eq!(config.suites.len(), Suite::ALL.len());
    let s = report.summary;
    println!("all checks: {} passed, {} failed", s.passed, s.failed);
    for r in report.checks.iter().filter(|r| !r.pass) {
        println!("  failing check {}: error {:e}, tolerance {:e}", r.check, r.error, r.tolerance);
    }
    if failures == 0 && report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
