use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use freqcnn_verify::config::DEFAULT_BENCH_SIZES;
use freqcnn_verify::report::write_bench_csv;
use freqcnn_verify::{emit_report, run_suites, Format, Suite, SuiteConfig, VerifyError};

/// Runs freqcnn verification suites and writes a CSV or JSON report.
#[derive(Debug, Parser)]
#[command(name = "freqcnn-verify", version)]
struct Cli {
    /// Comma-separated suites: dft, conv, activations, pooling, loss, laplace, bench, or all.
    #[arg(long, default_value = "all")]
    suite: String,

    /// Seed for the random instances.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Comma-separated, strictly increasing powers of two for the bench sweep.
    #[arg(long, value_delimiter = ',')]
    sizes: Option<Vec<usize>>,

    /// Report path; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Report format.
    #[arg(long, default_value = "csv", value_parser = ["csv", "json"])]
    format: String,

    /// Per-check tolerance override, `<check>=<real>`; repeatable.
    #[arg(long = "tolerance", value_parser = parse_override)]
    tolerance: Vec<(String, f64)>,

    /// Also write the bench timings as CSV to this path.
    #[arg(long)]
    bench_out: Option<PathBuf>,
}

fn parse_override(s: &str) -> Result<(String, f64), String> {
    let (name, value) = s
        .split_once('=')
        .ok_or_else(|| format!("expected <check>=<real>, got `{s}`"))?;
    let value: f64 = value.trim().parse().map_err(|e| format!("bad tolerance `{value}`: {e}"))?;
    Ok((name.trim().to_string(), value))
}

fn config_from(cli: &Cli) -> Result<SuiteConfig, VerifyError> {
    let suites = Suite::parse_list(&cli.suite)?;
    let mut config = SuiteConfig::new(suites, cli.seed);
    config.sizes = cli.sizes.clone().unwrap_or_else(|| DEFAULT_BENCH_SIZES.to_vec());
    config.tolerance_overrides = cli.tolerance.iter().cloned().collect::<BTreeMap<_, _>>();
    config.output_path = cli.out.clone();
    config.format = cli.format.parse::<Format>()?;
    Ok(config)
}

fn run(cli: &Cli) -> Result<i32, VerifyError> {
    let config = config_from(cli)?;
    let report = run_suites(&config)?;
    emit_report(&report, config.output_path.as_deref(), config.format)?;
    if let Some(path) = &cli.bench_out {
        write_bench_csv(&report.bench, path)?;
    }
    for r in report.checks.iter().filter(|r| !r.pass) {
        eprintln!("FAIL {} error={:e} tolerance={:e}", r.check, r.error, r.tolerance);
    }
    for note in &report.notes {
        eprintln!("note: {note}");
    }
    let s = report.summary;
    eprintln!("{} checks: {} passed, {} failed", s.total, s.passed, s.failed);
    Ok(report.exit_code())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_usage() { 2 } else { 1 })
        }
    }
}
