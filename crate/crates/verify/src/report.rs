//! Report records and their CSV / JSON serializations.

use std::fs::File;
use std::io::{self, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::bench::BenchRecord;
use crate::config::Format;
use crate::error::{Result, VerifyError};

pub const CSV_HEADER: [&str; 6] = ["check", "anchor", "error", "tolerance", "pass", "ns"];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check: String,
    pub anchor: String,
    /// Measured error; non-finite measurements are stored as `f64::MAX`.
    pub error: f64,
    pub tolerance: f64,
    pub pass: bool,
    /// Wall time of the check in nanoseconds.
    pub ns: u64,
}

impl CheckRecord {
    /// Builds a record; the check passes iff `error` is finite and strictly
    /// below `tolerance`.
    pub fn new(check: impl Into<String>, anchor: impl Into<String>, error: f64, tolerance: f64, ns: u64) -> Self {
        let pass = error.is_finite() && error < tolerance;
        CheckRecord {
            check: check.into(),
            anchor: anchor.into(),
            error: if error.is_finite() { error } else { f64::MAX },
            tolerance,
            pass,
            ns,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

impl Summary {
    pub fn tally(records: &[CheckRecord]) -> Self {
        let passed = records.iter().filter(|r| r.pass).count();
        Summary {
            total: records.len(),
            passed,
            failed: records.len() - passed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct VerificationReport {
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
    /// Informational findings that are not pass/fail criteria.
    pub notes: Vec<String>,
    pub bench: Vec<BenchRecord>,
}

impl VerificationReport {
    pub fn new(checks: Vec<CheckRecord>, notes: Vec<String>, bench: Vec<BenchRecord>) -> Self {
        let summary = Summary::tally(&checks);
        VerificationReport {
            checks,
            summary,
            notes,
            bench,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }
}

fn io_err(path: &Path, source: io::Error) -> VerifyError {
    VerifyError::Io {
        path: path.to_path_buf(),
        source,
    }
}

fn csv_err(path: &Path, source: csv::Error) -> VerifyError {
    VerifyError::Csv {
        path: path.to_path_buf(),
        source,
    }
}

/// Writes `check,anchor,error,tolerance,pass,ns` rows. Reals use Rust's
/// shortest round-trip scientific notation.
pub fn write_csv<W: Write>(report: &VerificationReport, out: W, path: &Path) -> Result<()> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    w.write_record(CSV_HEADER).map_err(|e| csv_err(path, e))?;
    for r in &report.checks {
        w.write_record([
            r.check.as_str(),
            r.anchor.as_str(),
            &format!("{:e}", r.error),
            &format!("{:e}", r.tolerance),
            if r.pass { "true" } else { "false" },
            &r.ns.to_string(),
        ])
        .map_err(|e| csv_err(path, e))?;
    }
    w.flush().map_err(|e| io_err(path, e))
}

pub fn write_json<W: Write>(report: &VerificationReport, mut out: W, path: &Path) -> Result<()> {
    serde_json::to_writer_pretty(&mut out, report).map_err(|source| VerifyError::Json {
        path: path.to_path_buf(),
        source,
    })?;
    out.write_all(b"\n").map_err(|e| io_err(path, e))
}

/// Writes the report to `path`, or to standard output when `path` is `None`.
pub fn emit_report(report: &VerificationReport, path: Option<&Path>, format: Format) -> Result<()> {
    match path {
        Some(p) => {
            let file = File::create(p).map_err(|e| io_err(p, e))?;
            let buf = io::BufWriter::new(file);
            match format {
                Format::Csv => write_csv(report, buf, p),
                Format::Json => write_json(report, buf, p),
            }
        }
        None => {
            let p = Path::new("<stdout>");
            let out = io::stdout().lock();
            match format {
                Format::Csv => write_csv(report, out, p),
                Format::Json => write_json(report, out, p),
            }
        }
    }
}

/// Parses a JSON report back.
pub fn read_json(path: &Path) -> Result<VerificationReport> {
    let file = File::open(path).map_err(|e| io_err(path, e))?;
    serde_json::from_reader(io::BufReader::new(file)).map_err(|source| VerifyError::Json {
        path: path.to_path_buf(),
        source,
    })
}

/// Writes bench records as `n,direct_ns,spectral_ns,ratio,repetitions`.
pub fn write_bench_csv(records: &[BenchRecord], path: &Path) -> Result<()> {
    let file = File::create(path).map_err(|e| io_err(path, e))?;
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(file);
    for r in records {
        w.serialize(r).map_err(|e| csv_err(path, e))?;
    }
    if records.is_empty() {
        w.write_record(["n", "direct_ns", "spectral_ns", "ratio", "repetitions"])
            .map_err(|e| csv_err(path, e))?;
    }
    w.flush().map_err(|e| io_err(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_rule() {
        assert!(CheckRecord::new("a", "b", 0.0, 1e-300, 0).pass);
        assert!(!CheckRecord::new("a", "b", 0.0, 0.0, 0).pass);
        assert!(!CheckRecord::new("a", "b", 1.0, 1.0, 0).pass);
        let r = CheckRecord::new("a", "b", f64::NAN, 1.0, 0);
        assert!(!r.pass);
        assert_eq!(r.error, f64::MAX);
    }

    #[test]
    fn csv_quotes_commas_in_anchors() {
        let report = VerificationReport::new(vec![CheckRecord::new("x", "f(a,b)", 1e-3, 1e-2, 7)], vec![], vec![]);
        let mut buf = Vec::new();
        write_csv(&report, &mut buf, Path::new("mem")).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text, "check,anchor,error,tolerance,pass,ns\nx,\"f(a,b)\",1e-3,1e-2,true,7\n");
    }
}
