use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Result, VerifyError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Dft,
    Conv,
    Activations,
    Pooling,
    Loss,
    Laplace,
    Bench,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Dft,
        Suite::Conv,
        Suite::Activations,
        Suite::Pooling,
        Suite::Loss,
        Suite::Laplace,
        Suite::Bench,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Dft => "dft",
            Suite::Conv => "conv",
            Suite::Activations => "activations",
            Suite::Pooling => "pooling",
            Suite::Loss => "loss",
            Suite::Laplace => "laplace",
            Suite::Bench => "bench",
        }
    }

    /// Parses a comma-separated list; `all` selects every suite.
    pub fn parse_list(list: &str) -> Result<BTreeSet<Suite>> {
        let mut out = BTreeSet::new();
        for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            if item == "all" {
                out.extend(Suite::ALL);
            } else {
                out.insert(item.parse()?);
            }
        }
        Ok(out)
    }
}

impl FromStr for Suite {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| VerifyError::UnknownSuite(s.to_string()))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(VerifyError::InvalidConfig(format!("unknown format `{other}`"))),
        }
    }
}

pub const DEFAULT_BENCH_SIZES: [usize; 3] = [256, 1024, 4096];

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    pub suites: BTreeSet<Suite>,
    pub seed: u64,
    pub tolerance_overrides: BTreeMap<String, f64>,
    pub sizes: Vec<usize>,
    /// `None` writes to standard output.
    pub output_path: Option<PathBuf>,
    pub format: Format,
}

impl SuiteConfig {
    pub fn new<I: IntoIterator<Item = Suite>>(suites: I, seed: u64) -> Self {
        SuiteConfig {
            suites: suites.into_iter().collect(),
            seed,
            tolerance_overrides: BTreeMap::new(),
            sizes: DEFAULT_BENCH_SIZES.to_vec(),
            output_path: None,
            format: Format::Csv,
        }
    }

    pub fn all(seed: u64) -> Self {
        SuiteConfig::new(Suite::ALL, seed)
    }

    pub fn with_override(mut self, check: &str, tolerance: f64) -> Self {
        self.tolerance_overrides.insert(check.to_string(), tolerance);
        self
    }

    pub fn with_sizes(mut self, sizes: Vec<usize>) -> Self {
        self.sizes = sizes;
        self
    }

    /// Structural checks; check names in overrides are validated against the
    /// registry by the runner.
    pub fn validate(&self) -> Result<()> {
        if self.suites.is_empty() {
            return Err(VerifyError::InvalidConfig("no suite selected".into()));
        }
        if self.suites.contains(&Suite::Bench) {
            validate_sizes(&self.sizes)?;
        }
        for (name, tol) in &self.tolerance_overrides {
            if !(tol.is_finite() && *tol >= 0.0) {
                return Err(VerifyError::InvalidConfig(format!(
                    "tolerance for `{name}` must be a finite nonnegative number, got {tol}"
                )));
            }
        }
        Ok(())
    }
}

pub fn validate_sizes(sizes: &[usize]) -> Result<()> {
    if sizes.is_empty() {
        return Err(VerifyError::InvalidConfig("bench needs at least one size".into()));
    }
    for &n in sizes {
        if !n.is_power_of_two() || n < 2 {
            return Err(VerifyError::InvalidConfig(format!("bench size {n} is not a power of two ≥ 2")));
        }
    }
    if sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(VerifyError::InvalidConfig("bench sizes must be strictly increasing".into()));
    }
    Ok(())
}
