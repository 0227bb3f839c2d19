use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error("unknown suite `{0}` (expected one of dft, conv, activations, pooling, loss, laplace, bench, all)")]
    UnknownSuite(String),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("bench correctness gate failed at n = {n}: max error {error:e} exceeds {limit:e}")]
    Correctness { n: usize, error: f64, limit: f64 },
    #[error(transparent)]
    Numeric(#[from] freqcnn::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },
    #[error("{path}: {source}")]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
}

impl VerifyError {
    /// Errors caused by the command line rather than by a computation.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            VerifyError::UnknownSuite(_) | VerifyError::UnknownCheck(_) | VerifyError::InvalidConfig(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, VerifyError>;
