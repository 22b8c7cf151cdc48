use std::io;
use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("write failed: {0}")]
    Write(#[from] io::Error),
    #[error("{source_name}:{line}: {msg}")]
    Parse { source_name: String, line: usize, msg: String },
    #[error(transparent)]
    Filter(#[from] maxmin_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("verification failed: {failures} of {trials} trials")]
    VerifyFailed { failures: usize, trials: usize },
}

impl CliError {
    /// 1 for verification failures, 2 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::VerifyFailed { .. } => 1,
            _ => 2,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
