use std::path::PathBuf;

use thiserror::Error;

use crate::exit;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot write {path}: {source}")]
    Output {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Compute(#[from] stieltjes::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Csv(#[from] csv::Error),
    #[error("{0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => exit::USAGE,
            CliError::Output { .. } => exit::CANT_CREATE,
            CliError::Compute(stieltjes::Error::NonFinite { .. }) => exit::NOT_CONVERGED,
            CliError::Compute(_) => exit::USAGE,
            CliError::Io(_) | CliError::Csv(_) | CliError::Json(_) => exit::CANT_CREATE,
        }
    }
}
