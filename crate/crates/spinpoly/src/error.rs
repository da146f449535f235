use std::io;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] spinpoly_core::Error),
    #[error("cache: {0}")]
    Cache(String),
    #[error("i/o: {0}")]
    Io(#[from] io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

pub type CliResult<T> = Result<T, CliError>;

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Core(_) => "core",
            CliError::Cache(_) => "cache",
            CliError::Io(_) => "io",
            CliError::Json(_) => "json",
            CliError::Csv(_) => "csv",
        }
    }

    /// 2 for bad input, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(spinpoly_core::Error::InvalidLabel(_))
            | CliError::Core(spinpoly_core::Error::InvalidPartition(_))
            | CliError::Core(spinpoly_core::Error::InvalidRow(_))
            | CliError::Core(spinpoly_core::Error::Parse(_)) => 2,
            _ => 1,
        }
    }

    /// One-line JSON failure record for stderr.
    pub fn record(&self) -> String {
        serde_json::json!({ "error": self.kind(), "message": self.to_string() }).to_string()
    }
}
