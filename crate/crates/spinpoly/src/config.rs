use std::path::PathBuf;

use clap::ValueEnum;

use crate::error::{CliError, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Json,
    Csv,
}

#[derive(Clone, Debug)]
pub struct Config {
    pub cache_dir: PathBuf,
    pub n_ceiling: u32,
    pub worker_count: usize,
    pub output_format: OutputFormat,
    pub paper_notation: bool,
}

pub const DEFAULT_N_CEILING: u32 = 11;

impl Default for Config {
    fn default() -> Self {
        Config {
            cache_dir: PathBuf::from(".spinpoly-cache"),
            n_ceiling: DEFAULT_N_CEILING,
            worker_count: std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1),
            output_format: OutputFormat::Table,
            paper_notation: false,
        }
    }
}

impl Config {
    pub fn validate(&self) -> CliResult<()> {
        if self.n_ceiling < 1 {
            return Err(CliError::Usage("n ceiling must be at least 1".into()));
        }
        if self.worker_count < 1 {
            return Err(CliError::Usage("worker count must be at least 1".into()));
        }
        Ok(())
    }

    pub fn check_n(&self, n: u32) -> CliResult<()> {
        if n < 1 || n > self.n_ceiling {
            return Err(CliError::Usage(format!("n = {n} is outside 1..={}", self.n_ceiling)));
        }
        Ok(())
    }
}
