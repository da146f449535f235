//! Command-line layer over `spinpoly-core`: configuration, an on-disk cache
//! of character tables, parallel verification and report emission.

pub mod cache;
pub mod cli;
pub mod commands;
pub mod config;
pub mod error;
pub mod labels;
pub mod report;
pub mod sweep;

pub use config::{Config, OutputFormat};
pub use error::{CliError, CliResult};
