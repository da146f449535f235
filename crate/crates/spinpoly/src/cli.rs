//! Argument parsing and dispatch.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use spinpoly_core::covergroup::Group;

use crate::commands::{self, MinpolyQuery, Outcome};
use crate::config::{Config, OutputFormat, DEFAULT_N_CEILING};
use crate::error::{CliError, CliResult};

#[derive(Parser, Debug)]
#[command(name = "spinpoly", version, about = "Eigenvalues and minimal polynomials of spin representations of S~n and A~n")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct GlobalArgs {
    /// Directory for cached character tables.
    #[arg(long, global = true, env = "SPINPOLY_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value = "table")]
    pub format: OutputFormat,
    /// Worker threads for `verify` (default: available cores).
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// Largest n any command accepts.
    #[arg(long, global = true, default_value_t = DEFAULT_N_CEILING)]
    pub n_ceiling: u32,
    /// Fold z-translate classes into ± forms.
    #[arg(long, global = true)]
    pub paper_notation: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the spin character table.
    Chartable {
        #[arg(long, value_parser = parse_group)]
        group: Group,
        #[arg(long)]
        n: u32,
    },
    /// Spectrum and minimal polynomial of one class in one representation.
    Minpoly {
        #[arg(long, value_parser = parse_group)]
        group: Group,
        #[arg(long)]
        n: u32,
        /// Strict partition labelling the representation, e.g. 3,2,1.
        #[arg(long)]
        lambda: String,
        /// plain, + or - (default: the first row for lambda).
        #[arg(long, allow_hyphen_values = true)]
        assoc: Option<String>,
        /// Cycle type of the class, e.g. 5,3,1^2.
        #[arg(long)]
        mu: String,
        /// z-sign and half tag of the class: +, -, a, b, +a, ...
        #[arg(long, allow_hyphen_values = true)]
        sign: Option<String>,
    },
    /// Classifier against computation for every cell, n up to --n-max.
    Verify {
        #[arg(long, value_parser = parse_group)]
        group: Group,
        #[arg(long)]
        n_max: Option<u32>,
        /// Check this n only.
        #[arg(long, conflicts_with = "n_max")]
        n: Option<u32>,
    },
    /// Computed exceptions next to the embedded tables.
    Exceptions {
        #[arg(long, value_parser = parse_group)]
        group: Group,
        #[arg(long)]
        n: u32,
    },
    /// Run the built-in invariant checks.
    Selftest,
}

fn parse_group(s: &str) -> Result<Group, String> {
    s.parse::<Group>().map_err(|e| e.to_string())
}

impl Cli {
    pub fn config(&self) -> Config {
        let mut cfg = Config::default();
        if let Some(d) = &self.global.cache_dir {
            cfg.cache_dir = d.clone();
        }
        if let Some(w) = self.global.workers {
            cfg.worker_count = w;
        }
        cfg.n_ceiling = self.global.n_ceiling;
        cfg.output_format = self.global.format;
        cfg.paper_notation = self.global.paper_notation;
        cfg
    }
}

pub fn dispatch(cli: &Cli, out: &mut dyn Write) -> CliResult<Outcome> {
    let cfg = cli.config();
    cfg.validate()?;
    match &cli.command {
        Command::Chartable { group, n } => commands::chartable(&cfg, *group, *n, out),
        Command::Minpoly { group, n, lambda, assoc, mu, sign } => {
            let q = MinpolyQuery { group: *group, n: *n, lambda, assoc: assoc.as_deref(), mu, sign: sign.as_deref() };
            commands::minpoly(&cfg, &q, out)
        }
        Command::Verify { group, n_max, n } => {
            let range = match (n, n_max) {
                (Some(n), _) => *n..=*n,
                (None, Some(m)) => 1..=*m,
                (None, None) => 1..=cfg.n_ceiling,
            };
            if range.is_empty() {
                return Err(CliError::Usage("empty range of n".into()));
            }
            commands::verify(&cfg, *group, range, out)
        }
        Command::Exceptions { group, n } => commands::exceptions(&cfg, *group, *n, out),
        Command::Selftest => commands::selftest(&cfg, out),
    }
}

/// Parse `args`, run, and report; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(Outcome { code, failure }) => {
            if let Some(f) = failure {
                let _ = writeln!(err, "{f}");
            }
            code
        }
        // a closed pipe (`| head`) is not worth a failure record
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            let _ = writeln!(err, "{}", e.record());
            e.exit_code()
        }
    }
}
