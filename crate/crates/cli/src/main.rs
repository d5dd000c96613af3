//! Command-line front end: degree tables, verification suites, and
//! divisibility-statistic sweeps over GL(n, q) characters.
//!
//! Exit codes: 0 success, 2 usage error, 3 I/O error, 4 failed verification
//! or internal assertion.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use glqchar::statistics::{sweep, SweepGrid};
use glqchar::verify::{run_suite, Suite};

mod config;
mod render;

use config::SweepSpec;
use render::{render_degrees, render_sweep, OutputTarget, TableFormat};

#[derive(Parser)]
#[command(
    name = "glqchar",
    version,
    about = "Character-degree statistics for GL(n, q)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one row per degree profile of GL(n, q): descriptor,
    /// multiplicity, and exact character degree.
    Degrees {
        /// Rank n of the group GL(n, q).
        #[arg(long)]
        n: u32,
        /// Field size q (a prime power).
        #[arg(long)]
        q: u64,
        /// Also print the index and unipotent factors of each degree.
        #[arg(long)]
        factored: bool,
        /// Output format: table, csv, or json.
        #[arg(long, default_value = "table")]
        format: String,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite: partitions, valuations, degrees, defchar,
    /// or all.
    Verify {
        /// Suite name.
        suite: String,
    },
    /// Sweep a divisibility statistic over a parameter grid and emit
    /// csv (`kind,n,q,d,n0,numerator,denominator,decimal`) or json.
    Sweep {
        /// Key=value config file; command-line flags override its keys.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Statistic: degree-divisible, value-certified, or p-divisible.
        /// Defaults to value-certified when --n0 is given, else
        /// degree-divisible.
        #[arg(long)]
        kind: Option<String>,
        /// Field sizes, comma-separated or repeated.
        #[arg(long)]
        q: Vec<String>,
        /// Divisors, comma-separated or repeated.
        #[arg(long)]
        d: Vec<String>,
        /// Block sizes for value-certified sweeps.
        #[arg(long)]
        n0: Vec<String>,
        /// Ranks: single values, comma lists, or inclusive ranges like 1..8.
        #[arg(long)]
        n: Vec<String>,
        /// Output format: csv or json.
        #[arg(long)]
        format: Option<String>,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// A failure with its process exit code.
#[derive(Debug)]
pub struct CliError {
    pub(crate) code: u8,
    pub(crate) message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }

    pub fn io(message: impl Into<String>) -> Self {
        CliError {
            code: 3,
            message: message.into(),
        }
    }

    pub fn check(message: impl Into<String>) -> Self {
        CliError {
            code: 4,
            message: message.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(error) = configure_threads().and_then(|()| run(cli)) {
        eprintln!("error: {}", error.message);
        return ExitCode::from(error.code);
    }
    ExitCode::SUCCESS
}

/// Honors GLQ_THREADS as a cap on sweep parallelism.
fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var("GLQ_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw.parse().ok().filter(|&t| t >= 1).ok_or_else(|| {
        CliError::usage(format!(
            "GLQ_THREADS must be a positive integer, got '{raw}'"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::usage(format!("could not configure thread pool: {e}")))
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Degrees {
            n,
            q,
            factored,
            format,
            out,
        } => {
            let format = TableFormat::parse(&format)?;
            let rendered = render_degrees(n, q, factored, format)?;
            OutputTarget::new(out).write(&rendered)
        }
        Command::Verify { suite } => {
            let suite: Suite = suite.parse().map_err(CliError::usage)?;
            match run_suite(suite) {
                Ok(passed) => {
                    for check in passed {
                        println!("ok: {check}");
                    }
                    Ok(())
                }
                Err(failure) => Err(CliError::check(failure.to_string())),
            }
        }
        Command::Sweep {
            config,
            kind,
            q,
            d,
            n0,
            n,
            format,
            out,
        } => {
            let spec = SweepSpec::assemble(config.as_deref(), kind, &q, &d, &n0, &n, format, out)?;
            let grid = SweepGrid {
                kind: spec.kind,
                q_values: spec.q_values,
                d_values: spec.d_values,
                n0_values: spec.n0_values,
                n_values: spec.n_values,
            };
            let outcome = sweep(&grid);
            for error in &outcome.errors {
                eprintln!("warning: {error}");
            }
            let rendered = render_sweep(&outcome.reports, spec.format);
            OutputTarget::new(spec.out).write(&rendered)
        }
    }
}
