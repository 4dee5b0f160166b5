//! `realism` command line: classical validity checks, quantum violation scans
//! and the event-algebra facts, written as text reports and CSV.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

pub mod check;
pub mod output;
pub mod scan;
pub mod sets;

#[derive(Debug, Parser)]
#[command(name = "realism", version, about = "Realism inequalities: classical checks and quantum violations")]
pub struct Cli {
    /// Write output here instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide classical validity of builtin or file-defined inequalities.
    Check(CheckArgs),
    /// Spin-chain margins as CSV.
    Spin(SpinArgs),
    /// Two-meson margins at a point or over a grid, as CSV.
    Meson(MesonArgs),
    /// Short-time transition bound against the spin chain sum, as CSV.
    Zeno(ZenoArgs),
    /// Subset facts and member lists of the two-particle events.
    Sets,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// `.ineq` file to compile and check.
    #[arg(required_unless_present = "builtin", conflicts_with = "builtin")]
    pub file: Option<PathBuf>,
    /// `all`, or one kind such as `LGW3` or `LGWN{5}`.
    #[arg(long, value_name = "KIND")]
    pub builtin: Option<String>,
}

#[derive(Debug, Args)]
pub struct SpinArgs {
    #[arg(long, value_name = "N", required_unless_present = "n_range", conflicts_with = "n_range")]
    pub n: Option<usize>,
    /// Inclusive range `A:B`.
    #[arg(long, value_name = "A:B")]
    pub n_range: Option<String>,
}

#[derive(Debug, Args)]
pub struct MesonArgs {
    /// `ΔΓ/2Δm`; defaults to 0 unless taken from `--params` or `--preset`.
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["params", "preset"])]
    pub kappa: Option<f64>,
    /// `Δm t₃`, radians unless `--degrees`.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "scan", requires = "beta")]
    pub alpha: Option<f64>,
    /// `Δm t₂`; must satisfy `alpha > beta > 0`.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "scan", requires = "alpha")]
    pub beta: Option<f64>,
    /// `alpha=LO:HI:STEPS,beta=LO:HI:STEPS`.
    #[arg(long, required_unless_present = "alpha")]
    pub scan: Option<String>,
    /// Mixing parameters file (`key = value` lines).
    #[arg(long, value_name = "FILE", conflicts_with = "preset")]
    pub params: Option<PathBuf>,
    /// Named parameter set, e.g. `bs`.
    #[arg(long)]
    pub preset: Option<String>,
    /// Read angles in degrees.
    #[arg(long)]
    pub degrees: bool,
}

#[derive(Debug, Args)]
pub struct ZenoArgs {
    #[arg(long, value_name = "N")]
    pub n_max: usize,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Io(#[from] io::Error),
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error("regression: {0}")]
    Regression(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) | CliError::Io(_) => 1,
            CliError::Numerical(_) => 2,
            CliError::Regression(_) => 3,
        }
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        match e.into_kind() {
            csv::ErrorKind::Io(e) => CliError::Io(e),
            other => CliError::Io(io::Error::other(format!("{other:?}"))),
        }
    }
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    let mut out: Box<dyn Write> = match &cli.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let result = match cli.command {
        Command::Check(args) => check::run(&args, &mut out),
        Command::Spin(args) => scan::spin(&args, &mut out),
        Command::Meson(args) => scan::meson(&args, &mut out),
        Command::Zeno(args) => scan::zeno(&args, &mut out),
        Command::Sets => sets::run(&mut out),
    };
    out.flush()?;
    result
}
