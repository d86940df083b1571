//! `selfint` command-line front end.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use selfint::{FlipSide, SIKind, Tolerance};

mod commands;
mod document;
mod report;

/// Exact classification and spectra of J-flipped totally nonnegative matrices.
#[derive(Debug, Parser)]
#[command(name = "selfint", version)]
struct Cli {
    /// Emit the report as JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Also write eigenvalue (or root) boxes as tab-separated lines to PATH.
    #[arg(long, global = true, value_name = "PATH")]
    plot_data: Option<PathBuf>,
    /// Add wall-clock timing to the report. Timed reports are not reproducible.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Total nonnegativity, oscillation, sign definiteness and corner conditions.
    Classify(ClassifyArgs),
    /// Flip with the anti-identity and certify a self-interlacing spectrum.
    Jflip(JflipArgs),
    /// Characteristic polynomial, self-interlacing verdict and eigenvalue boxes.
    Spectrum(SpectrumArgs),
    /// Twist, Hurwitz minors and self-interlacing verdict of a polynomial.
    Poly(PolyArgs),
    /// Print a matrix document for a structured or random family.
    Construct(ConstructArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Tnn,
    Stp,
    Oscillatory,
    SignDefinite,
    Corners,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    /// Matrix document, or '-' for standard input.
    pub input: String,
    /// Largest power tried when looking for a strictly sign definite power.
    #[arg(long)]
    pub power_cap: Option<usize>,
    /// Comma-separated subset of checks to run; all by default.
    #[arg(long, value_enum, value_delimiter = ',')]
    pub checks: Vec<Check>,
}

#[derive(Debug, Args)]
pub struct JflipArgs {
    pub input: String,
    #[arg(long, default_value = "left", value_parser = parse_side)]
    pub side: FlipSide,
    /// Largest eigenvalue box width.
    #[arg(long, default_value = "1e-9", value_parser = parse_tol)]
    pub tol: Tolerance,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    pub input: String,
    #[arg(long, default_value = "1e-9", value_parser = parse_tol)]
    pub tol: Tolerance,
    /// Report whether the spectrum is self-interlacing of this kind.
    #[arg(long, value_parser = parse_kind)]
    pub kind: Option<SIKind>,
}

#[derive(Debug, Args)]
pub struct PolyArgs {
    /// File with the coefficients, highest degree first, or '-'.
    #[arg(required_unless_present = "coeffs", conflicts_with = "coeffs")]
    pub input: Option<String>,
    /// Coefficients inline, highest degree first, e.g. "1 -1 -1".
    #[arg(long, allow_hyphen_values = true)]
    pub coeffs: Option<String>,
    #[arg(long, default_value = "I", value_parser = parse_kind)]
    pub kind: SIKind,
    #[arg(long, default_value = "1e-9", value_parser = parse_tol)]
    pub tol: Tolerance,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Bidiagonal,
    Antibidiagonal,
    TridiagonalEquivalent,
    Jacobi,
    Antijacobi,
    RandomTnn,
    RandomPositiveTnn,
    RandomOscillatory,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(value_enum)]
    pub family: Family,
    /// Dimension; required by the random families, checked against the
    /// parameter lengths otherwise.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub d: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub e: Option<String>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

fn parse_tol(s: &str) -> Result<Tolerance, String> {
    s.parse().map_err(|e: selfint::Error| e.to_string())
}

fn parse_kind(s: &str) -> Result<SIKind, String> {
    s.parse()
}

fn parse_side(s: &str) -> Result<FlipSide, String> {
    s.parse()
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl CliError {
    pub fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl From<selfint::Error> for CliError {
    fn from(e: selfint::Error) -> Self {
        match e {
            selfint::Error::InvariantViolation(msg) => CliError::Internal(msg),
            other => CliError::Input(other.to_string()),
        }
    }
}

pub struct Output {
    pub json: bool,
    pub plot_data: Option<PathBuf>,
    pub timing: bool,
}

fn run(cli: Cli) -> Result<String, CliError> {
    let out = Output {
        json: cli.json,
        plot_data: cli.plot_data,
        timing: cli.timing,
    };
    match cli.command {
        Command::Classify(args) => commands::classify(&args, &out),
        Command::Jflip(args) => commands::jflip(&args, &out),
        Command::Spectrum(args) => commands::spectrum(&args, &out),
        Command::Poly(args) => commands::poly(&args, &out),
        Command::Construct(args) => commands::construct(&args, &out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("selfint: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
