//! `lagbox` command-line front end.

mod commands;
mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::config::ConfigArgs;

#[derive(Debug, Parser)]
#[command(name = "lagbox", version, about = "Chaotic lag-series S-box generation and analysis")]
struct Cli {
    /// Run every computation on the calling thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate one S-box, or a family written into a directory.
    Gen(GenArgs),
    /// Evaluate the cryptographic criteria of one S-box fixture.
    Analyze(AnalyzeArgs),
    /// Summarize several fixtures side by side.
    Compare(CompareArgs),
    /// Dump the generator's internal series as CSV.
    Trace(TraceArgs),
    /// Logistic-map diagnostics: Lyapunov exponents, bifurcation data, fixed points.
    Dynamics(DynamicsArgs),
    /// Row-wise substitution of a binary PGM image.
    Image(ImageArgs),
}

#[derive(Debug, Args)]
struct GenArgs {
    #[command(flatten)]
    config: ConfigArgs,
    /// Word size in bits.
    #[arg(long, default_value_t = 8)]
    n: u32,
    /// Fixture path, or directory when --count > 1. Prints to stdout if omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Number of S-boxes drawn from one continuous stream.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    count: u64,
    /// Give up after this many bits per S-box (default 64 n 2^n).
    #[arg(long)]
    max_bits: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
    CsvDir,
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    /// S-box fixture.
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
    /// Output file (directory for csv-dir). Prints to stdout if omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Exit with status 5 if the box is not a bijection.
    #[arg(long)]
    strict: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CompareFormat {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Args)]
struct CompareArgs {
    /// S-box fixtures; one row each.
    #[arg(long = "in", required = true, num_args = 1..)]
    inputs: Vec<PathBuf>,
    #[arg(long, value_enum, default_value_t = CompareFormat::Text)]
    format: CompareFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct TraceArgs {
    #[command(flatten)]
    config: ConfigArgs,
    #[arg(long, default_value_t = 1000)]
    samples: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DynamicsMode {
    Lyapunov,
    Bifurcation,
    FixedPoints,
}

#[derive(Debug, Args)]
struct DynamicsArgs {
    #[arg(long, value_enum)]
    mode: DynamicsMode,
    /// Single parameter value; overrides the range for lyapunov.
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<f64>,
    #[arg(long, default_value_t = -2.0, allow_hyphen_values = true)]
    alpha_min: f64,
    #[arg(long, default_value_t = 4.0, allow_hyphen_values = true)]
    alpha_max: f64,
    #[arg(long, default_value_t = 601)]
    steps: usize,
    /// Orbit start for lyapunov.
    #[arg(long, default_value_t = 0.8147, allow_hyphen_values = true)]
    x0: f64,
    /// Orbit points averaged per lyapunov estimate.
    #[arg(long, default_value_t = 100_000)]
    iterations: usize,
    /// Iterations discarded before sampling.
    #[arg(long, default_value_t = 1000)]
    transient: usize,
    /// Orbit points kept per bifurcation slice.
    #[arg(long, default_value_t = 100)]
    keep: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ImageArgs {
    #[command(flatten)]
    config: ConfigArgs,
    /// Binary (P5) PGM input.
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    out: PathBuf,
    /// Apply the inverse substitution.
    #[arg(long)]
    decrypt: bool,
    /// Histogram CSV of the output image.
    #[arg(long)]
    hist: Option<PathBuf>,
    /// Histogram CSV of the input image.
    #[arg(long)]
    hist_in: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let exec = if cli.sequential { lagbox::Exec::Sequential } else { lagbox::Exec::default() };
    let result = match cli.command {
        Command::Gen(a) => commands::gen(a),
        Command::Analyze(a) => commands::analyze(a, exec),
        Command::Compare(a) => commands::compare(a, exec),
        Command::Trace(a) => commands::trace(a),
        Command::Dynamics(a) => commands::dynamics(a, exec),
        Command::Image(a) => commands::image(a, exec),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("lagbox: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
