//! `hecke`: computations and verification suites over exact rationals.
//!
//! Exit codes: 0 success (all checks pass), 1 failed check or computation,
//! 2 usage error or invalid input.

mod compute;
mod config;
mod setup;
mod verify;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hecke_core::Error;

#[derive(Parser, Debug)]
#[command(name = "hecke", version, about = "Affine Hecke algebra representations on lattice functions")]
struct Cli {
    /// JSON file with defaults for type, rank, q, L, seed, trials and format.
    #[arg(long, global = true)]
    config: Option<std::path::PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run verification suites and emit a report.
    Verify(VerifyArgs),
    /// Compute one object.
    Compute {
        target: Target,
        #[command(flatten)]
        args: ComputeArgs,
    },
    /// Same as `compute pieri`.
    Pieri(ComputeArgs),
    /// Same as `compute hl`.
    Hl(ComputeArgs),
    /// Same as `compute morris`.
    Morris(ComputeArgs),
    /// Same as `compute spherical`.
    Spherical(ComputeArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    #[value(name = "P")]
    P,
    Spherical,
    Pieri,
    Hl,
    Morris,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Braid,
    Hecke,
    Construction,
    Intertwine,
    Minuscule,
    Spherical,
    Diagonal,
    Pieri,
    Unitarity,
    Gln,
    All,
}

/// Options shared by every subcommand.
#[derive(Args, Debug, Clone, Default)]
pub struct Common {
    /// Cartan type, e.g. A2, B3, G2, A1xA1; a bare letter takes --rank.
    #[arg(long = "type")]
    pub cartan_type: Option<String>,
    #[arg(long)]
    pub rank: Option<usize>,
    /// "formal" or a rational such as 1/2.
    #[arg(long)]
    pub q: Option<String>,
    /// Truncation radius.
    #[arg(short = 'L', long = "L")]
    pub radius: Option<i32>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_enum, default_value = "all")]
    pub suite: Suite,
    /// Random functions or spectral points per check.
    #[arg(long)]
    pub trials: Option<usize>,
    /// N for the GL_N suite.
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Args, Debug)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
    /// A weight, "minuscule" (first minuscule weight) or "quasi" (α_0).
    #[arg(long, allow_hyphen_values = true)]
    pub omega: Option<String>,
    /// Spectral point, comma-separated rationals.
    #[arg(long, allow_hyphen_values = true)]
    pub x: Option<String>,
    /// Keep q formal even when --q is given.
    #[arg(long)]
    pub formal_q: bool,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    /// Print the full monomial expansion.
    #[arg(long)]
    pub expand: bool,
}

/// A failure with its exit code.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Failed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InexactDivision | Error::NotSaturated { .. } | Error::NotInOrbit { .. } => Failure::Failed(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match config::load(cli.config.as_deref()) {
        Ok(c) => c,
        Err(e) => return report_failure(Failure::Usage(e)),
    };
    let result = match cli.command {
        Command::Verify(mut a) => {
            cfg.apply(&mut a.common);
            a.trials = a.trials.or(cfg.trials);
            verify::run(&a)
        }
        Command::Compute { target, mut args } => {
            cfg.apply(&mut args.common);
            compute::run(target, &args)
        }
        Command::Pieri(mut a) => {
            cfg.apply(&mut a.common);
            compute::run(Target::Pieri, &a)
        }
        Command::Hl(mut a) => {
            cfg.apply(&mut a.common);
            compute::run(Target::Hl, &a)
        }
        Command::Morris(mut a) => {
            cfg.apply(&mut a.common);
            compute::run(Target::Morris, &a)
        }
        Command::Spherical(mut a) => {
            cfg.apply(&mut a.common);
            compute::run(Target::Spherical, &a)
        }
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => report_failure(f),
    }
}

fn report_failure(f: Failure) -> ExitCode {
    match f {
        Failure::Usage(m) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Failure::Failed(m) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
