//! `teichlab` — command-line surface over the verification library.
//!
//! Every subcommand writes `report.json` into the output directory (always,
//! even when the run fails), the spectral subcommands additionally write
//! `eigenvalues.csv` and `spectrum.svg`, and the exit code classifies the
//! outcome: `0` all checks passed, `1` a verification check failed, `2` the
//! input was invalid, `3` a numeric computation failed. Reports embed the
//! full effective configuration; an identical configuration and seed
//! reproduces byte-identical JSON.

mod commands;
mod render;
mod report;

use clap::{Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "teichlab", version, about = "Exact and numeric experiments on \
hyperelliptic curves: period matrices, energy kernels, graded chain bundles and \
finite-difference Levi forms")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Curve file: JSON of the form {"branch_points": ["0", "1", "-1", ...]}
    #[arg(long, global = true, value_name = "FILE")]
    pub curve: Option<PathBuf>,

    /// Character file: JSON of the form {"a": [...], "b": [...]}
    #[arg(long, global = true, value_name = "FILE")]
    pub character: Option<PathBuf>,

    /// Relative quadrature tolerance for period integrals
    #[arg(long, global = true, value_name = "P")]
    pub precision: Option<f64>,

    /// Finite-difference step, relative to the branch-point spread
    #[arg(long, global = true, value_name = "H")]
    pub step: Option<f64>,

    /// Seed for every randomized choice the subcommand makes
    #[arg(long, global = true, value_name = "N", default_value_t = 0)]
    pub seed: u64,

    /// Output directory for report.json and its companions
    #[arg(long, global = true, value_name = "DIR", default_value = "reports")]
    pub out: PathBuf,

    /// Relative tolerance below which an eigenvalue counts as a PSD violation
    #[arg(long = "tol-psd", global = true, value_name = "T")]
    pub tol_psd: Option<f64>,

    /// Relative tolerance below which an eigenvalue counts as near-zero
    #[arg(long = "tol-ker", global = true, value_name = "T")]
    pub tol_ker: Option<f64>,

    /// Chain length for `higgs` / coefficient rank for `spectral`
    #[arg(long, global = true, value_name = "N")]
    pub rank: Option<usize>,

    /// Number of random directions for the curvature-ratio scan
    #[arg(long, global = true, value_name = "K", default_value_t = 10)]
    pub directions: usize,

    /// Run only the sweeps whose claim tag contains this substring
    #[arg(long, global = true, value_name = "TAG")]
    pub only: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Genus, differential bases, canonical divisor and certified period matrix
    CurveInfo,
    /// Exact annihilator dimension and energy of an abelian character
    Kernel,
    /// Graded chain bundle: construction, stability, flat-direction count
    Higgs,
    /// Characteristic coefficients and rank-2 spectral-curve smoothness
    Spectral,
    /// Finite-difference Levi form with kernel match and curvature ratios
    Levi,
    /// Seeded randomized verification sweeps over every claim
    Sweep,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::CurveInfo => "curve-info",
            Command::Kernel => "kernel",
            Command::Higgs => "higgs",
            Command::Spectral => "spectral",
            Command::Levi => "levi",
            Command::Sweep => "sweep",
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = commands::run(&cli);
    ExitCode::from(code)
}
