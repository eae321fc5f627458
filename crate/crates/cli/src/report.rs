//! Report envelope shared by every subcommand.
//!
//! The envelope carries the claim tag, the full effective configuration and
//! a status; the payload is subcommand-specific. Field order is fixed by
//! the struct definitions and nothing time- or machine-dependent is
//! serialized, so identical configuration and seed reproduce byte-identical
//! files.

use serde::Serialize;
use std::path::{Path, PathBuf};

use crate::Cli;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// every check the subcommand asserts held
    Pass,
    /// the computation finished but a verification check failed
    CheckFailed,
    /// the inputs were rejected before any computation ran
    InputError,
    /// a numeric stage (quadrature, factorization) failed
    NumericFailure,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Pass => 0,
            Status::CheckFailed => 1,
            Status::InputError => 2,
            Status::NumericFailure => 3,
        }
    }
}

/// Effective configuration, echoed into every report.
#[derive(Clone, Debug, Serialize)]
pub struct ConfigEcho {
    pub command: String,
    pub curve: Option<PathBuf>,
    pub character: Option<PathBuf>,
    pub precision: f64,
    pub step: f64,
    pub seed: u64,
    pub out: PathBuf,
    pub tol_psd: f64,
    pub tol_ker: f64,
    pub rank: Option<usize>,
    pub directions: usize,
    pub only: Option<String>,
}

impl ConfigEcho {
    pub fn from_cli(cli: &Cli) -> Self {
        ConfigEcho {
            command: cli.command.name().to_string(),
            curve: cli.curve.clone(),
            character: cli.character.clone(),
            precision: cli
                .precision
                .unwrap_or(teichlab_core::periods::PeriodOptions::default().rel_tol),
            step: cli.step.unwrap_or(teichlab_core::levi::DEFAULT_STEP_REL),
            seed: cli.seed,
            out: cli.out.clone(),
            tol_psd: cli.tol_psd.unwrap_or(teichlab_core::levi::DEFAULT_TOL_PSD),
            tol_ker: cli.tol_ker.unwrap_or(teichlab_core::levi::DEFAULT_TOL_KER),
            rank: cli.rank,
            directions: cli.directions,
            only: cli.only.clone(),
        }
    }
}

#[derive(Serialize)]
pub struct Report<T: Serialize> {
    pub tool: &'static str,
    /// neutral tag of the claim the subcommand exercises
    pub claim: &'static str,
    pub config: ConfigEcho,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub data: Option<T>,
}

/// Serialize the report to `<out>/report.json`. Failures to write are
/// reported on stderr and escalate the exit code to the higher of the
/// status code and an input error.
pub fn write_report<T: Serialize>(out: &Path, report: &Report<T>) -> u8 {
    let code = report.status.exit_code();
    if let Err(e) = std::fs::create_dir_all(out) {
        eprintln!("error: cannot create output directory {}: {e}", out.display());
        return code.max(Status::InputError.exit_code());
    }
    let path = out.join("report.json");
    let mut body = match serde_json::to_string_pretty(report) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("error: cannot serialize report: {e}");
            return code.max(Status::NumericFailure.exit_code());
        }
    };
    body.push('\n');
    if let Err(e) = std::fs::write(&path, body) {
        eprintln!("error: cannot write {}: {e}", path.display());
        return code.max(Status::InputError.exit_code());
    }
    code
}

/// One line on stdout summarizing the outcome for humans; the JSON is the
/// machine-readable artifact.
pub fn announce(claim: &str, status: Status, detail: &str) {
    let verdict = match status {
        Status::Pass => "PASS",
        Status::CheckFailed => "FAIL",
        Status::InputError => "INPUT ERROR",
        Status::NumericFailure => "NUMERIC FAILURE",
    };
    if detail.is_empty() {
        println!("{claim}: {verdict}");
    } else {
        println!("{claim}: {verdict} — {detail}");
    }
}
