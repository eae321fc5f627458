//! The six subcommands. Each one returns an [`Outcome`] — status, optional
//! error, payload and a one-line summary — and `run` serializes it into the
//! report envelope, writes the derived artifacts and maps the status to the
//! process exit code.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use teichlab_core::curve::HyperellipticCurve;
use teichlab_core::divisor::{h0, Divisor, Place};
use teichlab_core::energy::{
    energy_of_u, kernel_annihilator, solve_phi, AbelianCharacter, EnergyError,
};
use teichlab_core::exact::{GaussianRational, Poly};
use teichlab_core::higgs::{
    canonical_omega, canonical_psi, construct_even, construct_odd, kernel_dimension,
    stability_certificate, HiggsError, Stability,
};
use teichlab_core::levi::{is_pinned, levi_form, pin_curve, theta_proportionality, LeviError,
    LeviOptions, LeviReport};
use teichlab_core::numeric::hermitian_eigen;
use teichlab_core::periods::{period_data, PeriodOptions};
use teichlab_core::sampling::{
    random_affine_place, random_character, random_directions, random_n2_point,
};
use teichlab_core::spectral::{
    hitchin_base_dim, hitchin_base_dim_by_sections, hitchin_map, smoothness_n2, HitchinPoint,
    SmoothnessVerdict, SpectralError,
};
use teichlab_core::sweeps::{self, SweepOutcome};

use crate::render::{self, SpectrumRow};
use crate::report::{announce, write_report, ConfigEcho, Report, Status};
use crate::{Cli, Command};

/// Principal-angle tolerance for the kernel match on full genus-2 charts.
const KERNEL_ANGLE_TOL: f64 = 1e-2;

struct Outcome<T> {
    status: Status,
    error: Option<String>,
    data: Option<T>,
    detail: String,
    /// eigenvalue table and bar plot, rendered from the report data
    spectrum: Option<(String, Vec<SpectrumRow>, Option<f64>)>,
}

fn fail<T>(status: Status, msg: impl Into<String>) -> Outcome<T> {
    let msg = msg.into();
    Outcome {
        status,
        error: Some(msg.clone()),
        data: None,
        detail: msg,
        spectrum: None,
    }
}

pub fn run(cli: &Cli) -> u8 {
    let config = ConfigEcho::from_cli(cli);
    match cli.command {
        Command::CurveInfo => emit(cli, "curve-and-period-summary", config.clone(), cmd_curve_info(cli, &config)),
        Command::Kernel => emit(cli, "abelian-kernel-dimension", config.clone(), cmd_kernel(cli, &config)),
        Command::Higgs => emit(cli, "graded-chain-construction", config.clone(), cmd_higgs(cli)),
        Command::Spectral => emit(cli, "spectral-smoothness", config.clone(), cmd_spectral(cli)),
        Command::Levi => emit(cli, "levi-psd-and-kernel", config.clone(), cmd_levi(cli, &config)),
        Command::Sweep => emit(cli, "full-verification-sweep", config.clone(), cmd_sweep(cli)),
    }
}

fn emit<T: Serialize>(cli: &Cli, claim: &'static str, config: ConfigEcho, outcome: Outcome<T>) -> u8 {
    let report = Report {
        tool: "teichlab",
        claim,
        config,
        status: outcome.status,
        error: outcome.error,
        data: outcome.data,
    };
    let mut code = write_report(&cli.out, &report);
    if let Some((title, rows, cut)) = &outcome.spectrum {
        if let Err(e) = render::write_csv(&cli.out, rows) {
            eprintln!("error: cannot write eigenvalues.csv: {e}");
            code = code.max(Status::InputError.exit_code());
        }
        if let Err(e) = render::write_svg(&cli.out, title, rows, *cut) {
            eprintln!("error: cannot write spectrum.svg: {e}");
            code = code.max(Status::InputError.exit_code());
        }
    }
    announce(claim, report.status, &outcome.detail);
    code
}

// ---------------------------------------------------------------------------
// input loading
// ---------------------------------------------------------------------------

#[derive(Deserialize)]
struct CurveFile {
    branch_points: Vec<GaussianRational>,
}

fn load_curve<T>(cli: &Cli) -> Result<HyperellipticCurve, Outcome<T>> {
    let path = cli
        .curve
        .as_ref()
        .ok_or_else(|| fail(Status::InputError, "--curve FILE is required for this subcommand"))?;
    let body = std::fs::read_to_string(path).map_err(|e| {
        fail(
            Status::InputError,
            format!("cannot read curve file {}: {e}", path.display()),
        )
    })?;
    let wire: CurveFile = serde_json::from_str(&body).map_err(|e| {
        fail(
            Status::InputError,
            format!("curve file {} is not valid: {e}", path.display()),
        )
    })?;
    HyperellipticCurve::new(wire.branch_points)
        .map_err(|e| fail(Status::InputError, format!("{e:?}: {e}")))
}

fn load_character<T>(
    cli: &Cli,
    genus: usize,
    rng: &mut ChaCha8Rng,
) -> Result<AbelianCharacter, Outcome<T>> {
    let Some(path) = cli.character.as_ref() else {
        return Ok(random_character(rng, genus));
    };
    let body = std::fs::read_to_string(path).map_err(|e| {
        fail(
            Status::InputError,
            format!("cannot read character file {}: {e}", path.display()),
        )
    })?;
    let chi: AbelianCharacter = serde_json::from_str(&body).map_err(|e| {
        fail(
            Status::InputError,
            format!("character file {} is not valid: {e}", path.display()),
        )
    })?;
    if chi.a.len() != genus || chi.b.len() != genus {
        return Err(fail(
            Status::InputError,
            format!(
                "character has {} + {} period entries; the curve has genus {genus}",
                chi.a.len(),
                chi.b.len()
            ),
        ));
    }
    Ok(chi)
}

fn period_options(config: &ConfigEcho) -> PeriodOptions {
    PeriodOptions {
        rel_tol: config.precision,
        ..PeriodOptions::default()
    }
}

fn levi_error_status(e: &LeviError) -> Status {
    match e {
        LeviError::UnpinnedChart
        | LeviError::InvalidStep(_)
        | LeviError::Curve(_)
        | LeviError::Energy(EnergyError::WrongLength { .. }) => Status::InputError,
        _ => Status::NumericFailure,
    }
}

// ---------------------------------------------------------------------------
// curve-info
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct CurveInfoData {
    genus: usize,
    branch_points: Vec<String>,
    /// monomial one-form basis `x^k dx / y`, `k = 0 .. g-1`
    one_form_basis: Vec<String>,
    /// block sizes of the weight-2 space: numerators over `y^2` and over `y`
    quadratic_block_dims: (usize, usize),
    quadratic_dim: usize,
    canonical_divisor: Divisor,
    canonical_h0: usize,
    tau: Vec<Vec<Complex64>>,
    tau_asymmetry: f64,
    bilinear_residual: f64,
    im_tau_eigenvalues: Vec<f64>,
    b_words_negated: bool,
    max_nodes_used: usize,
}

fn cmd_curve_info(cli: &Cli, config: &ConfigEcho) -> Outcome<CurveInfoData> {
    let curve = match load_curve(cli) {
        Ok(c) => c,
        Err(o) => return o,
    };
    let periods = match period_data(&curve, &period_options(config)) {
        Ok(p) => p,
        Err(e) => return fail(Status::NumericFailure, format!("period computation failed: {e}")),
    };
    let canonical = Divisor::canonical(&curve);
    let canonical_h0 = match h0(&curve, &canonical) {
        Ok(v) => v,
        Err(e) => {
            return fail(
                Status::NumericFailure,
                format!("section count of the canonical divisor failed: {e}"),
            )
        }
    };
    let g = curve.genus();
    let im = periods.tau.map(|z| Complex64::new(z.im, 0.0));
    let (im_evals, _) = hermitian_eigen(&im);
    let scale = im_evals.iter().fold(0.0f64, |a, &b| a.max(b.abs())).max(f64::MIN_POSITIVE);
    let rows: Vec<SpectrumRow> = im_evals
        .iter()
        .map(|&v| SpectrumRow {
            value: v,
            relative: v.abs() / scale,
            class: if v > 0.0 { "positive" } else { "negative" },
        })
        .collect();

    let pass = im_evals.first().is_some_and(|&v| v > 0.0) && canonical_h0 == g;
    let detail = format!(
        "genus {g}, tau asymmetry {:.3e}, min Im tau eigenvalue {:.3e}",
        periods.tau_asymmetry,
        im_evals.first().copied().unwrap_or(f64::NAN)
    );
    let data = CurveInfoData {
        genus: g,
        branch_points: curve.branch_points().iter().map(|b| b.to_string()).collect(),
        one_form_basis: (0..g).map(one_form_name).collect(),
        quadratic_block_dims: curve.weight_block_dims(2),
        quadratic_dim: 3 * g - 3,
        canonical_divisor: canonical,
        canonical_h0,
        tau: (0..g)
            .map(|i| (0..g).map(|k| periods.tau[(i, k)]).collect())
            .collect(),
        tau_asymmetry: periods.tau_asymmetry,
        bilinear_residual: periods.bilinear_residual,
        im_tau_eigenvalues: im_evals,
        b_words_negated: periods.b_flipped,
        max_nodes_used: periods.max_nodes_used,
    };
    Outcome {
        status: if pass { Status::Pass } else { Status::CheckFailed },
        error: None,
        data: Some(data),
        detail,
        spectrum: Some(("Im tau spectrum (relative magnitude)".into(), rows, None)),
    }
}

fn one_form_name(k: usize) -> String {
    match k {
        0 => "dx / y".to_string(),
        1 => "x dx / y".to_string(),
        _ => format!("x^{k} dx / y"),
    }
}

// ---------------------------------------------------------------------------
// kernel
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct KernelData {
    genus: usize,
    character: AbelianCharacter,
    /// the character is zero: the annihilator is the whole space
    degenerate: bool,
    energy: f64,
    /// `max |Re(tau u) - b|` of the solved representative
    constraint_residual: f64,
    /// exact (dyadic-rationalized) monomial coefficients of the representative
    phi_coefficients: Vec<String>,
    annihilator_dim: usize,
    image_dim: usize,
    expected_dim: usize,
    /// functionals on quadratic-differential coordinates, exact, one per row
    annihilator_basis: Vec<Vec<String>>,
    note: String,
}

fn cmd_kernel(cli: &Cli, config: &ConfigEcho) -> Outcome<KernelData> {
    let curve = match load_curve(cli) {
        Ok(c) => c,
        Err(o) => return o,
    };
    let g = curve.genus();
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let chi = match load_character(cli, g, &mut rng) {
        Ok(c) => c,
        Err(o) => return o,
    };
    let periods = match period_data(&curve, &period_options(config)) {
        Ok(p) => p,
        Err(e) => return fail(Status::NumericFailure, format!("period computation failed: {e}")),
    };
    let rep = match solve_phi(&periods, &chi) {
        Ok(r) => r,
        Err(e @ EnergyError::WrongLength { .. }) => return fail(Status::InputError, e.to_string()),
        Err(e) => return fail(Status::NumericFailure, e.to_string()),
    };
    let energy = energy_of_u(&periods, &rep.u);

    // monomial coefficients of the representative: solve Pi_A^T m = u, then
    // rationalize exactly (dyadic); any nonzero representative has the same
    // annihilator dimension, so the rounding does not move the claim
    let monomial = match periods.pi_a.transpose().lu().solve(&rep.u) {
        Some(m) => m,
        None => return fail(Status::NumericFailure, "the A-period matrix is numerically singular"),
    };
    let coeffs: Vec<GaussianRational> = monomial
        .iter()
        .map(|z| {
            let zero = GaussianRational::from_int(0);
            let re = GaussianRational::from_f64(z.re).unwrap_or(zero.clone());
            let im = GaussianRational::from_f64(z.im).unwrap_or(zero);
            &re + &(&im * &GaussianRational::i())
        })
        .collect();
    let phi = teichlab_core::curve::Differential::new(1, 1, Poly::new(coeffs.clone()));
    let ann = kernel_annihilator(&curve, &phi);
    let expected = if ann.zero_form { 3 * g - 3 } else { 2 * g - 3 };
    let pass = ann.dim == expected;
    let detail = format!(
        "annihilator dimension {} (expected {expected}), energy {:.6e}",
        ann.dim, energy
    );
    let data = KernelData {
        genus: g,
        character: chi,
        degenerate: ann.zero_form,
        energy,
        constraint_residual: rep.residual,
        phi_coefficients: coeffs.iter().map(|c| c.to_string()).collect(),
        annihilator_dim: ann.dim,
        image_dim: ann.image_dim,
        expected_dim: expected,
        annihilator_basis: ann
            .basis
            .iter()
            .map(|row| row.iter().map(|c| c.to_string()).collect())
            .collect(),
        note: "the representative one-form is the exact dyadic rationalization of the solved \
               harmonic coefficients; the annihilator dimension is the same for every nonzero \
               representative"
            .to_string(),
    };
    Outcome {
        status: if pass { Status::Pass } else { Status::CheckFailed },
        error: None,
        data: Some(data),
        detail,
        spectrum: None,
    }
}

// ---------------------------------------------------------------------------
// higgs
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct HiggsData {
    genus: usize,
    rank: usize,
    parity: &'static str,
    base_point: Place,
    exponents: Vec<i64>,
    twists: Vec<i64>,
    stability: String,
    kernel_dim: usize,
    product_dim: usize,
    quadratic_dim: usize,
    expected: String,
    hitchin_image_is_zero: bool,
    /// the stability and counting statements are asserted from genus 4 up;
    /// smaller genus runs are reported without a verdict
    asserted: bool,
    notes: Vec<String>,
}

fn cmd_higgs(cli: &Cli) -> Outcome<HiggsData> {
    let curve = match load_curve(cli) {
        Ok(c) => c,
        Err(o) => return o,
    };
    let g = curve.genus();
    let n = cli.rank.unwrap_or(3);
    if n < 2 {
        return fail(Status::InputError, format!("chain length must be at least 2, got {n}"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let place = random_affine_place(&mut rng, &curve);
    let psi = match canonical_psi(&curve, &place) {
        Ok(p) => p,
        Err(e) => return fail(Status::NumericFailure, format!("base section failed: {e}")),
    };
    let parity = if n % 2 == 1 { "odd" } else { "even" };
    let bundle = if n % 2 == 1 {
        construct_odd(&curve, &place, n, &psi)
    } else {
        construct_even(&curve, &place, n, &psi, &canonical_omega(&curve))
    };
    let bundle = match bundle {
        Ok(b) => b,
        Err(e @ HiggsError::InvalidRank(_)) => return fail(Status::InputError, e.to_string()),
        Err(e) => return fail(Status::NumericFailure, format!("construction failed: {e}")),
    };
    let stability = stability_certificate(&bundle);
    let count = match kernel_dimension(&curve, &bundle) {
        Ok(c) => c,
        Err(e) => return fail(Status::NumericFailure, format!("kernel count failed: {e}")),
    };
    let point = hitchin_map(&curve, &bundle);
    let nilpotent = point.is_origin();

    let mut notes = Vec::new();
    let asserted = !bundle.below_standing_genus;
    if !asserted {
        notes.push(format!(
            "genus {g} is below the standing range (genus >= 4) of the stability and counting \
             statements; values are reported, not asserted"
        ));
    }
    let (expected, claim_holds) = match (n % 2 == 1, n) {
        (true, _) => (
            format!("stable with kernel dimension 2g-3 = {}", 2 * g - 3),
            stability == Stability::Stable && count.dim == 2 * g - 3 && count.product_dim == g,
        ),
        (false, 2) => {
            notes.push(sweeps::EVEN_TWO_NOTE.to_string());
            (
                "not stable: the top line is an invariant subbundle of degree 0".to_string(),
                matches!(stability, Stability::NotStable { tail_degree: 0, .. }),
            )
        }
        (false, _) => (
            format!("stable with kernel dimension >= g-3 = {}", g as i64 - 3),
            stability == Stability::Stable && count.dim as i64 >= g as i64 - 3,
        ),
    };
    let pass = nilpotent && (!asserted || claim_holds);
    let stability_str = match &stability {
        Stability::Stable => "stable".to_string(),
        Stability::NotStable { tail_start, tail_degree } => format!(
            "not stable: tail starting at line {tail_start} has degree {tail_degree}"
        ),
        Stability::Indeterminate => "indeterminate: a chain map vanishes".to_string(),
    };
    let detail = format!(
        "rank {n} {parity} chain at genus {g}: {stability_str}, kernel {}, nilpotent {}",
        count.dim, nilpotent
    );
    let data = HiggsData {
        genus: g,
        rank: n,
        parity,
        base_point: place,
        exponents: bundle.exponents.clone(),
        twists: bundle.twists(),
        stability: stability_str,
        kernel_dim: count.dim,
        product_dim: count.product_dim,
        quadratic_dim: count.qd_dim,
        expected,
        hitchin_image_is_zero: nilpotent,
        asserted,
        notes,
    };
    Outcome {
        status: if pass { Status::Pass } else { Status::CheckFailed },
        error: None,
        data: Some(data),
        detail,
        spectrum: None,
    }
}

// ---------------------------------------------------------------------------
// spectral
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct SpectralData {
    genus: usize,
    rank: usize,
    /// dimension of the coefficient space by the weighted block count
    base_dim: usize,
    /// the same dimension by exact section counting on multiples of the
    /// canonical divisor
    base_dim_by_sections: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    point: Option<HitchinPoint>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verdict: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    declined: Option<String>,
}

fn cmd_spectral(cli: &Cli) -> Outcome<SpectralData> {
    let curve = match load_curve(cli) {
        Ok(c) => c,
        Err(o) => return o,
    };
    let g = curve.genus();
    let n = cli.rank.unwrap_or(2);
    if n < 1 {
        return fail(Status::InputError, "rank must be at least 1");
    }
    let base_dim = hitchin_base_dim(&curve, n);
    let base_dim_by_sections = match hitchin_base_dim_by_sections(&curve, n) {
        Ok(v) => v,
        Err(e) => return fail(Status::NumericFailure, format!("section count failed: {e}")),
    };
    let mut point = None;
    let mut verdict = None;
    let mut declined = None;
    if n == 2 {
        let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
        let pt = random_n2_point(&mut rng, &curve);
        let p1 = pt.coefficients[0].form(&curve);
        let p2 = pt.coefficients[1].form(&curve);
        verdict = Some(match smoothness_n2(&curve, &p1, &p2) {
            Ok(SmoothnessVerdict::Smooth) => "smooth".to_string(),
            Ok(SmoothnessVerdict::NotSmooth(reason)) => format!("not smooth: {reason}"),
            Err(SpectralError::ZeroDiscriminant) => {
                "non-reduced: the discriminant vanishes identically".to_string()
            }
            Err(e) => return fail(Status::NumericFailure, e.to_string()),
        });
        point = Some(pt);
    } else {
        declined = Some(
            "smoothness verdicts are implemented for rank 2 only; higher-rank runs report the \
             coefficient space without a verdict"
                .to_string(),
        );
    }
    let pass = base_dim == base_dim_by_sections;
    let detail = match &verdict {
        Some(v) => format!("rank {n} at genus {g}: coefficient space {base_dim}, verdict {v}"),
        None => format!("rank {n} at genus {g}: coefficient space {base_dim}, no verdict"),
    };
    Outcome {
        status: if pass { Status::Pass } else { Status::CheckFailed },
        error: None,
        data: Some(SpectralData {
            genus: g,
            rank: n,
            base_dim,
            base_dim_by_sections,
            point,
            verdict,
            declined,
        }),
        detail,
        spectrum: None,
    }
}

// ---------------------------------------------------------------------------
// levi
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct LeviVerdict {
    psd: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    single_near_zero: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    kernel_angle_ok: Option<bool>,
}

#[derive(Serialize)]
struct LeviData {
    /// the input curve was renormalized into the pinned chart first
    pinning_applied: bool,
    verdict: LeviVerdict,
    report: LeviReport,
}

fn cmd_levi(cli: &Cli, config: &ConfigEcho) -> Outcome<LeviData> {
    let input = match load_curve(cli) {
        Ok(c) => c,
        Err(o) => return o,
    };
    let (curve, pinning_applied) = if is_pinned(&input) {
        (input, false)
    } else {
        match pin_curve(&input) {
            Ok((c, _map)) => (c, true),
            Err(e) => {
                return fail(
                    Status::InputError,
                    format!("cannot normalize the curve into the pinned chart: {e}"),
                )
            }
        }
    };
    let g = curve.genus();
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let chi = match load_character(cli, g, &mut rng) {
        Ok(c) => c,
        Err(o) => return o,
    };
    let opts = LeviOptions {
        step_rel: config.step,
        tol_psd: config.tol_psd,
        tol_ker: config.tol_ker,
        quad_rel_tol: config.precision,
        ..LeviOptions::default()
    };
    let mut report = match levi_form(&curve, &chi, &opts) {
        Ok(r) => r,
        Err(e) => return fail(levi_error_status(&e), e.to_string()),
    };
    if !report.degenerate && g == 2 {
        let dirs = random_directions(&mut rng, 2 * g - 1, cli.directions);
        match theta_proportionality(&report, &dirs) {
            Ok(stats) => report.kappa = Some(stats),
            Err(LeviError::DegenerateDirection) => {}
            Err(e) => return fail(Status::NumericFailure, e.to_string()),
        }
    }

    let psd = report.min_eigenvalue >= -config.tol_psd * report.norm;
    let (single_near_zero, kernel_angle_ok, pass, detail) = if report.degenerate {
        (
            None,
            None,
            psd,
            "degenerate character: the form is identically zero".to_string(),
        )
    } else if g == 2 {
        let single = report.near_zero_count == 1;
        let angle_ok = report.kernel_angle.is_some_and(|a| a < KERNEL_ANGLE_TOL);
        let detail = format!(
            "min eigenvalue {:.3e}, near-zero count {}, kernel angle {}",
            report.min_eigenvalue,
            report.near_zero_count,
            report
                .kernel_angle
                .map_or("unavailable".to_string(), |a| format!("{a:.3e}")),
        );
        (Some(single), Some(angle_ok), psd && single && angle_ok, detail)
    } else {
        (
            None,
            None,
            psd,
            format!(
                "exploratory chart at genus {g}: min eigenvalue {:.3e}, near-zero count {}",
                report.min_eigenvalue, report.near_zero_count
            ),
        )
    };

    let rows: Vec<SpectrumRow> = report
        .eigenvalues
        .iter()
        .map(|&v| SpectrumRow {
            value: v,
            relative: if report.norm > 0.0 { v.abs() / report.norm } else { 0.0 },
            class: render::classify_levi(v, report.norm.max(f64::MIN_POSITIVE), config.tol_psd, config.tol_ker),
        })
        .collect();
    Outcome {
        status: if pass { Status::Pass } else { Status::CheckFailed },
        error: None,
        data: Some(LeviData {
            pinning_applied,
            verdict: LeviVerdict {
                psd,
                single_near_zero,
                kernel_angle_ok,
            },
            report,
        }),
        detail,
        spectrum: Some((
            "Levi spectrum (relative magnitude, log scale)".into(),
            rows,
            Some(config.tol_ker),
        )),
    }
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct SweepData {
    outcomes: Vec<SweepOutcome>,
}

const SWEEP_TABLE: [(&str, fn(u64) -> SweepOutcome); 8] = [
    ("abelian-kernel-dimension", sweeps::annihilator_dimension_sweep),
    ("graded-odd-construction", sweeps::odd_chain_sweep),
    ("graded-even-construction", sweeps::even_chain_sweep),
    ("nilpotent-cone-and-generic-smoothness", sweeps::nilpotent_cone_sweep),
    ("period-engine-soundness", sweeps::period_soundness_sweep),
    ("levi-psd-and-kernel", sweeps::levi_psd_sweep),
    ("levi-proportionality", sweeps::proportionality_sweep),
    ("riemann-roch-exactness", sweeps::riemann_roch_sweep),
];

fn cmd_sweep(cli: &Cli) -> Outcome<SweepData> {
    let selected: Vec<(usize, &str, fn(u64) -> SweepOutcome)> = SWEEP_TABLE
        .iter()
        .enumerate()
        .filter(|(_, (claim, _))| {
            cli.only.as_ref().is_none_or(|filter| claim.contains(filter.as_str()))
        })
        .map(|(i, (claim, f))| (i, *claim, *f))
        .collect();
    if selected.is_empty() {
        let tags: Vec<&str> = SWEEP_TABLE.iter().map(|(c, _)| *c).collect();
        return fail(
            Status::InputError,
            format!("--only matches no sweep; claim tags: {}", tags.join(", ")),
        );
    }
    let mut outcomes = Vec::with_capacity(selected.len());
    for (i, claim, sweep) in selected {
        let outcome = sweep(cli.seed.wrapping_add(i as u64 + 1));
        println!(
            "  {claim}: {} — {} cases",
            if outcome.pass { "PASS" } else { "FAIL" },
            outcome.cases
        );
        for line in outcome.failures.iter().take(5) {
            println!("    failure: {line}");
        }
        outcomes.push(outcome);
    }
    let passed = outcomes.iter().filter(|o| o.pass).count();
    let total = outcomes.len();
    let pass = passed == total;
    Outcome {
        status: if pass { Status::Pass } else { Status::CheckFailed },
        error: None,
        data: Some(SweepData { outcomes }),
        detail: format!("{passed}/{total} sweeps passed"),
        spectrum: None,
    }
}
