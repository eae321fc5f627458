//! Finite-difference laboratory for the complex Hessian (Levi form) of the
//! character energy in branch-point coordinates.
//!
//! Three branch points are pinned at `0, 1, -1`, which kills the fractional
//! linear gauge exactly; the remaining `2g - 1` branch points are the
//! complex coordinates. For a fixed character the energy is evaluated at
//! every point of a two-coordinate central-difference stencil (each
//! evaluation a full period computation over a homology marking frozen from
//! the base configuration), the full real Hessian is assembled, and the
//! mixed-holomorphic block
//!
//! ```text
//! L[j][k] = d^2 E / (d conj(lambda_j) d lambda_k)
//!         = 1/4 (H[x_j x_k] + H[y_j y_k] + i (H[y_j x_k] - H[x_j y_k]))
//! ```
//!
//! is read off through the Wirtinger identities. The index order matters:
//! this is the matrix of the Hermitian form `sum conj(v_j) L[j][k] v_k`, so
//! its null vectors are the flat directions themselves (the opposite order
//! would store the conjugate matrix and silently conjugate every
//! eigenvector). Positive semidefiniteness
//! of `L` is the numerical face of plurisubharmonicity; its near-null
//! eigenvectors are compared against the exact prediction that a direction
//! `v` is flat iff `(d_v tau) u = 0`, with `d tau` obtained from the same
//! stencil (`tau` is holomorphic in the branch positions, so the real-axis
//! central difference is the holomorphic derivative and the imaginary-axis
//! one serves as a Cauchy-Riemann diagnostic).
//!
//! Mirror stencil entries share their evaluation points, so the assembled
//! `L` is Hermitian by construction and the reported Hermiticity residual
//! only reflects floating-point assembly; the meaningful consistency
//! diagnostics are the step-halving stability of `L` and the agreement with
//! the first-derivative form `(1/2) M^H (Im tau)^{-1} M`, `M = (d_j tau) u`,
//! which the integration oracles pin.
//!
//! At genus 2 the chart is full-dimensional (`2g - 1 = 3g - 3`), so kernel
//! counts carry pass/fail meaning; at higher genus the chart only spans the
//! hyperelliptic slice and reports are exploratory.

use crate::curve::{mobius_transform, CurveError, HyperellipticCurve, MobiusMap};
use crate::energy::{
    energy_of_u, predicted_kernel_map, solve_phi, AbelianCharacter, EnergyError, KernelPrediction,
};
use crate::exact::GaussianRational;
use crate::homology::Homology;
use crate::numeric::{hermitian_eigen, principal_angles};
use crate::periods::{period_data_with_homology, PeriodError, PeriodOptions};
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Default stencil step, relative to the branch-point spread.
pub const DEFAULT_STEP_REL: f64 = 1e-3;
/// Eigenvalues below `-tol_psd * ||L||` refute positive semidefiniteness.
pub const DEFAULT_TOL_PSD: f64 = 1e-4;
/// Eigenvalues below `tol_ker * ||L||` in magnitude count as kernel.
pub const DEFAULT_TOL_KER: f64 = 1e-3;
/// Relative singular-value cut for the predicted kernel map.
pub const DEFAULT_TOL_PREDICTED: f64 = 1e-6;

#[derive(Debug, thiserror::Error)]
pub enum LeviError {
    #[error("the chart expects branch points 0, 1, -1 first; normalize with pin_curve")]
    UnpinnedChart,
    #[error("step {h:.3e} collides: branch points {i} and {k} are {dist:.3e} apart (needs > 4 h)")]
    StencilCollision { i: usize, k: usize, dist: f64, h: f64 },
    #[error("step must be positive and finite, got {0:.3e}")]
    InvalidStep(f64),
    #[error(
        "two near-zero eigenvalues ({e0:.3e} and {e1:.3e} against scale {scale:.3e}); \
         the step or the character is degenerate"
    )]
    AmbiguousKernel { e0: f64, e1: f64, scale: f64 },
    #[error("the predicted kernel map has no near-null direction at the configured cut")]
    EmptyPrediction,
    #[error("all supplied directions have a vanishing flatness defect; statistics are empty")]
    DegenerateDirection,
    #[error("kernel semantics need the full chart of genus 2; genus {genus} runs are exploratory")]
    ExploratoryChart { genus: usize },
    #[error("orientation certificate flipped at a stencil point; halve the step")]
    OrientationJump,
    #[error(transparent)]
    Period(#[from] PeriodError),
    #[error(transparent)]
    Energy(#[from] EnergyError),
    #[error(transparent)]
    Curve(#[from] CurveError),
}

/// Tolerances and step control for one laboratory run.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LeviOptions {
    /// stencil step relative to the branch-point spread
    pub step_rel: f64,
    /// PSD slack: min eigenvalue must be `>= -tol_psd * ||L||`
    pub tol_psd: f64,
    /// kernel cut: eigenvalues with `|e| <= tol_ker * ||L||`
    pub tol_ker: f64,
    /// relative singular-value cut for the predicted kernel
    pub tol_predicted: f64,
    /// relative tolerance for the period quadrature
    pub quad_rel_tol: f64,
    /// node cap for the period quadrature
    pub max_nodes: usize,
}

impl Default for LeviOptions {
    fn default() -> Self {
        let p = PeriodOptions::default();
        Self {
            step_rel: DEFAULT_STEP_REL,
            tol_psd: DEFAULT_TOL_PSD,
            tol_ker: DEFAULT_TOL_KER,
            tol_predicted: DEFAULT_TOL_PREDICTED,
            quad_rel_tol: p.rel_tol,
            max_nodes: p.max_nodes,
        }
    }
}

/// Proportionality statistics of `kappa(v) = v^H L v / Q(v)` over sampled
/// directions, `Q(v) = ((d_v tau) u)^H (Im tau)^{-1} ((d_v tau) u)`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ThetaStats {
    /// one ratio per non-degenerate direction, in input order
    pub kappas: Vec<f64>,
    pub mean: f64,
    /// `(max - min) / |mean|`
    pub rel_spread: f64,
    /// directions dropped because their flatness defect was below the floor
    pub excluded: usize,
    pub q_floor: f64,
}

/// Everything one laboratory run measured.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LeviReport {
    pub curve: HyperellipticCurve,
    pub character: AbelianCharacter,
    pub genus: usize,
    /// `2g - 1` complex chart coordinates
    pub dim: usize,
    /// absolute stencil step
    pub step: f64,
    pub step_rel: f64,
    /// max pairwise branch distance the step was scaled by
    pub spread: f64,
    /// genus above 2: the chart spans only the hyperelliptic slice
    pub exploratory: bool,
    /// the character was zero, so every entry is trivially zero
    pub degenerate: bool,
    /// the frozen marking's B-words were negated once to fix orientation
    pub b_words_negated: bool,
    /// frozen spine order of the branch points
    pub spine: Vec<usize>,
    pub energy: f64,
    /// residual of the harmonic-representative solve at the base point
    pub phi_residual: f64,
    pub base_tau: Vec<Vec<Complex64>>,
    /// harmonic-representative coefficients at the base point
    pub u: Vec<Complex64>,
    /// the Levi matrix, row-major, Hermitian
    pub levi: Vec<Vec<Complex64>>,
    /// `max |L - L^H|` relative to the matrix scale, before symmetrizing
    pub hermiticity_residual: f64,
    /// ascending
    pub eigenvalues: Vec<f64>,
    /// matching `eigenvalues` order
    pub eigenvectors: Vec<Vec<Complex64>>,
    /// spectral norm `max |eigenvalue|`
    pub norm: f64,
    pub min_eigenvalue: f64,
    /// eigenvalues with `|e| <= tol_ker * norm`
    pub near_zero_count: usize,
    pub kernel_candidates: Vec<Vec<Complex64>>,
    /// `g x dim` matrix with columns `(d_j tau) u`, row-major
    pub dtau_u: Vec<Vec<Complex64>>,
    /// ascending singular values of `dtau_u`
    pub predicted_singulars: Vec<f64>,
    pub predicted_kernel: Vec<Vec<Complex64>>,
    /// principal angle between the numeric kernel candidate and the
    /// prediction; `None` when either side is ambiguous or the chart is
    /// exploratory
    pub kernel_angle: Option<f64>,
    /// worst relative Cauchy-Riemann defect of the tau derivatives
    pub holomorphy_residual: f64,
    /// filled by `theta_proportionality` when the caller attaches it
    pub kappa: Option<ThetaStats>,
    pub options: LeviOptions,
    pub max_nodes_used: usize,
}

impl LeviReport {
    pub fn levi_matrix(&self) -> DMatrix<Complex64> {
        rows_to_matrix(&self.levi)
    }

    pub fn dtau_u_matrix(&self) -> DMatrix<Complex64> {
        rows_to_matrix(&self.dtau_u)
    }

    pub fn base_tau_matrix(&self) -> DMatrix<Complex64> {
        rows_to_matrix(&self.base_tau)
    }
}

fn rows_to_matrix(rows: &[Vec<Complex64>]) -> DMatrix<Complex64> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    DMatrix::from_fn(nrows, ncols, |i, k| rows[i][k])
}

fn matrix_to_rows(m: &DMatrix<Complex64>) -> Vec<Vec<Complex64>> {
    (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|k| m[(i, k)]).collect())
        .collect()
}

/// Is the curve already in the pinned chart (`0, 1, -1` first)?
pub fn is_pinned(curve: &HyperellipticCurve) -> bool {
    let b = curve.branch_points();
    b.len() >= 3
        && b[0] == GaussianRational::from_int(0)
        && b[1] == GaussianRational::from_int(1)
        && b[2] == GaussianRational::from_int(-1)
}

/// Move the curve into the pinned chart by the fractional linear map
/// sending its first three branch points to `0, 1, -1`. Returns the pinned
/// model together with the map used.
pub fn pin_curve(
    curve: &HyperellipticCurve,
) -> Result<(HyperellipticCurve, MobiusMap), LeviError> {
    let b = curve.branch_points();
    let map = MobiusMap::to_pinned_triple(&b[0], &b[1], &b[2])?;
    let moved = mobius_transform(curve, &map)?;
    debug_assert!(is_pinned(&moved.curve));
    Ok((moved.curve, map))
}

// --------------------------------------------------------------------------
// stencil bookkeeping
// --------------------------------------------------------------------------
//
// The 2g-1 complex coordinates unfold into P = 2(2g-1) real parameters;
// parameter 2j is the real part of coordinate j, parameter 2j+1 the
// imaginary part. The evaluation list is: the base point, then +/-h along
// each single parameter, then the four sign combinations on each parameter
// pair — every second derivative is a central difference over these.

fn idx_single(p: usize, s: i8) -> usize {
    1 + 2 * p + usize::from(s < 0)
}

fn idx_pair(n_params: usize, p: usize, q: usize, s: i8, t: i8) -> usize {
    debug_assert!(p < q);
    let rank = p * (2 * n_params - p - 1) / 2 + (q - p - 1);
    1 + 2 * n_params + 4 * rank + 2 * usize::from(s < 0) + usize::from(t < 0)
}

fn stencil_configs(n_params: usize) -> Vec<Vec<(usize, i8)>> {
    let mut configs: Vec<Vec<(usize, i8)>> = Vec::new();
    configs.push(Vec::new());
    for p in 0..n_params {
        configs.push(vec![(p, 1)]);
        configs.push(vec![(p, -1)]);
    }
    for p in 0..n_params {
        for q in p + 1..n_params {
            for (s, t) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                configs.push(vec![(p, s), (q, t)]);
            }
        }
    }
    configs
}

fn displaced_branch(
    base: &[GaussianRational],
    h: &GaussianRational,
    offsets: &[(usize, i8)],
) -> Vec<GaussianRational> {
    let mut pts = base.to_vec();
    for &(p, s) in offsets {
        let coord = 3 + p / 2;
        let mut d = if s >= 0 { h.clone() } else { -h };
        if p % 2 == 1 {
            d = &d * &GaussianRational::i();
        }
        pts[coord] = &pts[coord] + &d;
    }
    pts
}

struct Eval {
    energy: f64,
    tau: DMatrix<Complex64>,
    max_nodes: usize,
}

fn evaluate(
    branch: Vec<GaussianRational>,
    homology: &Homology,
    chi: &AbelianCharacter,
    popts: &PeriodOptions,
) -> Result<Eval, LeviError> {
    let curve = HyperellipticCurve::new(branch)?;
    let pd = period_data_with_homology(&curve, homology.clone(), popts)?;
    if pd.b_flipped {
        return Err(LeviError::OrientationJump);
    }
    let rep = solve_phi(&pd, chi)?;
    Ok(Eval {
        energy: energy_of_u(&pd, &rep.u),
        tau: pd.tau,
        max_nodes: pd.max_nodes_used,
    })
}

/// Run the laboratory: the Levi matrix by central differences, its
/// spectrum, and the finite-difference kernel prediction, all over a
/// homology marking frozen from the base configuration.
pub fn levi_form(
    curve: &HyperellipticCurve,
    chi: &AbelianCharacter,
    opts: &LeviOptions,
) -> Result<LeviReport, LeviError> {
    if !is_pinned(curve) {
        return Err(LeviError::UnpinnedChart);
    }
    let g = curve.genus();
    let m = 2 * g - 1;
    let n_params = 2 * m;

    // step scaled to the configuration, collision-guarded
    let pts_c: Vec<Complex64> = curve.branch_points().iter().map(|p| p.to_c64()).collect();
    let mut spread = 0.0f64;
    for i in 0..pts_c.len() {
        for k in i + 1..pts_c.len() {
            spread = spread.max((pts_c[i] - pts_c[k]).norm());
        }
    }
    let h = opts.step_rel * spread;
    if !(h > 0.0) || !h.is_finite() {
        return Err(LeviError::InvalidStep(h));
    }
    for i in 0..pts_c.len() {
        for k in i + 1..pts_c.len() {
            let dist = (pts_c[i] - pts_c[k]).norm();
            if dist <= 4.0 * h {
                return Err(LeviError::StencilCollision { i, k, dist, h });
            }
        }
    }
    let h_exact = GaussianRational::from_f64(h).expect("finite step");

    // freeze the marking and its orientation from the base configuration
    let popts = PeriodOptions {
        rel_tol: opts.quad_rel_tol,
        max_nodes: opts.max_nodes,
    };
    let mut homology = Homology::new(curve);
    let mut base_pd = period_data_with_homology(curve, homology.clone(), &popts)?;
    let b_words_negated = base_pd.b_flipped;
    if b_words_negated {
        for word in &mut homology.b_words {
            for c in word.iter_mut() {
                *c = -*c;
            }
        }
        base_pd = period_data_with_homology(curve, homology.clone(), &popts)?;
        debug_assert!(!base_pd.b_flipped);
    }
    let base_rep = solve_phi(&base_pd, chi)?;
    let energy = energy_of_u(&base_pd, &base_rep.u);

    // all stencil evaluations, in parallel, order-preserving
    let configs = stencil_configs(n_params);
    let results: Vec<Result<Eval, LeviError>> = configs
        .par_iter()
        .map(|offsets| {
            if offsets.is_empty() {
                return Ok(Eval {
                    energy,
                    tau: base_pd.tau.clone(),
                    max_nodes: base_pd.max_nodes_used,
                });
            }
            evaluate(
                displaced_branch(curve.branch_points(), &h_exact, offsets),
                &homology,
                chi,
                &popts,
            )
        })
        .collect();
    let mut evals = Vec::with_capacity(results.len());
    for r in results {
        evals.push(r?);
    }
    let max_nodes_used = evals.iter().map(|e| e.max_nodes).max().unwrap_or(0);

    // full real Hessian
    let e_at = |idx: usize| evals[idx].energy;
    let h2 = h * h;
    let mut hess = DMatrix::<f64>::zeros(n_params, n_params);
    for p in 0..n_params {
        hess[(p, p)] = (e_at(idx_single(p, 1)) - 2.0 * energy + e_at(idx_single(p, -1))) / h2;
        for q in p + 1..n_params {
            let v = (e_at(idx_pair(n_params, p, q, 1, 1)) - e_at(idx_pair(n_params, p, q, 1, -1))
                - e_at(idx_pair(n_params, p, q, -1, 1))
                + e_at(idx_pair(n_params, p, q, -1, -1)))
                / (4.0 * h2);
            hess[(p, q)] = v;
            hess[(q, p)] = v;
        }
    }

    // Wirtinger block of the Hermitian form (conjugate index first)
    let mut levi = DMatrix::<Complex64>::zeros(m, m);
    for j in 0..m {
        for k in 0..m {
            levi[(j, k)] = Complex64::new(
                hess[(2 * j, 2 * k)] + hess[(2 * j + 1, 2 * k + 1)],
                hess[(2 * j + 1, 2 * k)] - hess[(2 * j, 2 * k + 1)],
            ) * 0.25;
        }
    }
    let scale = levi.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let hermiticity_residual = (0..m)
        .flat_map(|j| (0..m).map(move |k| (j, k)))
        .map(|(j, k)| (levi[(j, k)] - levi[(k, j)].conj()).norm())
        .fold(0.0, f64::max)
        / scale.max(1e-300);
    let levi = (levi.clone() + levi.adjoint()) * Complex64::new(0.5, 0.0);

    // spectrum and kernel candidates
    let (eigenvalues, eigvecs) = hermitian_eigen(&levi);
    let norm = eigenvalues.iter().fold(0.0f64, |a, e| a.max(e.abs()));
    let min_eigenvalue = eigenvalues.first().copied().unwrap_or(0.0);
    let kernel_indices: Vec<usize> = (0..eigenvalues.len())
        .filter(|&i| eigenvalues[i].abs() <= opts.tol_ker * norm)
        .collect();
    let kernel_candidates: Vec<Vec<Complex64>> = kernel_indices
        .iter()
        .map(|&i| eigvecs[i].iter().copied().collect())
        .collect();

    // holomorphic derivative of tau along each coordinate + CR diagnostic
    let mut dtau: Vec<DMatrix<Complex64>> = Vec::with_capacity(m);
    let mut holomorphy_residual = 0.0f64;
    let inv_2h = Complex64::new(1.0 / (2.0 * h), 0.0);
    for j in 0..m {
        let dx = (&evals[idx_single(2 * j, 1)].tau - &evals[idx_single(2 * j, -1)].tau) * inv_2h;
        let dy =
            (&evals[idx_single(2 * j + 1, 1)].tau - &evals[idx_single(2 * j + 1, -1)].tau) * inv_2h;
        let cr = (&dy - &dx * Complex64::new(0.0, 1.0)).norm() / dx.norm().max(1e-300);
        holomorphy_residual = holomorphy_residual.max(cr);
        dtau.push(dx);
    }
    let prediction = predicted_kernel_map(&dtau, &base_rep.u, opts.tol_predicted);

    let mut report = LeviReport {
        curve: curve.clone(),
        character: chi.clone(),
        genus: g,
        dim: m,
        step: h,
        step_rel: opts.step_rel,
        spread,
        exploratory: g != 2,
        degenerate: chi.is_zero(),
        b_words_negated,
        spine: homology.spine.clone(),
        energy,
        phi_residual: base_rep.residual,
        base_tau: matrix_to_rows(&base_pd.tau),
        u: base_rep.u.iter().copied().collect(),
        levi: matrix_to_rows(&levi),
        hermiticity_residual,
        eigenvalues,
        eigenvectors: eigvecs.iter().map(|v| v.iter().copied().collect()).collect(),
        norm,
        min_eigenvalue,
        near_zero_count: kernel_indices.len(),
        kernel_candidates,
        dtau_u: matrix_to_rows(&prediction.map),
        predicted_singulars: prediction.singular_values.clone(),
        predicted_kernel: prediction
            .kernel
            .iter()
            .map(|v| v.iter().copied().collect())
            .collect(),
        kernel_angle: None,
        holomorphy_residual,
        kappa: None,
        options: opts.clone(),
        max_nodes_used,
    };
    report.kernel_angle = kernel_match(&report, &prediction).ok();
    Ok(report)
}

/// Principal angle between the numeric near-kernel eigenvector and the
/// predicted kernel. Only the genus-2 chart is full-dimensional; anything
/// else is refused rather than silently compared.
pub fn kernel_match(
    report: &LeviReport,
    predicted: &KernelPrediction,
) -> Result<f64, LeviError> {
    if report.genus != 2 {
        return Err(LeviError::ExploratoryChart {
            genus: report.genus,
        });
    }
    let scale = report.norm;
    let mut by_magnitude: Vec<usize> = (0..report.eigenvalues.len()).collect();
    by_magnitude.sort_by(|&a, &b| {
        report.eigenvalues[a]
            .abs()
            .total_cmp(&report.eigenvalues[b].abs())
    });
    let e0 = by_magnitude
        .first()
        .map(|&i| report.eigenvalues[i].abs())
        .unwrap_or(0.0);
    let e1 = by_magnitude
        .get(1)
        .map(|&i| report.eigenvalues[i].abs())
        .unwrap_or(0.0);
    let cut = report.options.tol_ker * scale;
    if scale <= 0.0 || e1 <= cut {
        return Err(LeviError::AmbiguousKernel { e0, e1, scale });
    }
    if predicted.kernel.is_empty() {
        return Err(LeviError::EmptyPrediction);
    }
    let candidate = DVector::from_iterator(
        report.dim,
        report.eigenvectors[by_magnitude[0]].iter().copied(),
    );
    let angles = principal_angles(&[candidate], &predicted.kernel);
    Ok(angles[0])
}

/// Ratios `kappa(v) = v^H L v / Q(v)` over the supplied directions, with
/// `Q(v)` the flatness defect computed from the report's first-derivative
/// data. Directions whose defect sits at the numerical floor are excluded;
/// statistics need at least two survivors.
pub fn theta_proportionality(
    report: &LeviReport,
    directions: &[DVector<Complex64>],
) -> Result<ThetaStats, LeviError> {
    if report.genus != 2 {
        return Err(LeviError::ExploratoryChart {
            genus: report.genus,
        });
    }
    let l = report.levi_matrix();
    let map = report.dtau_u_matrix();
    let g = report.genus;
    let im_tau = DMatrix::from_fn(g, g, |i, k| report.base_tau[i][k].im);
    let chol = im_tau
        .cholesky()
        .ok_or(EnergyError::SingularImTau)
        .map_err(LeviError::Energy)?;

    let mut raw: Vec<(f64, f64)> = Vec::with_capacity(directions.len());
    for v in directions {
        let num = v.dotc(&(&l * v)).re;
        let w = &map * v;
        let real = DVector::from_fn(g, |i, _| w[i].re);
        let imag = DVector::from_fn(g, |i, _| w[i].im);
        let q = real.dot(&chol.solve(&real)) + imag.dot(&chol.solve(&imag));
        raw.push((num, q));
    }
    let q_max = raw.iter().map(|(_, q)| *q).fold(0.0f64, f64::max);
    let q_floor = 1e-6 * q_max;
    let kappas: Vec<f64> = raw
        .iter()
        .filter(|(_, q)| *q > q_floor)
        .map(|(num, q)| num / q)
        .collect();
    let excluded = raw.len() - kappas.len();
    if kappas.len() < 2 {
        return Err(LeviError::DegenerateDirection);
    }
    let mean = kappas.iter().sum::<f64>() / kappas.len() as f64;
    let max = kappas.iter().fold(f64::NEG_INFINITY, |a, &b| a.max(b));
    let min = kappas.iter().fold(f64::INFINITY, |a, &b| a.min(b));
    let rel_spread = if mean == 0.0 {
        f64::INFINITY
    } else {
        (max - min) / mean.abs()
    };
    Ok(ThetaStats {
        kappas,
        mean,
        rel_spread,
        excluded,
        q_floor,
    })
}
