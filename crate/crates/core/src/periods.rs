//! Numerical period matrices and the certified `tau` of a curve.
//!
//! For a chain cycle `c_j` around the consecutive spine pair
//! `(z_j, z_{j+1})`, collapsing the loop onto the segment gives
//! `∮_{c_j} P dx/y = 2 ∫_{S_j} P dx / Y_j` with `Y_j` a coherent branch of
//! `y`. Substituting `x = m + w sin(theta)` (`m` the midpoint, `w` the half
//! difference) turns `(x - z_j)(x - z_{j+1})` into `-w^2 cos^2(theta)`, so
//! with `r_j = f / ((x - z_j)(x - z_{j+1}))` and `rho_j` a continued square
//! root of `r_j` along the segment,
//!
//! ```text
//! ∮_{c_j} P dx/y = 2 (-i) sigma_j ∫_{-pi/2}^{pi/2} P(x(theta)) / rho_j(theta) dtheta.
//! ```
//!
//! The cosine factors cancel, removing the endpoint singularities; the
//! integrand is analytic, so Gauss-Legendre with node doubling converges
//! geometrically. `rho_j` is seeded with the principal root at the midpoint
//! and continued outward by nearest-branch stepping.
//!
//! The per-segment seeds are made globally coherent by the signs `sigma_j`:
//! `y` is numerically continued from midpoint to midpoint around the shared
//! branch point, always detouring on the left of the direction of travel.
//! Writing `y = G(x) sqrt(x - q)` near the shared point `q` keeps the
//! stepped factor `G` away from zero; the half-winding of `sqrt(x - q)` is
//! accumulated exactly.
//!
//! Everything downstream leans on the certificates: the Riemann bilinear
//! residual, symmetry of `tau`, and positive-definiteness of `Im tau`
//! (which also resolves the global orientation of the `B`-words — a wrong
//! global handedness shows up as `Im tau` negative-definite and is repaired
//! by `tau -> -tau`).

use crate::curve::HyperellipticCurve;
use crate::exact::Poly;
use crate::homology::Homology;
use nalgebra::DMatrix;
use num_complex::Complex64;
use std::sync::{Arc, Mutex, OnceLock};

/// Relative tolerance on `max|tau - tau^T|`.
pub const TOL_TAU_SYMMETRY: f64 = 1e-8;
/// Relative tolerance on the Riemann bilinear residual.
pub const TOL_BILINEAR: f64 = 1e-8;
/// Default relative tolerance for the adaptive quadrature.
pub const TOL_QUADRATURE_REL: f64 = 1e-12;

const QUAD_START_NODES: usize = 32;

#[derive(Debug, thiserror::Error)]
pub enum PeriodError {
    #[error("segment {segment}: quadrature did not converge at {nodes} nodes (residual {residual:.3e})")]
    QuadratureNonConvergent {
        segment: usize,
        nodes: usize,
        residual: f64,
    },
    #[error("period certification failed: {0}")]
    CertificationFailed(String),
}

#[derive(Clone, Debug)]
pub struct PeriodOptions {
    pub rel_tol: f64,
    pub max_nodes: usize,
}

impl Default for PeriodOptions {
    fn default() -> Self {
        Self {
            rel_tol: TOL_QUADRATURE_REL,
            max_nodes: 8192,
        }
    }
}

/// Periods of the one-form basis together with the certified `tau`.
#[derive(Clone, Debug)]
pub struct PeriodData {
    pub homology: Homology,
    /// `chain_periods[j][i]` = integral of `x^i dx/y` over chain `c_j`
    pub chain_periods: Vec<Vec<Complex64>>,
    /// rows = forms, columns = cycles
    pub pi_a: DMatrix<Complex64>,
    pub pi_b: DMatrix<Complex64>,
    /// symmetrized normalized period matrix, `Im tau` positive definite
    pub tau: DMatrix<Complex64>,
    /// the `B`-words were globally negated to land in the Siegel space
    pub b_flipped: bool,
    /// relative asymmetry of `tau` before symmetrization
    pub tau_asymmetry: f64,
    /// relative Riemann bilinear residual of the raw periods
    pub bilinear_residual: f64,
    pub max_nodes_used: usize,
}

impl PeriodData {
    /// The `g x 2g` block matrix `(Pi_A | Pi_B)`: columns are the periods of
    /// the cycle basis `A_0..A_{g-1}, B_0..B_{g-1}`.
    pub fn full_periods(&self) -> DMatrix<Complex64> {
        let g = self.pi_a.nrows();
        DMatrix::from_fn(g, 2 * g, |i, k| {
            if k < g {
                self.pi_a[(i, k)]
            } else {
                self.pi_b[(i, k - g)]
            }
        })
    }
}

/// Express the cycle basis behind `m_new` in terms of the one behind
/// `m_old`, given that both `g x 2g` full period matrices pair the *same*
/// one-form basis against cycle bases of the same curve: returns the integer
/// matrix `V` with `m_old * V = m_new`, provided it exists (entrywise within
/// `tol` of integers) and preserves the symplectic form. Any failure returns
/// `None`.
///
/// This is the invariance certificate for coordinate changes: transporting
/// periods of a transformed curve back through the one-form substitution
/// must land on an integral symplectic change of homology basis.
pub fn lattice_transfer(
    m_old: &DMatrix<Complex64>,
    m_new: &DMatrix<Complex64>,
    tol: f64,
) -> Option<DMatrix<i64>> {
    let g = m_old.nrows();
    if m_old.ncols() != 2 * g || m_new.nrows() != g || m_new.ncols() != 2 * g {
        return None;
    }
    let stack = |m: &DMatrix<Complex64>| {
        DMatrix::from_fn(2 * g, 2 * g, |i, k| {
            if i < g {
                m[(i, k)].re
            } else {
                m[(i - g, k)].im
            }
        })
    };
    let solved = stack(m_old).lu().solve(&stack(m_new))?;
    let mut v = DMatrix::<i64>::zeros(2 * g, 2 * g);
    for i in 0..2 * g {
        for k in 0..2 * g {
            let x = solved[(i, k)];
            let r = x.round();
            if (x - r).abs() > tol || r.abs() > 1e15 {
                return None;
            }
            v[(i, k)] = r as i64;
        }
    }
    // V^T J V = J for J the intersection Gram of (A | B)
    let j_at = |i: usize, k: usize| -> i64 {
        if k == i + g {
            1
        } else if i == k + g {
            -1
        } else {
            0
        }
    };
    for r in 0..2 * g {
        for c in 0..2 * g {
            let mut acc = 0i64;
            for s in 0..2 * g {
                for t in 0..2 * g {
                    acc += v[(s, r)] * j_at(s, t) * v[(t, c)];
                }
            }
            if acc != j_at(r, c) {
                return None;
            }
        }
    }
    Some(v)
}

pub fn period_data(
    curve: &HyperellipticCurve,
    opts: &PeriodOptions,
) -> Result<PeriodData, PeriodError> {
    let homology = Homology::new(curve);
    period_data_with_homology(curve, homology, opts)
}

/// Compute periods reusing a fixed spine (finite-difference stencils must
/// not let the spine order jump between evaluations).
pub fn period_data_with_homology(
    curve: &HyperellipticCurve,
    homology: Homology,
    opts: &PeriodOptions,
) -> Result<PeriodData, PeriodError> {
    let g = curve.genus();
    let numerators: Vec<Poly> = (0..g)
        .map(|i| Poly::monomial(i, crate::exact::GaussianRational::from_int(1)))
        .collect();
    let chains = chain_periods(curve, &homology, &numerators, opts)?;
    assemble(curve, homology, chains.0, chains.1)
}

/// Chain-cycle periods of arbitrary polynomial numerators `P (dx) / y`.
/// Returns (periods, max nodes used).
pub fn chain_periods(
    curve: &HyperellipticCurve,
    homology: &Homology,
    numerators: &[Poly],
    opts: &PeriodOptions,
) -> Result<(Vec<Vec<Complex64>>, usize), PeriodError> {
    let pts: Vec<Complex64> = homology
        .spine_points(curve)
        .iter()
        .map(|p| p.to_c64())
        .collect();
    let n_seg = pts.len() - 1;
    let sigmas = coherence_signs(&pts)?;
    let mut periods = Vec::with_capacity(n_seg);
    let mut max_nodes = 0;
    for j in 0..n_seg {
        let (vals, nodes) = segment_integrals(&pts, j, numerators, opts)?;
        max_nodes = max_nodes.max(nodes);
        let factor = Complex64::new(0.0, -2.0) * sigmas[j];
        periods.push(vals.into_iter().map(|v| factor * v).collect());
    }
    Ok((periods, max_nodes))
}

fn assemble(
    curve: &HyperellipticCurve,
    homology: Homology,
    chain_periods: Vec<Vec<Complex64>>,
    max_nodes_used: usize,
) -> Result<PeriodData, PeriodError> {
    let g = curve.genus();
    let word_periods = |words: &[Vec<i64>]| -> DMatrix<Complex64> {
        DMatrix::from_fn(g, words.len(), |i, k| {
            words[k]
                .iter()
                .enumerate()
                .map(|(j, &c)| chain_periods[j][i] * c as f64)
                .sum()
        })
    };
    let pi_a = word_periods(&homology.a_words);
    let mut pi_b = word_periods(&homology.b_words);

    let scale_a = pi_a.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let scale_b = pi_b.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let bilinear = &pi_a * pi_b.transpose() - &pi_b * pi_a.transpose();
    let bilinear_residual =
        bilinear.iter().map(|z| z.norm()).fold(0.0, f64::max) / (scale_a * scale_b).max(1e-300);
    if bilinear_residual > TOL_BILINEAR {
        return Err(PeriodError::CertificationFailed(format!(
            "Riemann bilinear residual {bilinear_residual:.3e} exceeds {TOL_BILINEAR:.1e}"
        )));
    }

    let lu = pi_a.clone().lu();
    let Some(mut tau) = lu.solve(&pi_b) else {
        return Err(PeriodError::CertificationFailed(
            "A-period matrix is numerically singular".into(),
        ));
    };
    let tau_scale = tau.iter().map(|z| z.norm()).fold(0.0, f64::max).max(1.0);
    let tau_asymmetry = (&tau - tau.transpose())
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max)
        / tau_scale;
    if tau_asymmetry > TOL_TAU_SYMMETRY {
        return Err(PeriodError::CertificationFailed(format!(
            "tau asymmetry {tau_asymmetry:.3e} exceeds {TOL_TAU_SYMMETRY:.1e}"
        )));
    }
    tau = (&tau + tau.transpose()) * Complex64::new(0.5, 0.0);

    let im = DMatrix::from_fn(g, g, |i, j| tau[(i, j)].im);
    let eig = im.symmetric_eigen().eigenvalues;
    let b_flipped = if eig.iter().all(|&e| e > 0.0) {
        false
    } else if eig.iter().all(|&e| e < 0.0) {
        tau = -tau;
        pi_b = -pi_b;
        true
    } else {
        return Err(PeriodError::CertificationFailed(format!(
            "Im tau is indefinite (eigenvalues {:?})",
            eig.as_slice()
        )));
    };

    Ok(PeriodData {
        homology,
        chain_periods,
        pi_a,
        pi_b,
        tau,
        b_flipped,
        tau_asymmetry,
        bilinear_residual,
        max_nodes_used,
    })
}

// ---------------------------------------------------------------------------
// per-segment quadrature
// ---------------------------------------------------------------------------

/// `prod_{l != j, j+1} (x - pts[l])`, the curve polynomial with the two
/// segment endpoints factored out; evaluated as a product so the endpoint
/// zeros never enter numerically.
fn reduced_f(pts: &[Complex64], j: usize, x: Complex64) -> Complex64 {
    let mut acc = Complex64::new(1.0, 0.0);
    for (l, p) in pts.iter().enumerate() {
        if l != j && l != j + 1 {
            acc *= x - p;
        }
    }
    acc
}

/// Continue `sqrt(r_j)` along the segment from the principal midpoint seed:
/// values at the sorted `theta` nodes.
fn continued_rho(pts: &[Complex64], j: usize, thetas: &[f64], xs: &[Complex64]) -> Vec<Complex64> {
    let m = (pts[j] + pts[j + 1]) * 0.5;
    let seed = reduced_f(pts, j, m).sqrt();
    let mut out = vec![Complex64::new(0.0, 0.0); xs.len()];
    let first_plus = thetas.partition_point(|&t| t < 0.0);
    let mut prev = seed;
    for k in first_plus..xs.len() {
        prev = nearest_branch(reduced_f(pts, j, xs[k]).sqrt(), prev);
        out[k] = prev;
    }
    prev = seed;
    for k in (0..first_plus).rev() {
        prev = nearest_branch(reduced_f(pts, j, xs[k]).sqrt(), prev);
        out[k] = prev;
    }
    out
}

fn nearest_branch(principal: Complex64, reference: Complex64) -> Complex64 {
    if (principal - reference).norm_sqr() <= (principal + reference).norm_sqr() {
        principal
    } else {
        -principal
    }
}

/// Adaptive Gauss-Legendre values of `∫ P_i(x(theta)) / rho(theta) dtheta`
/// for every numerator, with node doubling until the whole vector settles.
fn segment_integrals(
    pts: &[Complex64],
    j: usize,
    numerators: &[Poly],
    opts: &PeriodOptions,
) -> Result<(Vec<Complex64>, usize), PeriodError> {
    let m = (pts[j] + pts[j + 1]) * 0.5;
    let w = (pts[j + 1] - pts[j]) * 0.5;
    let level = |n: usize| -> Vec<Complex64> {
        let rule = gauss_legendre(n);
        let thetas: Vec<f64> = rule.0.iter().map(|t| t * std::f64::consts::FRAC_PI_2).collect();
        let xs: Vec<Complex64> = thetas.iter().map(|t| m + w * t.sin()).collect();
        let rho = continued_rho(pts, j, &thetas, &xs);
        numerators
            .iter()
            .map(|p| {
                let mut acc = Complex64::new(0.0, 0.0);
                for k in 0..xs.len() {
                    acc += rule.1[k] * p.eval_c64(xs[k]) / rho[k];
                }
                acc * std::f64::consts::FRAC_PI_2
            })
            .collect()
    };
    let mut n = QUAD_START_NODES;
    let mut prev = level(n);
    loop {
        let next_n = n * 2;
        if next_n > opts.max_nodes {
            return Err(PeriodError::QuadratureNonConvergent {
                segment: j,
                nodes: n,
                residual: f64::NAN,
            });
        }
        let cur = level(next_n);
        let scale = cur.iter().map(|z| z.norm()).fold(0.0, f64::max).max(1.0);
        let residual = prev
            .iter()
            .zip(&cur)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
            / scale;
        if residual <= opts.rel_tol {
            return Ok((cur, next_n));
        }
        if next_n * 2 > opts.max_nodes {
            return Err(PeriodError::QuadratureNonConvergent {
                segment: j,
                nodes: next_n,
                residual,
            });
        }
        prev = cur;
        n = next_n;
    }
}

// ---------------------------------------------------------------------------
// branch coherence between segments
// ---------------------------------------------------------------------------

/// Per-segment signs making the midpoint-seeded branches into one coherent
/// branch of `y` along the left-detour continuation. Exposed so oracles can
/// relate single-segment contour integrals to the coherent chain periods.
pub fn coherence_signs(pts: &[Complex64]) -> Result<Vec<Complex64>, PeriodError> {
    let n_seg = pts.len() - 1;
    let mut sigmas = vec![Complex64::new(1.0, 0.0); n_seg];
    for j in 0..n_seg - 1 {
        let t64 = transport_sign(pts, j, 64)?;
        let t128 = transport_sign(pts, j, 128)?;
        if (t64 - t128).abs() > 0.5 {
            return Err(PeriodError::CertificationFailed(format!(
                "branch transport unstable at junction {j}"
            )));
        }
        sigmas[j + 1] = sigmas[j] * t64;
    }
    Ok(sigmas)
}

/// The seeded `y`-branch of a segment at its midpoint.
fn midpoint_y(pts: &[Complex64], j: usize) -> Complex64 {
    let m = (pts[j] + pts[j + 1]) * 0.5;
    let w = (pts[j + 1] - pts[j]) * 0.5;
    Complex64::new(0.0, 1.0) * w * reduced_f(pts, j, m).sqrt()
}

/// Relative sign between the seeds of segments `j` and `j+1`: continue `y`
/// from midpoint to midpoint around the shared point `q = pts[j+1]`,
/// passing `q` on the left of the direction of travel. Returns `+1.0` or
/// `-1.0`.
fn transport_sign(pts: &[Complex64], j: usize, steps: usize) -> Result<f64, PeriodError> {
    let q = pts[j + 1];
    let m0 = (pts[j] + q) * 0.5;
    let m1 = (q + pts[j + 2]) * 0.5;
    let mut eps = f64::min((m0 - q).norm(), (m1 - q).norm());
    for (l, p) in pts.iter().enumerate() {
        if l != j + 1 {
            eps = eps.min((p - q).norm() * 0.5);
        }
    }
    eps *= 0.5;

    let u_in = (m0 - q) / (m0 - q).norm();
    let u_out = (m1 - q) / (m1 - q).norm();
    let a_in = u_in.arg();
    // Passing the corner on its left means the argument of `z - q` changes
    // by exactly `arg(d_out/d_in) - pi` between the radial entry and exit
    // (the winding of the left parallel curve of the polyline), so the arc
    // always runs clockwise by less than a full turn.
    let dir_in = (q - m0) / (q - m0).norm();
    let dir_out = (m1 - q) / (m1 - q).norm();
    let sweep = (dir_out / dir_in).arg() - std::f64::consts::PI;

    // path: m0 -> q + eps*u_in, arc, q + eps*u_out -> m1
    let mut path: Vec<Complex64> = Vec::with_capacity(3 * steps + 3);
    let p_in = q + u_in * eps;
    let p_out = q + u_out * eps;
    for k in 0..=steps {
        let t = k as f64 / steps as f64;
        path.push(m0 + (p_in - m0) * t);
    }
    for k in 1..=steps {
        let t = k as f64 / steps as f64;
        let ang = a_in + sweep * t;
        path.push(q + Complex64::from_polar(eps, ang));
    }
    for k in 1..=steps {
        let t = k as f64 / steps as f64;
        path.push(p_out + (m1 - p_out) * t);
    }

    // y = G(x) psi(x), psi = sqrt(x - q) tracked by exact argument
    // accumulation, G stepped (it stays away from zero on the whole path)
    let f_over = |z: Complex64| -> Complex64 {
        let mut acc = Complex64::new(1.0, 0.0);
        for (l, p) in pts.iter().enumerate() {
            if l != j + 1 {
                acc *= z - p;
            }
        }
        acc
    };
    let mut psi_arg = (path[0] - q).arg();
    let mut psi = Complex64::from_polar((path[0] - q).norm().sqrt(), psi_arg / 2.0);
    let mut gval = midpoint_y(pts, j) / psi;
    for k in 1..path.len() {
        let z = path[k];
        psi_arg += ((z - q) / (path[k - 1] - q)).arg();
        psi = Complex64::from_polar((z - q).norm().sqrt(), psi_arg / 2.0);
        gval = nearest_branch(f_over(z).sqrt(), gval);
    }
    let transported = gval * psi;
    let target = midpoint_y(pts, j + 1);
    let ratio = transported / target;
    if (ratio - 1.0).norm() < 0.3 {
        Ok(1.0)
    } else if (ratio + 1.0).norm() < 0.3 {
        Ok(-1.0)
    } else {
        Err(PeriodError::CertificationFailed(format!(
            "branch transport at junction {j} landed at ratio {ratio} (expected near ±1)"
        )))
    }
}

// ---------------------------------------------------------------------------
// Gauss-Legendre rules
// ---------------------------------------------------------------------------

/// Nodes (ascending) and weights on `[-1, 1]`, cached per size.
pub fn gauss_legendre(n: usize) -> Arc<(Vec<f64>, Vec<f64>)> {
    static CACHE: OnceLock<Mutex<std::collections::BTreeMap<usize, Arc<(Vec<f64>, Vec<f64>)>>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(std::collections::BTreeMap::new()));
    if let Some(rule) = cache.lock().unwrap().get(&n) {
        return rule.clone();
    }
    let rule = Arc::new(compute_gauss_legendre(n));
    cache.lock().unwrap().insert(n, rule.clone());
    rule
}

fn compute_gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for k in 0..n {
        // Tricomi-style initial guess, then Newton on the recurrence
        let mut x = (std::f64::consts::PI * (k as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre_and_derivative(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre_and_derivative(n, x);
        nodes[n - 1 - k] = x;
        weights[n - 1 - k] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    (nodes, weights)
}

fn legendre_and_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for j in 2..=n {
        let jf = j as f64;
        let p2 = ((2.0 * jf - 1.0) * x * p1 - (jf - 1.0) * p0) / jf;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::GaussianRational;

    fn gi(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    #[test]
    fn gauss_legendre_integrates_polynomials_exactly() {
        let rule = gauss_legendre(8);
        // exact for degree <= 15: try x^14 -> 2/15
        let val: f64 = rule
            .0
            .iter()
            .zip(&rule.1)
            .map(|(x, w)| w * x.powi(14))
            .sum();
        assert!((val - 2.0 / 15.0).abs() < 1e-14);
        // and an analytic integrand: cos on [-1,1] -> 2 sin(1)
        let val: f64 = rule.0.iter().zip(&rule.1).map(|(x, w)| w * x.cos()).sum();
        assert!((val - 2.0 * 1.0f64.sin()).abs() < 1e-14);
        // weights sum to 2
        let total: f64 = rule.1.iter().sum();
        assert!((total - 2.0).abs() < 1e-13);
    }

    #[test]
    fn real_branch_points_give_purely_imaginary_tau() {
        // classical structure in this frame: A-periods imaginary, B-periods
        // real, tau purely imaginary
        let curve = HyperellipticCurve::new([-5, -3, -1, 1, 3, 5].map(gi).to_vec()).unwrap();
        let pd = period_data(&curve, &PeriodOptions::default()).unwrap();
        for z in pd.pi_a.iter() {
            assert!(z.re.abs() < 1e-9 * z.norm().max(1.0), "A-period {z}");
        }
        for z in pd.pi_b.iter() {
            assert!(z.im.abs() < 1e-9 * z.norm().max(1.0), "B-period {z}");
        }
        for z in pd.tau.iter() {
            assert!(z.re.abs() < 1e-9, "tau entry {z}");
        }
    }

    #[test]
    fn certificates_hold_for_complex_branch_points() {
        let pts = vec![
            GaussianRational::from_parts((0, 1), (0, 1)),
            GaussianRational::from_parts((2, 1), (1, 1)),
            GaussianRational::from_parts((3, 1), (-1, 1)),
            GaussianRational::from_parts((5, 1), (2, 1)),
            GaussianRational::from_parts((7, 1), (-1, 2)),
            GaussianRational::from_parts((9, 1), (1, 1)),
        ];
        let curve = HyperellipticCurve::new(pts).unwrap();
        let pd = period_data(&curve, &PeriodOptions::default()).unwrap();
        assert!(pd.tau_asymmetry < TOL_TAU_SYMMETRY);
        assert!(pd.bilinear_residual < TOL_BILINEAR);
        let g = curve.genus();
        let im = DMatrix::from_fn(g, g, |i, j| pd.tau[(i, j)].im);
        assert!(im.symmetric_eigen().eigenvalues.iter().all(|&e| e > 0.0));
    }

    #[test]
    fn lattice_transfer_recovers_a_word_shear() {
        let curve = HyperellipticCurve::new([-5, -3, -1, 1, 3, 5].map(gi).to_vec()).unwrap();
        let pd = period_data(&curve, &PeriodOptions::default()).unwrap();
        // replace B_0 by B_0 + A_0: still a symplectic basis
        let mut sheared = pd.homology.clone();
        let a0 = sheared.a_words[0].clone();
        for (b, a) in sheared.b_words[0].iter_mut().zip(&a0) {
            *b += a;
        }
        let pd2 =
            period_data_with_homology(&curve, sheared, &PeriodOptions::default()).unwrap();
        let v = lattice_transfer(&pd.full_periods(), &pd2.full_periods(), 1e-9)
            .expect("shear is an integral symplectic transfer");
        let mut expected = DMatrix::<i64>::identity(4, 4);
        expected[(0, 2)] = 1;
        assert_eq!(v, expected);
        // a genuinely different curve is not an integral transfer
        let other = HyperellipticCurve::new([-7, -2, 0, 1, 4, 6].map(gi).to_vec()).unwrap();
        let pd3 = period_data(&other, &PeriodOptions::default()).unwrap();
        assert!(lattice_transfer(&pd.full_periods(), &pd3.full_periods(), 1e-9).is_none());
    }

    #[test]
    fn genus_three_and_four_certify() {
        for g in [3usize, 4] {
            let pts: Vec<GaussianRational> = (0..2 * g as i64 + 2).map(gi).collect();
            let curve = HyperellipticCurve::new(pts).unwrap();
            let pd = period_data(&curve, &PeriodOptions::default()).unwrap();
            assert_eq!(pd.tau.nrows(), g);
            assert!(pd.tau_asymmetry < TOL_TAU_SYMMETRY);
        }
    }
}

