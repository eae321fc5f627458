//! Seeded verification sweeps.
//!
//! Each sweep drives one headline claim of the library across a randomized
//! family of inputs and returns a machine-readable outcome: the neutral
//! claim tag, the case count, and one diagnostic string per failed case.
//! The sweeps are deterministic functions of their seed, so a report is
//! reproducible byte for byte from its configuration. Wall-clock time is
//! kept out of the serialized form for the same reason.
//!
//! The same drivers back the acceptance test target and the command-line
//! `sweep` subcommand: what ships is exactly what is gated.

use crate::curve::{mobius_transform, HyperellipticCurve, MeroForm, MobiusMap};
use crate::divisor::{h0, Divisor, Place};
use crate::energy::{energy, kernel_annihilator, AbelianCharacter};
use crate::exact::GaussianRational;
use crate::higgs::{
    canonical_omega, canonical_psi, construct_even, construct_odd, kernel_dimension,
    stability_certificate, Stability,
};
use crate::levi::{levi_form, theta_proportionality, LeviOptions};
use crate::periods::{lattice_transfer, period_data, PeriodOptions};
use crate::sampling::{
    random_affine_place, random_character, random_curve, random_divisor, random_directions,
    random_n2_point, random_one_form, random_pinned_curve,
};
use crate::spectral::{hitchin_map, smoothness_n2, SmoothnessVerdict, SpectralError};
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Outcome of one sweep: claim tag, verdict, and per-failure diagnostics.
/// Serialization omits timing so identical seeds give identical reports.
#[derive(Clone, Debug, Serialize)]
pub struct SweepOutcome {
    /// neutral tag of the claim the sweep exercises
    pub claim: String,
    pub seed: u64,
    pub pass: bool,
    pub cases: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
    #[serde(skip)]
    pub elapsed_seconds: f64,
}

impl SweepOutcome {
    fn finish(
        claim: &str,
        seed: u64,
        cases: usize,
        failures: Vec<String>,
        notes: Vec<String>,
        started: std::time::Instant,
    ) -> Self {
        SweepOutcome {
            claim: claim.to_string(),
            seed,
            pass: failures.is_empty(),
            cases,
            failures,
            notes,
            elapsed_seconds: started.elapsed().as_secs_f64(),
        }
    }
}

/// Note attached wherever a rank-two even chain is reported: the blanket
/// stability claim for even chain lengths fails at length two.
pub const EVEN_TWO_NOTE: &str = "a chain of length two has top exponent 0, so its top line is an \
     invariant subbundle of degree 0: not stable, witnessed by the degree-0 tail certificate; \
     the blanket stability statement for even chain lengths does not extend down to length two";

/// Note attached to the one-form counting check: the exact solver gives
/// `g - 1`, not the sometimes-quoted `g - 2`.
pub const ONE_FORM_VANISHING_NOTE: &str = "h0(K - p) = g - 1 exactly at every sampled base \
     point (one linear vanishing condition on a g-dimensional space); a count of g - 2 is \
     sometimes quoted for this space and disagrees by one — the exact solver is authoritative \
     here";

// ---------------------------------------------------------------------------
// 1. exact annihilator dimension
// ---------------------------------------------------------------------------

/// For nonzero holomorphic one-forms on random curves of genus 2..=6, the
/// annihilator of the multiplication image inside the quadratic
/// differentials has dimension exactly `2g - 3`.
pub fn annihilator_dimension_sweep(seed: u64) -> SweepOutcome {
    let started = std::time::Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let mut cases = 0;
    for g in 2..=6usize {
        for trial in 0..50 {
            let curve = random_curve(&mut rng, g);
            let phi = random_one_form(&mut rng, &curve);
            let ann = kernel_annihilator(&curve, &phi);
            cases += 1;
            if ann.dim != 2 * g - 3 {
                failures.push(format!(
                    "genus {g} trial {trial}: annihilator dimension {} != {}",
                    ann.dim,
                    2 * g - 3
                ));
            }
            if ann.image_dim != g {
                failures.push(format!(
                    "genus {g} trial {trial}: multiplication image dimension {} != {g}",
                    ann.image_dim
                ));
            }
        }
    }
    SweepOutcome::finish("abelian-kernel-dimension", seed, cases, failures, vec![], started)
}

// ---------------------------------------------------------------------------
// 2. odd graded chains
// ---------------------------------------------------------------------------

fn sample_base_places(
    rng: &mut ChaCha8Rng,
    curve: &HyperellipticCurve,
    count: usize,
) -> Vec<Place> {
    let branch = curve.branch_points();
    let mut places = Vec::with_capacity(count);
    for i in 0..count {
        places.push(match i % 7 {
            5 => Place::Branch(branch[rng.gen_range(0..branch.len())].clone()),
            6 => {
                if rng.gen_bool(0.5) {
                    Place::InfinityPlus
                } else {
                    Place::InfinityMinus
                }
            }
            _ => random_affine_place(rng, curve),
        });
    }
    places
}

/// Odd chains of ranks 3, 5, 7 at genus 4 and 5: stable, flat-direction
/// count exactly `2g - 3`, with the one-form product space of dimension `g`
/// and `h0(K + p) = g`.
pub fn odd_chain_sweep(seed: u64) -> SweepOutcome {
    let started = std::time::Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let mut cases = 0;
    for g in [4usize, 5] {
        let curve = random_curve(&mut rng, g);
        let places = sample_base_places(&mut rng, &curve, 20);
        for (pi, p) in places.iter().enumerate() {
            let label = format!("genus {g} base point {pi}");
            let psi = match canonical_psi(&curve, p) {
                Ok(s) => s,
                Err(e) => {
                    failures.push(format!("{label}: psi construction failed: {e}"));
                    continue;
                }
            };
            let kp = Divisor::canonical(&curve).add(&Divisor::of_place(p.clone(), 1));
            match h0(&curve, &kp) {
                Ok(d) if d == g => {}
                Ok(d) => failures.push(format!("{label}: h0(K + p) = {d} != {g}")),
                Err(e) => failures.push(format!("{label}: h0(K + p) failed: {e}")),
            }
            for n in [3usize, 5, 7] {
                cases += 1;
                let bundle = match construct_odd(&curve, p, n, &psi) {
                    Ok(b) => b,
                    Err(e) => {
                        failures.push(format!("{label} n={n}: construction failed: {e}"));
                        continue;
                    }
                };
                if stability_certificate(&bundle) != Stability::Stable {
                    failures.push(format!("{label} n={n}: not certified stable"));
                }
                match kernel_dimension(&curve, &bundle) {
                    Ok(count) => {
                        if count.dim != 2 * g - 3 {
                            failures.push(format!(
                                "{label} n={n}: kernel {} != {}",
                                count.dim,
                                2 * g - 3
                            ));
                        }
                        if count.product_dim != g {
                            failures.push(format!(
                                "{label} n={n}: product span {} != {g}",
                                count.product_dim
                            ));
                        }
                    }
                    Err(e) => failures.push(format!("{label} n={n}: kernel count failed: {e}")),
                }
            }
        }
    }
    SweepOutcome::finish("graded-odd-construction", seed, cases, failures, vec![], started)
}

// ---------------------------------------------------------------------------
// 3. even graded chains
// ---------------------------------------------------------------------------

/// Even chains: ranks 4 and 6 are stable with flat-direction count at least
/// `g - 3` (exact value reported); rank 2 is never stable — its certificate
/// is the degree-0 tail, reported with an explicit note.
pub fn even_chain_sweep(seed: u64) -> SweepOutcome {
    let started = std::time::Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let mut notes = vec![EVEN_TWO_NOTE.to_string()];
    let mut cases = 0;
    for g in [4usize, 5] {
        let curve = random_curve(&mut rng, g);
        let omega = canonical_omega(&curve);
        let places = sample_base_places(&mut rng, &curve, 10);
        for (pi, p) in places.iter().enumerate() {
            let label = format!("genus {g} base point {pi}");
            let psi = match canonical_psi(&curve, p) {
                Ok(s) => s,
                Err(e) => {
                    failures.push(format!("{label}: psi construction failed: {e}"));
                    continue;
                }
            };
            for n in [4usize, 6] {
                cases += 1;
                let bundle = match construct_even(&curve, p, n, &psi, &omega) {
                    Ok(b) => b,
                    Err(e) => {
                        failures.push(format!("{label} n={n}: construction failed: {e}"));
                        continue;
                    }
                };
                if stability_certificate(&bundle) != Stability::Stable {
                    failures.push(format!("{label} n={n}: not certified stable"));
                }
                match kernel_dimension(&curve, &bundle) {
                    Ok(count) => {
                        if count.dim < g - 3 {
                            failures.push(format!(
                                "{label} n={n}: kernel {} below the floor {}",
                                count.dim,
                                g - 3
                            ));
                        } else {
                            notes.push(format!(
                                "{label} n={n}: kernel dimension {} (floor {})",
                                count.dim,
                                g - 3
                            ));
                        }
                    }
                    Err(e) => failures.push(format!("{label} n={n}: kernel count failed: {e}")),
                }
            }
            // rank two: the construction goes through but is never stable
            cases += 1;
            match construct_even(&curve, p, 2, &psi, &omega) {
                Ok(bundle) => match stability_certificate(&bundle) {
                    Stability::NotStable {
                        tail_start,
                        tail_degree: 0,
                    } => {
                        notes.push(format!(
                            "{label} n=2: degree-0 tail at index {tail_start} (witness)"
                        ));
                    }
                    other => failures.push(format!(
                        "{label} n=2: expected a degree-0 tail witness, got {other:?}"
                    )),
                },
                Err(e) => failures.push(format!("{label} n=2: construction failed: {e}")),
            }
        }
    }
    SweepOutcome::finish("graded-even-construction", seed, cases, failures, notes, started)
}

// ---------------------------------------------------------------------------
// 4. nilpotent cone + generic smoothness
// ---------------------------------------------------------------------------

/// Every constructed chain maps to the Hitchin origin exactly; the origin
/// itself is rejected by the rank-2 smoothness test; and at least 95 of 100
/// seeded random rank-2 points are certified smooth.
pub fn nilpotent_cone_sweep(seed: u64) -> SweepOutcome {
    let started = std::time::Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let mut notes = Vec::new();
    let mut cases = 0;

    // chains land on the origin
    for g in [4usize, 5] {
        let curve = random_curve(&mut rng, g);
        let omega = canonical_omega(&curve);
        let places = sample_base_places(&mut rng, &curve, 3);
        for (pi, p) in places.iter().enumerate() {
            let psi = match canonical_psi(&curve, p) {
                Ok(s) => s,
                Err(e) => {
                    failures.push(format!("genus {g} place {pi}: psi failed: {e}"));
                    continue;
                }
            };
            let mut bundles = Vec::new();
            for n in [3usize, 5, 7] {
                bundles.push((n, construct_odd(&curve, p, n, &psi)));
            }
            for n in [2usize, 4, 6] {
                bundles.push((n, construct_even(&curve, p, n, &psi, &omega)));
            }
            for (n, bundle) in bundles {
                cases += 1;
                match bundle {
                    Ok(b) => {
                        if !hitchin_map(&curve, &b).is_origin() {
                            failures.push(format!(
                                "genus {g} place {pi} n={n}: characteristic coefficients nonzero"
                            ));
                        }
                    }
                    Err(e) => {
                        failures.push(format!("genus {g} place {pi} n={n}: construction: {e}"))
                    }
                }
            }
        }
    }

    // the origin is rejected
    cases += 1;
    let g2 = random_curve(&mut rng, 2);
    match smoothness_n2(&g2, &MeroForm::zero(1), &MeroForm::zero(2)) {
        Err(SpectralError::ZeroDiscriminant) => {}
        other => failures.push(format!(
            "zero point should be rejected as zero-discriminant, got {other:?}"
        )),
    }

    // random rank-2 points are generically smooth
    let mut smooth = 0usize;
    let total = 100usize;
    for trial in 0..total {
        let g = if trial % 2 == 0 { 2 } else { 3 };
        let curve = random_curve(&mut rng, g);
        let point = random_n2_point(&mut rng, &curve);
        let p1 = point.coefficients[0].form(&curve);
        let p2 = point.coefficients[1].form(&curve);
        cases += 1;
        match smoothness_n2(&curve, &p1, &p2) {
            Ok(SmoothnessVerdict::Smooth) => smooth += 1,
            Ok(SmoothnessVerdict::NotSmooth(reason)) => {
                notes.push(format!("trial {trial} genus {g}: not smooth ({reason})"));
            }
            Err(e) => failures.push(format!("trial {trial} genus {g}: verdict failed: {e}")),
        }
    }
    notes.push(format!("{smooth} of {total} random rank-2 points smooth"));
    if smooth * 100 < 95 * total {
        failures.push(format!(
            "only {smooth} of {total} random rank-2 points certified smooth (need 95%)"
        ));
    }
    SweepOutcome::finish(
        "nilpotent-cone-and-generic-smoothness",
        seed,
        cases,
        failures,
        notes,
        started,
    )
}

// ---------------------------------------------------------------------------
// 5. period engine soundness
// ---------------------------------------------------------------------------

fn tau_from_full(full: &DMatrix<Complex64>) -> Option<DMatrix<Complex64>> {
    let g = full.nrows();
    let pa = full.columns(0, g).into_owned();
    let pb = full.columns(g, g).into_owned();
    pa.lu().solve(&pb)
}

fn max_abs(m: &DMatrix<Complex64>) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

fn invariance_maps() -> Vec<MobiusMap> {
    let gq = |re: (i64, i64), im: (i64, i64)| {
        &GaussianRational::from_ratio(re.0, re.1)
            + &(&GaussianRational::from_ratio(im.0, im.1) * &GaussianRational::i())
    };
    vec![
        MobiusMap::shift(gq((1, 1), (1, 2))),
        MobiusMap::scaling(gq((2, 3), (-1, 3))),
        MobiusMap {
            a: GaussianRational::from_int(1),
            b: GaussianRational::from_int(-1),
            c: GaussianRational::from_int(1),
            d: GaussianRational::from_int(-10),
        },
        MobiusMap {
            a: GaussianRational::from_int(0),
            b: GaussianRational::from_int(2),
            c: GaussianRational::from_int(1),
            d: GaussianRational::from_int(7),
        },
    ]
}

/// Transport a character across the homology recombination `V` certified by
/// the lattice transfer: values on the new cycles are the `V`-combinations
/// of values on the old.
fn transport_character(chi: &AbelianCharacter, v: &DMatrix<i64>) -> AbelianCharacter {
    let g = chi.a.len();
    let c: Vec<f64> = chi.a.iter().chain(chi.b.iter()).copied().collect();
    let mut out = vec![0.0; 2 * g];
    for (k, o) in out.iter_mut().enumerate() {
        for (s, cs) in c.iter().enumerate() {
            *o += v[(s, k)] as f64 * cs;
        }
    }
    AbelianCharacter::new(out[..g].to_vec(), out[g..].to_vec())
}

/// Ten random curves at genus 2 and 3: certification residuals, invariance
/// of the period point and of the character energy under fractional-linear
/// coordinate changes (through the certified integral symplectic transfer),
/// and stability under quadrature refinement.
pub fn period_soundness_sweep(seed: u64) -> SweepOutcome {
    let started = std::time::Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let mut cases = 0;
    let maps = invariance_maps();
    let opts = PeriodOptions::default();

    for g in [2usize, 3] {
        for trial in 0..5 {
            cases += 1;
            let label = format!("genus {g} trial {trial}");
            let curve = random_curve(&mut rng, g);
            let chi = random_character(&mut rng, g);
            let pd = match period_data(&curve, &opts) {
                Ok(p) => p,
                Err(e) => {
                    failures.push(format!("{label}: period computation failed: {e}"));
                    continue;
                }
            };
            if pd.tau_asymmetry >= 1e-8 {
                failures.push(format!("{label}: tau asymmetry {}", pd.tau_asymmetry));
            }
            let im_min = {
                let im = DMatrix::from_fn(g, g, |i, k| {
                    Complex64::new((pd.tau[(i, k)].im + pd.tau[(k, i)].im) / 2.0, 0.0)
                });
                crate::numeric::hermitian_eigen(&im).0[0]
            };
            if im_min <= 0.0 {
                failures.push(format!("{label}: Im tau not positive (min {im_min:.3e})"));
            }

            // refinement: doubling the node budget must not move tau
            let tight = PeriodOptions {
                rel_tol: 1e-14,
                max_nodes: opts.max_nodes * 2,
            };
            match period_data(&curve, &tight) {
                Ok(pd2) => {
                    let drift = (0..g)
                        .flat_map(|i| (0..g).map(move |k| (i, k)))
                        .map(|(i, k)| (pd.tau[(i, k)] - pd2.tau[(i, k)]).norm())
                        .fold(0.0, f64::max);
                    let scale = max_abs(&pd.tau);
                    if drift >= 1e-10 * (1.0 + scale) {
                        failures.push(format!("{label}: refinement drift {drift:.3e}"));
                    }
                }
                Err(e) => failures.push(format!("{label}: refinement failed: {e}")),
            }

            // a coordinate change that keeps every branch point affine
            let map = maps
                .iter()
                .find(|m| curve.branch_points().iter().all(|b| m.apply(b).is_ok()))
                .expect("some candidate map avoids every branch point");
            let action = match mobius_transform(&curve, map) {
                Ok(a) => a,
                Err(e) => {
                    failures.push(format!("{label}: coordinate change failed: {e}"));
                    continue;
                }
            };
            let pd_new = match period_data(&action.curve, &opts) {
                Ok(p) => p,
                Err(e) => {
                    failures.push(format!("{label}: transformed periods failed: {e}"));
                    continue;
                }
            };
            // pull the new periods back through the one-form substitution
            let det = map.det().to_c64();
            let prod: Complex64 = curve
                .branch_points()
                .iter()
                .map(|l| (map.c.clone() * l.clone() + map.d.clone()).to_c64())
                .product();
            let kappa = det.powi(-(g as i32)) * prod.sqrt();
            let s_t = DMatrix::from_fn(g, g, |i, k| action.one_forms[k][i].to_c64());
            let adjusted = match s_t.lu().solve(&pd_new.full_periods()) {
                Some(m) => m / kappa,
                None => {
                    failures.push(format!("{label}: singular one-form substitution"));
                    continue;
                }
            };
            let Some(v) = lattice_transfer(&pd.full_periods(), &adjusted, 1e-6) else {
                failures.push(format!("{label}: no integral symplectic transfer"));
                continue;
            };
            // invariance of the period point: recombining the original
            // marking by V must reproduce the transformed tau
            let vc = DMatrix::from_fn(2 * g, 2 * g, |i, k| {
                Complex64::new(v[(i, k)] as f64, 0.0)
            });
            let recombined = pd.full_periods() * vc;
            match (tau_from_full(&recombined), tau_from_full(&pd_new.full_periods())) {
                (Some(t1), Some(t2)) => {
                    let diff = max_abs(&(&t1 - &t2));
                    if diff >= 1e-7 {
                        failures.push(format!("{label}: tau moved by {diff:.3e} under the map"));
                    }
                }
                _ => failures.push(format!("{label}: singular A-periods in comparison")),
            }
            // invariance of the character energy
            let chi_new = transport_character(&chi, &v);
            match (energy(&pd, &chi), energy(&pd_new, &chi_new)) {
                (Ok(e1), Ok(e2)) => {
                    if (e1 - e2).abs() >= 1e-7 * (1.0 + e1.abs()) {
                        failures.push(format!(
                            "{label}: energy moved from {e1} to {e2} under the map"
                        ));
                    }
                }
                (a, b) => failures.push(format!("{label}: energy failed: {a:?} vs {b:?}")),
            }
        }
    }
    SweepOutcome::finish("period-engine-soundness", seed, cases, failures, vec![], started)
}

// ---------------------------------------------------------------------------
// 6. Levi positivity and kernel identification
// ---------------------------------------------------------------------------

/// Twenty random genus-2 configurations with nonzero characters: the Levi
/// matrix is positive semidefinite within slack, has exactly one near-zero
/// eigenvalue, and that eigenvector matches the predicted flat direction.
pub fn levi_psd_sweep(seed: u64) -> SweepOutcome {
    let started = std::time::Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let opts = LeviOptions::default();
    let cases = 20;
    for trial in 0..cases {
        let label = format!("trial {trial}");
        let curve = random_pinned_curve(&mut rng, 2);
        let chi = random_character(&mut rng, 2);
        let report = match levi_form(&curve, &chi, &opts) {
            Ok(r) => r,
            Err(e) => {
                failures.push(format!("{label}: laboratory run failed: {e}"));
                continue;
            }
        };
        if report.min_eigenvalue < -opts.tol_psd * report.norm {
            failures.push(format!(
                "{label}: negative eigenvalue {} against norm {}",
                report.min_eigenvalue, report.norm
            ));
        }
        if report.near_zero_count != 1 {
            failures.push(format!(
                "{label}: {} near-zero eigenvalues (eigenvalues {:?})",
                report.near_zero_count, report.eigenvalues
            ));
        }
        match report.kernel_angle {
            Some(angle) if angle < 1e-2 => {}
            Some(angle) => failures.push(format!("{label}: kernel angle {angle}")),
            None => failures.push(format!("{label}: kernel comparison unavailable")),
        }
    }
    SweepOutcome::finish("levi-psd-and-kernel", seed, cases, failures, vec![], started)
}

// ---------------------------------------------------------------------------
// 7. Levi proportionality
// ---------------------------------------------------------------------------

/// Five random genus-2 configurations: the ratio of the measured form to
/// the first-derivative defect is a single positive constant across ten
/// random directions (relative spread below 1%).
pub fn proportionality_sweep(seed: u64) -> SweepOutcome {
    let started = std::time::Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let mut notes = Vec::new();
    let opts = LeviOptions::default();
    let cases = 5;
    for trial in 0..cases {
        let label = format!("trial {trial}");
        let curve = random_pinned_curve(&mut rng, 2);
        let chi = random_character(&mut rng, 2);
        let directions = random_directions(&mut rng, 3, 10);
        let report = match levi_form(&curve, &chi, &opts) {
            Ok(r) => r,
            Err(e) => {
                failures.push(format!("{label}: laboratory run failed: {e}"));
                continue;
            }
        };
        match theta_proportionality(&report, &directions) {
            Ok(stats) => {
                if stats.kappas.iter().any(|k| *k <= 0.0) {
                    failures.push(format!("{label}: non-positive ratio in {:?}", stats.kappas));
                }
                if stats.rel_spread >= 0.01 {
                    failures.push(format!(
                        "{label}: ratio spread {} over {:?}",
                        stats.rel_spread, stats.kappas
                    ));
                }
                notes.push(format!(
                    "{label}: constant {:.6} over {} directions",
                    stats.mean,
                    stats.kappas.len()
                ));
            }
            Err(e) => failures.push(format!("{label}: proportionality failed: {e}")),
        }
    }
    SweepOutcome::finish("levi-proportionality", seed, cases, failures, notes, started)
}

// ---------------------------------------------------------------------------
// 8. Riemann-Roch exactness
// ---------------------------------------------------------------------------

/// Two hundred random divisors per genus 2..=5: `h0(D) - h0(K - D)` equals
/// `deg D - g + 1` exactly; plus the one-form vanishing count at sampled
/// base points, reported with its note.
pub fn riemann_roch_sweep(seed: u64) -> SweepOutcome {
    let started = std::time::Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let mut cases = 0;
    for g in 2..=5usize {
        let curve = random_curve(&mut rng, g);
        let k = Divisor::canonical(&curve);
        for trial in 0..200 {
            cases += 1;
            let d = random_divisor(&mut rng, &curve);
            let lhs = match (h0(&curve, &d), h0(&curve, &k.sub(&d))) {
                (Ok(a), Ok(b)) => a as i64 - b as i64,
                (a, b) => {
                    failures.push(format!(
                        "genus {g} trial {trial}: section count failed on {d:?}: {a:?} / {b:?}"
                    ));
                    continue;
                }
            };
            let rhs = d.degree() - g as i64 + 1;
            if lhs != rhs {
                failures.push(format!(
                    "genus {g} trial {trial}: identity violated on {d:?}: {lhs} != {rhs}"
                ));
            }
        }
        // the one-form vanishing count at five sampled base points
        for _ in 0..5 {
            cases += 1;
            let p = random_affine_place(&mut rng, &curve);
            let kp = k.sub(&Divisor::of_place(p.clone(), 1));
            match h0(&curve, &kp) {
                Ok(d) if d == g - 1 => {}
                Ok(d) => failures.push(format!(
                    "genus {g}: h0(K - p) = {d} != {} at {p:?}",
                    g - 1
                )),
                Err(e) => failures.push(format!("genus {g}: h0(K - p) failed at {p:?}: {e}")),
            }
        }
    }
    SweepOutcome::finish(
        "riemann-roch-exactness",
        seed,
        cases,
        failures,
        vec![ONE_FORM_VANISHING_NOTE.to_string()],
        started,
    )
}

/// All sweeps in acceptance order, with per-sweep seeds derived from the
/// base seed.
pub fn run_all(seed: u64) -> Vec<SweepOutcome> {
    vec![
        annihilator_dimension_sweep(seed.wrapping_add(1)),
        odd_chain_sweep(seed.wrapping_add(2)),
        even_chain_sweep(seed.wrapping_add(3)),
        nilpotent_cone_sweep(seed.wrapping_add(4)),
        period_soundness_sweep(seed.wrapping_add(5)),
        levi_psd_sweep(seed.wrapping_add(6)),
        proportionality_sweep(seed.wrapping_add(7)),
        riemann_roch_sweep(seed.wrapping_add(8)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn outcomes_serialize_without_timing() {
        let outcome = SweepOutcome {
            claim: "demo".into(),
            seed: 7,
            pass: true,
            cases: 3,
            failures: vec![],
            notes: vec!["n".into()],
            elapsed_seconds: 1.25,
        };
        let json = serde_json::to_string(&outcome).unwrap();
        assert!(json.contains("\"claim\":\"demo\""));
        assert!(!json.contains("elapsed"), "timing must stay out of reports");
    }

    #[test]
    fn character_transport_matches_identity_recombination() {
        let chi = AbelianCharacter::new(vec![0.25, -1.0], vec![0.5, 2.0]);
        let id = DMatrix::<i64>::identity(4, 4);
        let moved = transport_character(&chi, &id);
        assert_eq!(moved.a, chi.a);
        assert_eq!(moved.b, chi.b);
        // swapping A and B cycles swaps the value lists
        let mut swap = DMatrix::<i64>::zeros(4, 4);
        for i in 0..2 {
            swap[(i, i + 2)] = 1;
            swap[(i + 2, i)] = -1;
        }
        let swapped = transport_character(&chi, &swap);
        assert_eq!(swapped.a, vec![-0.5, -2.0]);
        assert_eq!(swapped.b, vec![0.25, -1.0]);
    }
}
