//! Independent cross-checks of the period engine.
//!
//! The chain periods are recomputed here by a method sharing no code with
//! the engine: trapezoid sums over confocal ellipse contours, with the
//! `y`-branch stepped around the contour and seeded through a vertical
//! continuation from the segment midpoint. Agreement pins the collapse
//! factor, the quadrature, and the in-segment branch tracking. Equivariance
//! under symplectic word changes and under fractional-linear coordinate
//! changes then certifies the assembled `tau` itself.

use nalgebra::DMatrix;
use num_complex::Complex64;
use teichlab_core::exact::{GaussianRational, Poly};
use teichlab_core::homology::Homology;
use teichlab_core::periods::{
    chain_periods, coherence_signs, lattice_transfer, period_data, period_data_with_homology,
    PeriodData, PeriodOptions,
};
use teichlab_core::curve::mobius_transform;
use teichlab_core::{HyperellipticCurve, MobiusMap};

fn gi(n: i64) -> GaussianRational {
    GaussianRational::from_int(n)
}

fn gq(re: (i64, i64), im: (i64, i64)) -> GaussianRational {
    GaussianRational::from_parts(re, im)
}

fn complex_branch_curve() -> HyperellipticCurve {
    HyperellipticCurve::new(vec![
        gq((0, 1), (0, 1)),
        gq((2, 1), (1, 1)),
        gq((3, 1), (-1, 1)),
        gq((5, 1), (2, 1)),
        gq((7, 1), (-1, 2)),
        gq((9, 1), (1, 1)),
    ])
    .unwrap()
}

fn genus_three_mixed_curve() -> HyperellipticCurve {
    HyperellipticCurve::new(vec![
        gq((-3, 1), (0, 1)),
        gq((-1, 1), (1, 1)),
        gq((0, 1), (-1, 1)),
        gq((2, 1), (1, 2)),
        gq((4, 1), (-1, 1)),
        gq((6, 1), (0, 1)),
        gq((7, 1), (1, 1)),
        gq((9, 1), (-2, 1)),
    ])
    .unwrap()
}

fn nearest(principal: Complex64, reference: Complex64) -> Complex64 {
    if (principal - reference).norm_sqr() <= (principal + reference).norm_sqr() {
        principal
    } else {
        -principal
    }
}

/// Trapezoid contour integrals of `P dx / y` for each numerator over a
/// confocal ellipse enclosing segment `j` and no other branch point,
/// traversed counterclockwise, with `y` seeded by continuing the principal
/// midpoint branch vertically to the top of the ellipse. Returns the
/// integrals and the relative monodromy-closure defect of the stepped `y`.
fn ellipse_oracle(
    pts: &[Complex64],
    j: usize,
    numerators: &[Poly],
    n: usize,
) -> (Vec<Complex64>, f64) {
    let m = (pts[j] + pts[j + 1]) * 0.5;
    let w = (pts[j + 1] - pts[j]) * 0.5;
    // largest confocal parameter keeping every other point outside, halved
    let mut s0 = f64::INFINITY;
    for (l, p) in pts.iter().enumerate() {
        if l != j && l != j + 1 {
            let u = (p - m) / w;
            let root = (u * u - Complex64::new(1.0, 0.0)).sqrt();
            let xi = ((u + root).ln().re).max((u - root).ln().re);
            s0 = s0.min(xi);
        }
    }
    let s0 = 0.5 * s0;
    assert!(s0 > 0.0, "degenerate ellipse for segment {j}");

    let f_eval = |z: Complex64| -> Complex64 {
        pts.iter().map(|p| z - p).product()
    };
    // principal midpoint branch, as the engine seeds it
    let r_mid: Complex64 = pts
        .iter()
        .enumerate()
        .filter(|(l, _)| *l != j && *l != j + 1)
        .map(|(_, p)| m - p)
        .product();
    let mut y = Complex64::new(0.0, 1.0) * w * r_mid.sqrt();
    // vertical continuation to the top of the ellipse
    let top = m + Complex64::new(0.0, 1.0) * w * s0.sinh();
    let steps = 400;
    for k in 1..=steps {
        let z = m + (top - m) * (k as f64 / steps as f64);
        y = nearest(f_eval(z).sqrt(), y);
    }

    let z_at = |t: f64| m + w * Complex64::new(t.cos() * s0.cosh(), t.sin() * s0.sinh());
    let dz_at = |t: f64| w * Complex64::new(-t.sin() * s0.cosh(), t.cos() * s0.sinh());
    let h = std::f64::consts::TAU / n as f64;
    let t0 = std::f64::consts::FRAC_PI_2;
    let y_start = y;
    let mut sums = vec![Complex64::new(0.0, 0.0); numerators.len()];
    for k in 0..n {
        let t = t0 + h * k as f64;
        let z = z_at(t);
        y = nearest(f_eval(z).sqrt(), y);
        for (i, p) in numerators.iter().enumerate() {
            sums[i] += p.eval_c64(z) * dz_at(t) / y * h;
        }
    }
    // closing the loop must return the seed branch
    let z = z_at(t0);
    y = nearest(f_eval(z).sqrt(), y);
    let closure = (y - y_start).norm() / y_start.norm();
    (sums, closure)
}

/// Chain periods versus the independent contour oracle: the engine's chain
/// `c_j` equals `-sigma_j` times the counterclockwise ellipse integral.
#[test]
fn ellipse_contour_oracle_matches_chain_periods() {
    let curves = vec![
        HyperellipticCurve::new([-5, -3, -1, 1, 3, 5].map(gi).to_vec()).unwrap(),
        complex_branch_curve(),
        genus_three_mixed_curve(),
    ];
    for curve in &curves {
        let g = curve.genus();
        let homology = Homology::new(curve);
        // the holomorphic numerators plus one with poles over x = infinity:
        // the collapse identity is local to the segment and blind to poles
        // elsewhere, so the oracle must match on it too
        let numerators: Vec<Poly> = (0..=g)
            .map(|i| Poly::monomial(i, gi(1)))
            .collect();
        let (chains, _) =
            chain_periods(curve, &homology, &numerators, &PeriodOptions::default()).unwrap();
        let pts: Vec<Complex64> = homology
            .spine_points(curve)
            .iter()
            .map(|p| p.to_c64())
            .collect();
        let sigmas = coherence_signs(&pts).unwrap();
        for j in 0..pts.len() - 1 {
            let (oracle, closure) = ellipse_oracle(&pts, j, &numerators, 8192);
            assert!(
                closure < 1e-10,
                "genus {g} segment {j}: stepped y failed to close ({closure:.2e})"
            );
            for i in 0..numerators.len() {
                let expected = -sigmas[j] * oracle[i];
                let scale = oracle.iter().map(|z| z.norm()).fold(0.0, f64::max);
                assert!(
                    (chains[j][i] - expected).norm() <= 1e-9 * scale.max(1e-12),
                    "genus {g} segment {j} numerator {i}: engine {} vs oracle {}",
                    chains[j][i],
                    expected
                );
            }
        }
    }
}

fn assert_certified(pd: &PeriodData, label: &str) {
    let g = pd.tau.nrows();
    assert!(
        pd.tau_asymmetry < 1e-8,
        "{label}: tau asymmetry {:.2e}",
        pd.tau_asymmetry
    );
    assert!(
        pd.bilinear_residual < 1e-8,
        "{label}: bilinear residual {:.2e}",
        pd.bilinear_residual
    );
    let im = DMatrix::from_fn(g, g, |i, k| pd.tau[(i, k)].im);
    let eigs = im.symmetric_eigen().eigenvalues;
    assert!(
        eigs.iter().all(|&e| e > 0.0),
        "{label}: Im tau not positive definite: {:?}",
        eigs.as_slice()
    );
}

/// Seeded random configurations across genus 2-4: every curve must certify,
/// and the certified `tau` must be stable under tightening the quadrature.
#[test]
fn random_curve_battery_certifies_and_refines_stably() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
    let mut checked = 0;
    for g in [2usize, 3, 4] {
        for trial in 0..6 {
            let pts = loop {
                let cand: Vec<GaussianRational> = (0..2 * g + 2)
                    .map(|_| {
                        gq(
                            (rng.gen_range(-18..=18), rng.gen_range(1..=6)),
                            (rng.gen_range(-18..=18), rng.gen_range(1..=6)),
                        )
                    })
                    .collect();
                let c: Vec<Complex64> = cand.iter().map(|p| p.to_c64()).collect();
                let ok = (0..c.len()).all(|i| {
                    (0..i).all(|k| (c[i] - c[k]).norm() > 0.35)
                });
                if ok {
                    break cand;
                }
            };
            let curve = HyperellipticCurve::new(pts).unwrap();
            let label = format!("genus {g} trial {trial}");
            let pd = period_data(&curve, &PeriodOptions::default())
                .unwrap_or_else(|e| panic!("{label}: {e}"));
            assert_certified(&pd, &label);
            let tight = PeriodOptions {
                rel_tol: 1e-10,
                ..PeriodOptions::default()
            };
            let pd2 = period_data(&curve, &tight).unwrap();
            let scale = pd.tau.iter().map(|z| z.norm()).fold(0.0, f64::max);
            for (a, b) in pd.tau.iter().zip(pd2.tau.iter()) {
                assert!(
                    (a - b).norm() <= 1e-8 * (1.0 + scale),
                    "{label}: tau moved under refinement"
                );
            }
            checked += 1;
        }
    }
    assert_eq!(checked, 18);
}

/// Rebuilding the homology words through an integral symplectic matrix must
/// act on `tau` by the corresponding fractional-linear (modular) action.
#[test]
fn symplectic_word_changes_act_on_tau_by_the_modular_action() {
    let curves = vec![
        HyperellipticCurve::new([-5, -3, -1, 1, 3, 5].map(gi).to_vec()).unwrap(),
        genus_three_mixed_curve(),
    ];
    for curve in &curves {
        let g = curve.genus();
        let pd = period_data(curve, &PeriodOptions::default()).unwrap();
        assert!(!pd.b_flipped, "baseline orientation expected for this spine");
        let id = DMatrix::<i64>::identity(g, g);
        let zero = DMatrix::<i64>::zeros(g, g);
        let mut shear_r = DMatrix::<i64>::zeros(g, g);
        shear_r[(0, 0)] = 1;
        let mut perm = DMatrix::<i64>::zeros(g, g);
        for i in 0..g {
            perm[(i, (i + 1) % g)] = 1;
        }
        // (P, Q, R, S) blocks of gamma' = V gamma: A' = PA + QB, B' = RA + SB
        let cases: Vec<(DMatrix<i64>, DMatrix<i64>, DMatrix<i64>, DMatrix<i64>)> = vec![
            (zero.clone(), id.clone(), -id.clone(), zero.clone()),
            (id.clone(), zero.clone(), shear_r, id.clone()),
            (perm.clone(), zero.clone(), zero.clone(), perm.clone()),
        ];
        for (case_idx, (p, q, r, s)) in cases.iter().enumerate() {
            let combine = |pa: &DMatrix<i64>, pb: &DMatrix<i64>| -> Vec<Vec<i64>> {
                (0..g)
                    .map(|i| {
                        let mut word = vec![0i64; 2 * g + 1];
                        for k in 0..g {
                            for (t, c) in word.iter_mut().enumerate() {
                                *c += pa[(i, k)] * pd.homology.a_words[k][t]
                                    + pb[(i, k)] * pd.homology.b_words[k][t];
                            }
                        }
                        word
                    })
                    .collect()
            };
            let mut homology = pd.homology.clone();
            homology.a_words = combine(p, q);
            homology.b_words = combine(r, s);
            let pd2 =
                period_data_with_homology(curve, homology, &PeriodOptions::default()).unwrap();
            let cast = |m: &DMatrix<i64>| {
                DMatrix::from_fn(g, g, |i, k| Complex64::new(m[(i, k)] as f64, 0.0))
            };
            // Pi'_A = Pi_A P^T + Pi_B Q^T, Pi'_B = Pi_A R^T + Pi_B S^T
            let pa2 = &pd.pi_a * cast(p).transpose() + &pd.pi_b * cast(q).transpose();
            let pb2 = &pd.pi_a * cast(r).transpose() + &pd.pi_b * cast(s).transpose();
            let expected = pa2.lu().solve(&pb2).unwrap();
            for i in 0..g {
                for k in 0..g {
                    assert!(
                        (pd2.tau[(i, k)] - expected[(i, k)]).norm() < 1e-9,
                        "genus {g} case {case_idx}: tau mismatch at ({i},{k})"
                    );
                }
            }
        }
    }
}

/// Fractional-linear changes of the base coordinate: the transformed curve's
/// periods, pulled back through the one-form substitution, must differ from
/// the original by an integral symplectic change of homology basis.
#[test]
fn coordinate_changes_transfer_by_an_integral_symplectic_matrix() {
    let curves = vec![
        HyperellipticCurve::new([-5, -3, -1, 1, 3, 5].map(gi).to_vec()).unwrap(),
        complex_branch_curve(),
        genus_three_mixed_curve(),
    ];
    for curve in &curves {
        let g = curve.genus();
        let pd = period_data(curve, &PeriodOptions::default()).unwrap();
        let b = curve.branch_points();
        let maps = vec![
            MobiusMap::shift(gq((1, 1), (1, 2))),
            MobiusMap::scaling(gq((2, 3), (-1, 3))),
            MobiusMap::to_pinned_triple(&b[0], &b[1], &b[2]).unwrap(),
            MobiusMap {
                a: gi(1),
                b: gi(-1),
                c: gi(1),
                d: gi(-10),
            },
        ];
        for (map_idx, map) in maps.iter().enumerate() {
            let action = match mobius_transform(curve, map) {
                Ok(a) => a,
                Err(e) => panic!("map {map_idx} on genus {g}: {e}"),
            };
            let pd2 = period_data(&action.curve, &PeriodOptions::default()).unwrap();
            // pullback(omega'_j) = kappa * sum_i S[i][j] omega_i with
            // kappa = det^{-g} sqrt(prod(c lambda + d)); either square root
            // works, the transfer absorbs the sign
            let det = map.det().to_c64();
            let prod: Complex64 = curve
                .branch_points()
                .iter()
                .map(|l| (map.c.clone() * l.clone() + map.d.clone()).to_c64())
                .product();
            let kappa = det.powi(-(g as i32)) * prod.sqrt();
            let s_t = DMatrix::from_fn(g, g, |i, k| action.one_forms[k][i].to_c64());
            let adjusted = s_t.lu().solve(&pd2.full_periods()).unwrap() / kappa;
            let v = lattice_transfer(&pd.full_periods(), &adjusted, 1e-6);
            assert!(
                v.is_some(),
                "genus {g} map {map_idx}: periods did not transfer integrally"
            );
        }
    }
}
