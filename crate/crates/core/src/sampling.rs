//! Seeded random generation of curves, characters, sections, divisors and
//! rank-2 Hitchin points.
//!
//! Every generator takes the caller's RNG, so a single seed determines an
//! entire sweep. Exact objects are sampled with small numerators and
//! denominators: large enough to leave degenerate loci with probability
//! essentially zero, small enough to keep the exact linear algebra cheap.
//! Curve samplers enforce a minimum pairwise branch distance so the
//! numeric quadrature (which needs room between branch cuts) and the
//! finite-difference stencils (which displace branch points) stay well
//! conditioned.

use crate::curve::{Differential, HyperellipticCurve};
use crate::divisor::{Divisor, Place, Sign};
use crate::energy::AbelianCharacter;
use crate::exact::{GaussianRational, Poly};
use crate::spectral::{HitchinCoefficient, HitchinPoint};
use nalgebra::DVector;
use num_complex::Complex64;
use rand::Rng;

/// Minimum pairwise branch-point distance for numerically used curves.
pub const MIN_BRANCH_SEPARATION: f64 = 0.35;

fn rational(rng: &mut impl Rng, num: i64, den: i64) -> GaussianRational {
    GaussianRational::from_ratio(rng.gen_range(-num..=num), rng.gen_range(1..=den))
}

/// A rational of magnitude at most `bound` with denominator at most `den`
/// (the numerator range scales with the drawn denominator, so the bound is
/// on the value, not the numerator).
fn bounded_rational(rng: &mut impl Rng, bound: i64, den: i64) -> GaussianRational {
    let d = rng.gen_range(1..=den);
    GaussianRational::from_ratio(rng.gen_range(-bound * d..=bound * d), d)
}

fn gaussian(rng: &mut impl Rng, num: i64, den: i64) -> GaussianRational {
    let re = rational(rng, num, den);
    let im = rational(rng, num, den);
    &re + &(&im * &GaussianRational::i())
}

fn separated(points: &[GaussianRational], min_sep: f64) -> bool {
    let c: Vec<Complex64> = points.iter().map(|p| p.to_c64()).collect();
    (0..c.len()).all(|i| (0..i).all(|k| (c[i] - c[k]).norm() > min_sep))
}

/// A random curve of the given genus with complex rational branch points,
/// kept `MIN_BRANCH_SEPARATION` apart pairwise.
pub fn random_curve(rng: &mut impl Rng, genus: usize) -> HyperellipticCurve {
    loop {
        let cand: Vec<GaussianRational> =
            (0..2 * genus + 2).map(|_| gaussian(rng, 18, 6)).collect();
        if separated(&cand, MIN_BRANCH_SEPARATION) {
            return HyperellipticCurve::new(cand).expect("separated points are distinct");
        }
    }
}

/// Minimum pairwise branch distance for pinned curves fed to the Levi
/// laboratory (wider than [`MIN_BRANCH_SEPARATION`]: the finite-difference
/// stencil displaces branch points and the eigenvalue classifier needs the
/// configuration to stay away from near-degenerate aspect ratios).
pub const MIN_PINNED_SEPARATION: f64 = 0.6;

/// A random curve in the pinned chart: branch points `0, 1, -1` followed by
/// `2g - 1` random points with `|Re| <= 3`, `|Im| <= 2`, all pairwise at
/// least [`MIN_PINNED_SEPARATION`] apart. The moderate box keeps the period
/// matrix well conditioned, so the spectral gap between the predicted
/// degenerate direction and the genuine positive eigenvalues stays well
/// clear of the relative near-zero cut used to count them.
pub fn random_pinned_curve(rng: &mut impl Rng, genus: usize) -> HyperellipticCurve {
    let pins = [
        GaussianRational::from_int(0),
        GaussianRational::from_int(1),
        GaussianRational::from_int(-1),
    ];
    loop {
        let mut cand = pins.to_vec();
        for _ in 0..2 * genus - 1 {
            let re = bounded_rational(rng, 3, 4);
            let im = bounded_rational(rng, 2, 4);
            cand.push(&re + &(&im * &GaussianRational::i()));
        }
        if separated(&cand, MIN_PINNED_SEPARATION) {
            return HyperellipticCurve::new(cand).expect("separated points are distinct");
        }
    }
}

/// A random character that is meaningfully nonzero.
pub fn random_character(rng: &mut impl Rng, genus: usize) -> AbelianCharacter {
    loop {
        let a: Vec<f64> = (0..genus).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let b: Vec<f64> = (0..genus).map(|_| rng.gen_range(-1.0..1.0)).collect();
        if a.iter().chain(&b).any(|x| x.abs() >= 0.2) {
            return AbelianCharacter::new(a, b);
        }
    }
}

/// A random nonzero holomorphic one-form.
pub fn random_one_form(rng: &mut impl Rng, curve: &HyperellipticCurve) -> Differential {
    let g = curve.genus();
    loop {
        let coeffs: Vec<GaussianRational> = (0..g).map(|_| gaussian(rng, 9, 4)).collect();
        let p = Poly::new(coeffs);
        if !p.is_zero() {
            return Differential::new(1, 1, p);
        }
    }
}

/// A random affine place over a rational non-branch `x`-value.
pub fn random_affine_place(rng: &mut impl Rng, curve: &HyperellipticCurve) -> Place {
    loop {
        let x = rational(rng, 30, 3);
        if !curve.is_branch_x(&x) {
            let sign = if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus };
            return Place::Affine { x, sign };
        }
    }
}

/// A random divisor supported on branch places, the two infinite places and
/// at most one affine `x`-value (whose two points may carry asymmetric
/// multiplicities — the single quadratic extension the section solver
/// accepts).
pub fn random_divisor(rng: &mut impl Rng, curve: &HyperellipticCurve) -> Divisor {
    let branch = curve.branch_points();
    let n_entries = rng.gen_range(1..=4);
    let mut entries: Vec<(Place, i64)> = Vec::new();
    let mut affine_used = false;
    for _ in 0..n_entries {
        let mult = loop {
            let m = rng.gen_range(-3..=3i64);
            if m != 0 {
                break m;
            }
        };
        match rng.gen_range(0..4) {
            0 => {
                let b = &branch[rng.gen_range(0..branch.len())];
                entries.push((Place::Branch(b.clone()), mult));
            }
            1 => entries.push((Place::InfinityPlus, mult)),
            2 => entries.push((Place::InfinityMinus, mult)),
            _ => {
                if affine_used {
                    entries.push((Place::InfinityPlus, mult));
                    continue;
                }
                affine_used = true;
                let place = random_affine_place(rng, curve);
                let x = match &place {
                    Place::Affine { x, .. } => x.clone(),
                    _ => unreachable!(),
                };
                entries.push((Place::Affine { x: x.clone(), sign: Sign::Plus }, mult));
                if rng.gen_bool(0.5) {
                    let m2 = rng.gen_range(-2..=2i64);
                    if m2 != 0 {
                        entries.push((Place::Affine { x, sign: Sign::Minus }, m2));
                    }
                }
            }
        }
    }
    Divisor::new(entries)
}

/// A random rank-2 Hitchin point `(p_1, p_2)`; `p_1` is dropped to zero
/// half the time so both discriminant shapes are exercised.
pub fn random_n2_point(rng: &mut impl Rng, curve: &HyperellipticCurve) -> HitchinPoint {
    let mut p1 = HitchinCoefficient::zero(curve, 1);
    let mut p2 = HitchinCoefficient::zero(curve, 2);
    loop {
        if rng.gen_bool(0.5) {
            for c in p1.u.iter_mut() {
                *c = gaussian(rng, 9, 4);
            }
        }
        for c in p2.u.iter_mut() {
            *c = gaussian(rng, 9, 4);
        }
        for c in p2.v.iter_mut() {
            *c = gaussian(rng, 9, 4);
        }
        if !p2.is_zero() {
            return HitchinPoint {
                coefficients: vec![p1, p2],
            };
        }
    }
}

/// Random complex direction vectors (for Levi-form proportionality scans).
pub fn random_directions(
    rng: &mut impl Rng,
    dim: usize,
    count: usize,
) -> Vec<DVector<Complex64>> {
    (0..count)
        .map(|_| {
            DVector::from_fn(dim, |_, _| {
                Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
            })
        })
        .collect()
}
