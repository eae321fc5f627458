//! Characteristic-polynomial data of Higgs fields and the rank-2
//! spectral-curve smoothness test.
//!
//! A Higgs field on a rank-`n` bundle is an `n x n` matrix of one-form
//! components; its characteristic polynomial `det(x id - phi) = x^n +
//! p_1 x^{n-1} + ... + p_n` has coefficients `p_i` that are holomorphic
//! `i`-differentials. The map `phi -> (p_1, ..., p_n)` is computed exactly
//! in the function field via principal minors; chain bundles are strictly
//! subdiagonal, so every coefficient comes out identically zero (the
//! nilpotent cone).
//!
//! For `n = 2` the spectral curve `x^2 + p_1 x + p_2 = 0` inside the total
//! space of the canonical bundle is analyzed through its discriminant
//! `D = p_1^2 - 4 p_2`, a quadratic differential: the double cover is
//! reducible iff `D` is the square of a holomorphic one-form, and smooth
//! iff `D` has only simple zeros. Writing `D = (U(x) + y V(x)) (dx)^2/y^2`,
//! multiple zeros are detected exactly by a gcd battery on `U`, `V`, the
//! norm `N_1 = U_1^2 - f V_1^2` of the primitive part (`d = gcd(U, V)`),
//! and a two-term series at each point over `x = infinity`.

use crate::curve::{CurveFunction, HyperellipticCurve, MeroForm, RatFun};
use crate::divisor::{h0, Divisor};
use crate::exact::series::{series_mul, series_sqrt_unit, Series};
use crate::exact::{GaussianRational, Poly};
use crate::higgs::GradedHiggsBundle;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, thiserror::Error)]
pub enum SpectralError {
    #[error("the discriminant vanishes identically: the fibre is non-reduced")]
    ZeroDiscriminant,
    #[error("characteristic coefficient p_{index} is not a holomorphic {index}-differential")]
    NonHolomorphicCoefficient { index: usize },
    #[error("expected a rank-2 point, got {got} coefficients")]
    WrongRank { got: usize },
}

/// One characteristic coefficient `p_w`, stored in the monomial blocks
/// `x^j (dx)^w / y^w` (even part `u`) and `x^j (dx)^w / y^{w-1}` (odd part
/// `v`).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HitchinCoefficient {
    pub weight: usize,
    pub u: Vec<GaussianRational>,
    pub v: Vec<GaussianRational>,
}

impl HitchinCoefficient {
    pub fn zero(curve: &HyperellipticCurve, weight: usize) -> Self {
        let (du, dv) = curve.weight_block_dims(weight);
        Self {
            weight,
            u: vec![GaussianRational::from_int(0); du],
            v: vec![GaussianRational::from_int(0); dv],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.u.iter().all(|c| c.is_zero()) && self.v.iter().all(|c| c.is_zero())
    }

    /// Rebuild the differential the blocks encode.
    pub fn form(&self, curve: &HyperellipticCurve) -> MeroForm {
        let w = self.weight;
        let u = Poly::new(self.u.clone());
        let v = Poly::new(self.v.clone());
        let fun = if w % 2 == 0 {
            let den = f_pow(curve, w / 2);
            CurveFunction {
                a: RatFun::new(u, den.clone()),
                b: RatFun::new(v, den),
            }
        } else {
            CurveFunction {
                a: RatFun::new(v, f_pow(curve, (w - 1) / 2)),
                b: RatFun::new(u, f_pow(curve, (w + 1) / 2)),
            }
        };
        MeroForm { weight: w, fun }
    }
}

/// The image of a Higgs field under the coefficient map: `p_1, ..., p_n` in
/// ascending weight.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HitchinPoint {
    pub coefficients: Vec<HitchinCoefficient>,
}

impl HitchinPoint {
    pub fn rank(&self) -> usize {
        self.coefficients.len()
    }

    /// All coefficients vanish: the field lies in the nilpotent cone.
    pub fn is_origin(&self) -> bool {
        self.coefficients.iter().all(|c| c.is_zero())
    }
}

fn f_pow(curve: &HyperellipticCurve, e: usize) -> Poly {
    let mut out = Poly::one();
    for _ in 0..e {
        out = &out * curve.f();
    }
    out
}

fn cf_one() -> CurveFunction {
    CurveFunction {
        a: RatFun::from_poly(Poly::one()),
        b: RatFun::zero(),
    }
}

/// Determinant of the square submatrix on `rows x cols`, by first-row
/// Laplace expansion in the function field.
fn minor_det(
    curve: &HyperellipticCurve,
    m: &[Vec<CurveFunction>],
    rows: &[usize],
    cols: &[usize],
) -> CurveFunction {
    debug_assert_eq!(rows.len(), cols.len());
    match rows.len() {
        0 => cf_one(),
        1 => m[rows[0]][cols[0]].clone(),
        _ => {
            let sub_rows = &rows[1..];
            let mut acc = CurveFunction::zero();
            for (k, &col) in cols.iter().enumerate() {
                let entry = &m[rows[0]][col];
                if entry.is_zero() {
                    continue;
                }
                let mut sub_cols = cols.to_vec();
                sub_cols.remove(k);
                let term = entry.mul(&minor_det(curve, m, sub_rows, &sub_cols), curve);
                acc = if k % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            acc
        }
    }
}

/// Coefficients `p_1, ..., p_n` of `det(x id - phi)` for an `n x n` matrix
/// of function-field entries: `p_k = (-1)^k` times the sum of principal
/// `k x k` minors.
pub fn char_poly_coefficients(
    curve: &HyperellipticCurve,
    entries: &[Vec<CurveFunction>],
) -> Vec<CurveFunction> {
    let n = entries.len();
    for row in entries {
        assert_eq!(row.len(), n, "square matrix required");
    }
    let mut out = Vec::with_capacity(n);
    for k in 1..=n {
        let mut acc = CurveFunction::zero();
        let mut subset: Vec<usize> = (0..k).collect();
        'subsets: loop {
            let det = minor_det(curve, entries, &subset, &subset);
            acc = acc.add(&det);
            // advance to the next k-subset of 0..n in lexicographic order
            let mut i = k;
            loop {
                if i == 0 {
                    break 'subsets;
                }
                i -= 1;
                if subset[i] < n - k + i {
                    subset[i] += 1;
                    for j in i + 1..k {
                        subset[j] = subset[j - 1] + 1;
                    }
                    continue 'subsets;
                }
            }
        }
        if k % 2 == 1 {
            acc = CurveFunction::zero().sub(&acc);
        }
        out.push(acc);
    }
    out
}

/// Package characteristic coefficients, checking each `p_i` is a
/// holomorphic `i`-differential.
pub fn hitchin_point_from_functions(
    curve: &HyperellipticCurve,
    funs: Vec<CurveFunction>,
) -> Result<HitchinPoint, SpectralError> {
    let mut coefficients = Vec::with_capacity(funs.len());
    for (k, fun) in funs.into_iter().enumerate() {
        let weight = k + 1;
        if fun.is_zero() {
            coefficients.push(HitchinCoefficient::zero(curve, weight));
            continue;
        }
        let form = MeroForm { weight, fun };
        let (u, v) = form
            .coordinates(curve)
            .ok_or(SpectralError::NonHolomorphicCoefficient { index: weight })?;
        coefficients.push(HitchinCoefficient { weight, u, v });
    }
    Ok(HitchinPoint { coefficients })
}

/// Coefficient map for an arbitrary matrix Higgs field (test harness and
/// companion fields included).
pub fn hitchin_map_matrix(
    curve: &HyperellipticCurve,
    entries: &[Vec<CurveFunction>],
) -> Result<HitchinPoint, SpectralError> {
    hitchin_point_from_functions(curve, char_poly_coefficients(curve, entries))
}

/// Coefficient map of a chain bundle's Higgs field. The field is strictly
/// subdiagonal in the grading, so every coefficient is identically zero —
/// computed, not assumed, through the same determinant path.
pub fn hitchin_map(curve: &HyperellipticCurve, bundle: &GradedHiggsBundle) -> HitchinPoint {
    let n = bundle.rank();
    let mut entries = vec![vec![CurveFunction::zero(); n]; n];
    for (i, s) in bundle.maps.iter().enumerate() {
        entries[i + 1][i] = s.fun.clone();
    }
    hitchin_map_matrix(curve, &entries)
        .expect("subdiagonal fields have identically zero coefficients")
}

/// `dim (H^0(K) + sum_{i=2}^n H^0(K^i)) = n^2 (g-1) + 1`, the dimension of
/// the space of possible coefficient tuples.
pub fn hitchin_base_dim(curve: &HyperellipticCurve, n: usize) -> usize {
    assert!(n >= 1);
    let g = curve.genus();
    let mut dim = g;
    for i in 2..=n {
        dim += (2 * i - 1) * (g - 1);
    }
    dim
}

/// Independent count of the same dimension through the Riemann-Roch engine:
/// `sum_i h^0(i K)` on the actual divisor `i K`.
pub fn hitchin_base_dim_by_sections(
    curve: &HyperellipticCurve,
    n: usize,
) -> Result<usize, crate::divisor::DivisorError> {
    let k = Divisor::canonical(curve);
    let mut dim = 0;
    let mut ik = Divisor::zero();
    for _ in 1..=n {
        ik = ik.add(&k);
        dim += h0(curve, &ik)?;
    }
    Ok(dim)
}

/// Verdict of the rank-2 spectral-curve test.
#[derive(Clone, Debug, PartialEq)]
pub enum SmoothnessVerdict {
    Smooth,
    NotSmooth(NotSmoothReason),
}

#[derive(Clone, Debug, PartialEq)]
pub enum NotSmoothReason {
    /// the discriminant is the square of a holomorphic one-form, so the
    /// double cover splits into two copies of the base
    Reducible,
    /// a multiple zero over an affine `x`-value: every root of the monic
    /// certificate polynomial carries one
    DoubleZeroAtX(Poly),
    /// a multiple zero at a point over `x = infinity`
    DoubleZeroAtInfinity { positive_sheet: bool },
}

impl fmt::Display for NotSmoothReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotSmoothReason::Reducible => write!(f, "reducible (discriminant is a square)"),
            NotSmoothReason::DoubleZeroAtX(p) => {
                write!(f, "double zero over roots of {p}")
            }
            NotSmoothReason::DoubleZeroAtInfinity { positive_sheet } => write!(
                f,
                "double zero at infinity ({} sheet)",
                if *positive_sheet { "positive" } else { "negative" }
            ),
        }
    }
}

/// Exact smoothness test of the rank-2 spectral curve with coefficients
/// `(p_1, p_2)`: verdicts in precedence order zero discriminant (error),
/// reducible, double zero, smooth.
pub fn smoothness_n2(
    curve: &HyperellipticCurve,
    p1: &MeroForm,
    p2: &MeroForm,
) -> Result<SmoothnessVerdict, SpectralError> {
    if p1.weight != 1 || (!p1.is_zero() && p1.coordinates(curve).is_none()) {
        return Err(SpectralError::NonHolomorphicCoefficient { index: 1 });
    }
    if p2.weight != 2 || (!p2.is_zero() && p2.coordinates(curve).is_none()) {
        return Err(SpectralError::NonHolomorphicCoefficient { index: 2 });
    }
    let minus_four = GaussianRational::from_int(-4);
    let disc = p1.mul(p1, curve).add(&p2.scale(&minus_four));
    if disc.is_zero() {
        return Err(SpectralError::ZeroDiscriminant);
    }
    let (ublock, vblock) = disc
        .coordinates(curve)
        .expect("difference of holomorphic forms is holomorphic");
    let u = Poly::new(ublock);
    let v = Poly::new(vblock);

    // reducible: D = (A dx/y)^2 means no odd part and U a polynomial square
    if v.is_zero() && u.sqrt_exact().is_some() {
        return Ok(SmoothnessVerdict::NotSmooth(NotSmoothReason::Reducible));
    }

    let f = curve.f();
    let d = if v.is_zero() { u.clone() } else { u.gcd(&v) };
    let u1 = u.div_exact(&d).expect("gcd divides");
    let v1 = if v.is_zero() {
        Poly::zero()
    } else {
        v.div_exact(&d).expect("gcd divides")
    };
    // norm of the primitive part U_1 + y V_1 down to the x-line
    let n1 = &(&u1 * &u1) - &(f * &(&v1 * &v1));

    // the pulled-back factor d: a branch root is already a double zero
    let e = d.gcd(f);
    if e.deg_i() >= 1 {
        return Ok(SmoothnessVerdict::NotSmooth(NotSmoothReason::DoubleZeroAtX(e)));
    }
    // a repeated root of d doubles on both sheets
    let sq = d.gcd(&d.derivative());
    if sq.deg_i() >= 1 {
        return Ok(SmoothnessVerdict::NotSmooth(NotSmoothReason::DoubleZeroAtX(sq)));
    }
    // a shared root of d and the primitive factor stacks two simple zeros
    let shared = d.gcd(&n1);
    if shared.deg_i() >= 1 {
        return Ok(SmoothnessVerdict::NotSmooth(NotSmoothReason::DoubleZeroAtX(
            shared,
        )));
    }
    // a repeated root of the norm is a multiple zero of U_1 + y V_1 at the
    // single sheet where it vanishes (branch values cannot repeat in N_1:
    // that would force U_1 and V_1 to share the root)
    let rep = n1.gcd(&n1.derivative());
    if rep.deg_i() >= 1 {
        return Ok(SmoothnessVerdict::NotSmooth(NotSmoothReason::DoubleZeroAtX(rep)));
    }

    // order at the two points over infinity via the first two series terms
    // of s^{2g-2} D(1/s) on each sheet, y/x^{g+1} -> +-1
    let g = curve.genus();
    let len = 2;
    let deg_f = 2 * g + 2;
    let rev_f: Series = {
        let coeffs = f.reverse_fixed(deg_f);
        (0..len)
            .map(|k| coeffs.get(k).cloned().unwrap_or_else(|| GaussianRational::from_int(0)))
            .collect()
    };
    let r_ser = series_sqrt_unit(&rev_f, len);
    let rev_u: Series = {
        let coeffs = u.reverse_fixed(2 * g - 2);
        (0..len).map(|k| coeffs[k].clone()).collect()
    };
    let rv: Series = if v.is_zero() {
        vec![GaussianRational::from_int(0); len]
    } else {
        let coeffs = v.reverse_fixed(g - 3);
        (0..len)
            .map(|k| coeffs.get(k).cloned().unwrap_or_else(|| GaussianRational::from_int(0)))
            .collect()
    };
    let odd = series_mul(&r_ser, &rv, len);
    for positive_sheet in [true, false] {
        let t: Vec<GaussianRational> = (0..len)
            .map(|k| {
                if positive_sheet {
                    &rev_u[k] + &odd[k]
                } else {
                    &rev_u[k] - &odd[k]
                }
            })
            .collect();
        if t.iter().all(|c| c.is_zero()) {
            return Ok(SmoothnessVerdict::NotSmooth(
                NotSmoothReason::DoubleZeroAtInfinity { positive_sheet },
            ));
        }
    }

    Ok(SmoothnessVerdict::Smooth)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divisor::{Place, Sign};
    use crate::higgs::{canonical_omega, canonical_psi, construct_even, construct_odd};

    fn gi(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    fn gr(n: i64, d: i64) -> GaussianRational {
        &gi(n) / &gi(d)
    }

    fn curve_with_branch(pts: &[i64]) -> HyperellipticCurve {
        HyperellipticCurve::new(pts.iter().map(|&n| gi(n)).collect()).unwrap()
    }

    /// `c * q(x) * (dx)^2/y^2` as a weight-2 form.
    fn even_qd(curve: &HyperellipticCurve, coeffs: &[GaussianRational]) -> MeroForm {
        HitchinCoefficient {
            weight: 2,
            u: coeffs.to_vec(),
            v: vec![gi(0); curve.weight_block_dims(2).1],
        }
        .form(curve)
    }

    #[test]
    fn chain_bundles_map_to_the_origin() {
        let curve = curve_with_branch(&[0, 1, 2, 3, 4, 5, 6, 7, 8, 9]);
        let p = Place::Affine {
            x: gi(17),
            sign: Sign::Plus,
        };
        let psi = canonical_psi(&curve, &p).unwrap();
        let omega = canonical_omega(&curve);
        for n in [3usize, 5] {
            let b = construct_odd(&curve, &p, n, &psi).unwrap();
            let point = hitchin_map(&curve, &b);
            assert_eq!(point.rank(), n);
            assert!(point.is_origin(), "odd rank {n}");
        }
        for n in [2usize, 4, 6] {
            let b = construct_even(&curve, &p, n, &psi, &omega).unwrap();
            let point = hitchin_map(&curve, &b);
            assert!(point.is_origin(), "even rank {n}");
        }
    }

    #[test]
    fn diagonal_and_companion_fields_have_textbook_coefficients() {
        let curve = curve_with_branch(&[1, 2, 3, 4, 5, 6]);
        let omega = canonical_omega(&curve);
        let psi = omega.clone();
        // diag(psi, -psi): p1 = 0, p2 = -psi^2
        let neg = psi.scale(&gi(-1));
        let entries = vec![
            vec![psi.fun.clone(), CurveFunction::zero()],
            vec![CurveFunction::zero(), neg.fun.clone()],
        ];
        let point = hitchin_map_matrix(&curve, &entries).unwrap();
        assert!(point.coefficients[0].is_zero());
        let psi_sq = psi.mul(&psi, &curve).scale(&gi(-1));
        let (u, v) = psi_sq.coordinates(&curve).unwrap();
        assert_eq!(point.coefficients[1].u, u);
        assert_eq!(point.coefficients[1].v, v);

        // companion [[0, q], [1, 0]]: p1 = 0, p2 = -q
        let q = even_qd(&curve, &[gi(2), gi(3), gi(5)]);
        let entries = vec![
            vec![CurveFunction::zero(), q.fun.clone()],
            vec![cf_one(), CurveFunction::zero()],
        ];
        let point = hitchin_map_matrix(&curve, &entries).unwrap();
        assert!(point.coefficients[0].is_zero());
        let minus_q = q.scale(&gi(-1));
        let (u, v) = minus_q.coordinates(&curve).unwrap();
        assert_eq!(point.coefficients[1].u, u);
        assert_eq!(point.coefficients[1].v, v);
    }

    #[test]
    fn three_by_three_symmetric_field_matches_hand_determinant() {
        let curve = curve_with_branch(&[1, 2, 3, 4, 5, 6]);
        let w = canonical_omega(&curve);
        let z = CurveFunction::zero();
        // phi = [[0, w, 0], [w, 0, w], [0, w, 0]]:
        // det(x - phi) = x^3 - 2 w^2 x, so p_1 = 0, p_2 = -2 w^2, p_3 = 0
        let entries = vec![
            vec![z.clone(), w.fun.clone(), z.clone()],
            vec![w.fun.clone(), z.clone(), w.fun.clone()],
            vec![z.clone(), w.fun.clone(), z.clone()],
        ];
        let point = hitchin_map_matrix(&curve, &entries).unwrap();
        assert!(point.coefficients[0].is_zero());
        assert!(point.coefficients[2].is_zero());
        let expect = w.mul(&w, &curve).scale(&gi(-2));
        let (u, v) = expect.coordinates(&curve).unwrap();
        assert_eq!(point.coefficients[1].u, u);
        assert_eq!(point.coefficients[1].v, v);
    }

    #[test]
    fn base_dimension_formula_matches_the_section_counts() {
        for g in 2usize..=5 {
            let pts: Vec<i64> = (0..2 * g as i64 + 2).collect();
            let curve = curve_with_branch(&pts);
            for n in 1usize..=4 {
                let formula = hitchin_base_dim(&curve, n);
                assert_eq!(formula, n * n * (g - 1) + 1, "closed form");
                let counted = hitchin_base_dim_by_sections(&curve, n).unwrap();
                assert_eq!(formula, counted, "g={g}, n={n}");
            }
        }
        let g2 = curve_with_branch(&[0, 1, 2, 3, 4, 5]);
        assert_eq!(hitchin_base_dim(&g2, 1), 2);
        assert_eq!(hitchin_base_dim(&g2, 2), 5);
        let g3 = curve_with_branch(&[0, 1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(hitchin_base_dim(&g3, 3), 19);
    }

    #[test]
    fn smoothness_verdicts_on_planted_discriminants() {
        let curve = curve_with_branch(&[1, 2, 3, 4, 5, 6]);
        let zero1 = MeroForm::zero(1);

        // p2 = -x (dx/y)^2: D = 4x, simple zeros over 0 and at infinity
        let p2 = even_qd(&curve, &[gi(0), gi(-1), gi(0)]);
        assert_eq!(
            smoothness_n2(&curve, &zero1, &p2).unwrap(),
            SmoothnessVerdict::Smooth
        );

        // p2 = -psi^2: D = (2 psi)^2 is reducible even though every zero
        // doubles
        let psi = even_qd(&curve, &[gi(0), gi(0), gi(-1)]); // -x^2 (dx/y)^2
        assert_eq!(
            smoothness_n2(&curve, &zero1, &psi).unwrap(),
            SmoothnessVerdict::NotSmooth(NotSmoothReason::Reducible)
        );

        // p1 = p2 = 0: non-reduced
        assert!(matches!(
            smoothness_n2(&curve, &zero1, &MeroForm::zero(2)),
            Err(SpectralError::ZeroDiscriminant)
        ));

        // D = 2 (x-7)^2 (dx/y)^2: non-square, double zeros over x = 7
        let planted = even_qd(&curve, &[gr(-49, 2), gi(7), gr(-1, 2)]);
        match smoothness_n2(&curve, &zero1, &planted).unwrap() {
            SmoothnessVerdict::NotSmooth(NotSmoothReason::DoubleZeroAtX(c)) => {
                assert!(c.eval(&gi(7)).is_zero());
                assert_eq!(c.deg_i(), 1);
            }
            other => panic!("expected a planted double zero, got {other:?}"),
        }

        // D = c (x-1)(x-8) (dx/y)^2 hits the branch point x = 1
        let branch_hit = even_qd(&curve, &[gi(-2), gr(9, 4), gr(-1, 4)]);
        match smoothness_n2(&curve, &zero1, &branch_hit).unwrap() {
            SmoothnessVerdict::NotSmooth(NotSmoothReason::DoubleZeroAtX(c)) => {
                assert!(c.eval(&gi(1)).is_zero());
            }
            other => panic!("expected a branch double zero, got {other:?}"),
        }

        // D = 2 (dx/y)^2: order two at both points over infinity
        let inf = even_qd(&curve, &[gr(-1, 2), gi(0), gi(0)]);
        assert!(matches!(
            smoothness_n2(&curve, &zero1, &inf).unwrap(),
            SmoothnessVerdict::NotSmooth(NotSmoothReason::DoubleZeroAtInfinity { .. })
        ));

        // nonzero p1 exercises the completed square: p1 = x dx/y and
        // p2 = (x^2 - 2)/4 (dx/y)^2 give D = 2 (dx/y)^2 again
        let p1 = MeroForm {
            weight: 1,
            fun: CurveFunction {
                a: RatFun::zero(),
                b: RatFun::new(Poly::new(vec![gi(0), gi(1)]), curve.f().clone()),
            },
        };
        let p2 = even_qd(&curve, &[gr(-1, 2), gi(0), gr(1, 4)]);
        assert!(matches!(
            smoothness_n2(&curve, &p1, &p2).unwrap(),
            SmoothnessVerdict::NotSmooth(NotSmoothReason::DoubleZeroAtInfinity { .. })
        ));
    }

    #[test]
    fn holomorphy_gate_rejects_bad_coefficients() {
        let curve = curve_with_branch(&[1, 2, 3, 4, 5, 6]);
        // x^3 exceeds the weight-2 degree bound at genus 2
        let bad = HitchinCoefficient {
            weight: 2,
            u: vec![gi(0), gi(0), gi(0), gi(1)],
            v: vec![],
        };
        let form = MeroForm {
            weight: 2,
            fun: CurveFunction {
                a: RatFun::new(Poly::new(bad.u.clone()), curve.f().clone()),
                b: RatFun::zero(),
            },
        };
        assert!(matches!(
            smoothness_n2(&curve, &MeroForm::zero(1), &form),
            Err(SpectralError::NonHolomorphicCoefficient { index: 2 })
        ));
    }
}
