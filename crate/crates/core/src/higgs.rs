//! Graded nilpotent Higgs bundles along a chain of powers of one point.
//!
//! The bundle is `E = L_1 ⊕ … ⊕ L_n` with `L_i = L^{e_i}`, `L = O(p)`,
//! `sum e_i = 0`, and a Higgs field that is strictly subdiagonal in the
//! grading: its only components are maps `s_i : L_i -> L_{i+1} K`, i.e.
//! sections of `K L^{e_{i+1} - e_i}`. Two standard chains are built here:
//! for odd rank `n = 2k+1` the exponents are `k, k-1, …, -k` and every map
//! is one section `psi` of `K L^{-1}` (a one-form vanishing at `p`); for
//! even rank `n = 2m` the exponents repeat `0` in the middle
//! (`m-1, …, 1, 0, 0, -1, …, -(m-1)`) and the middle map is a holomorphic
//! one-form `omega`, the rest again `psi`.
//!
//! Stability has a finite certificate: the field-invariant proper
//! subbundles of such a chain are exactly the tails `F_i = ⊕_{j >= i} L_j`
//! (provided no map vanishes), so stability reduces to every proper tail
//! having negative degree, with `deg L = 1`.
//!
//! Flat deformation directions pair, through Serre duality, against the
//! union of the product spaces `s_i · H^0(K L^{-d_i})` (`d_i = e_{i+1} -
//! e_i`) inside the quadratic differentials; the kernel dimension is
//! `3g - 3` minus the exact dimension of that span. For the odd chain this
//! evaluates to `2g - 3` independently of `n`; for even chains the span can
//! only grow past the single-form case, so the count is bounded below by
//! `g - 3`.

use crate::curve::{mero_span_dim, Differential, HyperellipticCurve, MeroForm};
use crate::divisor::{section_basis, Divisor, DivisorError, Place};
use crate::exact::Poly;

#[derive(Debug, thiserror::Error)]
pub enum HiggsError {
    #[error("the chain map section is identically zero")]
    ZeroSection,
    #[error("rank {0} is not supported by this chain shape")]
    InvalidRank(usize),
    #[error("a chain map is not a section of its bundle: {0}")]
    SectionOutsideBundle(String),
    #[error(transparent)]
    Divisor(#[from] DivisorError),
}

/// A graded chain bundle with its subdiagonal Higgs maps.
#[derive(Clone)]
pub struct GradedHiggsBundle {
    pub base_point: Place,
    /// `L_i = O(p)^{e_i}`, summing to zero
    pub exponents: Vec<i64>,
    /// `maps[i]` is the section of `K L^{e_{i+1}-e_i}` giving
    /// `L_i -> L_{i+1} K`
    pub maps: Vec<MeroForm>,
    /// the stability/kernel theory is stated for genus at least 4; smaller
    /// genus bundles are still built, carrying this flag
    pub below_standing_genus: bool,
}

impl GradedHiggsBundle {
    pub fn rank(&self) -> usize {
        self.exponents.len()
    }

    /// Twists `d_i = e_{i+1} - e_i` of the maps.
    pub fn twists(&self) -> Vec<i64> {
        self.exponents.windows(2).map(|w| w[1] - w[0]).collect()
    }
}

/// A deterministic `psi`: the basis section of the one-forms vanishing at
/// `p` whose polynomial part has the highest degree. Maximal degree makes
/// the section generic for the product-span counts: lower-degree choices
/// only enlarge the overlap between product spaces.
pub fn canonical_psi(
    curve: &HyperellipticCurve,
    p: &Place,
) -> Result<MeroForm, DivisorError> {
    let d = Divisor::canonical(curve).add(&Divisor::of_place(p.clone(), -1));
    let space = section_basis(curve, &d)?;
    let pick = space
        .basis
        .iter()
        .enumerate()
        .max_by_key(|(i, (a, _))| (a.deg_i(), -(*i as i64)))
        .map(|(i, _)| i)
        .expect("h0(K - p) = g - 1 >= 1 at genus >= 2");
    let base = base_form(curve);
    let fun = space.functions().swap_remove(pick);
    Ok(MeroForm {
        weight: 1,
        fun: fun.mul(&base.fun, curve),
    })
}

/// The deterministic holomorphic one-form `omega = dx / y`.
pub fn canonical_omega(curve: &HyperellipticCurve) -> MeroForm {
    base_form(curve)
}

fn base_form(curve: &HyperellipticCurve) -> MeroForm {
    Differential {
        weight: 1,
        y_power: 1,
        numerator: Poly::one(),
    }
    .to_mero(curve)
}

/// Basis of `H^0(K L^{-d})` as one-forms: sections of the divisor `K - d p`
/// times `dx/y`.
fn pairing_forms(
    curve: &HyperellipticCurve,
    p: &Place,
    d: i64,
) -> Result<Vec<MeroForm>, DivisorError> {
    let div = Divisor::canonical(curve).add(&Divisor::of_place(p.clone(), -d));
    let space = section_basis(curve, &div)?;
    let base = base_form(curve);
    Ok(space
        .functions()
        .into_iter()
        .map(|h| MeroForm {
            weight: 1,
            fun: h.mul(&base.fun, curve),
        })
        .collect())
}

/// Exact membership check: `s` must lie in the span of the basis of
/// `H^0(K L^d)` (the chains only use twists `d <= 0`, so these sections are
/// holomorphic one-forms and span dimensions are available).
fn validate_section(
    curve: &HyperellipticCurve,
    p: &Place,
    d: i64,
    s: &MeroForm,
    label: &str,
) -> Result<(), HiggsError> {
    let div = Divisor::canonical(curve).add(&Divisor::of_place(p.clone(), d));
    let space = section_basis(curve, &div)?;
    let base = base_form(curve);
    let mut forms: Vec<MeroForm> = space
        .functions()
        .into_iter()
        .map(|h| MeroForm {
            weight: 1,
            fun: h.mul(&base.fun, curve),
        })
        .collect();
    forms.push(s.clone());
    if mero_span_dim(curve, &forms) != Some(space.dim()) {
        return Err(HiggsError::SectionOutsideBundle(format!(
            "{label} is not a section of K L^({d})"
        )));
    }
    Ok(())
}

/// The odd chain: exponents `k, k-1, …, -k` with `n = 2k+1`, every map
/// `psi`.
pub fn construct_odd(
    curve: &HyperellipticCurve,
    p: &Place,
    n: usize,
    psi: &MeroForm,
) -> Result<GradedHiggsBundle, HiggsError> {
    if n < 3 || n % 2 == 0 {
        return Err(HiggsError::InvalidRank(n));
    }
    if psi.is_zero() {
        return Err(HiggsError::ZeroSection);
    }
    validate_section(curve, p, -1, psi, "psi")?;
    let k = (n as i64 - 1) / 2;
    let exponents: Vec<i64> = (-k..=k).rev().collect();
    Ok(GradedHiggsBundle {
        base_point: p.clone(),
        exponents,
        maps: vec![psi.clone(); n - 1],
        below_standing_genus: curve.genus() < 4,
    })
}

/// The even chain: exponents `m-1, …, 1, 0, 0, -1, …, -(m-1)` with
/// `n = 2m`; the middle map is `omega`, every other map `psi`.
pub fn construct_even(
    curve: &HyperellipticCurve,
    p: &Place,
    n: usize,
    psi: &MeroForm,
    omega: &MeroForm,
) -> Result<GradedHiggsBundle, HiggsError> {
    if n < 2 || n % 2 == 1 {
        return Err(HiggsError::InvalidRank(n));
    }
    if psi.is_zero() || omega.is_zero() {
        return Err(HiggsError::ZeroSection);
    }
    validate_section(curve, p, -1, psi, "psi")?;
    validate_section(curve, p, 0, omega, "omega")?;
    let m = n as i64 / 2;
    let mut exponents: Vec<i64> = (1..m).rev().collect();
    exponents.push(0);
    exponents.push(0);
    exponents.extend((1..m).map(|e| -e));
    let mut maps = Vec::with_capacity(n - 1);
    for i in 0..n - 1 {
        if i == (n / 2) - 1 {
            maps.push(omega.clone());
        } else {
            maps.push(psi.clone());
        }
    }
    Ok(GradedHiggsBundle {
        base_point: p.clone(),
        exponents,
        maps,
        below_standing_genus: curve.genus() < 4,
    })
}

/// Verdict of the finite stability check over the tail subbundles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stability {
    Stable,
    /// the tail `⊕_{j >= tail_start} L_j` (0-indexed) has non-negative
    /// degree
    NotStable { tail_start: usize, tail_degree: i64 },
    /// a chain map vanishes, so the tail classification of invariant
    /// subbundles does not apply
    Indeterminate,
}

/// Check every proper tail `⊕_{j >= i} L_j` for negative degree
/// (`deg O(p) = 1`). Valid exactly when no chain map vanishes.
pub fn stability_certificate(bundle: &GradedHiggsBundle) -> Stability {
    if bundle.maps.iter().any(|m| m.is_zero()) {
        return Stability::Indeterminate;
    }
    let n = bundle.rank();
    for i in 1..n {
        let tail_degree: i64 = bundle.exponents[i..].iter().sum();
        if tail_degree >= 0 {
            return Stability::NotStable {
                tail_start: i,
                tail_degree,
            };
        }
    }
    Stability::Stable
}

/// The exact flat-direction count together with its ingredients.
#[derive(Clone, Debug)]
pub struct KernelCount {
    /// `3g - 3` minus the product-span dimension
    pub dim: usize,
    /// dimension of `sum_i s_i * H^0(K L^{-d_i})` inside the quadratic
    /// differentials
    pub product_dim: usize,
    /// ambient dimension `3g - 3`
    pub qd_dim: usize,
    /// the certificate of the bundle the count was taken on
    pub stability: Stability,
}

/// Serre-dual count of flat deformation directions: `3g - 3` minus the
/// exact dimension of the span of all `s_i * H^0(K L^{-d_i})`.
pub fn kernel_dimension(
    curve: &HyperellipticCurve,
    bundle: &GradedHiggsBundle,
) -> Result<KernelCount, HiggsError> {
    let qd_dim = 3 * curve.genus() - 3;
    let mut products = Vec::new();
    let mut seen: Vec<(i64, &MeroForm)> = Vec::new();
    for (s, d) in bundle.maps.iter().zip(bundle.twists()) {
        if seen.iter().any(|(d0, s0)| *d0 == d && *s0 == s) {
            continue;
        }
        seen.push((d, s));
        for eta in pairing_forms(curve, &bundle.base_point, d)? {
            products.push(s.mul(&eta, curve));
        }
    }
    let product_dim = mero_span_dim(curve, &products).ok_or_else(|| {
        HiggsError::SectionOutsideBundle("a pairing product left the holomorphic space".into())
    })?;
    Ok(KernelCount {
        dim: qd_dim - product_dim,
        product_dim,
        qd_dim,
        stability: stability_certificate(bundle),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divisor::h0;
    use crate::exact::GaussianRational;

    fn gi(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    fn curve_of_genus(g: usize) -> HyperellipticCurve {
        let pts: Vec<GaussianRational> = (0..2 * g as i64 + 2).map(gi).collect();
        HyperellipticCurve::new(pts).unwrap()
    }

    fn sample_place() -> Place {
        // x = 17 is not a branch value of curve_of_genus(g) for g <= 5
        // (branch values 0..=11), and f(17) need not be a square: the
        // one-form section spaces stay rational regardless
        Place::Affine {
            x: gi(17),
            sign: crate::divisor::Sign::Plus,
        }
    }

    #[test]
    fn odd_chain_shapes() {
        let curve = curve_of_genus(4);
        let p = sample_place();
        let psi = canonical_psi(&curve, &p).unwrap();
        let b3 = construct_odd(&curve, &p, 3, &psi).unwrap();
        assert_eq!(b3.exponents, vec![1, 0, -1]);
        let b5 = construct_odd(&curve, &p, 5, &psi).unwrap();
        assert_eq!(b5.exponents, vec![2, 1, 0, -1, -2]);
        for b in [&b3, &b5] {
            assert_eq!(b.exponents.iter().sum::<i64>(), 0);
            assert!(b.twists().iter().all(|&d| d == -1));
            assert!(!b.below_standing_genus);
        }
        assert!(matches!(
            construct_odd(&curve, &p, 4, &psi),
            Err(HiggsError::InvalidRank(4))
        ));
        let zero = MeroForm::zero(1);
        assert!(matches!(
            construct_odd(&curve, &p, 3, &zero),
            Err(HiggsError::ZeroSection)
        ));
    }

    #[test]
    fn even_chain_shapes() {
        let curve = curve_of_genus(4);
        let p = sample_place();
        let psi = canonical_psi(&curve, &p).unwrap();
        let omega = canonical_omega(&curve);
        let b4 = construct_even(&curve, &p, 4, &psi, &omega).unwrap();
        assert_eq!(b4.exponents, vec![1, 0, 0, -1]);
        assert_eq!(b4.twists(), vec![-1, 0, -1]);
        assert_eq!(b4.maps[1], omega);
        assert_eq!(b4.maps[0], psi);
        let b6 = construct_even(&curve, &p, 6, &psi, &omega).unwrap();
        assert_eq!(b6.exponents, vec![2, 1, 0, 0, -1, -2]);
        let b2 = construct_even(&curve, &p, 2, &psi, &omega).unwrap();
        assert_eq!(b2.exponents, vec![0, 0]);
        assert_eq!(b2.maps.len(), 1);
        assert_eq!(b2.maps[0], omega);
    }

    #[test]
    fn stability_follows_tail_degrees() {
        let curve = curve_of_genus(4);
        let p = sample_place();
        let psi = canonical_psi(&curve, &p).unwrap();
        let omega = canonical_omega(&curve);
        let odd = construct_odd(&curve, &p, 3, &psi).unwrap();
        assert_eq!(stability_certificate(&odd), Stability::Stable);
        let even4 = construct_even(&curve, &p, 4, &psi, &omega).unwrap();
        assert_eq!(stability_certificate(&even4), Stability::Stable);
        let even2 = construct_even(&curve, &p, 2, &psi, &omega).unwrap();
        assert_eq!(
            stability_certificate(&even2),
            Stability::NotStable {
                tail_start: 1,
                tail_degree: 0
            }
        );
        // hand-built ascending pair: tail degree is positive
        let bad = GradedHiggsBundle {
            base_point: p.clone(),
            exponents: vec![-1, 1],
            maps: vec![omega.clone()],
            below_standing_genus: false,
        };
        assert_eq!(
            stability_certificate(&bad),
            Stability::NotStable {
                tail_start: 1,
                tail_degree: 1
            }
        );
        // a vanishing map breaks the tail classification
        let mut broken = construct_odd(&curve, &p, 3, &psi).unwrap();
        broken.maps[1] = MeroForm::zero(1);
        assert_eq!(stability_certificate(&broken), Stability::Indeterminate);
    }

    #[test]
    fn odd_kernel_is_two_g_minus_three() {
        for (g, n) in [(4usize, 3usize), (4, 5), (5, 3), (5, 7)] {
            let curve = curve_of_genus(g);
            let p = sample_place();
            let psi = canonical_psi(&curve, &p).unwrap();
            let b = construct_odd(&curve, &p, n, &psi).unwrap();
            let count = kernel_dimension(&curve, &b).unwrap();
            assert_eq!(count.stability, Stability::Stable);
            assert_eq!(count.product_dim, g, "injectivity of multiplication");
            assert_eq!(count.dim, 2 * g - 3, "genus {g} rank {n}");
        }
    }

    #[test]
    fn even_kernel_bound_and_generic_value() {
        for (g, n) in [(4usize, 4usize), (5, 4), (5, 6)] {
            let curve = curve_of_genus(g);
            let p = sample_place();
            let psi = canonical_psi(&curve, &p).unwrap();
            let omega = canonical_omega(&curve);
            let b = construct_even(&curve, &p, n, &psi, &omega).unwrap();
            let count = kernel_dimension(&curve, &b).unwrap();
            assert_eq!(count.stability, Stability::Stable);
            assert!(count.dim >= g - 3, "genus {g} rank {n}");
            // the two product spaces overlap in exactly one direction for
            // the canonical sections, giving g - 2
            assert_eq!(count.dim, g - 2, "genus {g} rank {n}");
        }
    }

    #[test]
    fn rank_two_kernel_uses_only_the_middle_map() {
        let g = 4;
        let curve = curve_of_genus(g);
        let p = sample_place();
        let psi = canonical_psi(&curve, &p).unwrap();
        let omega = canonical_omega(&curve);
        let b = construct_even(&curve, &p, 2, &psi, &omega).unwrap();
        let count = kernel_dimension(&curve, &b).unwrap();
        assert_eq!(count.product_dim, g);
        assert_eq!(count.dim, 2 * g - 3);
        assert!(matches!(count.stability, Stability::NotStable { .. }));
    }

    #[test]
    fn pole_divisor_spaces_have_the_residue_forced_dimension() {
        for g in [3usize, 4, 5] {
            let curve = curve_of_genus(g);
            let places = [
                sample_place(),
                Place::Branch(gi(1)),
                Place::InfinityPlus,
            ];
            for p in places {
                let kp = Divisor::canonical(&curve).add(&Divisor::of_place(p.clone(), 1));
                assert_eq!(
                    h0(&curve, &kp).unwrap(),
                    g,
                    "h0(K + p) = g at genus {g}, p = {p:?}"
                );
            }
        }
    }

    #[test]
    fn construction_rejects_forms_outside_the_bundle() {
        let curve = curve_of_genus(4);
        let p = sample_place();
        let omega = canonical_omega(&curve);
        // omega does not vanish at p, so it is not a valid psi
        assert!(matches!(
            construct_odd(&curve, &p, 3, &omega),
            Err(HiggsError::SectionOutsideBundle(_))
        ));
        // a quadratic differential is not a one-form section at all
        let psi = canonical_psi(&curve, &p).unwrap();
        let quad = omega.mul(&omega, &curve);
        assert!(construct_even(&curve, &p, 4, &psi, &quad).is_err());
    }
}
