//! Energy of a rank-one character and the exact kernel of its Levi form.
//!
//! A character with modulus periods `(a, b)` over the `(A, B)` cycles is
//! represented by a unique holomorphic one-form `phi = sum u_k omega_k` in
//! the normalized basis (`A`-periods of `omega_k` the standard ones): the
//! real-part matching conditions `Re u = a`, `Re(tau u) = b` solve to
//!
//! ```text
//! u = a + i (Im tau)^{-1} ((Re tau) a - b).
//! ```
//!
//! The energy is the positive Hermitian form `E = u^H (Im tau) u`, which
//! also reads `a^T (Im tau) a + s^T (Im tau) s` with `s = Im u`.
//!
//! Directions of curve deformation that keep the energy stationary to
//! second order pair, through Serre duality, with quadratic differentials
//! annihilating the product space `phi * H^0(K)`. That annihilator is exact
//! linear algebra over the Gaussian rationals: the multiplication map by a
//! nonzero one-form is injective, so the annihilator has dimension
//! `(3g - 3) - g = 2g - 3` — the count this crate exists to check. On the
//! numerical side, the same space is predicted from finite differences of
//! the period matrix: a direction `v` is flat exactly when `(∂_v tau) u = 0`.

use crate::curve::{Differential, HyperellipticCurve};
use crate::exact::linalg::nullspace;
use crate::exact::{GaussianRational, Qi};
use crate::numeric::near_null_space;
use crate::periods::PeriodData;
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Bound on `max|Re(tau u) - b|` for an accepted harmonic representative.
pub const TOL_PHI_RESIDUAL: f64 = 1e-8;

#[derive(Debug, thiserror::Error)]
pub enum EnergyError {
    #[error("Im tau is numerically singular; the period data cannot be trusted")]
    SingularImTau,
    #[error("character has {got} period pairs, the curve has genus {expected}")]
    WrongLength { got: usize, expected: usize },
}

/// A character of the surface group with values in the nonzero complex
/// numbers, described by what the energy actually depends on: the periods
/// `(a, b)` of the class `-1/2 log|rho|` over the marked `(A, B)` cycles.
/// The unitary angles do not move the energy and are carried only for
/// reporting.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AbelianCharacter {
    pub a: Vec<f64>,
    pub b: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unitary_angles: Option<Vec<f64>>,
}

impl AbelianCharacter {
    pub fn new(a: Vec<f64>, b: Vec<f64>) -> Self {
        Self {
            a,
            b,
            unitary_angles: None,
        }
    }

    pub fn zero(genus: usize) -> Self {
        Self::new(vec![0.0; genus], vec![0.0; genus])
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().chain(&self.b).all(|&x| x == 0.0)
    }
}

/// The holomorphic one-form (in normalized-basis coefficients) whose real
/// part represents the character's modulus class.
#[derive(Clone, Debug)]
pub struct HarmonicRepresentative {
    pub u: DVector<Complex64>,
    /// `Im u`
    pub s: DVector<f64>,
    /// `max|Re(tau u) - b|`
    pub residual: f64,
}

fn check_lengths(periods: &PeriodData, chi: &AbelianCharacter) -> Result<usize, EnergyError> {
    let g = periods.tau.nrows();
    for len in [chi.a.len(), chi.b.len()] {
        if len != g {
            return Err(EnergyError::WrongLength {
                got: len,
                expected: g,
            });
        }
    }
    Ok(g)
}

pub fn solve_phi(
    periods: &PeriodData,
    chi: &AbelianCharacter,
) -> Result<HarmonicRepresentative, EnergyError> {
    let g = check_lengths(periods, chi)?;
    let re_tau = DMatrix::from_fn(g, g, |i, k| periods.tau[(i, k)].re);
    let im_tau = DMatrix::from_fn(g, g, |i, k| periods.tau[(i, k)].im);
    let a = DVector::from_column_slice(&chi.a);
    let b = DVector::from_column_slice(&chi.b);
    let rhs = &re_tau * &a - &b;
    let s = im_tau
        .clone()
        .cholesky()
        .ok_or(EnergyError::SingularImTau)?
        .solve(&rhs);
    let u = DVector::from_fn(g, |i, _| Complex64::new(a[i], s[i]));
    let residual = (0..g)
        .map(|i| {
            let tu: Complex64 = (0..g).map(|k| periods.tau[(i, k)] * u[k]).sum();
            (tu.re - b[i]).abs()
        })
        .fold(0.0, f64::max);
    Ok(HarmonicRepresentative { u, s, residual })
}

/// `E = u^H (Im tau) u` for the harmonic representative of the character.
pub fn energy(periods: &PeriodData, chi: &AbelianCharacter) -> Result<f64, EnergyError> {
    let rep = solve_phi(periods, chi)?;
    Ok(energy_of_u(periods, &rep.u))
}

/// The energy form evaluated on explicit coefficients.
pub fn energy_of_u(periods: &PeriodData, u: &DVector<Complex64>) -> f64 {
    let g = periods.tau.nrows();
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..g {
        for k in 0..g {
            acc += u[i].conj() * Complex64::new(periods.tau[(i, k)].im, 0.0) * u[k];
        }
    }
    acc.re
}

/// Exact annihilator of `phi * H^0(K)` inside the dual of the quadratic
/// differentials, in the monomial-block coordinates of
/// [`HyperellipticCurve::quadratic_basis`].
#[derive(Clone, Debug)]
pub struct Annihilator {
    /// functionals on the quadratic-differential coordinates, one per row
    pub basis: Vec<Vec<GaussianRational>>,
    pub dim: usize,
    /// dimension of `phi * H^0(K)` itself
    pub image_dim: usize,
    /// the supplied form was zero, so the annihilator is everything
    pub zero_form: bool,
}

/// Functionals on the space of quadratic differentials vanishing on
/// `phi * H^0(K)`, exactly. For nonzero holomorphic `phi` the
/// multiplication map is injective, so the dimension is `2g - 3` once
/// `g >= 2`.
pub fn kernel_annihilator(curve: &HyperellipticCurve, phi: &Differential) -> Annihilator {
    assert_eq!(phi.weight, 1, "phi must be a one-form");
    assert!(phi.is_holomorphic(curve), "phi must be holomorphic");
    let qd_dim = 3 * curve.genus() - 3;
    let zero_form = phi.numerator.is_zero();
    if zero_form {
        let mut basis = Vec::with_capacity(qd_dim);
        for i in 0..qd_dim {
            let mut row = vec![GaussianRational::from_int(0); qd_dim];
            row[i] = GaussianRational::from_int(1);
            basis.push(row);
        }
        return Annihilator {
            basis,
            dim: qd_dim,
            image_dim: 0,
            zero_form,
        };
    }
    let m = multiplication_matrix(curve, phi);
    // functionals lambda with lambda^T M = 0, i.e. the nullspace of M^T
    let mt: Vec<Vec<GaussianRational>> = (0..m[0].len())
        .map(|i| (0..m.len()).map(|k| m[k][i].clone()).collect())
        .collect();
    let basis = nullspace(&Qi, &mt);
    let dim = basis.len();
    Annihilator {
        basis,
        dim,
        image_dim: qd_dim - dim,
        zero_form,
    }
}

/// Coordinates of `phi * omega_k` for the one-form basis, as the columns of
/// a `(3g-3) x g` matrix over the Gaussian rationals.
pub fn multiplication_matrix(
    curve: &HyperellipticCurve,
    phi: &Differential,
) -> Vec<Vec<GaussianRational>> {
    let g = curve.genus();
    let qd_dim = 3 * g - 3;
    let phi_mero = phi.to_mero(curve);
    let mut matrix = vec![vec![GaussianRational::from_int(0); g]; qd_dim];
    for (k, omega) in curve.one_form_basis().iter().enumerate() {
        let product = phi_mero.mul(&omega.to_mero(curve), curve);
        let (u, v) = product
            .coordinates(curve)
            .expect("product of holomorphic forms is holomorphic");
        for (i, c) in u.into_iter().chain(v).enumerate() {
            matrix[i][k] = c;
        }
    }
    matrix
}

/// The finite-difference kernel prediction: the map `v -> (∂_v tau) u`
/// assembled over a basis of deformation directions, its singular values,
/// and the near-null directions.
#[derive(Clone, Debug)]
pub struct KernelPrediction {
    /// `g x ndirs`; column `v` is `(∂_v tau) u`
    pub map: DMatrix<Complex64>,
    /// ascending singular values of the map
    pub singular_values: Vec<f64>,
    /// directions with singular value below `rel_tol * sigma_max`
    pub kernel: Vec<DVector<Complex64>>,
}

impl KernelPrediction {
    /// `Q(v) = ((∂_v tau) u)^H (Im tau)^{-1} ((∂_v tau) u)`: the energy-scaled
    /// flatness defect of a direction (zero exactly on the kernel).
    pub fn flatness_defect(&self, periods: &PeriodData, v: &DVector<Complex64>) -> f64 {
        let g = periods.tau.nrows();
        let w = &self.map * v;
        let im_tau = DMatrix::from_fn(g, g, |i, k| periods.tau[(i, k)].im);
        let chol = im_tau.cholesky().expect("certified Im tau is positive");
        let real = DVector::from_fn(g, |i, _| w[i].re);
        let imag = DVector::from_fn(g, |i, _| w[i].im);
        let sr = chol.solve(&real);
        let si = chol.solve(&imag);
        real.dot(&sr) + imag.dot(&si)
    }
}

/// Assemble the predicted kernel map from directional derivatives of `tau`.
pub fn predicted_kernel_map(
    dtau: &[DMatrix<Complex64>],
    u: &DVector<Complex64>,
    rel_tol: f64,
) -> KernelPrediction {
    let g = u.len();
    let map = DMatrix::from_fn(g, dtau.len(), |i, v| {
        (0..g).map(|k| dtau[v][(i, k)] * u[k]).sum()
    });
    let (singular_values, kernel) = near_null_space(&map, rel_tol);
    KernelPrediction {
        map,
        singular_values,
        kernel,
    }
}
