//! Exact and numerical study of harmonic-map energy on families of
//! hyperelliptic curves.
//!
//! The library has two layers:
//!
//! * an **exact layer** over `Q(i)` — curve models `y^2 = f(x)` with
//!   rational branch points, holomorphic and quadratic differentials,
//!   Riemann-Roch spaces, multiplication maps and graded Higgs bundles —
//!   where every dimension and rank is computed by decidable linear algebra;
//! * a **numerical layer** — period matrices by adaptive quadrature over a
//!   certified symplectic homology basis, harmonic 1-form energies, and
//!   finite-difference Levi forms of the energy as branch points move —
//!   where every floating-point claim is guarded by explicit tolerances and
//!   cross-checks (symmetry, positivity, bilinear residuals, step halving).
//!
//! The two layers meet in the kernel predictions: exact annihilator
//! dimensions on the algebraic side must match the near-null eigenspaces of
//! numerically computed Levi forms.

pub mod curve;
pub mod divisor;
pub mod energy;
pub mod exact;
pub mod higgs;
pub mod homology;
pub mod levi;
pub mod numeric;
pub mod periods;
pub mod sampling;
pub mod spectral;
pub mod sweeps;

pub use curve::{Differential, HyperellipticCurve, MobiusMap};
pub use exact::GaussianRational;
