//! Exact arithmetic foundation: `Q(i)` scalars, univariate polynomials,
//! truncated power series, an optional quadratic field extension, and
//! field-generic dense linear algebra.

pub mod field;
pub mod gaussian;
pub mod linalg;
pub mod poly;
pub mod series;

pub use field::{FieldCtx, Qi, QuadCtx, QuadElem};
pub use gaussian::{rational_sqrt, GaussianRational};
pub use poly::Poly;
