//! Coefficient fields for the exact linear algebra.
//!
//! Divisor computations mostly run over `Q(i)`, but a divisor may name a
//! single affine point whose `y`-coordinate generates a quadratic extension
//! `Q(i)[w]/(w^2 - q)` (with `q = f(x0)` not a square). Rather than hard-code
//! two copies of the elimination routines, they are generic over a small
//! field-context trait whose element type carries no global state.

use super::gaussian::GaussianRational;
use std::fmt::Debug;

pub trait FieldCtx {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `None` exactly on zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// Embed a base-field scalar.
    fn embed(&self, a: &GaussianRational) -> Self::Elem;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let inv = self.inv(b).expect("division by zero");
        self.mul(a, &inv)
    }
}

/// The base field `Q(i)` itself.
#[derive(Clone, Copy, Debug, Default)]
pub struct Qi;

impl FieldCtx for Qi {
    type Elem = GaussianRational;

    fn zero(&self) -> Self::Elem {
        GaussianRational::from_int(0)
    }
    fn one(&self) -> Self::Elem {
        GaussianRational::from_int(1)
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a + b
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a - b
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a * b
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        -a
    }
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        a.inv()
    }
    fn embed(&self, a: &GaussianRational) -> Self::Elem {
        a.clone()
    }
}

/// Element `a + b*w` of `Q(i)[w]/(w^2 - q)`.
#[derive(Clone, PartialEq, Debug)]
pub struct QuadElem {
    pub a: GaussianRational,
    pub b: GaussianRational,
}

impl QuadElem {
    pub fn base(a: GaussianRational) -> Self {
        Self {
            a,
            b: GaussianRational::from_int(0),
        }
    }

    pub fn w() -> Self {
        Self {
            a: GaussianRational::from_int(0),
            b: GaussianRational::from_int(1),
        }
    }
}

/// The quadratic extension of `Q(i)` by a square root `w` of a fixed
/// non-square `q`. Non-squareness makes the norm `a^2 - q b^2` vanish only
/// at zero, so the structure is a field.
#[derive(Clone, Debug)]
pub struct QuadCtx {
    pub q: GaussianRational,
}

impl QuadCtx {
    pub fn new(q: GaussianRational) -> Self {
        debug_assert!(
            q.sqrt_exact().is_none(),
            "quadratic extension modulus must be a non-square"
        );
        Self { q }
    }
}

impl FieldCtx for QuadCtx {
    type Elem = QuadElem;

    fn zero(&self) -> Self::Elem {
        QuadElem::base(GaussianRational::from_int(0))
    }
    fn one(&self) -> Self::Elem {
        QuadElem::base(GaussianRational::from_int(1))
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.a.is_zero() && a.b.is_zero()
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        QuadElem {
            a: &a.a + &b.a,
            b: &a.b + &b.b,
        }
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        QuadElem {
            a: &a.a - &b.a,
            b: &a.b - &b.b,
        }
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        // (a1 + b1 w)(a2 + b2 w) = a1 a2 + q b1 b2 + (a1 b2 + b1 a2) w
        QuadElem {
            a: &(&a.a * &b.a) + &(&(&a.b * &b.b) * &self.q),
            b: &(&a.a * &b.b) + &(&a.b * &b.a),
        }
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        QuadElem {
            a: -&a.a,
            b: -&a.b,
        }
    }
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        if self.is_zero(a) {
            return None;
        }
        let norm = &(&a.a * &a.a) - &(&(&a.b * &a.b) * &self.q);
        let ninv = norm
            .inv()
            .expect("nonzero element with zero norm: modulus was a square");
        Some(QuadElem {
            a: &a.a * &ninv,
            b: &(-&a.b) * &ninv,
        })
    }
    fn embed(&self, a: &GaussianRational) -> Self::Elem {
        QuadElem::base(a.clone())
    }
}
