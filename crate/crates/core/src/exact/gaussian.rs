//! Exact arithmetic in `Q(i)`: complex numbers with rational real and
//! imaginary parts.
//!
//! Every algebraic computation in this crate (curve data, divisor linear
//! algebra, multiplication maps) runs over this field so that zero tests are
//! decidable. Floating point enters only in the period quadrature and the
//! Levi-form laboratory.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

/// An element of `Q(i)`, kept in lowest terms componentwise.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        Self {
            re: BigRational::from_integer(BigInt::from(n)),
            im: BigRational::zero(),
        }
    }

    /// `num/den` as a real element. Panics if `den == 0`.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self {
            re: BigRational::new(BigInt::from(num), BigInt::from(den)),
            im: BigRational::zero(),
        }
    }

    /// `re + im*i` from integer pairs `(num, den)`.
    pub fn from_parts(re: (i64, i64), im: (i64, i64)) -> Self {
        assert!(re.1 != 0 && im.1 != 0, "zero denominator");
        Self {
            re: BigRational::new(BigInt::from(re.0), BigInt::from(re.1)),
            im: BigRational::new(BigInt::from(im.0), BigInt::from(im.1)),
        }
    }

    /// The exact value of a finite float (every `f64` is a dyadic rational).
    /// `None` for NaN or infinities.
    pub fn from_f64(x: f64) -> Option<Self> {
        Some(Self {
            re: BigRational::from_float(x)?,
            im: BigRational::zero(),
        })
    }

    pub fn i() -> Self {
        Self {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// `|z|^2 = re^2 + im^2`, an exact nonnegative rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(Self {
            re: &self.re / &n,
            im: -(&self.im / &n),
        })
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::from_int(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn to_c64(&self) -> num_complex::Complex64 {
        num_complex::Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }

    /// Exact square root in `Q(i)` when one exists, with a canonical sign:
    /// the returned root `r` has `Re r > 0`, or `Re r = 0` and `Im r >= 0`.
    ///
    /// For `z = a + bi` a root `c + di` must satisfy `c^2 - d^2 = a` and
    /// `2cd = b`; eliminating gives `c^2 = (a + |z|)/2`, so `z` is a square
    /// exactly when `|z|` and `(a + |z|)/2` are rational squares.
    pub fn sqrt_exact(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::from_int(0));
        }
        let n = rational_sqrt(&self.norm_sqr())?;
        if self.im.is_zero() {
            if self.re.is_positive() {
                let c = rational_sqrt(&self.re)?;
                return Some(Self::new(c, BigRational::zero()));
            }
            let d = rational_sqrt(&(-self.re.clone()))?;
            return Some(Self::new(BigRational::zero(), d));
        }
        let two = BigRational::from_integer(BigInt::from(2));
        let c2 = (&self.re + &n) / &two;
        let c = rational_sqrt(&c2)?;
        if c.is_zero() {
            return None; // b != 0 requires c != 0
        }
        let d = &self.im / (&two * &c);
        // c > 0 by construction of rational_sqrt, which is the canonical pick.
        let root = Self::new(c, d);
        debug_assert_eq!(&root * &root, *self);
        Some(root)
    }
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
/// Returns the nonnegative root.
pub fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let num = q.numer().sqrt();
    let den = q.denom().sqrt();
    if &(&num * &num) == q.numer() && &(&den * &den) == q.denom() {
        Some(BigRational::new(num, den))
    } else {
        None
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident, |$a:ident, $b:ident| $body:expr) => {
        impl<'a, 'b> $trait<&'b GaussianRational> for &'a GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &'b GaussianRational) -> GaussianRational {
                let ($a, $b) = (self, rhs);
                $body
            }
        }
        impl $trait for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
    };
}

impl_binop!(Add, add, |a, b| GaussianRational::new(
    &a.re + &b.re,
    &a.im + &b.im
));
impl_binop!(Sub, sub, |a, b| GaussianRational::new(
    &a.re - &b.re,
    &a.im - &b.im
));
impl_binop!(Mul, mul, |a, b| GaussianRational::new(
    &a.re * &b.re - &a.im * &b.im,
    &a.re * &b.im + &a.im * &b.re
));
impl_binop!(Div, div, |a, b| {
    let inv = b.inv().expect("division by zero in Q(i)");
    a * &inv
});

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for GaussianRational {
    /// Canonical wire format: `"re"`, `"imi"`, `"re+imi"` or `"re-imi"`,
    /// with each part `num` or `num/den`, e.g. `"1/2-2/3i"`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", fmt_rational(&self.re));
        }
        if self.re.is_zero() {
            return write!(f, "{}i", fmt_rational(&self.im));
        }
        if self.im.is_negative() {
            write!(
                f,
                "{}-{}i",
                fmt_rational(&self.re),
                fmt_rational(&(-self.im.clone()))
            )
        } else {
            write!(f, "{}+{}i", fmt_rational(&self.re), fmt_rational(&self.im))
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Debug, thiserror::Error)]
#[error("malformed Q(i) literal {0:?} (expected e.g. \"3\", \"-1/2\", \"1/2+1/3i\", \"2i\")")]
pub struct ParseGaussianError(String);

impl FromStr for GaussianRational {
    type Err = ParseGaussianError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || ParseGaussianError(s.to_string());
        if compact.is_empty() {
            return Err(bad());
        }
        // Scan one signed rational starting at `at`; return (value, next index).
        let scan = |at: usize| -> Option<(BigRational, usize)> {
            let bytes = compact.as_bytes();
            let mut j = at;
            if j < bytes.len() && (bytes[j] == b'+' || bytes[j] == b'-') {
                j += 1;
            }
            let num_start = j;
            while j < bytes.len() && bytes[j].is_ascii_digit() {
                j += 1;
            }
            if j == num_start {
                return None;
            }
            let mut end = j;
            if j < bytes.len() && bytes[j] == b'/' {
                j += 1;
                let den_start = j;
                while j < bytes.len() && bytes[j].is_ascii_digit() {
                    j += 1;
                }
                if j == den_start {
                    return None;
                }
                end = j;
            }
            let text = &compact[at..end];
            let value = if let Some((n, d)) = text.split_once('/') {
                let den = BigInt::from_str(d).ok()?;
                if den.is_zero() {
                    return None;
                }
                BigRational::new(BigInt::from_str(n).ok()?, den)
            } else {
                BigRational::from_integer(BigInt::from_str(text).ok()?)
            };
            Some((value, end))
        };

        let (first, after_first) = scan(0).ok_or_else(bad)?;
        if after_first == compact.len() {
            return Ok(Self::new(first, BigRational::zero()));
        }
        if &compact[after_first..] == "i" {
            return Ok(Self::new(BigRational::zero(), first));
        }
        let (second, after_second) = scan(after_first).ok_or_else(bad)?;
        if &compact[after_second..] == "i" {
            Ok(Self::new(first, second))
        } else {
            Err(bad())
        }
    }
}

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
