//! Dense univariate polynomials over `Q(i)`.
//!
//! Coefficients are stored ascending with no trailing zeros, so the zero
//! polynomial is the empty vector and `degree` is `None` for it. Everything
//! here is exact; these polynomials carry the curve equations, differential
//! numerators and section data.

use super::gaussian::GaussianRational;
use num_complex::Complex64;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Serialized as the ascending coefficient list.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "Vec<GaussianRational>", into = "Vec<GaussianRational>")]
pub struct Poly {
    coeffs: Vec<GaussianRational>,
}

impl From<Vec<GaussianRational>> for Poly {
    fn from(coeffs: Vec<GaussianRational>) -> Self {
        Poly::new(coeffs)
    }
}

impl From<Poly> for Vec<GaussianRational> {
    fn from(p: Poly) -> Self {
        p.coeffs
    }
}

impl Poly {
    pub fn new(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::from_int(1))
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::monomial(1, GaussianRational::from_int(1))
    }

    /// `c * x^k`
    pub fn monomial(k: usize, c: GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![GaussianRational::from_int(0); k + 1];
        coeffs[k] = c;
        Self { coeffs }
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| GaussianRational::from_int(c)).collect())
    }

    /// Monic polynomial with the given roots.
    pub fn from_roots(roots: &[GaussianRational]) -> Self {
        let mut p = Self::one();
        for r in roots {
            p = &p * &Self::new(vec![-r, GaussianRational::from_int(1)]);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Degree with `deg 0 = -1`, convenient for bound arithmetic.
    pub fn deg_i(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, k: usize) -> GaussianRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| GaussianRational::from_int(0))
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&GaussianRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &GaussianRational) -> GaussianRational {
        let mut acc = GaussianRational::from_int(0);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn eval_c64(&self, x: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_c64();
        }
        acc
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &GaussianRational::from_int(k as i64))
                .collect(),
        )
    }

    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    /// Panics if `d` is zero.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dlc = d.leading().unwrap().clone();
        let dd = d.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() < d.coeffs.len() {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![GaussianRational::from_int(0); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = rem[k].clone();
            if c.is_zero() {
                continue;
            }
            let q = &c / &dlc;
            for j in 0..dd {
                rem[k - dd + j] = &rem[k - dd + j] - &(&q * &d.coeffs[j]);
            }
            rem[k] = GaussianRational::from_int(0);
            quot[k - dd] = q;
        }
        (Poly::new(quot), Poly::new(rem))
    }

    /// Exact division; `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (q, r) = self.divrem(d);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(lc) => {
                let inv = lc.inv().unwrap();
                self.scale(&inv)
            }
        }
    }

    /// Multiplicity of `r` as a root.
    pub fn root_multiplicity(&self, r: &GaussianRational) -> usize {
        if self.is_zero() {
            return usize::MAX; // conventionally infinite
        }
        let lin = Poly::new(vec![-r, GaussianRational::from_int(1)]);
        let mut m = 0;
        let mut p = self.clone();
        loop {
            let (q, rem) = p.divrem(&lin);
            if !rem.is_zero() {
                return m;
            }
            m += 1;
            p = q;
        }
    }

    /// All coefficients of `p(x0 + z)` as a polynomial in `z`.
    pub fn taylor_at(&self, x0: &GaussianRational) -> Vec<GaussianRational> {
        // Repeated synthetic division by (x - x0); remainders are the shifted
        // coefficients in ascending order.
        let mut work = self.coeffs.clone();
        let n = work.len();
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            // One Horner pass over work[k..], leaving the remainder at work[k].
            for j in (k..n - 1).rev() {
                let t = &work[j + 1] * x0;
                work[j] = &work[j] + &t;
            }
            out.push(work[k].clone());
        }
        out
    }

    /// Reversal against a fixed formal degree `d >= deg(self)`:
    /// returns the coefficient vector of `s^d * p(1/s)`, length `d + 1`.
    pub fn reverse_fixed(&self, d: usize) -> Vec<GaussianRational> {
        assert!(self.deg_i() <= d as i64, "formal degree too small");
        let mut out = vec![GaussianRational::from_int(0); d + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[d - k] = c.clone();
        }
        out
    }

    /// Exact square root if `self` is the square of a polynomial.
    pub fn sqrt_exact(&self) -> Option<Poly> {
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let deg = self.degree().unwrap();
        if deg % 2 != 0 {
            return None;
        }
        let lc_root = self.leading().unwrap().sqrt_exact()?;
        let half = deg / 2;
        let mut s = Poly::monomial(half, lc_root);
        // Peel leading terms of the residual; each step determines the next
        // lower coefficient of s uniquely (char 0).
        loop {
            let r = self - &(&s * &s);
            if r.is_zero() {
                return Some(s);
            }
            let rd = r.degree().unwrap();
            if rd < half {
                return None;
            }
            let two_lc = &(GaussianRational::from_int(2) * s.leading().unwrap().clone());
            let t = Poly::monomial(rd - half, r.leading().unwrap() / two_lc);
            s = &s + &t;
        }
    }

    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        self.gcd(&self.derivative()).degree() == Some(0)
    }
}

impl std::ops::Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(&self.coeff(k) + &rhs.coeff(k));
        }
        Poly::new(out)
    }
}

impl std::ops::Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(&self.coeff(k) - &rhs.coeff(k));
        }
        Poly::new(out)
    }
}

impl std::ops::Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out =
            vec![GaussianRational::from_int(0); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::new(out)
    }
}

impl std::ops::Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Poly {
    /// Human-readable ascending form, e.g. `1/2 - 2*x + (1+1i)*x^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let needs_parens = !c.is_real() && !c.re.is_zero();
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{text}")?,
                _ => {
                    if needs_parens {
                        write!(f, "({text})")?;
                    } else {
                        write!(f, "{text}")?;
                    }
                    if k == 1 {
                        write!(f, "*x")?;
                    } else {
                        write!(f, "*x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
