//! Truncated power series over `Q(i)`, used for local expansions at curve
//! places (branch points, the two points over `x = infinity`, and rational
//! affine points).
//!
//! A series is a plain coefficient vector of a fixed truncation length; all
//! operations stay exact.

use super::gaussian::GaussianRational;

pub type Series = Vec<GaussianRational>;

pub fn series_from_poly(coeffs: &[GaussianRational], len: usize) -> Series {
    let mut out = vec![GaussianRational::from_int(0); len];
    for (k, c) in coeffs.iter().take(len).enumerate() {
        out[k] = c.clone();
    }
    out
}

pub fn series_mul(a: &Series, b: &Series, len: usize) -> Series {
    let mut out = vec![GaussianRational::from_int(0); len];
    for (i, ai) in a.iter().enumerate().take(len) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if i + j >= len {
                break;
            }
            out[i + j] = &out[i + j] + &(ai * bj);
        }
    }
    out
}

/// Multiplicative inverse of a series with nonzero constant term.
pub fn series_inv(a: &Series, len: usize) -> Series {
    let c0 = a.first().expect("empty series");
    let c0_inv = c0.inv().expect("series with zero constant term");
    let mut out = vec![GaussianRational::from_int(0); len];
    out[0] = c0_inv.clone();
    for n in 1..len {
        // coefficient n of a * out must vanish
        let mut acc = GaussianRational::from_int(0);
        for k in 1..=n {
            let ak = a.get(k).cloned().unwrap_or_else(|| GaussianRational::from_int(0));
            if ak.is_zero() {
                continue;
            }
            acc = &acc + &(&ak * &out[n - k]);
        }
        out[n] = &(-acc) * &c0_inv;
    }
    out
}

/// Square root of a series with constant term 1, normalized to constant
/// term 1. Coefficients follow the recurrence
/// `r_n = (s_n - sum_{k=1}^{n-1} r_k r_{n-k}) / 2`.
pub fn series_sqrt_unit(s: &Series, len: usize) -> Series {
    assert!(
        s.first().is_some_and(|c| *c == GaussianRational::from_int(1)),
        "series square root requires constant term 1"
    );
    let half = GaussianRational::from_ratio(1, 2);
    let mut r = vec![GaussianRational::from_int(0); len];
    r[0] = GaussianRational::from_int(1);
    for n in 1..len {
        let mut acc = s.get(n).cloned().unwrap_or_else(|| GaussianRational::from_int(0));
        for k in 1..n {
            acc = &acc - &(&r[k] * &r[n - k]);
        }
        r[n] = &acc * &half;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Series {
        v.iter().map(|&n| GaussianRational::from_int(n)).collect()
    }

    #[test]
    fn inverse_is_two_sided() {
        let a = ints(&[2, -1, 3, 0, 5]);
        let inv = series_inv(&a, 8);
        let prod = series_mul(&a, &inv, 8);
        assert_eq!(prod[0], GaussianRational::from_int(1));
        assert!(prod[1..].iter().all(|c| c.is_zero()));
    }

    #[test]
    fn sqrt_squares_back() {
        let s = ints(&[1, 4, -2, 1, 0, 7]);
        let r = series_sqrt_unit(&s, 9);
        let sq = series_mul(&r, &r, 9);
        for k in 0..6 {
            assert_eq!(sq[k], s.get(k).cloned().unwrap_or(GaussianRational::from_int(0)));
        }
    }
}
