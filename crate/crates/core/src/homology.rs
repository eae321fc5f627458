//! A symplectic homology basis from a branch-point spine.
//!
//! The branch points are joined in a chosen order by straight segments (the
//! *spine*). When the spine is an embedded polyline, the `2g + 1` chain
//! cycles `c_j` — each encircling one consecutive pair — intersect in the
//! chain pattern
//!
//! ```text
//! c_j . c_{j+1} = 1,     c_j . c_k = 0  for |j - k| >= 2,
//! ```
//!
//! and the words
//!
//! ```text
//! A_i = c_{2i-1},        B_i = c_{2i} + c_{2i+2} + ... + c_{2g}
//! ```
//!
//! (1-indexed) satisfy `A_i . B_j = delta_ij`, `A . A = B . B = 0`: a
//! symplectic basis. All of this is integer bookkeeping, verified by
//! [`Homology::intersection_matrix`].
//!
//! The marked branch-point order is used as the spine whenever its polyline
//! is embedded — decided by exact rational orientation predicates, so the
//! choice is reproducible. Otherwise the points are sorted along a direction
//! in which all projections are distinct, which makes the polyline monotone
//! and hence embedded.

use crate::curve::HyperellipticCurve;
use crate::exact::GaussianRational;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

/// The spine order plus the chain words of the symplectic basis.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Homology {
    /// permutation of the marked branch-point indices; consecutive entries
    /// bound the chain segments
    pub spine: Vec<usize>,
    /// true when the marked order itself was embedded and used verbatim
    pub marked_order_used: bool,
    /// `a_words[i][j]` = coefficient of chain `c_j` in `A_i` (0-indexed)
    pub a_words: Vec<Vec<i64>>,
    /// `b_words[i][j]` = coefficient of chain `c_j` in `B_i`
    pub b_words: Vec<Vec<i64>>,
}

impl Homology {
    pub fn new(curve: &HyperellipticCurve) -> Self {
        let pts = curve.branch_points();
        let spine = spine_order(pts);
        let g = curve.genus();
        let n_chains = 2 * g + 1;
        let mut a_words = vec![vec![0i64; n_chains]; g];
        let mut b_words = vec![vec![0i64; n_chains]; g];
        for i in 0..g {
            a_words[i][2 * i] = 1;
            for m in i..g {
                b_words[i][2 * m + 1] = 1;
            }
        }
        let h = Self {
            spine,
            marked_order_used: is_embedded_polyline(pts, &identity_order(pts.len())),
            a_words,
            b_words,
        };
        debug_assert!(h.intersection_matrix_is_symplectic());
        h
    }

    pub fn genus(&self) -> usize {
        self.a_words.len()
    }

    /// Number of chain cycles `c_j`.
    pub fn chain_count(&self) -> usize {
        2 * self.genus() + 1
    }

    /// Intersection of two chain words under the chain pattern
    /// `c_j . c_{j+1} = +1`.
    pub fn chain_intersection(u: &[i64], v: &[i64]) -> i64 {
        let n = u.len();
        let mut acc = 0;
        for j in 0..n.saturating_sub(1) {
            acc += u[j] * v[j + 1] - u[j + 1] * v[j];
        }
        acc
    }

    /// The full `2g x 2g` intersection matrix of `(A_1..A_g, B_1..B_g)`.
    pub fn intersection_matrix(&self) -> Vec<Vec<i64>> {
        let g = self.genus();
        let words: Vec<&Vec<i64>> = self.a_words.iter().chain(self.b_words.iter()).collect();
        (0..2 * g)
            .map(|i| {
                (0..2 * g)
                    .map(|j| Self::chain_intersection(words[i], words[j]))
                    .collect()
            })
            .collect()
    }

    /// Does the basis satisfy `A_i . B_j = delta`, `A . A = B . B = 0`?
    pub fn intersection_matrix_is_symplectic(&self) -> bool {
        let g = self.genus();
        let m = self.intersection_matrix();
        for i in 0..2 * g {
            for j in 0..2 * g {
                let expect = if j == i + g {
                    1
                } else if i == j + g {
                    -1
                } else {
                    0
                };
                if m[i][j] != expect {
                    return false;
                }
            }
        }
        true
    }

    /// The branch points in spine order.
    pub fn spine_points<'a>(&self, curve: &'a HyperellipticCurve) -> Vec<&'a GaussianRational> {
        self.spine
            .iter()
            .map(|&i| &curve.branch_points()[i])
            .collect()
    }
}

fn identity_order(n: usize) -> Vec<usize> {
    (0..n).collect()
}

/// The spine: the marked order when embedded, else a monotone order.
pub fn spine_order(pts: &[GaussianRational]) -> Vec<usize> {
    let id = identity_order(pts.len());
    if is_embedded_polyline(pts, &id) {
        return id;
    }
    monotone_order(pts)
}

/// Sort indices by the projection `re + r im` for the first rational `r`
/// making all projections distinct; the polyline is then strictly monotone.
fn monotone_order(pts: &[GaussianRational]) -> Vec<usize> {
    let candidates: Vec<BigRational> = (0..)
        .map(|k| match k {
            0 => BigRational::zero(),
            _ => {
                // 1, -1, 1/2, -1/2, 1/3, -1/3, ...
                let j = ((k - 1) / 2 + 1) as i64;
                let sign = if k % 2 == 1 { 1 } else { -1 };
                BigRational::new(BigInt::from(sign), BigInt::from(j))
            }
        })
        .take(2 * pts.len() * pts.len() + 2)
        .collect();
    for r in &candidates {
        let keys: Vec<BigRational> = pts.iter().map(|p| &p.re + &p.im * r).collect();
        let mut distinct = true;
        'outer: for i in 0..keys.len() {
            for j in i + 1..keys.len() {
                if keys[i] == keys[j] {
                    distinct = false;
                    break 'outer;
                }
            }
        }
        if distinct {
            let mut order = identity_order(pts.len());
            order.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
            return order;
        }
    }
    unreachable!("each coincident pair excludes exactly one slope; the candidate list is larger")
}

// ---------------------------------------------------------------------------
// exact planar predicates
// ---------------------------------------------------------------------------

type Pt = (BigRational, BigRational);

fn pt(p: &GaussianRational) -> Pt {
    (p.re.clone(), p.im.clone())
}

/// Sign of the cross product `(q - p) x (r - p)`: counterclockwise > 0.
fn orient(p: &Pt, q: &Pt, r: &Pt) -> i32 {
    let v = (&q.0 - &p.0) * (&r.1 - &p.1) - (&q.1 - &p.1) * (&r.0 - &p.0);
    if v.is_zero() {
        0
    } else if v > BigRational::zero() {
        1
    } else {
        -1
    }
}

fn in_box(p: &Pt, a: &Pt, b: &Pt) -> bool {
    let (lo0, hi0) = if a.0 <= b.0 { (&a.0, &b.0) } else { (&b.0, &a.0) };
    let (lo1, hi1) = if a.1 <= b.1 { (&a.1, &b.1) } else { (&b.1, &a.1) };
    lo0 <= &p.0 && &p.0 <= hi0 && lo1 <= &p.1 && &p.1 <= hi1
}

/// Closed-segment intersection test, exact.
fn segments_intersect(a: &Pt, b: &Pt, c: &Pt, d: &Pt) -> bool {
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);
    if o1 != o2 && o3 != o4 {
        return true;
    }
    (o1 == 0 && in_box(c, a, b))
        || (o2 == 0 && in_box(d, a, b))
        || (o3 == 0 && in_box(a, c, d))
        || (o4 == 0 && in_box(b, c, d))
}

/// Is the open polyline through `pts[order[0..n]]` embedded? Adjacent
/// segments may only share their common vertex; all other pairs must be
/// disjoint, and no vertex may lie on a non-incident segment.
pub fn is_embedded_polyline(pts: &[GaussianRational], order: &[usize]) -> bool {
    let p: Vec<Pt> = order.iter().map(|&i| pt(&pts[i])).collect();
    let n = p.len();
    // a vertex on a segment it does not bound
    for (k, v) in p.iter().enumerate() {
        for s in 0..n - 1 {
            if k == s || k == s + 1 {
                continue;
            }
            if orient(&p[s], &p[s + 1], v) == 0 && in_box(v, &p[s], &p[s + 1]) {
                return false;
            }
        }
    }
    for s in 0..n - 1 {
        // adjacent segments can only meet beyond the shared vertex by
        // overlapping along a line, which puts a vertex of one inside the
        // other — already rejected by the vertex test above
        for t in s + 2..n - 1 {
            if segments_intersect(&p[s], &p[s + 1], &p[t], &p[t + 1]) {
                return false;
            }
        }
    }
    true
}
