//! Exact dense linear algebra over a [`FieldCtx`].
//!
//! Matrices are row-major `Vec<Vec<E>>`. Sizes in this crate are small
//! (constraint systems of a few dozen rows), so plain fraction elimination
//! with first-nonzero pivoting is the right tool; all ranks, kernels and
//! solution spaces are exact.

use super::field::FieldCtx;

pub type Mat<E> = Vec<Vec<E>>;

pub fn transpose<E: Clone>(m: &Mat<E>) -> Mat<E> {
    if m.is_empty() {
        return Vec::new();
    }
    let cols = m[0].len();
    (0..cols)
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

pub fn mat_mul<C: FieldCtx>(ctx: &C, a: &Mat<C::Elem>, b: &Mat<C::Elem>) -> Mat<C::Elem> {
    let inner = if a.is_empty() { 0 } else { a[0].len() };
    assert_eq!(inner, b.len(), "dimension mismatch");
    let cols = if b.is_empty() { 0 } else { b[0].len() };
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut acc = ctx.zero();
                    for (k, x) in row.iter().enumerate() {
                        acc = ctx.add(&acc, &ctx.mul(x, &b[k][j]));
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Reduced row echelon form in place; returns the pivot column indices.
pub fn rref<C: FieldCtx>(ctx: &C, m: &mut Mat<C::Elem>) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !ctx.is_zero(&m[i][c])) else {
            continue;
        };
        m.swap(r, p);
        let inv = ctx.inv(&m[r][c]).unwrap();
        for j in c..cols {
            m[r][j] = ctx.mul(&m[r][j], &inv);
        }
        for i in 0..rows {
            if i != r && !ctx.is_zero(&m[i][c]) {
                let factor = m[i][c].clone();
                for j in c..cols {
                    let t = ctx.mul(&factor, &m[r][j]);
                    m[i][j] = ctx.sub(&m[i][j], &t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<C: FieldCtx>(ctx: &C, m: &Mat<C::Elem>) -> usize {
    let mut work = m.clone();
    rref(ctx, &mut work).len()
}

/// Basis of the right kernel `{v : M v = 0}`.
pub fn nullspace<C: FieldCtx>(ctx: &C, m: &Mat<C::Elem>) -> Vec<Vec<C::Elem>> {
    let cols = if m.is_empty() { 0 } else { m[0].len() };
    let mut work = m.clone();
    let pivots = rref(ctx, &mut work);
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![ctx.zero(); cols];
        v[free] = ctx.one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = ctx.neg(&work[row][free]);
        }
        basis.push(v);
    }
    basis
}

/// One solution of `M x = b`, or `None` if inconsistent.
pub fn solve<C: FieldCtx>(ctx: &C, m: &Mat<C::Elem>, b: &[C::Elem]) -> Option<Vec<C::Elem>> {
    let rows = m.len();
    assert_eq!(rows, b.len());
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut aug: Mat<C::Elem> = m
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(ctx, &mut aug);
    if pivots.last().is_some_and(|&p| p == cols) {
        return None; // pivot in the augmented column
    }
    let mut x = vec![ctx.zero(); cols];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[row][cols].clone();
    }
    Some(x)
}

/// Dimension of the span of a set of coordinate vectors (rows).
pub fn span_dim<C: FieldCtx>(ctx: &C, rows: &[Vec<C::Elem>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    rank(ctx, &rows.to_vec())
}
