//! Dense numerical helpers for complex Hermitian problems.
//!
//! A Hermitian matrix `H = X + iY` embeds as the real symmetric matrix
//! `[[X, -Y], [Y, X]]`; each complex eigenpair `(lambda, v)` of `H` shows up
//! twice in the embedding, as `(Re v, Im v)` and `(-Im v, Re v)`. The
//! spectrum is recovered by running a real symmetric eigensolver and
//! deduplicating each pair, which keeps every downstream eigenvalue question
//! (definiteness, near-null spaces, principal angles) on the well-trodden
//! real symmetric path.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

/// Relative spread below which real-embedded eigenvalues are treated as one
/// cluster when pairing off the duplicated eigenvectors.
pub const TOL_EIGEN_CLUSTER: f64 = 1e-9;

/// Eigenvalues (ascending) and a unitary set of eigenvectors of a complex
/// Hermitian matrix. The input is symmetrized as `(H + H^H)/2` first; pass
/// an honestly Hermitian matrix and that is a no-op.
pub fn hermitian_eigen(h: &DMatrix<Complex64>) -> (Vec<f64>, Vec<DVector<Complex64>>) {
    let n = h.nrows();
    assert_eq!(n, h.ncols(), "hermitian_eigen needs a square matrix");
    if n == 0 {
        return (Vec::new(), Vec::new());
    }
    let sym = |i: usize, k: usize| (h[(i, k)] + h[(k, i)].conj()) * 0.5;
    let embedded = DMatrix::<f64>::from_fn(2 * n, 2 * n, |r, c| {
        let (i, k) = (r % n, c % n);
        match (r < n, c < n) {
            (true, true) | (false, false) => sym(i, k).re,
            (true, false) => -sym(i, k).im,
            (false, true) => sym(i, k).im,
        }
    });
    let eig = embedded.symmetric_eigen();
    let mut order: Vec<usize> = (0..2 * n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));

    let scale = order
        .iter()
        .map(|&i| eig.eigenvalues[i].abs())
        .fold(0.0, f64::max)
        .max(1.0);
    let cluster_tol = TOL_EIGEN_CLUSTER * scale;

    let mut values: Vec<f64> = Vec::with_capacity(n);
    let mut vectors: Vec<DVector<Complex64>> = Vec::with_capacity(n);
    for &idx in &order {
        let lambda = eig.eigenvalues[idx];
        let col = eig.eigenvectors.column(idx);
        let mut v = DVector::from_fn(n, |i, _| Complex64::new(col[i], col[n + i]));
        // remove the already-accepted complex span of this eigenvalue
        // cluster; what remains is either a genuinely new eigenvector or the
        // i*v duplicate of an accepted one (which projects to zero)
        for (mu, z) in values.iter().zip(&vectors) {
            if (lambda - mu).abs() <= cluster_tol {
                let overlap = z.dotc(&v);
                v -= z * overlap;
            }
        }
        let norm = v.norm();
        if norm > 0.5 {
            vectors.push(v / Complex64::new(norm, 0.0));
            values.push(lambda);
        }
        if values.len() == n {
            break;
        }
    }
    assert_eq!(
        values.len(),
        n,
        "eigenvector pairing failed to recover a full basis"
    );
    (values, vectors)
}

/// Orthonormal spanning set of the given vectors (modified Gram-Schmidt,
/// dropping numerically dependent vectors).
pub fn orthonormalize(vectors: &[DVector<Complex64>]) -> Vec<DVector<Complex64>> {
    let mut basis: Vec<DVector<Complex64>> = Vec::new();
    for v in vectors {
        let mut w = v.clone();
        let original = w.norm();
        if original == 0.0 {
            continue;
        }
        for b in &basis {
            let overlap = b.dotc(&w);
            w -= b * overlap;
        }
        let norm = w.norm();
        if norm > 1e-10 * original {
            basis.push(w / Complex64::new(norm, 0.0));
        }
    }
    basis
}

/// Principal angles (radians, ascending) between the spans of two families
/// of complex vectors. The number of angles is the smaller of the two
/// subspace dimensions.
pub fn principal_angles(a: &[DVector<Complex64>], b: &[DVector<Complex64>]) -> Vec<f64> {
    let qa = orthonormalize(a);
    let qb = orthonormalize(b);
    if qa.is_empty() || qb.is_empty() {
        return Vec::new();
    }
    let (small, large) = if qa.len() <= qb.len() { (&qa, &qb) } else { (&qb, &qa) };
    let m = DMatrix::from_fn(small.len(), large.len(), |i, k| small[i].dotc(&large[k]));
    // cos^2 of the angles are the eigenvalues of M M^H
    let gram = &m * m.adjoint();
    let (evals, _) = hermitian_eigen(&gram);
    let mut angles: Vec<f64> = evals
        .iter()
        .map(|&e| e.clamp(0.0, 1.0).sqrt().clamp(0.0, 1.0).acos())
        .collect();
    angles.sort_by(f64::total_cmp);
    angles
}

/// Near-null space of a rectangular complex matrix: right singular vectors
/// whose singular value is at most `rel_tol` times the largest one. Returns
/// the (ascending) singular values alongside the kernel basis.
pub fn near_null_space(
    a: &DMatrix<Complex64>,
    rel_tol: f64,
) -> (Vec<f64>, Vec<DVector<Complex64>>) {
    let gram = a.adjoint() * a;
    let (_, evecs) = hermitian_eigen(&gram);
    // the Gram eigenvectors are well conditioned, but its eigenvalues floor
    // near-zero singular values at sqrt(eps) * ||a||; recomputing ||a v||
    // directly restores full precision on the small end
    let mut pairs: Vec<(f64, DVector<Complex64>)> =
        evecs.into_iter().map(|v| ((a * &v).norm(), v)).collect();
    pairs.sort_by(|x, y| x.0.total_cmp(&y.0));
    let singulars: Vec<f64> = pairs.iter().map(|(s, _)| *s).collect();
    let sigma_max = singulars.last().copied().unwrap_or(0.0);
    let kernel = pairs
        .into_iter()
        .filter(|(s, _)| *s <= rel_tol * sigma_max.max(1e-300))
        .map(|(_, v)| v)
        .collect();
    (singulars, kernel)
}
