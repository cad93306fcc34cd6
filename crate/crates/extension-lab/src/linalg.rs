//! Dense complex linear algebra used by the representation and algebra layers.
//!
//! Everything here operates on small matrices (dimension bounded by the group
//! order, so a few dozen at most) and favours robustness over speed: a cyclic
//! Jacobi eigensolver for Hermitian matrices, modified Gram-Schmidt
//! orthonormalization, and rank/null-space computations derived from them.

use ndarray::{Array1, Array2};
use num_complex::Complex64;

pub type CMat = Array2<Complex64>;
pub type CVec = Array1<Complex64>;

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Conjugate transpose.
pub fn dagger(a: &CMat) -> CMat {
    let mut out = Array2::from_elem((a.ncols(), a.nrows()), ZERO);
    for ((r, c), v) in a.indexed_iter() {
        out[[c, r]] = v.conj();
    }
    out
}

pub fn identity(n: usize) -> CMat {
    let mut m = Array2::from_elem((n, n), ZERO);
    for i in 0..n {
        m[[i, i]] = ONE;
    }
    m
}

pub fn frobenius_norm(a: &CMat) -> f64 {
    a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Largest entry magnitude of `a - b`.
pub fn max_abs_diff(a: &CMat, b: &CMat) -> f64 {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Largest entry magnitude.
pub fn max_abs(a: &CMat) -> f64 {
    a.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

const JACOBI_MAX_SWEEPS: usize = 80;

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
///
/// Returns eigenvalues in ascending order together with the matching
/// orthonormal eigenvectors as the columns of a unitary matrix, so that
/// `a ≈ v · diag(λ) · v†`. The input is symmetrized first; callers are
/// expected to pass matrices that are Hermitian up to roundoff.
pub fn hermitian_eig(a: &CMat) -> (Vec<f64>, CMat) {
    let n = a.nrows();
    assert_eq!(n, a.ncols(), "hermitian_eig needs a square matrix");
    if n == 0 {
        return (Vec::new(), Array2::from_elem((0, 0), ZERO));
    }

    // Symmetrize to kill accumulated roundoff in the input.
    let mut b = Array2::from_elem((n, n), ZERO);
    for r in 0..n {
        for c in 0..n {
            b[[r, c]] = 0.5 * (a[[r, c]] + a[[c, r]].conj());
        }
    }
    let mut v = identity(n);

    let scale = frobenius_norm(&b).max(1e-300);
    let target = 1e-15 * scale;

    for _sweep in 0..JACOBI_MAX_SWEEPS {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in (p + 1)..n {
                off += 2.0 * b[[p, q]].norm_sqr();
            }
        }
        if off.sqrt() <= target {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let bpq = b[[p, q]];
                let beta = bpq.norm();
                if beta < 1e-300 {
                    b[[p, q]] = ZERO;
                    b[[q, p]] = ZERO;
                    continue;
                }
                let phase = bpq / beta; // e^{iφ}
                let app = b[[p, p]].re;
                let aqq = b[[q, q]].re;
                let tau = (aqq - app) / (2.0 * beta);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                // Unitary U differing from the identity in the (p,q) plane:
                //   U_pp = c, U_pq = s, U_qp = -s·e^{-iφ}, U_qq = c·e^{-iφ}.
                // Update b ← U† b U and accumulate v ← v U.
                let w = phase;
                let cw = w.conj();
                for k in 0..n {
                    let rp = b[[p, k]];
                    let rq = b[[q, k]];
                    b[[p, k]] = c * rp - s * w * rq;
                    b[[q, k]] = s * rp + c * w * rq;
                }
                for k in 0..n {
                    let cp = b[[k, p]];
                    let cq = b[[k, q]];
                    b[[k, p]] = c * cp - s * cw * cq;
                    b[[k, q]] = s * cp + c * cw * cq;
                }
                for k in 0..n {
                    let vp = v[[k, p]];
                    let vq = v[[k, q]];
                    v[[k, p]] = c * vp - s * cw * vq;
                    v[[k, q]] = s * vp + c * cw * vq;
                }
                // The (p,q) entry is zero by construction; pin it exactly.
                b[[p, q]] = ZERO;
                b[[q, p]] = ZERO;
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    let eig: Vec<f64> = (0..n).map(|i| b[[i, i]].re).collect();
    order.sort_by(|&i, &j| eig[i].partial_cmp(&eig[j]).unwrap());

    let values: Vec<f64> = order.iter().map(|&i| eig[i]).collect();
    let mut vectors = Array2::from_elem((n, n), ZERO);
    for (newc, &oldc) in order.iter().enumerate() {
        for r in 0..n {
            vectors[[r, newc]] = v[[r, oldc]];
        }
    }
    (values, vectors)
}

/// Modified Gram-Schmidt with one re-orthogonalization pass.
///
/// Columns of `m` are replaced by an orthonormal basis of their span; returns
/// `None` if a column is (numerically) dependent on its predecessors.
pub fn orthonormalize_columns(m: &CMat) -> Option<CMat> {
    let (rows, cols) = (m.nrows(), m.ncols());
    let mut q = m.clone();
    for j in 0..cols {
        for _pass in 0..2 {
            for k in 0..j {
                let mut proj = ZERO;
                for r in 0..rows {
                    proj += q[[r, k]].conj() * q[[r, j]];
                }
                for r in 0..rows {
                    let sub = proj * q[[r, k]];
                    q[[r, j]] -= sub;
                }
            }
        }
        let norm: f64 = (0..rows).map(|r| q[[r, j]].norm_sqr()).sum::<f64>().sqrt();
        if norm < 1e-10 {
            return None;
        }
        for r in 0..rows {
            q[[r, j]] /= norm;
        }
    }
    Some(q)
}

/// Number of singular values of `m` exceeding `eps_rank` relative to the
/// largest one, computed through the Hermitian eigenvalues of `m† m`.
pub fn rank(m: &CMat, eps_rank: f64) -> usize {
    rank_with_scale(m, eps_rank, 0.0)
}

/// Rank with the singular-value threshold anchored at
/// `eps_rank * max(σ_max, scale)`. A positive `scale` keeps the threshold
/// meaningful when `m` itself is pure roundoff noise, such as the commutator
/// matrix of a commutative algebra.
pub fn rank_with_scale(m: &CMat, eps_rank: f64, scale: f64) -> usize {
    let gram = dagger(m).dot(m);
    let (vals, _) = hermitian_eig(&gram);
    let lam_max = vals.iter().cloned().fold(0.0f64, f64::max);
    let sigma_ref = lam_max.sqrt().max(scale);
    if sigma_ref <= 0.0 {
        return 0;
    }
    let cutoff = (eps_rank * sigma_ref).powi(2);
    vals.iter().filter(|&&l| l > cutoff).count()
}

/// Orthonormal basis of the (numerical) null space of `m`, thresholded the
/// same way as [`rank`]. Columns of the result are the basis vectors.
pub fn nullspace(m: &CMat, eps_rank: f64) -> CMat {
    nullspace_with_scale(m, eps_rank, 0.0)
}

/// Null space with the same anchored threshold as [`rank_with_scale`].
pub fn nullspace_with_scale(m: &CMat, eps_rank: f64, scale: f64) -> CMat {
    let n = m.ncols();
    let gram = dagger(m).dot(m);
    let (vals, vecs) = hermitian_eig(&gram);
    let lam_max = vals.iter().cloned().fold(0.0f64, f64::max);
    let sigma_ref = lam_max.sqrt().max(scale);
    let cutoff = if sigma_ref <= 0.0 {
        f64::INFINITY
    } else {
        (eps_rank * sigma_ref).powi(2)
    };
    let keep: Vec<usize> = (0..n).filter(|&i| vals[i] <= cutoff).collect();
    let mut out = Array2::from_elem((n, keep.len()), ZERO);
    for (j, &i) in keep.iter().enumerate() {
        for r in 0..n {
            out[[r, j]] = vecs[[r, i]];
        }
    }
    out
}
