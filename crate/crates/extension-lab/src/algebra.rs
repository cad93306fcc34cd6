//! Finite-dimensional associative algebras over ℂ given by sparse structure
//! constants, and the three algebras attached to an extension:
//!
//! * the group algebra ℂH,
//! * the crossed product ⊕_ρ End(V_ρ) ⊗ ℂQ twisted by the intertwiners and
//!   the factor set, isomorphic to ℂH through the embedding κ,
//! * the groupoid algebra of the Q-action on the character set with the
//!   cocycle c as twist.
//!
//! Centers are computed as commutator null spaces, and the center of ℂH can
//! be sliced along any vector-space grading of the basis; grading by the
//! Q-class of the projection recovers the conjugacy-class counts.

use crate::config::Tolerances;
use crate::extension::ExtensionData;
use crate::group::Group;
use crate::linalg::{nullspace_with_scale, rank, rank_with_scale, ZERO};
use crate::repr::IrrepCatalog;
use crate::twist::{ActionTable, TwistData};
use ndarray::Array2;
use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("unit fails at basis element {i}: residual {residual:e}")]
    UnitDefect { i: usize, residual: f64 },
    #[error("associativity fails at ({i}, {j}, {k}): residual {residual:e}")]
    AssociativityDefect { i: usize, j: usize, k: usize, residual: f64 },
    #[error("embedding rank {rank} < expected {expected}")]
    RankDeficient { rank: usize, expected: usize },
    #[error("embedding is not multiplicative: residual {residual:e} at ({h1}, {h2})")]
    NotMultiplicative { h1: usize, h2: usize, residual: f64 },
    #[error("center is not compatible with the grading: graded ranks sum to {graded}, center dimension is {center}")]
    GradingNotRespected { graded: usize, center: usize },
}

/// Sparse structure constants: `sc[i·dim + j]` lists the nonzero coefficients
/// of the product `b_i · b_j` in the basis.
#[derive(Debug, Clone)]
pub struct AlgebraTable {
    pub dim: usize,
    pub labels: Vec<String>,
    sc: Vec<Vec<(usize, Complex64)>>,
    pub unit: Vec<Complex64>,
}

impl AlgebraTable {
    pub fn new(
        dim: usize,
        labels: Vec<String>,
        sc: Vec<Vec<(usize, Complex64)>>,
        unit: Vec<Complex64>,
    ) -> AlgebraTable {
        assert_eq!(labels.len(), dim);
        assert_eq!(sc.len(), dim * dim);
        assert_eq!(unit.len(), dim);
        AlgebraTable { dim, labels, sc, unit }
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Complex64)] {
        &self.sc[i * self.dim + j]
    }

    /// Product of two coefficient vectors.
    pub fn mul_vectors(&self, x: &[Complex64], y: &[Complex64]) -> Vec<Complex64> {
        let mut out = vec![ZERO; self.dim];
        for (i, &xi) in x.iter().enumerate() {
            if xi == ZERO {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == ZERO {
                    continue;
                }
                let w = xi * yj;
                for &(k, c) in self.basis_product(i, j) {
                    out[k] += w * c;
                }
            }
        }
        out
    }

    /// Verifies that the unit is two-sided and the product associative.
    pub fn verify(&self, eps: f64) -> Result<(), AlgebraError> {
        for i in 0..self.dim {
            let mut e = vec![ZERO; self.dim];
            e[i] = Complex64::new(1.0, 0.0);
            for v in [self.mul_vectors(&self.unit, &e), self.mul_vectors(&e, &self.unit)] {
                let residual = v
                    .iter()
                    .zip(&e)
                    .map(|(a, b)| (a - b).norm())
                    .fold(0.0, f64::max);
                if residual > eps {
                    return Err(AlgebraError::UnitDefect { i, residual });
                }
            }
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                let left = self.sc[i * self.dim + j].clone();
                for k in 0..self.dim {
                    // (b_i b_j) b_k vs b_i (b_j b_k), both as sparse sums.
                    let mut lhs: Vec<(usize, Complex64)> = Vec::new();
                    for &(m, a) in &left {
                        for &(t, b) in self.basis_product(m, k) {
                            lhs.push((t, a * b));
                        }
                    }
                    let mut rhs: Vec<(usize, Complex64)> = Vec::new();
                    for &(m, a) in self.basis_product(j, k) {
                        for &(t, b) in self.basis_product(i, m) {
                            rhs.push((t, a * b));
                        }
                    }
                    let residual = sparse_diff_norm(&lhs, &rhs);
                    if residual > eps {
                        return Err(AlgebraError::AssociativityDefect { i, j, k, residual });
                    }
                }
            }
        }
        Ok(())
    }

    /// Orthonormal basis of the center (all x with xb = bx for every basis
    /// element b), as the null space of the stacked commutator map.
    pub fn center_basis(&self, eps_rank: f64) -> Vec<Vec<Complex64>> {
        let n = self.dim;
        // Rows: (j, k) pairs; columns: candidate coefficients x_i; entry:
        // coefficient of b_k in b_i b_j - b_j b_i.
        let mut m = Array2::from_elem((n * n, n), ZERO);
        for i in 0..n {
            for j in 0..n {
                for &(k, c) in self.basis_product(i, j) {
                    m[[j * n + k, i]] += c;
                }
                for &(k, c) in self.basis_product(j, i) {
                    m[[j * n + k, i]] -= c;
                }
            }
        }
        // Anchor the rank threshold at the size of the structure constants:
        // for a commutative table the commutator matrix is pure roundoff and
        // a threshold relative to its own largest singular value would start
        // resolving noise.
        let scale = self
            .sc
            .iter()
            .flatten()
            .map(|&(_, c)| c.norm())
            .fold(1.0f64, f64::max);
        let ns = nullspace_with_scale(&m, eps_rank, scale);
        (0..ns.ncols())
            .map(|c| (0..n).map(|r| ns[[r, c]]).collect())
            .collect()
    }

    pub fn center_dim(&self, eps_rank: f64) -> usize {
        self.center_basis(eps_rank).len()
    }

    /// Dimensions of the center sliced along a basis grading. Requires the
    /// center to be the direct sum of its graded pieces: the per-grade ranks
    /// of the projected center must add up to the center dimension.
    pub fn graded_center_dims(
        &self,
        grading: &[usize],
        n_grades: usize,
        eps_rank: f64,
    ) -> Result<Vec<usize>, AlgebraError> {
        assert_eq!(grading.len(), self.dim);
        assert!(grading.iter().all(|&g| g < n_grades));
        let center = self.center_basis(eps_rank);
        let mut dims = vec![0usize; n_grades];
        for grade in 0..n_grades {
            let mut m = Array2::from_elem((self.dim, center.len()), ZERO);
            for (col, vec) in center.iter().enumerate() {
                for i in 0..self.dim {
                    if grading[i] == grade {
                        m[[i, col]] = vec[i];
                    }
                }
            }
            // Columns are projections of orthonormal vectors, so 1 is the
            // natural scale; a grade the center misses entirely must not
            // have its roundoff promoted to rank.
            dims[grade] = rank_with_scale(&m, eps_rank, 1.0);
        }
        let graded: usize = dims.iter().sum();
        if graded != center.len() {
            return Err(AlgebraError::GradingNotRespected { graded, center: center.len() });
        }
        Ok(dims)
    }
}

fn sparse_diff_norm(a: &[(usize, Complex64)], b: &[(usize, Complex64)]) -> f64 {
    let mut acc: std::collections::BTreeMap<usize, Complex64> = std::collections::BTreeMap::new();
    for &(k, c) in a {
        *acc.entry(k).or_insert(ZERO) += c;
    }
    for &(k, c) in b {
        *acc.entry(k).or_insert(ZERO) -= c;
    }
    acc.values().map(|z| z.norm()).fold(0.0, f64::max)
}

/// The group algebra ℂH with the group elements as basis.
pub fn group_algebra(h: &Group) -> AlgebraTable {
    let n = h.order();
    let one = Complex64::new(1.0, 0.0);
    let mut sc = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            sc.push(vec![(h.mul(a, b), one)]);
        }
    }
    let mut unit = vec![ZERO; n];
    unit[0] = one;
    let labels = (0..n).map(|x| h.label(x).to_string()).collect();
    AlgebraTable::new(n, labels, sc, unit)
}

/// The twisted groupoid algebra: basis ([ρ], q) with
/// `([ρ], q)·([ρ'], q') = δ_{[ρ'], q[ρ]} · c^ρ(q, q') · ([ρ], q·q')`.
pub fn groupoid_algebra(q: &Group, act: &ActionTable, tw: &TwistData) -> AlgebraTable {
    let nq = q.order();
    let nr = act.act.len();
    let dim = nr * nq;
    let idx = |rho: usize, qx: usize| rho * nq + qx;
    let mut sc = vec![Vec::new(); dim * dim];
    for rho in 0..nr {
        for q1 in 0..nq {
            let target = act.apply(rho, q1);
            for rho2 in 0..nr {
                for q2 in 0..nq {
                    if rho2 == target {
                        sc[idx(rho, q1) * dim + idx(rho2, q2)] =
                            vec![(idx(rho, q.mul(q1, q2)), tw.c_of(rho, q1, q2))];
                    }
                }
            }
        }
    }
    let mut unit = vec![ZERO; dim];
    for rho in 0..nr {
        unit[idx(rho, 0)] = Complex64::new(1.0, 0.0);
    }
    let labels = (0..nr)
        .flat_map(|rho| (0..nq).map(move |qx| format!("([{rho}],{qx})")))
        .collect();
    AlgebraTable::new(dim, labels, sc, unit)
}

/// Basis layout for the crossed product: (ρ, s, t, q) with matrix-unit block
/// offsets per irrep.
#[derive(Debug, Clone)]
pub struct CrossedBasis {
    pub offsets: Vec<usize>,
    pub dims: Vec<usize>,
    pub nq: usize,
    pub dim: usize,
}

impl CrossedBasis {
    fn new(cat: &IrrepCatalog, nq: usize) -> CrossedBasis {
        let dims: Vec<usize> = cat.dims();
        let mut offsets = Vec::with_capacity(dims.len());
        let mut acc = 0usize;
        for &d in &dims {
            offsets.push(acc);
            acc += d * d;
        }
        CrossedBasis { offsets, dims, nq, dim: acc * nq }
    }

    pub fn index(&self, rho: usize, s: usize, t: usize, q: usize) -> usize {
        ((self.offsets[rho] + s * self.dims[rho] + t) * self.nq) + q
    }
}

/// The crossed product ⊕_ρ End(V_ρ) ⊗ ℂQ with product
/// `(X ⊗ u_q1)(Y ⊗ u_q2) = X · T† Y T · ρ(τ(q1,q2)) ⊗ u_{q1 q2}`,
/// nonzero only when Y lives on act([ρ], q1). Isomorphic to ℂH via κ.
pub fn crossed_product(
    ext: &ExtensionData,
    cat: &IrrepCatalog,
    act: &ActionTable,
    tw: &TwistData,
) -> (CrossedBasis, AlgebraTable) {
    let nq = ext.q.order();
    let basis = CrossedBasis::new(cat, nq);
    let dim = basis.dim;
    let mut sc = vec![Vec::new(); dim * dim];
    for rho in 0..cat.len() {
        let d1 = basis.dims[rho];
        for q1 in 0..nq {
            let k1 = act.apply(rho, q1);
            let t_mat = &tw.t[rho][q1];
            for q2 in 0..nq {
                let q12 = ext.q.mul(q1, q2);
                // X2 = T · ρ(τ(q1,q2)); the product of matrix units is
                // e_{st} ⊗ u_q1 · e_{uv} ⊗ u_q2 = Σ_b conj(T[u,t])·X2[v,b] e_{sb} ⊗ u_q12.
                let x2 = t_mat.dot(&cat.irreps[rho].mats[ext.tau[q1][q2]]);
                for s in 0..d1 {
                    for t in 0..d1 {
                        let row = basis.index(rho, s, t, q1);
                        for u in 0..basis.dims[k1] {
                            let w = t_mat[[u, t]].conj();
                            for v in 0..basis.dims[k1] {
                                let col = basis.index(k1, u, v, q2);
                                let mut terms = Vec::new();
                                for b in 0..d1 {
                                    let coeff = w * x2[[v, b]];
                                    if coeff.norm() > 1e-14 {
                                        terms.push((basis.index(rho, s, b, q12), coeff));
                                    }
                                }
                                sc[row * dim + col] = terms;
                            }
                        }
                    }
                }
            }
        }
    }
    let mut unit = vec![ZERO; dim];
    for rho in 0..cat.len() {
        for s in 0..basis.dims[rho] {
            unit[basis.index(rho, s, s, 0)] = Complex64::new(1.0, 0.0);
        }
    }
    let mut labels = vec![String::new(); dim];
    for rho in 0..cat.len() {
        for s in 0..basis.dims[rho] {
            for t in 0..basis.dims[rho] {
                for q in 0..nq {
                    labels[basis.index(rho, s, t, q)] = format!("e{rho}[{s}{t}]q{q}");
                }
            }
        }
    }
    (basis, AlgebraTable::new(dim, labels, sc, unit))
}

/// κ(h) = Σ_ρ ρ(g) ⊗ u_q where (g, q) is the twisted-pair form of h.
pub fn kappa_vector(
    ext: &ExtensionData,
    cat: &IrrepCatalog,
    basis: &CrossedBasis,
    h: usize,
) -> Vec<Complex64> {
    let q = ext.j.apply(h);
    let g_ambient = ext.h.mul(h, ext.h.inv(ext.s[q]));
    let g = ext
        .i
        .image
        .iter()
        .position(|&hi| hi == g_ambient)
        .expect("h·s(j(h))⁻¹ lies in the kernel");
    let mut v = vec![ZERO; basis.dim];
    for rho in 0..cat.len() {
        let m = &cat.irreps[rho].mats[g];
        for s in 0..basis.dims[rho] {
            for t in 0..basis.dims[rho] {
                v[basis.index(rho, s, t, q)] = m[[s, t]];
            }
        }
    }
    v
}

#[derive(Debug, Clone)]
pub struct KappaReport {
    pub max_residual: f64,
    pub rank: usize,
    pub expected_rank: usize,
    pub pass: bool,
}

/// Checks that κ is multiplicative on all of H × H and spans the crossed
/// product (rank |H|).
pub fn kappa_check(
    ext: &ExtensionData,
    cat: &IrrepCatalog,
    basis: &CrossedBasis,
    alg: &AlgebraTable,
    tol: &Tolerances,
) -> Result<KappaReport, AlgebraError> {
    let n = ext.h.order();
    let vectors: Vec<Vec<Complex64>> = (0..n).map(|h| kappa_vector(ext, cat, basis, h)).collect();
    let mut max_residual = 0.0f64;
    for h1 in 0..n {
        for h2 in 0..n {
            let prod = alg.mul_vectors(&vectors[h1], &vectors[h2]);
            let expected = &vectors[ext.h.mul(h1, h2)];
            let residual = prod
                .iter()
                .zip(expected)
                .map(|(a, b)| (a - b).norm())
                .fold(0.0, f64::max);
            if residual > max_residual {
                max_residual = residual;
            }
            if residual > tol.eps_mat {
                return Err(AlgebraError::NotMultiplicative { h1, h2, residual });
            }
        }
    }
    let mut m = Array2::from_elem((basis.dim, n), ZERO);
    for (col, v) in vectors.iter().enumerate() {
        for r in 0..basis.dim {
            m[[r, col]] = v[r];
        }
    }
    let rk = rank(&m, tol.eps_rank);
    if rk != n {
        return Err(AlgebraError::RankDeficient { rank: rk, expected: n });
    }
    Ok(KappaReport { max_residual, rank: rk, expected_rank: n, pass: true })
}

/// Grade of each H-basis element of ℂH: the Q-class of its projection.
pub fn q_class_grading(ext: &ExtensionData) -> (Vec<usize>, usize) {
    let grading: Vec<usize> = (0..ext.h.order())
        .map(|h| ext.q.classes().class_of[ext.j.apply(h)])
        .collect();
    (grading, ext.q.classes().count())
}

/// Grade of each groupoid basis element ([ρ], q): the Q-class of q. Matches
/// the basis layout of [`groupoid_algebra`].
pub fn groupoid_grading(q: &Group, n_irreps: usize) -> (Vec<usize>, usize) {
    let nq = q.order();
    let grading: Vec<usize> = (0..n_irreps)
        .flat_map(|_| (0..nq).map(|qx| q.classes().class_of[qx]))
        .collect();
    (grading, q.classes().count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Tolerances;
    use crate::extension::ExtensionData;
    use crate::group::{cyclic, symmetric};
    use crate::repr::compute_irreps;
    use crate::twist::{compute_action, compute_twist};

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    #[test]
    fn group_algebra_of_s3() {
        let s3 = symmetric(3);
        let alg = group_algebra(&s3);
        alg.verify(1e-12).unwrap();
        assert_eq!(alg.dim, 6);
        assert_eq!(alg.center_dim(tol().eps_rank), 3);
    }

    #[test]
    fn graded_center_recovers_counts_on_s3() {
        let s3 = symmetric(3);
        let a3: Vec<usize> = (0..6).filter(|&x| s3.element_order(x) != 2).collect();
        let ext = ExtensionData::from_normal_subgroup("s3-over-z2", s3, &a3).unwrap();
        let alg = group_algebra(&ext.h);
        let (grading, n_grades) = q_class_grading(&ext);
        let dims = alg.graded_center_dims(&grading, n_grades, tol().eps_rank).unwrap();
        // Classes of S3 over Z2: two over the identity, one over the swap.
        assert_eq!(dims, vec![2, 1]);
    }

    #[test]
    fn bad_grading_is_rejected() {
        let s3 = symmetric(3);
        let alg = group_algebra(&s3);
        // Grade by index < 3: splits both nonidentity classes across grades,
        // so the center (class sums) cannot decompose along it.
        let grading: Vec<usize> = (0..6).map(|x| usize::from(x >= 3)).collect();
        let err = alg.graded_center_dims(&grading, 2, tol().eps_rank).unwrap_err();
        assert!(matches!(err, AlgebraError::GradingNotRespected { .. }));
    }

    fn full_pipeline(
        ext: ExtensionData,
    ) -> (ExtensionData, IrrepCatalog, ActionTable, TwistData) {
        let cat = compute_irreps(&ext.g, 42, &tol()).unwrap();
        let act = compute_action(&ext, &cat, &tol()).unwrap();
        let tw = compute_twist(&ext, &cat, &act, 42, &tol()).unwrap();
        (ext, cat, act, tw)
    }

    #[test]
    fn groupoid_algebra_is_associative() {
        let z8 = cyclic(8);
        let (ext, cat, act, tw) = full_pipeline(
            ExtensionData::from_normal_subgroup("z8-over-z2", z8, &[0, 2, 4, 6]).unwrap(),
        );
        let alg = groupoid_algebra(&ext.q, &act, &tw);
        assert_eq!(alg.dim, cat.len() * ext.q.order());
        alg.verify(1e-9).unwrap();
    }

    #[test]
    fn crossed_product_matches_group_algebra_on_s3_kernel() {
        let s3 = symmetric(3);
        let a3: Vec<usize> = (0..6).filter(|&x| s3.element_order(x) != 2).collect();
        let (ext, cat, act, tw) =
            full_pipeline(ExtensionData::from_normal_subgroup("s3-over-z2", s3, &a3).unwrap());
        let (basis, alg) = crossed_product(&ext, &cat, &act, &tw);
        assert_eq!(alg.dim, ext.h.order());
        alg.verify(1e-9).unwrap();
        let report = kappa_check(&ext, &cat, &basis, &alg, &tol()).unwrap();
        assert!(report.pass);
        assert_eq!(report.rank, 6);
        // Centers of isomorphic algebras have equal dimension.
        assert_eq!(alg.center_dim(tol().eps_rank), ext.h.classes().count());
    }

    #[test]
    fn crossed_product_on_nonsplit_extension() {
        let z4 = cyclic(4);
        let (ext, cat, act, tw) =
            full_pipeline(ExtensionData::from_normal_subgroup("z4-over-z2", z4, &[0, 2]).unwrap());
        let (basis, alg) = crossed_product(&ext, &cat, &act, &tw);
        alg.verify(1e-9).unwrap();
        let report = kappa_check(&ext, &cat, &basis, &alg, &tol()).unwrap();
        assert_eq!(report.rank, 4);
        assert_eq!(alg.center_dim(tol().eps_rank), 4);
    }
}
