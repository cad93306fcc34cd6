//! Irreducible unitary representations of a finite group over ℂ.
//!
//! The pipeline is seeded and fully deterministic:
//!
//! 1. Characters come from the center of the group algebra. A random
//!    Hermitian central element is diagonalized in the orthonormal class-sum
//!    basis; its eigenvectors are rescaled to the central primitive
//!    idempotents, which encode dimensions and character values exactly.
//! 2. Matrices for a d-dimensional irreducible come from the left regular
//!    representation: project onto the isotypic component, average a random
//!    Hermitian matrix into a commuting operator, and read the representation
//!    off an eigenvalue cluster of size d.
//!
//! Both randomized stages validate their output against tolerances and retry
//! with fresh derived seeds a bounded number of times.

use crate::config::{derive_rng, stage, Tolerances};
use crate::group::Group;
use crate::linalg::{dagger, frobenius_norm, hermitian_eig, identity, max_abs_diff, CMat, ONE, ZERO};
use ndarray::Array2;
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ReprError {
    #[error("randomized splitting stayed degenerate after {attempts} attempts")]
    DegenerateSplit { attempts: usize },
    #[error("{stage} residual {residual:e} exceeds tolerance")]
    ToleranceExceeded { stage: String, residual: f64 },
    #[error("Schur averaging norm {norm:e} is in the ambiguous band")]
    AmbiguousSchur { norm: f64 },
}

/// An irreducible unitary representation: one matrix per group element plus
/// the character, one value per conjugacy class.
#[derive(Debug, Clone)]
pub struct UnitaryIrrep {
    pub dim: usize,
    pub mats: Vec<CMat>,
    pub chi: Vec<Complex64>,
}

impl UnitaryIrrep {
    pub fn chi_of(&self, g: &Group, x: usize) -> Complex64 {
        self.chi[g.classes().class_of[x]]
    }
}

/// All irreducibles of a group, sorted by dimension and then by quantized
/// character vector, so the ordering is canonical for a given group.
#[derive(Debug, Clone)]
pub struct IrrepCatalog {
    pub irreps: Vec<UnitaryIrrep>,
}

impl IrrepCatalog {
    pub fn len(&self) -> usize {
        self.irreps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreps.is_empty()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.irreps.iter().map(|r| r.dim).collect()
    }

    /// Index of the unique irreducible whose character matches `chi` (per
    /// class) within `eps`; `None` if no match, `Err` on multiple matches.
    pub fn find_by_character(&self, chi: &[Complex64], eps: f64) -> Result<Option<usize>, Vec<usize>> {
        let hits: Vec<usize> = self
            .irreps
            .iter()
            .enumerate()
            .filter(|(_, r)| {
                r.chi.len() == chi.len()
                    && r.chi.iter().zip(chi).all(|(a, b)| (a - b).norm() < eps)
            })
            .map(|(i, _)| i)
            .collect();
        match hits.len() {
            0 => Ok(None),
            1 => Ok(Some(hits[0])),
            _ => Err(hits),
        }
    }
}

/// Normalized inner product of two class functions given per class:
/// `(1/|G|) Σ_g a(g) conj(b(g))`.
pub fn char_inner(g: &Group, a: &[Complex64], b: &[Complex64]) -> Complex64 {
    let classes = g.classes();
    let mut acc = ZERO;
    for i in 0..classes.count() {
        acc += (classes.size(i) as f64) * a[i] * b[i].conj();
    }
    acc / (g.order() as f64)
}

/// Integer class-multiplication data for the center of the group algebra.
struct ClassData {
    k: usize,
    sizes: Vec<usize>,
    /// Class of the inverses of class i.
    inv_class: Vec<usize>,
    /// `a[i][j][k]` = #{(x, y) ∈ C_i × C_j : x·y = z_k} for a fixed z_k.
    a: Vec<Vec<Vec<u64>>>,
}

impl ClassData {
    fn new(g: &Group) -> ClassData {
        let classes = g.classes();
        let k = classes.count();
        let sizes: Vec<usize> = (0..k).map(|i| classes.size(i)).collect();
        let inv_class: Vec<usize> =
            (0..k).map(|i| classes.class_of[g.inv(classes.representative(i))]).collect();
        let mut a = vec![vec![vec![0u64; k]; k]; k];
        for i in 0..k {
            for j in 0..k {
                let mut cnt = vec![0u64; g.order()];
                for &x in &classes.members[i] {
                    for &y in &classes.members[j] {
                        cnt[g.mul(x, y)] += 1;
                    }
                }
                for kk in 0..k {
                    a[i][j][kk] = cnt[classes.representative(kk)];
                }
            }
        }
        ClassData { k, sizes, inv_class, a }
    }

    /// Central product in the orthonormal basis e_i = z_i / √|C_i|.
    fn product_e(&self, x: &[Complex64], y: &[Complex64]) -> Vec<Complex64> {
        let k = self.k;
        let xs: Vec<Complex64> =
            (0..k).map(|i| x[i] / (self.sizes[i] as f64).sqrt()).collect();
        let ys: Vec<Complex64> =
            (0..k).map(|i| y[i] / (self.sizes[i] as f64).sqrt()).collect();
        let mut out = vec![ZERO; k];
        for i in 0..k {
            if xs[i] == ZERO {
                continue;
            }
            for j in 0..k {
                if ys[j] == ZERO {
                    continue;
                }
                let prod = xs[i] * ys[j];
                for kk in 0..k {
                    let c = self.a[i][j][kk];
                    if c != 0 {
                        out[kk] += prod * (c as f64);
                    }
                }
            }
        }
        for kk in 0..k {
            out[kk] *= (self.sizes[kk] as f64).sqrt();
        }
        out
    }
}

const MAX_ATTEMPTS: usize = 8;

/// Computes all irreducible unitary representations of `g`.
pub fn compute_irreps(g: &Group, seed: u64, tol: &Tolerances) -> Result<IrrepCatalog, ReprError> {
    let cd = ClassData::new(g);
    let mut entries = character_table(g, &cd, seed, tol)?;
    entries.sort_by(|(da, ca), (db, cb)| (da, quantize_vec(ca)).cmp(&(db, quantize_vec(cb))));

    let mut irreps = Vec::with_capacity(entries.len());
    for (idx, (dim, chi)) in entries.iter().enumerate() {
        let mats = if *dim == 1 {
            one_dimensional_mats(g, chi, tol)?
        } else {
            isotypic_mats(g, *dim, chi, seed, idx as u64, tol)?
        };
        irreps.push(UnitaryIrrep { dim: *dim, mats, chi: chi.clone() });
    }

    let catalog = IrrepCatalog { irreps };
    let sum_sq: usize = catalog.irreps.iter().map(|r| r.dim * r.dim).sum();
    if sum_sq != g.order() {
        return Err(ReprError::ToleranceExceeded {
            stage: format!("dimension count (Σd² = {sum_sq}, |G| = {})", g.order()),
            residual: (sum_sq as f64 - g.order() as f64).abs(),
        });
    }
    for a in 0..catalog.len() {
        for b in 0..catalog.len() {
            let want = if a == b { ONE } else { ZERO };
            let got = char_inner(g, &catalog.irreps[a].chi, &catalog.irreps[b].chi);
            if (got - want).norm() > tol.eps_char {
                return Err(ReprError::ToleranceExceeded {
                    stage: format!("character orthonormality ({a}, {b})"),
                    residual: (got - want).norm(),
                });
            }
        }
    }
    Ok(catalog)
}

fn quantize(x: f64) -> i64 {
    (x * 1e6).round() as i64
}

fn quantize_vec(chi: &[Complex64]) -> Vec<(i64, i64)> {
    chi.iter().map(|z| (quantize(z.re), quantize(z.im))).collect()
}

/// Character table as (dimension, per-class values), unsorted.
fn character_table(
    g: &Group,
    cd: &ClassData,
    seed: u64,
    tol: &Tolerances,
) -> Result<Vec<(usize, Vec<Complex64>)>, ReprError> {
    let k = cd.k;
    let n = g.order() as f64;
    let mut last_err = ReprError::DegenerateSplit { attempts: MAX_ATTEMPTS };
    for attempt in 0..MAX_ATTEMPTS {
        let mut rng = derive_rng(seed, &[stage::CHARACTERS, attempt as u64]);

        // Random central element, self-adjoint: w_{i*} = conj(w_i).
        let mut w = vec![ZERO; k];
        for i in 0..k {
            let istar = cd.inv_class[i];
            if i < istar {
                let z = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                w[i] = z;
                w[istar] = z.conj();
            } else if i == istar {
                w[i] = Complex64::new(rng.gen_range(-1.0..1.0), 0.0);
            }
        }

        // Left multiplication by Σ w_i z_i in the basis e_j = z_j / √|C_j|.
        let mut m = Array2::from_elem((k, k), ZERO);
        for j in 0..k {
            for kk in 0..k {
                let mut acc = ZERO;
                for i in 0..k {
                    let c = cd.a[i][j][kk];
                    if c != 0 {
                        acc += w[i] * (c as f64);
                    }
                }
                m[[kk, j]] =
                    acc * ((cd.sizes[kk] as f64).sqrt() / (cd.sizes[j] as f64).sqrt());
            }
        }

        let (vals, vecs) = hermitian_eig(&m);
        let spread = if k > 1 { vals[k - 1] - vals[0] } else { 1.0 };
        let min_gap = vals.windows(2).map(|w| w[1] - w[0]).fold(f64::INFINITY, f64::min);
        if k > 1 && min_gap < 1e-7 * spread.max(1e-10) {
            last_err = ReprError::DegenerateSplit { attempts: attempt + 1 };
            continue;
        }

        match idempotents_to_characters(g, cd, &vecs, tol) {
            Ok(mut table) => {
                let sum_sq: usize = table.iter().map(|(d, _)| d * d).sum();
                if sum_sq != g.order() {
                    last_err = ReprError::ToleranceExceeded {
                        stage: "character dimensions".into(),
                        residual: (sum_sq as f64 - n).abs(),
                    };
                    continue;
                }
                // Orthonormality gate before accepting the attempt.
                let ok = (0..k).all(|a| {
                    (0..k).all(|b| {
                        let want = if a == b { ONE } else { ZERO };
                        (char_inner(g, &table[a].1, &table[b].1) - want).norm() < tol.eps_char
                    })
                });
                if !ok {
                    last_err = ReprError::ToleranceExceeded {
                        stage: "character orthonormality".into(),
                        residual: f64::NAN,
                    };
                    continue;
                }
                for (_, chi) in &mut table {
                    clean_tiny(chi);
                }
                return Ok(table);
            }
            Err(e) => {
                last_err = e;
                continue;
            }
        }
    }
    Err(last_err)
}

/// Zeros out sub-1e-12 real or imaginary parts left over from the eigensolve;
/// character values at that distance from the grid are exact integers in
/// cyclotomic coordinates, so this only removes noise.
fn clean_tiny(v: &mut [Complex64]) {
    for z in v.iter_mut() {
        if z.re.abs() < 1e-12 {
            z.re = 0.0;
        }
        if z.im.abs() < 1e-12 {
            z.im = 0.0;
        }
        let rounded = z.re.round();
        if (z.re - rounded).abs() < 1e-12 {
            z.re = rounded;
        }
        let rounded = z.im.round();
        if (z.im - rounded).abs() < 1e-12 {
            z.im = rounded;
        }
    }
}

fn idempotents_to_characters(
    g: &Group,
    cd: &ClassData,
    vecs: &CMat,
    tol: &Tolerances,
) -> Result<Vec<(usize, Vec<Complex64>)>, ReprError> {
    let k = cd.k;
    let n = g.order() as f64;
    let mut out = Vec::with_capacity(k);
    for col in 0..k {
        let v: Vec<Complex64> = (0..k).map(|r| vecs[[r, col]]).collect();
        // Rescale the unit eigenvector to the central primitive idempotent:
        // v = z·ε/‖ε‖ for a unit phase z, and v∘v = z²ε/‖ε‖², so μ = v_m/(v∘v)_m
        // recovers ε = μ·v exactly, cancelling the phase.
        let p = cd.product_e(&v, &v);
        let m = (0..k)
            .max_by(|&a, &b| p[a].norm().partial_cmp(&p[b].norm()).unwrap())
            .unwrap();
        if p[m].norm() < 1e-8 {
            return Err(ReprError::ToleranceExceeded {
                stage: "idempotent rescaling".into(),
                residual: p[m].norm(),
            });
        }
        let mu = v[m] / p[m];
        let eps: Vec<Complex64> = v.iter().map(|&x| mu * x).collect();

        // ε_0 = d²/|G| on the identity class.
        let e0 = eps[0];
        if e0.im.abs() > 1e-8 || e0.re <= 0.0 {
            return Err(ReprError::ToleranceExceeded {
                stage: "idempotent identity coefficient".into(),
                residual: e0.im.abs(),
            });
        }
        let d_f = (n * e0.re).sqrt();
        let d = d_f.round() as usize;
        if d == 0 || (d_f - d as f64).abs() > 1e-6 {
            return Err(ReprError::ToleranceExceeded {
                stage: "dimension rounding".into(),
                residual: (d_f - d as f64).abs(),
            });
        }
        // ε_i = (d/|G|)·conj(χ(g_i))·√|C_i|.
        let chi: Vec<Complex64> = (0..k)
            .map(|i| eps[i].conj() * n / (d as f64 * (cd.sizes[i] as f64).sqrt()))
            .collect();
        if (chi[0] - Complex64::new(d as f64, 0.0)).norm() > tol.eps_char {
            return Err(ReprError::ToleranceExceeded {
                stage: "character at identity".into(),
                residual: (chi[0] - Complex64::new(d as f64, 0.0)).norm(),
            });
        }
        out.push((d, chi));
    }
    Ok(out)
}

fn one_dimensional_mats(
    g: &Group,
    chi: &[Complex64],
    tol: &Tolerances,
) -> Result<Vec<CMat>, ReprError> {
    let class_of = &g.classes().class_of;
    let mats: Vec<CMat> = (0..g.order())
        .map(|x| Array2::from_elem((1, 1), chi[class_of[x]]))
        .collect();
    let mut worst = 0.0f64;
    for a in 0..g.order() {
        let ua = mats[a][[0, 0]];
        worst = worst.max((ua.norm() - 1.0).abs());
        for b in 0..g.order() {
            let r = (ua * mats[b][[0, 0]] - mats[g.mul(a, b)][[0, 0]]).norm();
            worst = worst.max(r);
        }
    }
    if worst > tol.eps_mat {
        return Err(ReprError::ToleranceExceeded {
            stage: "one-dimensional homomorphism".into(),
            residual: worst,
        });
    }
    Ok(mats)
}

/// Builds matrices for a d ≥ 2 irreducible from the left regular
/// representation: L_g acts by x ↦ gx, the isotypic projector is
/// P = (d/|G|) Σ_g conj(χ(g)) L_g, and a random averaged operator commuting
/// with L splits the isotypic block into d-dimensional eigenspaces.
fn isotypic_mats(
    g: &Group,
    dim: usize,
    chi: &[Complex64],
    seed: u64,
    irrep_idx: u64,
    tol: &Tolerances,
) -> Result<Vec<CMat>, ReprError> {
    let n = g.order();
    let class_of = &g.classes().class_of;

    // P[a][b] = (d/|G|)·conj(χ(a·b⁻¹)); Hermitian idempotent of rank d².
    let scale = dim as f64 / n as f64;
    let mut p = Array2::from_elem((n, n), ZERO);
    for a in 0..n {
        for b in 0..n {
            p[[a, b]] = scale * chi[class_of[g.mul(a, g.inv(b))]].conj();
        }
    }

    let mut last_err = ReprError::DegenerateSplit { attempts: MAX_ATTEMPTS };
    for attempt in 0..MAX_ATTEMPTS {
        let mut rng = derive_rng(seed, &[stage::ISOTYPIC, irrep_idx, attempt as u64]);
        let y = random_hermitian(n, &mut rng);
        let x = p.dot(&y).dot(&p);

        // A = (1/|G|) Σ_g L_g X L_g†, i.e. A[a][b] = avg_g X[g⁻¹a][g⁻¹b].
        let mut a_op = Array2::from_elem((n, n), ZERO);
        for gx in 0..n {
            let gi = g.inv(gx);
            for r in 0..n {
                let rr = g.mul(gi, r);
                for c in 0..n {
                    a_op[[r, c]] += x[[rr, g.mul(gi, c)]];
                }
            }
        }
        let inv_n = 1.0 / n as f64;
        a_op.mapv_inplace(|z| z * inv_n);

        // Shift the isotypic spectrum away from the kernel: eigenvalues on
        // the image of P become ≥ 1, the complement stays at 0.
        let shift = 1.0 + frobenius_norm(&a_op);
        let b_op = &a_op + &p.mapv(|z| z * shift);

        let (vals, vecs) = hermitian_eig(&b_op);
        let iso: Vec<usize> = (0..n).filter(|&i| vals[i] > 0.5).collect();
        if iso.len() != dim * dim {
            last_err = ReprError::ToleranceExceeded {
                stage: format!("isotypic rank (got {}, want {})", iso.len(), dim * dim),
                residual: iso.len() as f64 - (dim * dim) as f64,
            };
            continue;
        }

        // The top eigenvalue cluster spans one irreducible copy.
        let cluster_gap = 1e-6 * shift;
        let mut cluster: Vec<usize> = vec![iso[iso.len() - 1]];
        for w in (0..iso.len() - 1).rev() {
            if vals[iso[w + 1]] - vals[iso[w]] > cluster_gap {
                break;
            }
            cluster.push(iso[w]);
        }
        if cluster.len() != dim {
            last_err = ReprError::DegenerateSplit { attempts: attempt + 1 };
            continue;
        }
        cluster.sort_unstable();
        let mut basis = Array2::from_elem((n, dim), ZERO);
        for (c, &col) in cluster.iter().enumerate() {
            for r in 0..n {
                basis[[r, c]] = vecs[[r, col]];
            }
        }

        match mats_from_invariant_basis(g, dim, chi, &basis, tol) {
            Ok(mats) => return Ok(mats),
            Err(e) => {
                last_err = e;
                continue;
            }
        }
    }
    Err(last_err)
}

fn mats_from_invariant_basis(
    g: &Group,
    dim: usize,
    chi: &[Complex64],
    basis: &CMat,
    tol: &Tolerances,
) -> Result<Vec<CMat>, ReprError> {
    let n = g.order();
    let class_of = &g.classes().class_of;
    let bdag = dagger(basis);
    let mut mats = Vec::with_capacity(n);
    for gx in 0..n {
        // (L_g B)[a][c] = B[g⁻¹a][c].
        let gi = g.inv(gx);
        let mut lb = Array2::from_elem((n, dim), ZERO);
        for r in 0..n {
            let src = g.mul(gi, r);
            for c in 0..dim {
                lb[[r, c]] = basis[[src, c]];
            }
        }
        mats.push(bdag.dot(&lb));
    }

    let id = identity(dim);
    let mut worst_unitary = 0.0f64;
    let mut worst_char = 0.0f64;
    for gx in 0..n {
        worst_unitary = worst_unitary.max(max_abs_diff(&dagger(&mats[gx]).dot(&mats[gx]), &id));
        let tr: Complex64 = (0..dim).map(|i| mats[gx][[i, i]]).sum();
        worst_char = worst_char.max((tr - chi[class_of[gx]]).norm());
    }
    if worst_unitary > tol.eps_mat {
        return Err(ReprError::ToleranceExceeded {
            stage: "irrep unitarity".into(),
            residual: worst_unitary,
        });
    }
    if worst_char > tol.eps_char {
        return Err(ReprError::ToleranceExceeded {
            stage: "irrep character".into(),
            residual: worst_char,
        });
    }
    let mut worst_hom = max_abs_diff(&mats[0], &id);
    for a in 0..n {
        for b in 0..n {
            worst_hom = worst_hom.max(max_abs_diff(&mats[a].dot(&mats[b]), &mats[g.mul(a, b)]));
        }
    }
    if worst_hom > tol.eps_mat {
        return Err(ReprError::ToleranceExceeded {
            stage: "irrep homomorphism".into(),
            residual: worst_hom,
        });
    }
    Ok(mats)
}

pub(crate) fn random_hermitian(n: usize, rng: &mut ChaCha8Rng) -> CMat {
    let mut m = Array2::from_elem((n, n), ZERO);
    for r in 0..n {
        m[[r, r]] = Complex64::new(rng.gen_range(-1.0..1.0), 0.0);
        for c in (r + 1)..n {
            let z = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            m[[r, c]] = z;
            m[[c, r]] = z.conj();
        }
    }
    m
}

pub(crate) fn random_matrix(rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> CMat {
    let mut m = Array2::from_elem((rows, cols), ZERO);
    for r in 0..rows {
        for c in 0..cols {
            m[[r, c]] = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        }
    }
    m
}

/// Unitary T with `T·σ(g) = π(g)·T` for all g, or `None` when σ and π are
/// inequivalent. σ and π must be irreducible and unitary; T is computed by
/// Schur averaging of a random matrix and normalized through the scalar
/// `T₀†T₀ = λI`. Norms in the ambiguous band between `eps_schur` and
/// `gamma_band` are rejected after retries rather than classified.
pub fn schur_intertwiner(
    g: &Group,
    sigma: &[CMat],
    pi: &[CMat],
    seed: u64,
    tags: &[u64],
    tol: &Tolerances,
) -> Result<Option<CMat>, ReprError> {
    let d_from = sigma[0].nrows();
    let d_to = pi[0].nrows();
    let n = g.order();
    let mut ambiguous: Option<f64> = None;
    for attempt in 0..MAX_ATTEMPTS {
        let mut path = vec![stage::SCHUR];
        path.extend_from_slice(tags);
        path.push(attempt as u64);
        let mut rng = derive_rng(seed, &path);
        let x = random_matrix(d_to, d_from, &mut rng);

        let mut t0 = Array2::from_elem((d_to, d_from), ZERO);
        for gx in 0..n {
            t0 = t0 + pi[gx].dot(&x).dot(&sigma[g.inv(gx)]);
        }
        t0.mapv_inplace(|z| z / n as f64);

        // RMS singular value: λ from T₀†T₀ = λI when the maps are equivalent.
        let norm = frobenius_norm(&t0) / (d_from.min(d_to) as f64).sqrt();
        if norm < tol.eps_schur {
            // Confirm zero on a second draw before concluding inequivalence.
            if attempt >= 1 {
                return Ok(None);
            }
            continue;
        }
        if norm < tol.gamma_band {
            ambiguous = Some(norm);
            continue;
        }

        if d_from != d_to {
            // Nonzero map between different dimensions contradicts Schur.
            return Err(ReprError::ToleranceExceeded {
                stage: "Schur dimension".into(),
                residual: norm,
            });
        }
        let gram = dagger(&t0).dot(&t0);
        let lambda = (0..d_from).map(|i| gram[[i, i]].re).sum::<f64>() / d_from as f64;
        let scalar_defect = max_abs_diff(&gram, &identity(d_from).mapv(|z| z * lambda));
        if scalar_defect > tol.eps_mat * (1.0 + lambda) {
            ambiguous = Some(norm);
            continue;
        }
        let mut u = t0.mapv(|z| z / lambda.sqrt());
        // Fix the Schur phase: rotate so the largest-magnitude entry is real
        // positive. Removes the gauge freedom the random X injects; in
        // particular a 1-dimensional self-intertwiner becomes exactly 1.
        let mut best = (0usize, 0usize);
        let mut best_norm = -1.0f64;
        for r in 0..d_to {
            for c in 0..d_from {
                let nrm = u[[r, c]].norm();
                if nrm > best_norm {
                    best_norm = nrm;
                    best = (r, c);
                }
            }
        }
        let w = u[[best.0, best.1]].conj() / best_norm;
        u.mapv_inplace(|z| z * w);
        let mut worst = 0.0f64;
        for gx in 0..n {
            worst = worst.max(max_abs_diff(&u.dot(&sigma[gx]), &pi[gx].dot(&u)));
        }
        if worst > tol.eps_mat {
            return Err(ReprError::ToleranceExceeded {
                stage: "intertwiner residual".into(),
                residual: worst,
            });
        }
        return Ok(Some(u));
    }
    match ambiguous {
        Some(norm) => Err(ReprError::AmbiguousSchur { norm }),
        None => Ok(None),
    }
}
