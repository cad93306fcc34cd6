//! The Q-action on the character set of G, unitary intertwiners, and the
//! U(1)-valued groupoid cocycle they generate.
//!
//! For each irreducible ρ and each q, the twisted representation
//! σ(g) = ρ(ad_q(g)) is again irreducible; its catalog index is the action
//! `act([ρ], q)`. A unitary T[ρ][q] with `T·σ(g) = π(g)·T` (π the catalog
//! representative) exists by Schur, and composing two of them against the
//! factor set produces a scalar:
//!
//! `T[q1ρ][q2] · T[ρ][q1] · ρ(τ(q1,q2)) = c^ρ(q1,q2) · T[ρ][q1·q2]`.
//!
//! The scalars c form a 2-cocycle on the action groupoid; the ratios
//! γ = c(q1,q)/c(q,q1) on stabilizers are gauge invariant and drive the
//! conjugacy-class counting.

use crate::config::{stage, Tolerances};
use crate::extension::ExtensionData;
use crate::linalg::{dagger, identity, max_abs_diff, CMat, ONE};
use crate::repr::{schur_intertwiner, IrrepCatalog, ReprError};
use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum TwistError {
    #[error(transparent)]
    Repr(#[from] ReprError),
    #[error("no catalog character matches irrep {rho} twisted by {q}")]
    ActionNoMatch { rho: usize, q: usize },
    #[error("multiple catalog characters match irrep {rho} twisted by {q}")]
    ActionAmbiguous { rho: usize, q: usize },
    #[error("action table is not compatible at (rho {rho}, {q1}, {q2})")]
    ActionNotCompatible { rho: usize, q1: usize, q2: usize },
    #[error("no intertwiner found for irrep {rho} at q = {q} despite matching characters")]
    MissingIntertwiner { rho: usize, q: usize },
    #[error("composite at (rho {rho}, {q1}, {q2}) is not scalar: defect {defect:e}")]
    NonScalarDefect { rho: usize, q1: usize, q2: usize, defect: f64 },
    #[error("cocycle value at (rho {rho}, {q1}, {q2}) has modulus {modulus} ≠ 1")]
    NonUnitModulus { rho: usize, q1: usize, q2: usize, modulus: f64 },
    #[error("groupoid cocycle identity fails at (rho {rho}, {q1}, {q2}, {q3}): residual {residual:e}")]
    CocycleResidual { rho: usize, q1: usize, q2: usize, q3: usize, residual: f64 },
    #[error("identity intertwiners are invalid for irrep {rho} at q = {q}: residual {residual:e}")]
    IdentityIntertwinersInvalid { rho: usize, q: usize, residual: f64 },
}

/// `act[rho][q]` is the catalog index of ρ twisted by ad_q. Each column is a
/// permutation of the catalog, and `act[act[ρ][q1]][q2] = act[ρ][q1·q2]`
/// (a right action written on the left).
#[derive(Debug, Clone)]
pub struct ActionTable {
    pub act: Vec<Vec<usize>>,
}

impl ActionTable {
    pub fn apply(&self, rho: usize, q: usize) -> usize {
        self.act[rho][q]
    }

    /// Irreps fixed by q.
    pub fn fixed_set(&self, q: usize) -> Vec<usize> {
        (0..self.act.len()).filter(|&r| self.act[r][q] == r).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.act.iter().enumerate().all(|(r, row)| row.iter().all(|&v| v == r))
    }
}

/// Computes the action of Q on the catalog by character matching.
pub fn compute_action(
    ext: &ExtensionData,
    cat: &IrrepCatalog,
    tol: &Tolerances,
) -> Result<ActionTable, TwistError> {
    let nq = ext.q.order();
    let classes = ext.g.classes();
    let k = classes.count();
    let mut act = vec![vec![0usize; nq]; cat.len()];
    for rho in 0..cat.len() {
        for q in 0..nq {
            // Character of g ↦ ρ(ad_q(g)) per class of G.
            let chi: Vec<Complex64> = (0..k)
                .map(|i| {
                    let rep = classes.representative(i);
                    cat.irreps[rho].chi[classes.class_of[ext.ad[q][rep]]]
                })
                .collect();
            act[rho][q] = match cat.find_by_character(&chi, tol.eps_char) {
                Ok(Some(idx)) => idx,
                Ok(None) => return Err(TwistError::ActionNoMatch { rho, q }),
                Err(_) => return Err(TwistError::ActionAmbiguous { rho, q }),
            };
        }
    }
    let table = ActionTable { act };
    // act(·, q) must permute the catalog and compose with Q's product.
    for q in 0..nq {
        let mut seen = vec![false; cat.len()];
        for rho in 0..cat.len() {
            let v = table.act[rho][q];
            if seen[v] {
                return Err(TwistError::ActionAmbiguous { rho, q });
            }
            seen[v] = true;
        }
    }
    for rho in 0..cat.len() {
        if table.act[rho][0] != rho {
            return Err(TwistError::ActionNotCompatible { rho, q1: 0, q2: 0 });
        }
        for q1 in 0..nq {
            for q2 in 0..nq {
                if table.act[table.act[rho][q1]][q2] != table.act[rho][ext.q.mul(q1, q2)] {
                    return Err(TwistError::ActionNotCompatible { rho, q1, q2 });
                }
            }
        }
    }
    Ok(table)
}

/// Residuals accumulated while building and checking the twist data.
#[derive(Debug, Clone, Default)]
pub struct TwistDiagnostics {
    pub max_intertwine_residual: f64,
    pub max_scalar_defect: f64,
    pub max_unit_modulus_dev: f64,
    pub max_normalization_dev: f64,
    pub max_cocycle_residual: f64,
}

/// Intertwiners and the scalar cocycle extracted from them. Normalization
/// rows c(1, q) and c(q, 1) are stored as exactly 1 after their defining
/// matrices are checked against the identity.
#[derive(Debug, Clone)]
pub struct TwistData {
    /// `t[rho][q]`: unitary from V_ρ to V_{act(ρ,q)}; `t[rho][0]` is the
    /// identity.
    pub t: Vec<Vec<CMat>>,
    /// `c[rho][q1][q2]`, a unit-modulus scalar.
    pub c: Vec<Vec<Vec<Complex64>>>,
    pub diag: TwistDiagnostics,
}

impl TwistData {
    pub fn c_of(&self, rho: usize, q1: usize, q2: usize) -> Complex64 {
        self.c[rho][q1][q2]
    }
}

/// Gauge-dependent in general; gauge-invariant when both q1 and q stabilize
/// [ρ], which is the only regime the counting theorem consumes.
pub fn gamma(tw: &TwistData, rho: usize, q1: usize, q: usize) -> Complex64 {
    tw.c[rho][q1][q] / tw.c[rho][q][q1]
}

/// Computes intertwiners by Schur averaging, then extracts the cocycle.
pub fn compute_twist(
    ext: &ExtensionData,
    cat: &IrrepCatalog,
    act: &ActionTable,
    seed: u64,
    tol: &Tolerances,
) -> Result<TwistData, TwistError> {
    let nq = ext.q.order();
    let ng = ext.g.order();
    let mut diag = TwistDiagnostics::default();

    let mut t: Vec<Vec<CMat>> = Vec::with_capacity(cat.len());
    for rho in 0..cat.len() {
        let d = cat.irreps[rho].dim;
        let mut row: Vec<CMat> = Vec::with_capacity(nq);
        row.push(identity(d));
        for q in 1..nq {
            let sigma: Vec<CMat> =
                (0..ng).map(|g| cat.irreps[rho].mats[ext.ad[q][g]].clone()).collect();
            let pi = &cat.irreps[act.apply(rho, q)];
            let u = schur_intertwiner(
                &ext.g,
                &sigma,
                &pi.mats,
                seed,
                &[stage::INTERTWINER, rho as u64, q as u64],
                tol,
            )?
            .ok_or(TwistError::MissingIntertwiner { rho, q })?;
            let mut worst = 0.0f64;
            for g in 0..ng {
                worst = worst.max(max_abs_diff(&u.dot(&sigma[g]), &pi.mats[g].dot(&u)));
            }
            diag.max_intertwine_residual = diag.max_intertwine_residual.max(worst);
            row.push(u);
        }
        t.push(row);
    }

    let c = extract_cocycle(ext, cat, act, &t, tol, &mut diag)?;
    verify_groupoid_identity(ext, act, &c, tol, &mut diag)?;
    Ok(TwistData { t, c, diag })
}

/// Uses the identity map as every intertwiner. Valid only when the action
/// fixes every irrep matrix-for-matrix (central kernels, direct products);
/// the defining relation then exposes c^ρ(q1,q2) directly as ρ(τ(q1,q2)).
pub fn twist_with_identity_intertwiners(
    ext: &ExtensionData,
    cat: &IrrepCatalog,
    act: &ActionTable,
    tol: &Tolerances,
) -> Result<TwistData, TwistError> {
    let nq = ext.q.order();
    let ng = ext.g.order();
    let mut diag = TwistDiagnostics::default();
    let mut t: Vec<Vec<CMat>> = Vec::with_capacity(cat.len());
    for rho in 0..cat.len() {
        for q in 0..nq {
            if act.apply(rho, q) != rho {
                return Err(TwistError::IdentityIntertwinersInvalid { rho, q, residual: f64::INFINITY });
            }
            let mut worst = 0.0f64;
            for g in 0..ng {
                worst = worst.max(max_abs_diff(
                    &cat.irreps[rho].mats[ext.ad[q][g]],
                    &cat.irreps[rho].mats[g],
                ));
            }
            if worst > tol.eps_mat {
                return Err(TwistError::IdentityIntertwinersInvalid { rho, q, residual: worst });
            }
            diag.max_intertwine_residual = diag.max_intertwine_residual.max(worst);
        }
        t.push((0..nq).map(|_| identity(cat.irreps[rho].dim)).collect());
    }
    let c = extract_cocycle(ext, cat, act, &t, tol, &mut diag)?;
    verify_groupoid_identity(ext, act, &c, tol, &mut diag)?;
    Ok(TwistData { t, c, diag })
}

/// Evaluates `M = T[q1ρ][q2] · T[ρ][q1] · ρ(τ(q1,q2)) · T[ρ][q1q2]†` for all
/// triples; M must be a unit-modulus scalar matrix, and its trace/d is the
/// cocycle value.
fn extract_cocycle(
    ext: &ExtensionData,
    cat: &IrrepCatalog,
    act: &ActionTable,
    t: &[Vec<CMat>],
    tol: &Tolerances,
    diag: &mut TwistDiagnostics,
) -> Result<Vec<Vec<Vec<Complex64>>>, TwistError> {
    let nq = ext.q.order();
    let mut c = vec![vec![vec![ONE; nq]; nq]; cat.len()];
    for rho in 0..cat.len() {
        let d = cat.irreps[rho].dim;
        let id = identity(d);
        for q1 in 0..nq {
            let k1 = act.apply(rho, q1);
            for q2 in 0..nq {
                let q12 = ext.q.mul(q1, q2);
                let tau = ext.tau[q1][q2];
                let m = t[k1][q2]
                    .dot(&t[rho][q1])
                    .dot(&cat.irreps[rho].mats[tau])
                    .dot(&dagger(&t[rho][q12]));
                if q1 == 0 || q2 == 0 {
                    // Normalized section forces these composites to be the
                    // identity; verify and store an exact 1.
                    let dev = max_abs_diff(&m, &id);
                    diag.max_normalization_dev = diag.max_normalization_dev.max(dev);
                    if dev > tol.eps_mat {
                        return Err(TwistError::NonScalarDefect { rho, q1, q2, defect: dev });
                    }
                    c[rho][q1][q2] = ONE;
                    continue;
                }
                let tr: Complex64 = (0..d).map(|i| m[[i, i]]).sum();
                let val = tr / d as f64;
                let defect = max_abs_diff(&m, &id.mapv(|z| z * val));
                diag.max_scalar_defect = diag.max_scalar_defect.max(defect);
                if defect > tol.eps_mat {
                    return Err(TwistError::NonScalarDefect { rho, q1, q2, defect });
                }
                let modulus_dev = (val.norm() - 1.0).abs();
                diag.max_unit_modulus_dev = diag.max_unit_modulus_dev.max(modulus_dev);
                if modulus_dev > tol.eps_mat {
                    return Err(TwistError::NonUnitModulus { rho, q1, q2, modulus: val.norm() });
                }
                c[rho][q1][q2] = val;
            }
        }
    }
    Ok(c)
}

/// `c^ρ(q1,q2)·c^ρ(q1q2,q3) = c^{q1ρ}(q2,q3)·c^ρ(q1,q2q3)` for all triples.
fn verify_groupoid_identity(
    ext: &ExtensionData,
    act: &ActionTable,
    c: &[Vec<Vec<Complex64>>],
    tol: &Tolerances,
    diag: &mut TwistDiagnostics,
) -> Result<(), TwistError> {
    let nq = ext.q.order();
    for rho in 0..c.len() {
        for q1 in 0..nq {
            let k1 = act.apply(rho, q1);
            for q2 in 0..nq {
                for q3 in 0..nq {
                    let lhs = c[rho][q1][q2] * c[rho][ext.q.mul(q1, q2)][q3];
                    let rhs = c[k1][q2][q3] * c[rho][q1][ext.q.mul(q2, q3)];
                    let residual = (lhs - rhs).norm();
                    diag.max_cocycle_residual = diag.max_cocycle_residual.max(residual);
                    if residual > tol.eps_mat {
                        return Err(TwistError::CocycleResidual { rho, q1, q2, q3, residual });
                    }
                }
            }
        }
    }
    Ok(())
}
