//! Conjugacy classes of H lying over a conjugacy class of Q.
//!
//! The projection j sends H-classes onto Q-classes, so the H-classes
//! partition over the classes of Q. For a representative q, the count over
//! ⟨q⟩ equals the number of C(q)-orbits on the q-fixed irreducible characters
//! of G whose stabilizer phases are all trivial:
//!
//! count(q) = #{ orbits O ⊆ Ĝ^q : γ_{q1,q}^[ρ] = 1 for all q1 ∈ Stab([ρ]) }.
//!
//! Everything here is cross-checked against an integer oracle that just
//! counts H-classes through the projection, plus three specializations with
//! simpler right-hand sides (abelian kernel, split abelian, trivial action).

use crate::config::Tolerances;
use crate::extension::ExtensionData;
use crate::repr::IrrepCatalog;
use crate::twist::{gamma, ActionTable, TwistData};
use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CountError {
    #[error("fixed set is not invariant: act(rho {rho}, {q1}) leaves it")]
    NotInvariant { rho: usize, q1: usize },
    #[error("gamma at (rho {rho}, q1 {q1}, q {q}) is ambiguous: |γ-1| = {dev:e}")]
    AmbiguousGamma { rho: usize, q1: usize, q: usize, dev: f64 },
    #[error("orbit of rho {rep} gives a different verdict at member {member}")]
    OrbitVerdictInconsistent { rep: usize, member: usize },
    #[error("orbit-stabilizer mismatch for rho {rho}: {orbit} · {stab} ≠ {group}")]
    OrbitStabilizerMismatch { rho: usize, orbit: usize, stab: usize, group: usize },
    #[error("specialized count {specialized} ({which}) disagrees with the general formula {general}")]
    SpecializedMismatch { which: &'static str, specialized: usize, general: usize },
}

/// A C(q)-orbit on the q-fixed part of the catalog.
#[derive(Debug, Clone)]
pub struct Orbit {
    pub representative: usize,
    pub members: Vec<usize>,
    /// Elements of C(q) fixing the representative.
    pub stabilizer: Vec<usize>,
}

/// Verdict of the phase test on one orbit.
#[derive(Debug, Clone)]
pub struct OrbitVerdict {
    pub orbit: Orbit,
    pub passes: bool,
    /// A stabilizer element witnessing γ ≠ 1 when the orbit fails.
    pub witness: Option<usize>,
    /// Largest |γ - 1| observed over the stabilizer (diagnostic).
    pub max_dev: f64,
}

/// Counting result over the Q-class of one representative.
#[derive(Debug, Clone)]
pub struct ClassCountRow {
    pub q_rep: usize,
    pub q_class_size: usize,
    pub centralizer_order: usize,
    pub fixed_count: usize,
    pub verdicts: Vec<OrbitVerdict>,
    pub formula_count: usize,
    pub oracle_count: usize,
}

impl ClassCountRow {
    pub fn agrees(&self) -> bool {
        self.formula_count == self.oracle_count
    }
}

/// C(q)-orbits of the q-fixed set, ordered by smallest member; each orbit's
/// representative is its smallest member. Verifies invariance of the fixed
/// set and the orbit-stabilizer identity.
pub fn orbit_decomposition(
    ext: &ExtensionData,
    act: &ActionTable,
    q: usize,
) -> Result<(Vec<usize>, Vec<Orbit>), CountError> {
    let cq = ext.q.centralizer(q);
    let fixed = act.fixed_set(q);
    for &rho in &fixed {
        for &q1 in &cq {
            let moved = act.apply(rho, q1);
            if !fixed.contains(&moved) {
                return Err(CountError::NotInvariant { rho, q1 });
            }
        }
    }
    let mut seen = vec![false; act.act.len()];
    let mut orbits = Vec::new();
    for &rho in &fixed {
        if seen[rho] {
            continue;
        }
        let mut members: Vec<usize> = cq.iter().map(|&q1| act.apply(rho, q1)).collect();
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            seen[m] = true;
        }
        let stabilizer: Vec<usize> = cq.iter().cloned().filter(|&q1| act.apply(rho, q1) == rho).collect();
        if members.len() * stabilizer.len() != cq.len() {
            return Err(CountError::OrbitStabilizerMismatch {
                rho,
                orbit: members.len(),
                stab: stabilizer.len(),
                group: cq.len(),
            });
        }
        orbits.push(Orbit { representative: rho, members, stabilizer });
    }
    Ok((cq, orbits))
}

/// |z - 1| classified against the tolerance and its ambiguity band.
fn phase_is_trivial(z: Complex64, tol: &Tolerances) -> Result<bool, f64> {
    let dev = (z - Complex64::new(1.0, 0.0)).norm();
    if dev < tol.eps_gamma {
        Ok(true)
    } else if dev < tol.gamma_band {
        Err(dev)
    } else {
        Ok(false)
    }
}

/// Evaluates the counting formula over the class of `q` and compares with the
/// integer oracle.
pub fn count_over_class(
    ext: &ExtensionData,
    act: &ActionTable,
    tw: &TwistData,
    q: usize,
    tol: &Tolerances,
) -> Result<ClassCountRow, CountError> {
    let (cq, orbits) = orbit_decomposition(ext, act, q)?;
    let fixed_count = act.fixed_set(q).len();

    let mut verdicts = Vec::with_capacity(orbits.len());
    for orbit in orbits {
        let (passes, witness, max_dev) = orbit_verdict_at(tw, &orbit.stabilizer, orbit.representative, q, tol)
            .map_err(|(q1, dev)| CountError::AmbiguousGamma { rho: orbit.representative, q1, q, dev })?;
        // The verdict must not depend on the orbit point: re-evaluate at
        // every member with its own stabilizer.
        for &m in &orbit.members {
            if m == orbit.representative {
                continue;
            }
            let stab_m: Vec<usize> = cq.iter().cloned().filter(|&q1| act.apply(m, q1) == m).collect();
            let (p_m, _, _) = orbit_verdict_at(tw, &stab_m, m, q, tol)
                .map_err(|(q1, dev)| CountError::AmbiguousGamma { rho: m, q1, q, dev })?;
            if p_m != passes {
                return Err(CountError::OrbitVerdictInconsistent { rep: orbit.representative, member: m });
            }
        }
        verdicts.push(OrbitVerdict { orbit, passes, witness, max_dev });
    }

    let formula_count = verdicts.iter().filter(|v| v.passes).count();
    let oracle_count = oracle_count_over_class(ext, q);
    Ok(ClassCountRow {
        q_rep: q,
        q_class_size: ext.q.classes().members[ext.q.classes().class_of[q]].len(),
        centralizer_order: cq.len(),
        fixed_count,
        verdicts,
        formula_count,
        oracle_count,
    })
}

fn orbit_verdict_at(
    tw: &TwistData,
    stabilizer: &[usize],
    rho: usize,
    q: usize,
    tol: &Tolerances,
) -> Result<(bool, Option<usize>, f64), (usize, f64)> {
    let mut passes = true;
    let mut witness = None;
    let mut max_dev = 0.0f64;
    for &q1 in stabilizer {
        let g = gamma(tw, rho, q1, q);
        match phase_is_trivial(g, tol) {
            Ok(true) => {
                max_dev = max_dev.max((g - Complex64::new(1.0, 0.0)).norm());
            }
            Ok(false) => {
                if witness.is_none() {
                    witness = Some(q1);
                }
                passes = false;
            }
            Err(dev) => return Err((q1, dev)),
        }
    }
    Ok((passes, witness, max_dev))
}

/// Integer oracle: the number of H-classes whose projection lands in the
/// Q-class of `q`. No floating point involved.
pub fn oracle_count_over_class(ext: &ExtensionData, q: usize) -> usize {
    let q_class = ext.q.classes().class_of[q];
    ext.h
        .classes()
        .members
        .iter()
        .filter(|cls| ext.q.classes().class_of[ext.j.apply(cls[0])] == q_class)
        .count()
}

/// One row per Q-class, in class order.
pub fn count_all_classes(
    ext: &ExtensionData,
    act: &ActionTable,
    tw: &TwistData,
    tol: &Tolerances,
) -> Result<Vec<ClassCountRow>, CountError> {
    (0..ext.q.classes().count())
        .map(|c| count_over_class(ext, act, tw, ext.q.classes().representative(c), tol))
        .collect()
}

/// Right-hand sides that are valid under structural hypotheses; each is
/// `None` when its hypothesis does not hold for this extension.
#[derive(Debug, Clone, Default)]
pub struct SpecializedCounts {
    /// Abelian kernel: count orbits whose stabilizer phases
    /// ρ(τ(q1,q)τ(q,q1)⁻¹) are all 1.
    pub abelian_phase: Option<usize>,
    /// Split extension with abelian kernel: plain orbit count.
    pub split_orbit: Option<usize>,
    /// Trivial action on the character set: count irreps with
    /// ρ(τ(q1,q)τ(q,q1)⁻¹) = Id for all q1 ∈ C(q).
    pub trivial_action_matrix: Option<usize>,
}

/// Evaluates whichever specializations apply at `q`.
pub fn specialized_counts(
    ext: &ExtensionData,
    cat: &IrrepCatalog,
    act: &ActionTable,
    q: usize,
    split: Option<bool>,
    tol: &Tolerances,
) -> Result<SpecializedCounts, CountError> {
    let mut out = SpecializedCounts::default();
    let (cq, orbits) = orbit_decomposition(ext, act, q)?;

    if ext.g.is_abelian() {
        let mut count = 0usize;
        for orbit in &orbits {
            let rho = orbit.representative;
            let mut ok = true;
            for &q1 in &orbit.stabilizer {
                let phase = cat.irreps[rho].mats[ext.tau_comm(q1, q)][[0, 0]];
                match phase_is_trivial(phase, tol) {
                    Ok(true) => {}
                    Ok(false) => {
                        ok = false;
                        break;
                    }
                    Err(dev) => {
                        return Err(CountError::AmbiguousGamma { rho, q1, q, dev });
                    }
                }
            }
            if ok {
                count += 1;
            }
        }
        out.abelian_phase = Some(count);
        if split == Some(true) {
            out.split_orbit = Some(orbits.len());
        }
    }

    if act.is_trivial() {
        let mut count = 0usize;
        for rho in 0..cat.len() {
            let d = cat.irreps[rho].dim;
            let mut ok = true;
            for &q1 in &cq {
                let m = &cat.irreps[rho].mats[ext.tau_comm(q1, q)];
                let mut dev = 0.0f64;
                for r in 0..d {
                    for c in 0..d {
                        let want = if r == c { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 0.0) };
                        dev = dev.max((m[[r, c]] - want).norm());
                    }
                }
                if dev < tol.eps_gamma {
                    continue;
                }
                if dev < tol.gamma_band {
                    return Err(CountError::AmbiguousGamma { rho, q1, q, dev });
                }
                ok = false;
                break;
            }
            if ok {
                count += 1;
            }
        }
        out.trivial_action_matrix = Some(count);
    }
    Ok(out)
}

/// Asserts that every applicable specialization reproduces the general count.
pub fn validate_specializations(row: &ClassCountRow, sc: &SpecializedCounts) -> Result<(), CountError> {
    let general = row.formula_count;
    for (which, value) in [
        ("abelian phase", sc.abelian_phase),
        ("split orbit", sc.split_orbit),
        ("trivial action", sc.trivial_action_matrix),
    ] {
        if let Some(v) = value {
            if v != general {
                return Err(CountError::SpecializedMismatch { which, specialized: v, general });
            }
        }
    }
    Ok(())
}
