//! Full pipeline: representations, action, twist, counting, orthogonality,
//! and the three algebras, assembled into one serializable report.

use crate::algebra::{
    crossed_product, group_algebra, groupoid_algebra, groupoid_grading, kappa_check,
    q_class_grading, AlgebraError,
};
use crate::config::RunConfig;
use crate::counting::{
    count_over_class, specialized_counts, validate_specializations, CountError,
};
use crate::extension::{ExtensionData, ExtensionError};
use crate::jsonio::{complex_pair, round12};
use crate::orthogonality::verify_orthogonality;
use crate::repr::{compute_irreps, ReprError};
use crate::twist::{compute_action, compute_twist, TwistError};
use serde::Serialize;
use thiserror::Error;

/// Failures while running the pipeline (as opposed to a completed run whose
/// verification flags are false).
#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("extension data failed verification: {0}")]
    Extension(#[from] ExtensionError),
    #[error("representation stage failed: {0}")]
    Repr(#[from] ReprError),
    #[error("twist stage failed: {0}")]
    Twist(#[from] TwistError),
    #[error("counting stage failed: {0}")]
    Count(#[from] CountError),
    #[error("algebra stage failed: {0}")]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, Serialize)]
pub struct ExtensionSummary {
    pub g_order: usize,
    pub h_order: usize,
    pub q_order: usize,
    pub g_classes: usize,
    pub h_classes: usize,
    pub q_classes: usize,
    /// None when the brute-force search space exceeded the configured cap.
    pub split: Option<bool>,
    pub action_class_preserving: bool,
    /// Number of nonidentity factor-set values.
    pub tau_nontrivial: usize,
    pub section: Vec<usize>,
    pub twisted_product_ok: bool,
}

/// A complex matrix flattened for JSON: rows of (re, im) pairs.
pub type SerializedMat = Vec<Vec<[f64; 2]>>;

#[derive(Debug, Clone, Serialize)]
pub struct IrrepsSection {
    pub dims: Vec<usize>,
    /// Per irrep, per conjugacy class of G, as (re, im).
    pub characters: Vec<Vec<[f64; 2]>>,
    /// Per irrep, per group element; present only when requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrices: Option<Vec<Vec<SerializedMat>>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ActionSection {
    /// `table[rho][q]` = catalog index of the twist of ρ by q.
    pub table: Vec<Vec<usize>>,
    pub trivial: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct TwistSection {
    /// `c[rho][q1][q2]` as (re, im).
    pub c: Vec<Vec<Vec<[f64; 2]>>>,
    pub max_intertwine_residual: f64,
    pub max_scalar_defect: f64,
    pub max_unit_modulus_dev: f64,
    pub max_normalization_dev: f64,
    pub max_cocycle_residual: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitRow {
    pub representative: usize,
    pub size: usize,
    pub stabilizer_order: usize,
    pub passes: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpecializedSection {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub abelian_phase: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub split_orbit: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trivial_action_matrix: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CountRow {
    pub q_rep: usize,
    pub q_label: String,
    pub q_class_size: usize,
    pub centralizer_order: usize,
    pub fixed_irreps: usize,
    pub orbits: Vec<OrbitRow>,
    pub formula_count: usize,
    pub oracle_count: usize,
    pub specialized: SpecializedSection,
    pub agrees: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CountingSection {
    pub rows: Vec<CountRow>,
    pub total_formula: usize,
    pub total_h_classes: usize,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct OrthoSection {
    pub pairs_checked: usize,
    pub max_deviation: f64,
    pub worst_pair: [usize; 2],
    pub max_imag: f64,
    pub oracle_consistent: bool,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct AlgebraSection {
    pub group_algebra_dim: usize,
    pub group_center_dim: usize,
    pub graded_center_dims: Vec<usize>,
    pub graded_matches_counts: bool,
    pub crossed_dim: usize,
    pub crossed_center_dim: usize,
    pub kappa_max_residual: f64,
    pub kappa_rank: usize,
    pub groupoid_dim: usize,
    pub groupoid_center_dim: usize,
    pub groupoid_graded_dims: Vec<usize>,
    pub groupoid_graded_matches: bool,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct FullReport {
    pub schema: u32,
    pub name: String,
    pub seed: u64,
    pub extension: ExtensionSummary,
    pub irreps: IrrepsSection,
    pub action: ActionSection,
    pub twist: TwistSection,
    pub counting: CountingSection,
    pub orthogonality: OrthoSection,
    pub algebras: AlgebraSection,
    pub pass: bool,
}

/// Runs everything on one extension. `Err` means a stage could not complete;
/// a report with `pass == false` means a stage completed and disagreed.
pub fn analyze_extension(ext: &ExtensionData, cfg: &RunConfig) -> Result<FullReport, PipelineError> {
    let tol = &cfg.tol;
    ext.verify()?;
    let twisted_product_ok = ext.twisted_product_group().is_ok();
    let split = ext.is_split_bounded(cfg.split_search_cap);

    let cat = compute_irreps(&ext.g, cfg.seed, tol)?;
    let act = compute_action(ext, &cat, tol)?;
    let tw = compute_twist(ext, &cat, &act, cfg.seed, tol)?;

    let nq = ext.q.order();
    let tau_nontrivial = (0..nq)
        .flat_map(|a| (0..nq).map(move |b| (a, b)))
        .filter(|&(a, b)| ext.tau[a][b] != 0)
        .count();

    let mut rows = Vec::new();
    for c in 0..ext.q.classes().count() {
        let q = ext.q.classes().representative(c);
        let row = count_over_class(ext, &act, &tw, q, tol)?;
        let sc = specialized_counts(ext, &cat, &act, q, split, tol)?;
        validate_specializations(&row, &sc)?;
        rows.push(CountRow {
            q_rep: q,
            q_label: ext.q.label(q).to_string(),
            q_class_size: row.q_class_size,
            centralizer_order: row.centralizer_order,
            fixed_irreps: row.fixed_count,
            orbits: row
                .verdicts
                .iter()
                .map(|v| OrbitRow {
                    representative: v.orbit.representative,
                    size: v.orbit.members.len(),
                    stabilizer_order: v.orbit.stabilizer.len(),
                    passes: v.passes,
                    witness: v.witness,
                })
                .collect(),
            formula_count: row.formula_count,
            oracle_count: row.oracle_count,
            specialized: SpecializedSection {
                abelian_phase: sc.abelian_phase,
                split_orbit: sc.split_orbit,
                trivial_action_matrix: sc.trivial_action_matrix,
            },
            agrees: row.agrees(),
        });
    }
    let total_formula: usize = rows.iter().map(|r| r.formula_count).sum();
    let total_h_classes = ext.h.classes().count();
    let counting_pass = rows.iter().all(|r| r.agrees) && total_formula == total_h_classes;

    let ortho = verify_orthogonality(ext, &cat, &act, tol);

    let halg = group_algebra(&ext.h);
    let group_center_dim = halg.center_dim(tol.eps_rank);
    let (grading, n_grades) = q_class_grading(ext);
    let graded = halg.graded_center_dims(&grading, n_grades, tol.eps_rank)?;
    let graded_matches_counts = graded
        .iter()
        .zip(&rows)
        .all(|(&d, r)| d == r.formula_count);

    let (basis, crossed) = crossed_product(ext, &cat, &act, &tw);
    crossed.verify(tol.eps_mat)?;
    let kappa = kappa_check(ext, &cat, &basis, &crossed, tol)?;
    let crossed_center_dim = crossed.center_dim(tol.eps_rank);

    let gpd = groupoid_algebra(&ext.q, &act, &tw);
    gpd.verify(tol.eps_mat)?;
    let groupoid_center_dim = gpd.center_dim(tol.eps_rank);
    let (gpd_grading, gpd_grades) = groupoid_grading(&ext.q, cat.len());
    let gpd_graded = gpd.graded_center_dims(&gpd_grading, gpd_grades, tol.eps_rank)?;
    let groupoid_graded_matches = gpd_graded
        .iter()
        .zip(&rows)
        .all(|(&d, r)| d == r.formula_count);

    let algebra_pass = group_center_dim == total_h_classes
        && crossed_center_dim == total_h_classes
        && graded_matches_counts
        && groupoid_graded_matches
        && kappa.pass;

    let report = FullReport {
        schema: 1,
        name: ext.name.clone(),
        seed: cfg.seed,
        extension: ExtensionSummary {
            g_order: ext.g.order(),
            h_order: ext.h.order(),
            q_order: nq,
            g_classes: ext.g.classes().count(),
            h_classes: total_h_classes,
            q_classes: ext.q.classes().count(),
            split,
            action_class_preserving: ext.action_is_class_preserving(),
            tau_nontrivial,
            section: ext.s.clone(),
            twisted_product_ok,
        },
        irreps: IrrepsSection {
            dims: cat.dims(),
            characters: cat
                .irreps
                .iter()
                .map(|r| r.chi.iter().map(|&z| complex_pair(z)).collect())
                .collect(),
            matrices: cfg.dump_matrices.then(|| {
                cat.irreps
                    .iter()
                    .map(|r| {
                        r.mats
                            .iter()
                            .map(|m| {
                                (0..r.dim)
                                    .map(|i| (0..r.dim).map(|j| complex_pair(m[[i, j]])).collect())
                                    .collect()
                            })
                            .collect()
                    })
                    .collect()
            }),
        },
        action: ActionSection { trivial: act.is_trivial(), table: act.act.clone() },
        twist: TwistSection {
            c: tw
                .c
                .iter()
                .map(|per_rho| {
                    per_rho
                        .iter()
                        .map(|row| row.iter().map(|&z| complex_pair(z)).collect())
                        .collect()
                })
                .collect(),
            max_intertwine_residual: round12(tw.diag.max_intertwine_residual),
            max_scalar_defect: round12(tw.diag.max_scalar_defect),
            max_unit_modulus_dev: round12(tw.diag.max_unit_modulus_dev),
            max_normalization_dev: round12(tw.diag.max_normalization_dev),
            max_cocycle_residual: round12(tw.diag.max_cocycle_residual),
        },
        counting: CountingSection {
            rows,
            total_formula,
            total_h_classes,
            pass: counting_pass,
        },
        orthogonality: OrthoSection {
            pairs_checked: ortho.pairs_checked,
            max_deviation: round12(ortho.max_deviation),
            worst_pair: [ortho.worst_pair.0, ortho.worst_pair.1],
            max_imag: round12(ortho.max_imag),
            oracle_consistent: ortho.oracle_consistent,
            pass: ortho.pass,
        },
        algebras: AlgebraSection {
            group_algebra_dim: halg.dim,
            group_center_dim,
            graded_center_dims: graded,
            graded_matches_counts,
            crossed_dim: crossed.dim,
            crossed_center_dim,
            kappa_max_residual: round12(kappa.max_residual),
            kappa_rank: kappa.rank,
            groupoid_dim: gpd.dim,
            groupoid_center_dim,
            groupoid_graded_dims: gpd_graded,
            groupoid_graded_matches,
            pass: algebra_pass,
        },
        pass: counting_pass && ortho.pass && algebra_pass && twisted_product_ok,
    };
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::config::RunConfig;

    #[test]
    fn s3_over_z2_full_report_passes() {
        let ext = catalog::build("s3-over-z2").unwrap();
        let report = analyze_extension(&ext, &RunConfig::default()).unwrap();
        assert!(report.pass);
        assert!(report.counting.pass);
        assert!(report.orthogonality.pass);
        assert!(report.algebras.pass);
        assert_eq!(report.counting.rows.len(), 2);
        assert_eq!(report.algebras.graded_center_dims, vec![2, 1]);
        assert_eq!(report.extension.split, Some(true));
    }

    #[test]
    fn report_is_deterministic_for_fixed_seed() {
        let ext = catalog::build("q8-over-v4").unwrap();
        let cfg = RunConfig::with_seed(7);
        let a = serde_json::to_string(&analyze_extension(&ext, &cfg).unwrap()).unwrap();
        let b = serde_json::to_string(&analyze_extension(&ext, &cfg).unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn dump_matrices_toggle() {
        let ext = catalog::build("z4-over-z2").unwrap();
        let mut cfg = RunConfig::default();
        assert!(analyze_extension(&ext, &cfg).unwrap().irreps.matrices.is_none());
        cfg.dump_matrices = true;
        let report = analyze_extension(&ext, &cfg).unwrap();
        // Kernel of z4-over-z2 is Z2: two characters, one matrix per element.
        let mats = report.irreps.matrices.unwrap();
        assert_eq!(mats.len(), 2);
        assert_eq!(mats[0].len(), 2);
    }
}
