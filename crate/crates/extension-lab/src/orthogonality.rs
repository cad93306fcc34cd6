//! Generalized character orthogonality across the extension.
//!
//! For g1, g2 in G, summing character products over all irreducibles of G and
//! all twists by Q detects conjugacy in the *ambient* group:
//!
//! `Σ_ρ Σ_q χ_ρ(g1⁻¹) · χ_{q[ρ]}(g2)  =  |C_H(g1)|` if g1 ~ g2 in H, else 0.
//!
//! The right-hand side is evaluated twice: structurally (class membership and
//! centralizer order in H) and as the literal fixed-point count
//! `#{h : h1⁻¹ h h2 = h}`, which agree as integers with no floating point.

use crate::config::Tolerances;
use crate::extension::ExtensionData;
use crate::repr::IrrepCatalog;
use crate::twist::ActionTable;
use num_complex::Complex64;

/// `Σ_ρ Σ_q χ_ρ(g1⁻¹) χ_{act(ρ,q)}(g2)` for g1, g2 given as G-indices.
pub fn lhs_sum(
    ext: &ExtensionData,
    cat: &IrrepCatalog,
    act: &ActionTable,
    g1: usize,
    g2: usize,
) -> Complex64 {
    let g1_inv = ext.g.inv(g1);
    let mut acc = Complex64::new(0.0, 0.0);
    for rho in 0..cat.len() {
        let left = cat.irreps[rho].chi_of(&ext.g, g1_inv);
        for q in 0..ext.q.order() {
            acc += left * cat.irreps[act.apply(rho, q)].chi_of(&ext.g, g2);
        }
    }
    acc
}

/// |C_H(i(g1))| when i(g1) and i(g2) are conjugate in H, else 0.
pub fn rhs_value(ext: &ExtensionData, g1: usize, g2: usize) -> usize {
    let h1 = ext.i.apply(g1);
    let h2 = ext.i.apply(g2);
    let classes = ext.h.classes();
    if classes.class_of[h1] != classes.class_of[h2] {
        return 0;
    }
    ext.h.centralizer(h1).len()
}

/// `#{h ∈ H : h1⁻¹ h h2 = h}`; counts the conjugators sending i(g2) to i(g1).
pub fn fixed_point_oracle(ext: &ExtensionData, g1: usize, g2: usize) -> usize {
    let h1 = ext.i.apply(g1);
    let h2 = ext.i.apply(g2);
    let h1_inv = ext.h.inv(h1);
    (0..ext.h.order())
        .filter(|&h| ext.h.mul(ext.h.mul(h1_inv, h), h2) == h)
        .count()
}

#[derive(Debug, Clone)]
pub struct OrthoReport {
    /// Largest |lhs - rhs| over all pairs.
    pub max_deviation: f64,
    /// First pair attaining the maximum, in lexicographic order.
    pub worst_pair: (usize, usize),
    /// Largest imaginary part of any lhs value.
    pub max_imag: f64,
    /// Whether the structural rhs equals the fixed-point count everywhere.
    pub oracle_consistent: bool,
    pub first_oracle_mismatch: Option<(usize, usize)>,
    pub pairs_checked: usize,
    pub pass: bool,
}

/// Verifies the relation over every pair (g1, g2) in G × G.
pub fn verify_orthogonality(
    ext: &ExtensionData,
    cat: &IrrepCatalog,
    act: &ActionTable,
    tol: &Tolerances,
) -> OrthoReport {
    let ng = ext.g.order();
    let mut max_deviation = 0.0f64;
    let mut worst_pair = (0, 0);
    let mut max_imag = 0.0f64;
    let mut oracle_consistent = true;
    let mut first_oracle_mismatch = None;
    for g1 in 0..ng {
        for g2 in 0..ng {
            let lhs = lhs_sum(ext, cat, act, g1, g2);
            let rhs = rhs_value(ext, g1, g2);
            let oracle = fixed_point_oracle(ext, g1, g2);
            if rhs != oracle && first_oracle_mismatch.is_none() {
                oracle_consistent = false;
                first_oracle_mismatch = Some((g1, g2));
            }
            let dev = (lhs - Complex64::new(rhs as f64, 0.0)).norm();
            if dev > max_deviation {
                max_deviation = dev;
                worst_pair = (g1, g2);
            }
            max_imag = max_imag.max(lhs.im.abs());
        }
    }
    let pass = max_deviation < tol.eps_orth && max_imag < tol.eps_orth && oracle_consistent;
    OrthoReport {
        max_deviation,
        worst_pair,
        max_imag,
        oracle_consistent,
        first_oracle_mismatch,
        pairs_checked: ng * ng,
        pass,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Tolerances;
    use crate::extension::ExtensionData;
    use crate::group::{symmetric, Group};
    use crate::repr::compute_irreps;
    use crate::twist::compute_action;

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    fn setup(ext: ExtensionData) -> (ExtensionData, IrrepCatalog, ActionTable) {
        let cat = compute_irreps(&ext.g, 42, &tol()).unwrap();
        let act = compute_action(&ext, &cat, &tol()).unwrap();
        (ext, cat, act)
    }

    #[test]
    fn s3_over_z2_spot_values() {
        let s3 = symmetric(3);
        let a3: Vec<usize> = (0..6).filter(|&x| s3.element_order(x) != 2).collect();
        let (ext, cat, act) =
            setup(ExtensionData::from_normal_subgroup("s3-over-z2", s3, &a3).unwrap());
        // G-index 1 is a 3-cycle (kernel elements are e and the two cycles).
        let cyc = 1;
        // Two 3-cycles are conjugate in S3 with centralizer A3 of order 3.
        let lhs = lhs_sum(&ext, &cat, &act, cyc, cyc);
        assert!((lhs - Complex64::new(3.0, 0.0)).norm() < 1e-9);
        assert_eq!(rhs_value(&ext, cyc, cyc), 3);
        // A 3-cycle is also H-conjugate to its inverse.
        let lhs_inv = lhs_sum(&ext, &cat, &act, cyc, ext.g.inv(cyc));
        assert!((lhs_inv - Complex64::new(3.0, 0.0)).norm() < 1e-9);
        // Identity versus a 3-cycle: not conjugate, sum vanishes.
        let lhs_zero = lhs_sum(&ext, &cat, &act, 0, cyc);
        assert!(lhs_zero.norm() < 1e-9);
        assert_eq!(rhs_value(&ext, 0, cyc), 0);
    }

    #[test]
    fn q8_over_v4_spot_value() {
        let q8 = Group::from_permutations(
            &[vec![2, 3, 1, 0, 6, 7, 5, 4], vec![4, 5, 7, 6, 1, 0, 2, 3]],
            64,
        )
        .unwrap();
        let center = q8.center();
        let (ext, cat, act) =
            setup(ExtensionData::from_normal_subgroup("q8-over-v4", q8, &center).unwrap());
        // The central element -1 (G-index 1) is self-conjugate with full
        // centralizer Q8.
        let lhs = lhs_sum(&ext, &cat, &act, 1, 1);
        assert!((lhs - Complex64::new(8.0, 0.0)).norm() < 1e-9);
        assert_eq!(rhs_value(&ext, 1, 1), 8);
    }

    #[test]
    fn full_verification_passes() {
        let s4 = symmetric(4);
        let v4: Vec<usize> = (0..24)
            .filter(|&x| x == 0 || s4.classes().members[s4.classes().class_of[x]].len() == 3)
            .collect();
        let (ext, cat, act) =
            setup(ExtensionData::from_normal_subgroup("s4-over-s3", s4, &v4).unwrap());
        let report = verify_orthogonality(&ext, &cat, &act, &tol());
        assert!(report.pass, "max dev {}", report.max_deviation);
        assert!(report.oracle_consistent);
        assert_eq!(report.pairs_checked, 16);
    }

    #[test]
    fn oracle_equals_structural_rhs_everywhere() {
        let s3 = symmetric(3);
        let a3: Vec<usize> = (0..6).filter(|&x| s3.element_order(x) != 2).collect();
        let ext = ExtensionData::from_normal_subgroup("s3-over-z2", s3, &a3).unwrap();
        for g1 in 0..3 {
            for g2 in 0..3 {
                assert_eq!(rhs_value(&ext, g1, g2), fixed_point_oracle(&ext, g1, g2));
            }
        }
    }
}
