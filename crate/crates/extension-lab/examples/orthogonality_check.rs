//! The twisted orthogonality relation: for g1, g2 in G,
//!
//!   Σ_ρ Σ_q  χ_ρ(g1⁻¹) · χ_{q(ρ)}(g2)  =  |C_H(i(g1))|  if i(g1) ~ i(g2) in H,
//!                                          0             otherwise.
//!
//! With Q = 1 this is the classical column orthogonality of the character
//! table. The right-hand side is also checked against a pure fixed-point
//! count #{h : h⁻¹ i(g1) h = i(g2) ... } done entirely in integers.

use extension_lab::catalog;
use extension_lab::config::Tolerances;
use extension_lab::orthogonality::{lhs_sum, rhs_value, verify_orthogonality};
use extension_lab::repr::compute_irreps;
use extension_lab::twist::compute_action;

fn main() {
    let tol = Tolerances::default();
    for name in ["s4-over-trivial", "s3-over-z2", "q8-over-v4", "s4-over-a4"] {
        let ext = catalog::build(name).expect("catalog entry");
        let cat = compute_irreps(&ext.g, 42, &tol).expect("irreps");
        let act = compute_action(&ext, &cat, &tol).expect("action");

        let report = verify_orthogonality(&ext, &cat, &act, &tol);
        assert!(report.pass, "{name} orthogonality failed");
        println!(
            "{name}: {} pairs, max |lhs - rhs| = {:.2e}, integer oracle consistent: {}",
            report.pairs_checked, report.max_deviation, report.oracle_consistent
        );

        // A few individual values on the first nonidentity element.
        if ext.g.order() > 1 {
            let g = 1;
            let same = lhs_sum(&ext, &cat, &act, g, g);
            let cross = lhs_sum(&ext, &cat, &act, 0, g);
            println!(
                "  lhs(g,g) = {:.4} (centralizer order {}), lhs(e,g) = {:.4} (not conjugate)",
                same.re,
                rhs_value(&ext, g, g),
                cross.re
            );
        }
    }
}
