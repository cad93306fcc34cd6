//! The Q-action on the character set of G, the intertwiners realizing it,
//! and the U(1) cocycle c measuring how they compose against the factor set.
//!
//! For each q the map g -> ρ(ad_q(g)) is again irreducible, so it matches a
//! unique catalog entry; a unitary T_q intertwines the two. The composite
//! T_{q2} T_{q1} ρ(τ(q1,q2)) T_{q1q2}† is scalar by Schur's lemma, and that
//! scalar is c^ρ(q1, q2). γ^ρ(q1, q) = c(q1,q)/c(q,q1) on the stabilizer of
//! ρ does not depend on any of the unitary choices.

use extension_lab::catalog;
use extension_lab::config::Tolerances;
use extension_lab::repr::compute_irreps;
use extension_lab::twist::{compute_action, compute_twist, gamma};

fn show(name: &str) {
    let tol = Tolerances::default();
    let ext = catalog::build(name).expect("catalog entry");
    let cat = compute_irreps(&ext.g, 42, &tol).expect("irreps");
    let act = compute_action(&ext, &cat, &tol).expect("action");
    let tw = compute_twist(&ext, &cat, &act, 42, &tol).expect("twist");

    println!("{name}: G has {} irreps, Q has {} elements", cat.len(), ext.q.order());
    println!("  action table (rows = irreps, columns = q):");
    for (rho, row) in act.act.iter().enumerate() {
        println!("    [{rho}] -> {row:?}");
    }
    println!("  cocycle values away from 1:");
    let mut seen = false;
    for rho in 0..cat.len() {
        for q1 in 0..ext.q.order() {
            for q2 in 0..ext.q.order() {
                let c = tw.c_of(rho, q1, q2);
                if (c - num_complex::Complex64::new(1.0, 0.0)).norm() > 1e-9 {
                    println!("    c^[{rho}]({q1},{q2}) = {:.4}{:+.4}i", c.re, c.im);
                    seen = true;
                }
            }
        }
    }
    if !seen {
        println!("    none: every composite already matches the factor set");
    }
    println!("  gauge-invariant ratios on stabilizers:");
    for rho in 0..cat.len() {
        for q in 0..ext.q.order() {
            if act.apply(rho, q) != rho {
                continue;
            }
            for q1 in 0..ext.q.order() {
                if ext.q.mul(q1, q) != ext.q.mul(q, q1) || act.apply(rho, q1) != rho {
                    continue;
                }
                let g = gamma(&tw, rho, q1, q);
                if (g - num_complex::Complex64::new(1.0, 0.0)).norm() > 1e-9 {
                    println!("    gamma^[{rho}]({q1},{q}) = {:.4}{:+.4}i", g.re, g.im);
                }
            }
        }
    }
    println!("  max residuals: intertwine {:.1e}, cocycle identity {:.1e}", tw.diag.max_intertwine_residual, tw.diag.max_cocycle_residual);
    println!();
}

fn main() {
    // Split with a nontrivial character action: T matrices do the work, c = 1.
    show("s3-over-z2");
    // Central kernel in Q8: the action is trivial but τ lands on -1, so c
    // takes the value -1 on the sign character and γ = -1 kills classes.
    show("q8-over-v4");
    // Kernel Z4 in Z8: c picks up fourth roots of unity.
    show("z8-over-z2");
}
