//! Count the conjugacy classes of H sitting over each class of Q, two ways:
//!
//! * by the phase criterion: classes over <q> correspond to C(q)-orbits on
//!   the q-fixed part of the character set whose stabilizer ratios
//!   γ^ρ(q1, q) are all 1;
//! * by direct integer enumeration of the classes of H.
//!
//! The two must agree exactly. Q8 over V4 is the instructive case: G is the
//! central Z2, every character is fixed by every q, and it is only the phase
//! γ = -1 on the sign character that knocks the count from 2 down to 1.

use extension_lab::catalog;
use extension_lab::config::Tolerances;
use extension_lab::counting::{count_over_class, oracle_count_over_class};
use extension_lab::repr::compute_irreps;
use extension_lab::twist::{compute_action, compute_twist};

fn main() {
    let tol = Tolerances::default();
    for name in ["q8-over-v4", "d4-over-v4", "s4-over-s3", "a4-over-v4"] {
        let ext = catalog::build(name).expect("catalog entry");
        let cat = compute_irreps(&ext.g, 42, &tol).expect("irreps");
        let act = compute_action(&ext, &cat, &tol).expect("action");
        let tw = compute_twist(&ext, &cat, &act, 42, &tol).expect("twist");

        println!("{name}: classes of H over each class of Q");
        let mut total = 0;
        for c in 0..ext.q.classes().count() {
            let q = ext.q.classes().representative(c);
            let row = count_over_class(&ext, &act, &tw, q, &tol).expect("count");
            assert_eq!(row.formula_count, row.oracle_count);
            assert_eq!(row.oracle_count, oracle_count_over_class(&ext, q));
            total += row.formula_count;
            println!(
                "  over q={} (|C(q)|={}): {} orbits on the fixed set, {} pass -> {} classes",
                ext.q.label(q),
                row.centralizer_order,
                row.verdicts.len(),
                row.formula_count,
                row.formula_count,
            );
            for v in &row.verdicts {
                match (v.passes, v.witness) {
                    (true, _) => println!(
                        "    orbit of [{}] (size {}, stabilizer {}): all gamma = 1",
                        v.orbit.representative,
                        v.orbit.members.len(),
                        v.orbit.stabilizer.len()
                    ),
                    (false, Some(q1)) => println!(
                        "    orbit of [{}]: dropped, gamma != 1 at q1 = {}",
                        v.orbit.representative,
                        ext.q.label(q1)
                    ),
                    (false, None) => unreachable!("failing orbit always has a witness"),
                }
            }
        }
        println!("  total {} = {} classes of H\n", total, ext.h.classes().count());
        assert_eq!(total, ext.h.classes().count());
    }
}
