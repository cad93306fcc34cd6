//! Every extension is a twisted product: on the set G × Q, the rule
//!
//!   (g1, q1) · (g2, q2) = (g1 · ad_{q1}(g2) · τ(q1, q2), q1 q2)
//!
//! is a group law, and α(h) = (h · s(j(h))⁻¹, j(h)) is an isomorphism from H.
//! When τ can be gauged away the extension splits and H is a semidirect
//! product; the factor set of a non-split extension obstructs every choice
//! of section, which the library checks by bounded exhaustive search.

use extension_lab::catalog;

fn main() {
    for name in ["s3-over-z2", "z6-over-z2", "z4-over-z2", "q8-over-z2", "z8-over-z2"] {
        let ext = catalog::build(name).expect("catalog entry");
        let (tp, alpha) = ext.twisted_product_group().expect("twisted product");
        assert_eq!(tp.order(), ext.h.order());

        // α transports multiplication: check a couple of random-ish products.
        let n = ext.h.order();
        for h1 in [1 % n, (n - 1) / 2, n - 1] {
            for h2 in [1 % n, n / 2] {
                let lhs = alpha.apply(ext.h.mul(h1, h2));
                let rhs = tp.mul(alpha.apply(h1), alpha.apply(h2));
                assert_eq!(lhs, rhs);
            }
        }

        let split = ext.is_split_bounded(1 << 20);
        let nontrivial = ext
            .tau
            .iter()
            .flatten()
            .filter(|&&t| t != 0)
            .count();
        println!(
            "{name:<12} |H| = {:>2}  tau nonidentity on {:>2}/{:<2} pairs  split: {:?}",
            ext.h.order(),
            nontrivial,
            ext.q.order() * ext.q.order(),
            split
        );
    }
    println!();
    println!("z6-over-z2 carries a nonzero factor set for the default section,");
    println!("yet splits: a different section is a homomorphism. z4-over-z2,");
    println!("q8-over-z2 and z8-over-z2 admit no such section at all.");
}
