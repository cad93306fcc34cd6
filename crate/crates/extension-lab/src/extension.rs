//! Group extensions 1 → G → H → Q → 1 with an explicit section.
//!
//! [`ExtensionData`] bundles the three groups, the inclusion `i`, the
//! projection `j`, the normalized section `s` (smallest ambient index in each
//! coset, which automatically sends the identity coset to the identity), the
//! factor set `τ(q1,q2) = s(q1)s(q2)s(q1q2)⁻¹` viewed inside G, and the
//! conjugation action `ad(q) = Ad_{s(q)}` restricted to G. Every constructor
//! runs [`ExtensionData::verify`], so holding a value means the cocycle
//! identity and all compatibility relations have been checked.

use crate::group::{Group, GroupError, Hom};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ExtensionError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("section does not split through j at coset {q}")]
    SectionMismatch { q: usize },
    #[error("factor set is not normalized at ({q1}, {q2})")]
    TauNotNormalized { q1: usize, q2: usize },
    #[error("cocycle identity fails at ({q1}, {q2}, {q3})")]
    CocycleIdentityViolated { q1: usize, q2: usize, q3: usize },
    #[error("action and factor set are incompatible at ({q1}, {q2})")]
    IncompatibleAction { q1: usize, q2: usize },
    #[error("kernel of j does not equal the image of i")]
    KernelMismatch,
    #[error("reconstruction map is not a homomorphism: witness ({h1}, {h2})")]
    AlphaNotHomomorphism { h1: usize, h2: usize },
    #[error("reconstruction map is not bijective: {h1} and {h2} collide")]
    AlphaNotBijective { h1: usize, h2: usize },
}

#[derive(Debug, Clone)]
pub struct ExtensionData {
    pub name: String,
    pub h: Group,
    pub g: Group,
    pub q: Group,
    /// Inclusion G → H.
    pub i: Hom,
    /// Projection H → Q.
    pub j: Hom,
    /// Section Q → H: `s[q]` is the smallest H-index in the coset `q`.
    pub s: Vec<usize>,
    /// Factor set in G-indices: `tau[q1][q2] = s(q1)s(q2)s(q1q2)⁻¹`.
    pub tau: Vec<Vec<usize>>,
    /// Action in G-indices: `ad[q][g] = s(q) i(g) s(q)⁻¹`.
    pub ad: Vec<Vec<usize>>,
}

impl ExtensionData {
    /// Builds extension data from an ambient group and a normal subgroup,
    /// given by its element set.
    pub fn from_normal_subgroup(name: &str, h: Group, normal: &[usize]) -> Result<ExtensionData, ExtensionError> {
        let (g, i) = h.subgroup(normal)?;
        let (q, j) = h.quotient(normal)?;

        let g_index: BTreeMap<usize, usize> =
            i.image.iter().enumerate().map(|(gi, &hi)| (hi, gi)).collect();
        let in_g = |hx: usize| -> usize {
            *g_index.get(&hx).expect("element expected in the normal subgroup")
        };

        let nq = q.order();
        let mut s = vec![usize::MAX; nq];
        for hx in 0..h.order() {
            let qx = j.apply(hx);
            if s[qx] == usize::MAX {
                s[qx] = hx;
            }
        }

        let mut tau = vec![vec![0usize; nq]; nq];
        let mut ad = vec![Vec::new(); nq];
        for q1 in 0..nq {
            for q2 in 0..nq {
                let prod = h.mul(s[q1], s[q2]);
                tau[q1][q2] = in_g(h.mul(prod, h.inv(s[q.mul(q1, q2)])));
            }
            ad[q1] = (0..g.order())
                .map(|gx| in_g(h.conj(s[q1], i.apply(gx))))
                .collect();
        }

        let data = ExtensionData { name: name.to_string(), h, g, q, i, j, s, tau, ad };
        data.verify()?;
        Ok(data)
    }

    /// Builds the extension determined by `(G, Q, ad, τ)` as the twisted
    /// product set G × Q, validating the cocycle identity and the
    /// action/factor-set compatibility before assembling the table.
    pub fn from_cocycle(
        name: &str,
        g: Group,
        q: Group,
        ad: Vec<Vec<usize>>,
        tau: Vec<Vec<usize>>,
    ) -> Result<ExtensionData, ExtensionError> {
        let (ng, nq) = (g.order(), q.order());
        assert_eq!(ad.len(), nq, "one action row per element of Q");
        assert_eq!(tau.len(), nq, "τ must be |Q| × |Q|");
        for row in &tau {
            assert_eq!(row.len(), nq, "τ must be |Q| × |Q|");
            assert!(row.iter().all(|&v| v < ng), "τ entry out of range");
        }

        for (qi, row) in ad.iter().enumerate() {
            if row.len() != ng {
                return Err(GroupError::NotAutomorphism { b: qi }.into());
            }
            let mut seen = vec![false; ng];
            for &v in row {
                if v >= ng || seen[v] {
                    return Err(GroupError::NotAutomorphism { b: qi }.into());
                }
                seen[v] = true;
            }
            for x in 0..ng {
                for y in 0..ng {
                    if row[g.mul(x, y)] != g.mul(row[x], row[y]) {
                        return Err(GroupError::NotAutomorphism { b: qi }.into());
                    }
                }
            }
        }
        if ad[0] != (0..ng).collect::<Vec<_>>() {
            return Err(GroupError::NotAutomorphism { b: 0 }.into());
        }
        for q1 in 0..nq {
            if tau[q1][0] != 0 || tau[0][q1] != 0 {
                let q2 = if tau[q1][0] != 0 { 0 } else { q1 };
                let q1w = if tau[q1][0] != 0 { q1 } else { 0 };
                return Err(ExtensionError::TauNotNormalized { q1: q1w, q2 });
            }
        }
        // Compatibility: Ad(q1) ∘ Ad(q2) = conj_{τ(q1,q2)} ∘ Ad(q1 q2).
        for q1 in 0..nq {
            for q2 in 0..nq {
                let t = tau[q1][q2];
                let q12 = q.mul(q1, q2);
                for x in 0..ng {
                    if ad[q1][ad[q2][x]] != g.conj(t, ad[q12][x]) {
                        return Err(ExtensionError::IncompatibleAction { q1, q2 });
                    }
                }
            }
        }
        // Cocycle identity: τ(q1,q2) τ(q1q2,q3) = ad(q1)(τ(q2,q3)) τ(q1,q2q3).
        for q1 in 0..nq {
            for q2 in 0..nq {
                for q3 in 0..nq {
                    let lhs = g.mul(tau[q1][q2], tau[q.mul(q1, q2)][q3]);
                    let rhs = g.mul(ad[q1][tau[q2][q3]], tau[q1][q.mul(q2, q3)]);
                    if lhs != rhs {
                        return Err(ExtensionError::CocycleIdentityViolated { q1, q2, q3 });
                    }
                }
            }
        }

        // Twisted product table on pairs (g, q) ↦ g·|Q| + q.
        let n = ng * nq;
        let idx = |gx: usize, qx: usize| gx * nq + qx;
        let mut table = vec![vec![0usize; n]; n];
        for g1 in 0..ng {
            for q1 in 0..nq {
                for g2 in 0..ng {
                    for q2 in 0..nq {
                        let left = g.mul(g.mul(g1, ad[q1][g2]), tau[q1][q2]);
                        table[idx(g1, q1)][idx(g2, q2)] = idx(left, q.mul(q1, q2));
                    }
                }
            }
        }
        let mut labels = Vec::with_capacity(n);
        for gx in 0..ng {
            for qx in 0..nq {
                labels.push(format!("({};{})", g.label(gx), q.label(qx)));
            }
        }
        let h = Group::from_table(table, Some(labels))?;

        let i = Hom { image: (0..ng).map(|gx| idx(gx, 0)).collect() };
        let j = Hom { image: (0..n).map(|hx| hx % nq).collect() };
        let s: Vec<usize> = (0..nq).collect(); // (identity of G, q) = q
        let data = ExtensionData { name: name.to_string(), h, g, q, i, j, s, tau, ad };
        data.verify()?;
        Ok(data)
    }

    /// Re-checks every structural invariant. Cheap relative to construction;
    /// all constructors call this before returning.
    pub fn verify(&self) -> Result<(), ExtensionError> {
        let (ng, nq) = (self.g.order(), self.q.order());
        assert_eq!(self.h.order(), ng * nq, "extension orders must multiply");

        Hom::new(&self.g, &self.h, self.i.image.clone())
            .map_err(|(a, b)| ExtensionError::AlphaNotHomomorphism { h1: a, h2: b })?;
        Hom::new(&self.h, &self.q, self.j.image.clone())
            .map_err(|(a, b)| ExtensionError::AlphaNotHomomorphism { h1: a, h2: b })?;
        if !self.i.is_injective() || !self.j.is_surjective(nq) {
            return Err(ExtensionError::KernelMismatch);
        }
        let mut kernel = self.j.kernel();
        kernel.sort_unstable();
        let mut image = self.i.image.clone();
        image.sort_unstable();
        if kernel != image {
            return Err(ExtensionError::KernelMismatch);
        }

        if self.s[0] != 0 {
            return Err(ExtensionError::SectionMismatch { q: 0 });
        }
        for qx in 0..nq {
            if self.j.apply(self.s[qx]) != qx {
                return Err(ExtensionError::SectionMismatch { q: qx });
            }
        }

        let g_index: BTreeMap<usize, usize> =
            self.i.image.iter().enumerate().map(|(gi, &hi)| (hi, gi)).collect();
        for q1 in 0..nq {
            if self.tau[q1][0] != 0 || self.tau[0][q1] != 0 {
                return Err(ExtensionError::TauNotNormalized { q1, q2: 0 });
            }
            for q2 in 0..nq {
                // τ matches its defining expression in H.
                let prod = self.h.mul(self.s[q1], self.s[q2]);
                let expected = self.h.mul(prod, self.h.inv(self.s[self.q.mul(q1, q2)]));
                match g_index.get(&expected) {
                    Some(&gi) if gi == self.tau[q1][q2] => {}
                    _ => return Err(ExtensionError::IncompatibleAction { q1, q2 }),
                }
            }
            // ad rows match conjugation by the section.
            for gx in 0..ng {
                let conj = self.h.conj(self.s[q1], self.i.apply(gx));
                match g_index.get(&conj) {
                    Some(&gi) if gi == self.ad[q1][gx] => {}
                    _ => return Err(ExtensionError::IncompatibleAction { q1, q2: 0 }),
                }
            }
        }
        for q1 in 0..nq {
            for q2 in 0..nq {
                for q3 in 0..nq {
                    let lhs = self.g.mul(self.tau[q1][q2], self.tau[self.q.mul(q1, q2)][q3]);
                    let rhs = self
                        .g
                        .mul(self.ad[q1][self.tau[q2][q3]], self.tau[q1][self.q.mul(q2, q3)]);
                    if lhs != rhs {
                        return Err(ExtensionError::CocycleIdentityViolated { q1, q2, q3 });
                    }
                }
            }
        }
        Ok(())
    }

    /// The twisted product group on pairs (g, q) together with the
    /// isomorphism α: H → G ×_{s,τ} Q, α(h) = (h·s(j(h))⁻¹, j(h)).
    pub fn twisted_product_group(&self) -> Result<(Group, Hom), ExtensionError> {
        let (ng, nq) = (self.g.order(), self.q.order());
        let idx = |gx: usize, qx: usize| gx * nq + qx;
        let n = ng * nq;
        let mut table = vec![vec![0usize; n]; n];
        for g1 in 0..ng {
            for q1 in 0..nq {
                for g2 in 0..ng {
                    for q2 in 0..nq {
                        let left = self.g.mul(self.g.mul(g1, self.ad[q1][g2]), self.tau[q1][q2]);
                        table[idx(g1, q1)][idx(g2, q2)] = idx(left, self.q.mul(q1, q2));
                    }
                }
            }
        }
        let mut labels = Vec::with_capacity(n);
        for gx in 0..ng {
            for qx in 0..nq {
                labels.push(format!("({};{})", self.g.label(gx), self.q.label(qx)));
            }
        }
        let twisted = Group::from_table(table, Some(labels))?;

        let g_index: BTreeMap<usize, usize> =
            self.i.image.iter().enumerate().map(|(gi, &hi)| (hi, gi)).collect();
        let mut image = Vec::with_capacity(self.h.order());
        let mut seen = vec![false; n];
        for hx in 0..self.h.order() {
            let qx = self.j.apply(hx);
            let gpart = self.h.mul(hx, self.h.inv(self.s[qx]));
            let gx = *g_index.get(&gpart).expect("h·s(j(h))⁻¹ lies in the kernel");
            let target = idx(gx, qx);
            if seen[target] {
                let clash = image.iter().position(|&t| t == target).unwrap();
                return Err(ExtensionError::AlphaNotBijective { h1: clash, h2: hx });
            }
            seen[target] = true;
            image.push(target);
        }
        let alpha = Hom::new(&self.h, &twisted, image)
            .map_err(|(h1, h2)| ExtensionError::AlphaNotHomomorphism { h1, h2 })?;
        Ok((twisted, alpha))
    }

    /// Whether the action `ad` preserves every conjugacy class of G. This is
    /// an integer test and is equivalent to the induced action on the
    /// character set being trivial.
    pub fn action_is_class_preserving(&self) -> bool {
        let class_of = &self.g.classes().class_of;
        self.ad
            .iter()
            .all(|row| (0..self.g.order()).all(|gx| class_of[row[gx]] == class_of[gx]))
    }

    /// Searches for a group-homomorphism section Q → H by brute force over
    /// coset representatives. Returns `None` when the search space exceeds
    /// `cap` candidates, `Some(true/false)` otherwise.
    pub fn is_split_bounded(&self, cap: u64) -> Option<bool> {
        let nq = self.q.order();
        let ng = self.g.order() as u64;
        // Candidate sections pick one representative per nonidentity coset.
        let mut space = 1u64;
        for _ in 1..nq {
            space = space.checked_mul(ng)?;
            if space > cap {
                return None;
            }
        }

        let mut cosets: Vec<Vec<usize>> = vec![Vec::new(); nq];
        for hx in 0..self.h.order() {
            cosets[self.j.apply(hx)].push(hx);
        }

        // Odometer over the choice of representative in cosets 1..nq.
        let mut choice = vec![0usize; nq];
        loop {
            let section: Vec<usize> = (0..nq).map(|qx| cosets[qx][choice[qx]]).collect();
            let homomorphic = (0..nq).all(|q1| {
                (0..nq).all(|q2| {
                    self.h.mul(section[q1], section[q2]) == section[self.q.mul(q1, q2)]
                })
            });
            if homomorphic {
                return Some(true);
            }
            let mut k = 1;
            while k < nq {
                choice[k] += 1;
                if choice[k] < cosets[k].len() {
                    break;
                }
                choice[k] = 0;
                k += 1;
            }
            if k == nq {
                return Some(false);
            }
        }
    }

    /// G-index of τ(q1, q2) τ(q2, q1)⁻¹, the commutator-style combination
    /// entering the specialized counting conditions.
    pub fn tau_comm(&self, q1: usize, q2: usize) -> usize {
        self.g.mul(self.tau[q1][q2], self.g.inv(self.tau[q2][q1]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, symmetric};

    fn s3_over_z2() -> ExtensionData {
        let s3 = symmetric(3);
        let a3: Vec<usize> = (0..6).filter(|&x| s3.element_order(x) != 2).collect();
        ExtensionData::from_normal_subgroup("s3-over-z2", s3, &a3).unwrap()
    }

    #[test]
    fn s3_extension_data() {
        let ext = s3_over_z2();
        assert_eq!(ext.g.order(), 3);
        assert_eq!(ext.q.order(), 2);
        assert_eq!(ext.s[0], 0);
        // Section at the nonidentity coset is the smallest transposition.
        assert_eq!(ext.j.apply(ext.s[1]), 1);
        assert_eq!(ext.h.element_order(ext.s[1]), 2);
        // A section of order 2 means τ(1,1) = s(1)² = e: this witness splits.
        assert_eq!(ext.tau[1][1], 0);
        assert_eq!(ext.is_split_bounded(1 << 20), Some(true));
        // Conjugating a 3-cycle by a transposition inverts it, and inversion
        // moves between the two singleton classes of the abelian kernel.
        assert_ne!(ext.ad[1], vec![0, 1, 2]);
        assert!(!ext.action_is_class_preserving());
    }

    #[test]
    fn z4_over_z2_does_not_split() {
        let z4 = cyclic(4);
        let ext = ExtensionData::from_normal_subgroup("z4-over-z2", z4, &[0, 2]).unwrap();
        assert_eq!(ext.q.order(), 2);
        // τ(1,1) = s(1)² = 1·1 = 2 ∈ {0,2}, the nontrivial kernel element.
        assert_eq!(ext.tau[1][1], 1); // G-index of ambient element 2
        assert_eq!(ext.is_split_bounded(1 << 20), Some(false));
        assert!(ext.action_is_class_preserving());
    }

    #[test]
    fn twisted_product_is_isomorphic() {
        for ext in [s3_over_z2(), {
            let z4 = cyclic(4);
            ExtensionData::from_normal_subgroup("z4-over-z2", z4, &[0, 2]).unwrap()
        }] {
            let (twisted, alpha) = ext.twisted_product_group().unwrap();
            assert_eq!(twisted.order(), ext.h.order());
            assert!(alpha.is_injective());
            assert_eq!(twisted.fingerprint(), ext.h.fingerprint());
            // α restricted to G matches the pair embedding (g, 1).
            for gx in 0..ext.g.order() {
                assert_eq!(alpha.apply(ext.i.apply(gx)), gx * ext.q.order());
            }
        }
    }

    #[test]
    fn from_cocycle_roundtrip() {
        let ext = s3_over_z2();
        let rebuilt = ExtensionData::from_cocycle(
            "rebuilt",
            ext.g.clone(),
            ext.q.clone(),
            ext.ad.clone(),
            ext.tau.clone(),
        )
        .unwrap();
        assert_eq!(rebuilt.h.fingerprint(), ext.h.fingerprint());
    }

    #[test]
    fn from_cocycle_rejects_bad_tau() {
        let ext = s3_over_z2();
        let mut tau = ext.tau.clone();
        tau[1][1] = 1; // arbitrary corruption: violates the defining relations
        let err = ExtensionData::from_cocycle("bad", ext.g.clone(), ext.q.clone(), ext.ad.clone(), tau)
            .unwrap_err();
        match err {
            ExtensionError::CocycleIdentityViolated { .. } | ExtensionError::IncompatibleAction { .. } => {}
            other => panic!("expected cocycle rejection, got {other:?}"),
        }
    }

    #[test]
    fn from_cocycle_rejects_unnormalized_tau() {
        let z2 = cyclic(2);
        let z1 = cyclic(1);
        // τ(0,0) ≠ e with trivial Q is unnormalized.
        let err = ExtensionData::from_cocycle("bad", z2, z1, vec![vec![0, 1]], vec![vec![1]]).unwrap_err();
        assert!(matches!(err, ExtensionError::TauNotNormalized { .. }));
    }

    #[test]
    fn quaternions_from_cocycle() {
        // Q8 as Z4 extended by Z2: ad = inversion, τ(1,1) = the order-2
        // element of Z4 (j² = -1 in multiplicative language).
        let z4 = cyclic(4);
        let z2 = cyclic(2);
        let ad = vec![vec![0, 1, 2, 3], vec![0, 3, 2, 1]];
        let tau = vec![vec![0, 0], vec![0, 2]];
        let ext = ExtensionData::from_cocycle("q8", z4, z2, ad, tau).unwrap();
        assert_eq!(ext.h.order(), 8);
        // Q8 fingerprint: one element of order 1, one of order 2, six of order 4.
        assert_eq!(ext.h.fingerprint().2, vec![(1, 1), (2, 1), (4, 6)]);
        assert_eq!(ext.is_split_bounded(1 << 20), Some(false));
    }

    #[test]
    fn split_search_respects_cap() {
        let ext = s3_over_z2();
        assert_eq!(ext.is_split_bounded(1), None);
    }
}
