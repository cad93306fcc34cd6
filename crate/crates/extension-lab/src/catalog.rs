//! Built-in extensions covering the structural axes the pipeline cares
//! about: split and non-split, abelian and nonabelian kernels, trivial and
//! nontrivial action on the character set, both construction routes, and one
//! entry of order 48.

use crate::extension::ExtensionData;
use crate::group::{cyclic, symmetric, Group};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unknown catalog entry '{name}'; available: {available}")]
    UnknownEntry { name: String, available: String },
}

pub struct CatalogEntry {
    pub name: &'static str,
    pub summary: &'static str,
    build_fn: fn() -> ExtensionData,
}

impl CatalogEntry {
    pub fn build(&self) -> ExtensionData {
        (self.build_fn)()
    }
}

static ENTRIES: &[CatalogEntry] = &[
    CatalogEntry {
        name: "trivial",
        summary: "the one-element group over itself",
        build_fn: build_trivial,
    },
    CatalogEntry {
        name: "s3-over-s3",
        summary: "S3 with trivial kernel: Q carries everything",
        build_fn: build_s3_over_s3,
    },
    CatalogEntry {
        name: "s4-over-trivial",
        summary: "S4 over the trivial group: classical character theory as the Q = 1 case",
        build_fn: build_s4_over_trivial,
    },
    CatalogEntry {
        name: "z6-over-z2",
        summary: "Z6 over Z2 with kernel Z3: split, abelian, trivial action",
        build_fn: build_z6_over_z2,
    },
    CatalogEntry {
        name: "z4-over-z2",
        summary: "Z4 over Z2 with kernel Z2: the smallest non-split case",
        build_fn: build_z4_over_z2,
    },
    CatalogEntry {
        name: "z8-over-z2",
        summary: "Z8 over Z2 with kernel Z4: non-split with order-4 cocycle values",
        build_fn: build_z8_over_z2,
    },
    CatalogEntry {
        name: "s3-over-z2",
        summary: "S3 over Z2 with kernel A3: split, nontrivial action on characters",
        build_fn: build_s3_over_z2,
    },
    CatalogEntry {
        name: "s3-times-z2",
        summary: "S3 × Z2 over Z2 with kernel S3: nonabelian kernel, trivial action",
        build_fn: build_s3_times_z2,
    },
    CatalogEntry {
        name: "q8-over-v4",
        summary: "Q8 over V4 with central kernel Z2: the classic nontrivial phase",
        build_fn: build_q8_over_v4,
    },
    CatalogEntry {
        name: "d4-over-v4",
        summary: "D4 over V4 with central kernel Z2: compare against Q8",
        build_fn: build_d4_over_v4,
    },
    CatalogEntry {
        name: "q8-over-z2",
        summary: "Q8 over Z2 with kernel Z4: non-split, inversion action",
        build_fn: build_q8_over_z2,
    },
    CatalogEntry {
        name: "d4-over-z2",
        summary: "D4 over Z2 with kernel Z4: split companion to q8-over-z2",
        build_fn: build_d4_over_z2,
    },
    CatalogEntry {
        name: "z3-rtimes-z4",
        summary: "Z3 ⋊ Z4 (dicyclic of order 12) over Z4 with kernel Z3: split, Q cyclic",
        build_fn: build_z3_rtimes_z4,
    },
    CatalogEntry {
        name: "a4-over-v4",
        summary: "A4 over Z3 with kernel V4: odd-order quotient",
        build_fn: build_a4_over_v4,
    },
    CatalogEntry {
        name: "s4-over-s3",
        summary: "S4 over S3 with kernel V4: nonabelian quotient",
        build_fn: build_s4_over_s3,
    },
    CatalogEntry {
        name: "s4-over-a4",
        summary: "S4 over Z2 with kernel A4: nonabelian kernel with 3-dimensional irreps",
        build_fn: build_s4_over_a4,
    },
    CatalogEntry {
        name: "q8-from-cocycle",
        summary: "Q8 rebuilt from (Z4, Z2, inversion, τ): the cocycle construction route",
        build_fn: build_q8_from_cocycle,
    },
    CatalogEntry {
        name: "s4xz2-over-s4",
        summary: "S4 × Z2 over Z2 with kernel S4: order 48, trivial action",
        build_fn: build_s4xz2_over_s4,
    },
];

pub fn entries() -> &'static [CatalogEntry] {
    ENTRIES
}

pub fn names() -> Vec<&'static str> {
    ENTRIES.iter().map(|e| e.name).collect()
}

pub fn build(name: &str) -> Result<ExtensionData, CatalogError> {
    ENTRIES
        .iter()
        .find(|e| e.name == name)
        .map(|e| e.build())
        .ok_or_else(|| CatalogError::UnknownEntry {
            name: name.to_string(),
            available: names().join(", "),
        })
}

fn quaternion_group() -> Group {
    // Basis 1, -1, i, -i, j, -j, k, -k as left-multiplication permutations.
    Group::from_permutations(
        &[vec![2, 3, 1, 0, 6, 7, 5, 4], vec![4, 5, 7, 6, 1, 0, 2, 3]],
        64,
    )
    .expect("Q8 closure")
}

fn dihedral_8() -> Group {
    // Rotation (0 1 2 3) and the edge reflection (0 1)(2 3).
    Group::from_permutations(&[vec![1, 2, 3, 0], vec![1, 0, 3, 2]], 64).expect("D4 closure")
}

fn build_trivial() -> ExtensionData {
    ExtensionData::from_normal_subgroup("trivial", cyclic(1), &[0]).expect("trivial extension")
}

fn build_s3_over_s3() -> ExtensionData {
    ExtensionData::from_normal_subgroup("s3-over-s3", symmetric(3), &[0]).expect("s3-over-s3")
}

fn build_s4_over_trivial() -> ExtensionData {
    let s4 = symmetric(4);
    let all: Vec<usize> = (0..24).collect();
    ExtensionData::from_normal_subgroup("s4-over-trivial", s4, &all).expect("s4-over-trivial")
}

fn build_z6_over_z2() -> ExtensionData {
    ExtensionData::from_normal_subgroup("z6-over-z2", cyclic(6), &[0, 2, 4]).expect("z6-over-z2")
}

fn build_z4_over_z2() -> ExtensionData {
    ExtensionData::from_normal_subgroup("z4-over-z2", cyclic(4), &[0, 2]).expect("z4-over-z2")
}

fn build_z8_over_z2() -> ExtensionData {
    ExtensionData::from_normal_subgroup("z8-over-z2", cyclic(8), &[0, 2, 4, 6]).expect("z8-over-z2")
}

fn build_s3_over_z2() -> ExtensionData {
    let s3 = symmetric(3);
    let a3: Vec<usize> = (0..6).filter(|&x| s3.element_order(x) != 2).collect();
    ExtensionData::from_normal_subgroup("s3-over-z2", s3, &a3).expect("s3-over-z2")
}

fn build_s3_times_z2() -> ExtensionData {
    let h = Group::direct_product(&symmetric(3), &cyclic(2));
    let kernel: Vec<usize> = (0..12).step_by(2).collect();
    ExtensionData::from_normal_subgroup("s3-times-z2", h, &kernel).expect("s3-times-z2")
}

fn build_q8_over_v4() -> ExtensionData {
    let q8 = quaternion_group();
    let center = q8.center();
    ExtensionData::from_normal_subgroup("q8-over-v4", q8, &center).expect("q8-over-v4")
}

fn build_d4_over_v4() -> ExtensionData {
    let d4 = dihedral_8();
    let center = d4.center();
    ExtensionData::from_normal_subgroup("d4-over-v4", d4, &center).expect("d4-over-v4")
}

fn build_q8_over_z2() -> ExtensionData {
    let q8 = quaternion_group();
    // ⟨i⟩: the cyclic subgroup generated by the first order-4 element.
    let gen = (0..8).find(|&x| q8.element_order(x) == 4).expect("order-4 element");
    let z4 = q8.generated_subgroup(&[gen]);
    ExtensionData::from_normal_subgroup("q8-over-z2", q8, &z4).expect("q8-over-z2")
}

fn build_d4_over_z2() -> ExtensionData {
    let d4 = dihedral_8();
    let gen = (0..8).find(|&x| d4.element_order(x) == 4).expect("order-4 element");
    let z4 = d4.generated_subgroup(&[gen]);
    ExtensionData::from_normal_subgroup("d4-over-z2", d4, &z4).expect("d4-over-z2")
}

fn build_z3_rtimes_z4() -> ExtensionData {
    // Z4 acts on Z3 through its quotient Z2, by inversion.
    let z3 = cyclic(3);
    let z4 = cyclic(4);
    let inv = vec![0, 2, 1];
    let id = vec![0, 1, 2];
    let action = vec![id.clone(), inv.clone(), id, inv];
    let h = Group::semidirect_product(&z3, &z4, &action).expect("Z3 ⋊ Z4");
    let kernel: Vec<usize> = (0..12).step_by(4).collect(); // Z3 × {0}
    ExtensionData::from_normal_subgroup("z3-rtimes-z4", h, &kernel).expect("z3-rtimes-z4")
}

fn alternating_4() -> Group {
    let s4 = symmetric(4);
    let members: Vec<usize> = (0..24)
        .filter(|&x| {
            let size = s4.classes().members[s4.classes().class_of[x]].len();
            x == 0 || size == 3 || size == 8
        })
        .collect();
    s4.subgroup(&members).expect("A4 is a subgroup").0
}

fn build_a4_over_v4() -> ExtensionData {
    let a4 = alternating_4();
    let v4: Vec<usize> = (0..12).filter(|&x| a4.element_order(x) <= 2).collect();
    ExtensionData::from_normal_subgroup("a4-over-v4", a4, &v4).expect("a4-over-v4")
}

fn build_s4_over_s3() -> ExtensionData {
    let s4 = symmetric(4);
    let v4: Vec<usize> = (0..24)
        .filter(|&x| x == 0 || s4.classes().members[s4.classes().class_of[x]].len() == 3)
        .collect();
    ExtensionData::from_normal_subgroup("s4-over-s3", s4, &v4).expect("s4-over-s3")
}

fn build_s4_over_a4() -> ExtensionData {
    let s4 = symmetric(4);
    let a4: Vec<usize> = (0..24)
        .filter(|&x| {
            let size = s4.classes().members[s4.classes().class_of[x]].len();
            x == 0 || size == 3 || size == 8
        })
        .collect();
    ExtensionData::from_normal_subgroup("s4-over-a4", s4, &a4).expect("s4-over-a4")
}

fn build_q8_from_cocycle() -> ExtensionData {
    let z4 = cyclic(4);
    let z2 = cyclic(2);
    let ad = vec![vec![0, 1, 2, 3], vec![0, 3, 2, 1]];
    let tau = vec![vec![0, 0], vec![0, 2]];
    ExtensionData::from_cocycle("q8-from-cocycle", z4, z2, ad, tau).expect("q8-from-cocycle")
}

fn build_s4xz2_over_s4() -> ExtensionData {
    let h = Group::direct_product(&symmetric(4), &cyclic(2));
    let kernel: Vec<usize> = (0..48).step_by(2).collect();
    ExtensionData::from_normal_subgroup("s4xz2-over-s4", h, &kernel).expect("s4xz2-over-s4")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_entries_build_and_verify() {
        for entry in entries() {
            let ext = entry.build();
            assert_eq!(ext.name, entry.name);
            assert_eq!(ext.h.order(), ext.g.order() * ext.q.order(), "{}", entry.name);
            ext.verify().unwrap_or_else(|e| panic!("{} failed: {e}", entry.name));
        }
    }

    #[test]
    fn expected_orders() {
        let expect: &[(&str, usize, usize, usize)] = &[
            ("trivial", 1, 1, 1),
            ("s3-over-s3", 1, 6, 6),
            ("s4-over-trivial", 24, 24, 1),
            ("z6-over-z2", 3, 6, 2),
            ("z4-over-z2", 2, 4, 2),
            ("z8-over-z2", 4, 8, 2),
            ("s3-over-z2", 3, 6, 2),
            ("s3-times-z2", 6, 12, 2),
            ("q8-over-v4", 2, 8, 4),
            ("d4-over-v4", 2, 8, 4),
            ("q8-over-z2", 4, 8, 2),
            ("d4-over-z2", 4, 8, 2),
            ("z3-rtimes-z4", 3, 12, 4),
            ("a4-over-v4", 4, 12, 3),
            ("s4-over-s3", 4, 24, 6),
            ("s4-over-a4", 12, 24, 2),
            ("q8-from-cocycle", 4, 8, 2),
            ("s4xz2-over-s4", 24, 48, 2),
        ];
        assert_eq!(expect.len(), entries().len());
        for &(name, g, h, q) in expect {
            let ext = build(name).unwrap();
            assert_eq!((ext.g.order(), ext.h.order(), ext.q.order()), (g, h, q), "{name}");
        }
    }

    #[test]
    fn splitness_axis_is_covered() {
        let split = |n: &str| build(n).unwrap().is_split_bounded(1 << 20);
        assert_eq!(split("s3-over-z2"), Some(true));
        assert_eq!(split("z4-over-z2"), Some(false));
        assert_eq!(split("q8-over-z2"), Some(false));
        assert_eq!(split("d4-over-z2"), Some(true));
        assert_eq!(split("q8-from-cocycle"), Some(false));
        assert_eq!(split("z3-rtimes-z4"), Some(true));
    }

    #[test]
    fn action_axis_is_covered() {
        let trivial = |n: &str| build(n).unwrap().action_is_class_preserving();
        assert!(trivial("s3-times-z2"));
        assert!(trivial("q8-over-v4"));
        assert!(trivial("s4xz2-over-s4"));
        assert!(!trivial("s3-over-z2"));
        assert!(!trivial("q8-over-z2"));
        assert!(!trivial("s4-over-a4"));
    }

    #[test]
    fn unknown_entry_lists_alternatives() {
        let err = build("nope").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("nope"));
        assert!(msg.contains("q8-over-v4"));
    }

    #[test]
    fn q8_fingerprints_match_between_routes() {
        let a = build("q8-over-z2").unwrap();
        let b = build("q8-from-cocycle").unwrap();
        assert_eq!(a.h.fingerprint(), b.h.fingerprint());
    }
}
