//! Computational tools for finite group extensions `1 -> G -> H -> Q -> 1`.
//!
//! Starting from an extension given either as a normal subgroup of an
//! explicit group or as cocycle data `(ad, tau)`, the crate
//!
//! * chooses a section `s: Q -> H` and extracts the factor set
//!   `tau(q1, q2) = s(q1) s(q2) s(q1 q2)^-1`,
//! * computes the unitary irreducible representations of `G` and the induced
//!   `Q`-action on them,
//! * builds intertwiners between each irrep and its twist, and from them a
//!   `U(1)`-valued two-cocycle `c` on the action groupoid,
//! * counts the conjugacy classes of `H` lying over each class of `Q` by a
//!   phase criterion on stabilizer orbits and checks the result against a
//!   direct integer count,
//! * verifies a twisted orthogonality relation for the characters of `G`
//!   summed over `Q`,
//! * assembles the group algebra of `H`, the crossed product `C[G] x Q`, and
//!   the twisted groupoid algebra, and compares center and graded-center
//!   dimensions with the class counts.
//!
//! The numerical stages draw from a seeded generator, so every run with the
//! same seed produces byte-identical reports. See the `examples/` directory
//! for end-to-end walkthroughs and [`analyze::analyze_extension`] for the
//! one-call entry point.

// Group-table code indexes several parallel structures with one loop
// variable; iterator rewrites obscure which table is being walked.
#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod analyze;
pub mod catalog;
pub mod cli;
pub mod config;
pub mod counting;
pub mod extension;
pub mod group;
pub mod jsonio;
pub mod linalg;
pub mod orthogonality;
pub mod repr;
pub mod twist;

pub use analyze::{analyze_extension, FullReport, PipelineError};
pub use config::{RunConfig, Tolerances, DEFAULT_SEED};
pub use extension::{ExtensionData, ExtensionError};
pub use group::{Group, GroupError, Hom};
pub use repr::{compute_irreps, IrrepCatalog, UnitaryIrrep};
pub use twist::{compute_action, compute_twist, ActionTable, TwistData};
