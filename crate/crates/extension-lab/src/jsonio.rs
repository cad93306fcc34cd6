//! JSON schemas for user-supplied extensions and for emitted reports.
//!
//! Input accepts two group encodings and two extension routes:
//!
//! ```json
//! {"name": "my-ext", "h": {"table": [[0,1],[1,0]]}, "normal": [0]}
//! {"name": "my-ext",
//!  "g": {"generators": [[1,2,0]]}, "q": {"table": [[0,1],[1,0]]},
//!  "ad": [[0,1,2],[0,2,1]], "tau": [[0,0],[0,0]]}
//! ```
//!
//! A group is either `{"table": [[...]], "labels": [...]?, "order": n?}`
//! (full Cayley table, identity anywhere) or
//! `{"generators": [[...]], "degree": d?, "cap": n?}` (permutations of 0..d,
//! closed under composition up to `cap` elements). The optional `order` and
//! `degree` fields are cross-checked when present. The extension keys are
//! also accepted uppercase (`"H"`, `"G"`, `"Q"`).

use crate::extension::{ExtensionData, ExtensionError};
use crate::group::{Group, GroupError};
use serde::Deserialize;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Extension(#[from] ExtensionError),
}

#[derive(Debug, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
pub enum GroupInput {
    Table {
        table: Vec<Vec<usize>>,
        #[serde(default)]
        labels: Option<Vec<String>>,
        #[serde(default)]
        order: Option<usize>,
    },
    Permutations {
        generators: Vec<Vec<usize>>,
        #[serde(default)]
        degree: Option<usize>,
        #[serde(default)]
        cap: Option<usize>,
    },
}

impl GroupInput {
    pub fn build(self) -> Result<Group, GroupError> {
        match self {
            GroupInput::Table { table, labels, order } => {
                if let Some(n) = order {
                    if n != table.len() {
                        return Err(GroupError::MalformedTable);
                    }
                }
                Group::from_table(table, labels)
            }
            GroupInput::Permutations { generators, degree, cap } => {
                if let Some(d) = degree {
                    for (index, g) in generators.iter().enumerate() {
                        if g.len() != d {
                            return Err(GroupError::NotPermutation { index, degree: d });
                        }
                    }
                }
                Group::from_permutations(&generators, cap.unwrap_or(1 << 12))
            }
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum ExtensionInput {
    FromNormal {
        #[serde(default)]
        name: Option<String>,
        #[serde(alias = "H")]
        h: GroupInput,
        normal: Vec<usize>,
    },
    FromCocycle {
        #[serde(default)]
        name: Option<String>,
        #[serde(alias = "G")]
        g: GroupInput,
        #[serde(alias = "Q")]
        q: GroupInput,
        ad: Vec<Vec<usize>>,
        tau: Vec<Vec<usize>>,
    },
}

impl ExtensionInput {
    pub fn build(self, fallback_name: &str) -> Result<ExtensionData, InputError> {
        match self {
            ExtensionInput::FromNormal { name, h, normal } => {
                let h = h.build()?;
                Ok(ExtensionData::from_normal_subgroup(
                    name.as_deref().unwrap_or(fallback_name),
                    h,
                    &normal,
                )?)
            }
            ExtensionInput::FromCocycle { name, g, q, ad, tau } => {
                let g = g.build()?;
                let q = q.build()?;
                Ok(ExtensionData::from_cocycle(
                    name.as_deref().unwrap_or(fallback_name),
                    g,
                    q,
                    ad,
                    tau,
                )?)
            }
        }
    }
}

/// Loads an extension description from a JSON file.
pub fn load_extension(path: &Path) -> Result<ExtensionData, InputError> {
    let text = std::fs::read_to_string(path).map_err(|source| InputError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let input: ExtensionInput = serde_json::from_str(&text)?;
    let fallback = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "custom".to_string());
    input.build(&fallback)
}

/// Parses an extension from a JSON string (used by tests and examples).
pub fn parse_extension(text: &str, fallback_name: &str) -> Result<ExtensionData, InputError> {
    let input: ExtensionInput = serde_json::from_str(text)?;
    input.build(fallback_name)
}

/// Rounds to 12 decimal places and normalizes -0.0, so serialized reports are
/// byte-stable for equal inputs.
pub fn round12(x: f64) -> f64 {
    let r = (x * 1e12).round() / 1e12;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

pub fn complex_pair(z: num_complex::Complex64) -> [f64; 2] {
    [round12(z.re), round12(z.im)]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_table_form() {
        let text = r#"{"name": "klein", "h": {"table": [[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]]}, "normal": [0,1]}"#;
        let ext = parse_extension(text, "fallback").unwrap();
        assert_eq!(ext.name, "klein");
        assert_eq!(ext.g.order(), 2);
        assert_eq!(ext.q.order(), 2);
    }

    #[test]
    fn parses_generator_form() {
        let text = r#"{"h": {"generators": [[1,2,0],[1,0,2]]}, "normal": [0,2,4]}"#;
        // S3 from a 3-cycle and a transposition; the normal set indexes the
        // BFS element order: e, (0 1), (0 1 2), ..., so {0, 2, 4} is A3.
        let ext = parse_extension(text, "custom-s3").unwrap();
        assert_eq!(ext.name, "custom-s3");
        assert_eq!(ext.g.order(), 3);
    }

    #[test]
    fn parses_cocycle_form() {
        let text = r#"{
            "g": {"table": [[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]]},
            "q": {"table": [[0,1],[1,0]]},
            "ad": [[0,1,2,3],[0,3,2,1]],
            "tau": [[0,0],[0,2]]
        }"#;
        let ext = parse_extension(text, "q8").unwrap();
        assert_eq!(ext.h.order(), 8);
        assert_eq!(ext.h.fingerprint().2, vec![(1, 1), (2, 1), (4, 6)]);
    }

    #[test]
    fn accepts_uppercase_keys_and_size_fields() {
        let text = r#"{"H": {"order": 4, "table": [[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]]}, "normal": [0,1]}"#;
        let ext = parse_extension(text, "klein").unwrap();
        assert_eq!(ext.h.order(), 4);
        let text = r#"{"h": {"degree": 3, "generators": [[1,2,0],[1,0,2]]}, "normal": [0,2,4]}"#;
        assert_eq!(parse_extension(text, "s3").unwrap().g.order(), 3);
        // Declared sizes must match the data.
        let text = r#"{"h": {"order": 3, "table": [[0,1],[1,0]]}, "normal": [0]}"#;
        assert!(parse_extension(text, "x").is_err());
        let text = r#"{"h": {"degree": 4, "generators": [[1,2,0]]}, "normal": [0]}"#;
        assert!(parse_extension(text, "x").is_err());
    }

    #[test]
    fn rejects_invalid_input() {
        assert!(parse_extension("{", "x").is_err());
        // Non-normal subgroup surfaces through the extension constructor.
        let text = r#"{"h": {"generators": [[1,2,0],[1,0,2]]}, "normal": [0,1]}"#;
        let err = parse_extension(text, "x").unwrap_err();
        assert!(matches!(
            err,
            InputError::Extension(ExtensionError::Group(GroupError::NotNormal { .. }))
        ));
        // Cocycle identity violation.
        let bad = r#"{
            "g": {"table": [[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]]},
            "q": {"table": [[0,1],[1,0]]},
            "ad": [[0,1,2,3],[0,3,2,1]],
            "tau": [[0,0],[0,1]]
        }"#;
        let err = parse_extension(bad, "x").unwrap_err();
        assert!(matches!(
            err,
            InputError::Extension(ExtensionError::CocycleIdentityViolated { .. })
        ));
    }

    #[test]
    fn rounding_kills_negative_zero() {
        assert_eq!(round12(-0.0).to_bits(), 0.0f64.to_bits());
        assert_eq!(round12(1e-15), 0.0);
        assert_eq!(round12(0.5), 0.5);
    }
}
