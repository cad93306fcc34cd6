//! End-to-end checks of the `extension-lab` binary: subcommands, exit codes,
//! JSON output stability, file input, and the seed environment variable.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_extension-lab"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn list_names_every_entry() {
    let out = run(&["list"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for name in ["trivial", "s3-over-z2", "q8-over-v4", "s4xz2-over-s4"] {
        assert!(text.contains(name), "missing {name}");
    }
}

#[test]
fn analyze_text_mode_passes() {
    let out = run(&["analyze", "s3-over-z2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("overall: PASS"));
    assert!(text.contains("formula 2 oracle 2"));
}

#[test]
fn analyze_json_is_valid_and_complete() {
    let out = run(&["analyze", "q8-over-v4", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(v["schema"], 1);
    assert_eq!(v["name"], "q8-over-v4");
    assert_eq!(v["seed"], 42);
    assert_eq!(v["pass"], true);
    let counts: Vec<u64> = v["counting"]["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["formula_count"].as_u64().unwrap())
        .collect();
    assert_eq!(counts, vec![2, 1, 1, 1]);
    assert!(v["irreps"].get("matrices").is_none());
}

#[test]
fn json_output_is_byte_identical_across_runs() {
    let a = run(&["analyze", "s4-over-s3", "--json"]);
    let b = run(&["analyze", "s4-over-s3", "--json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn seed_flag_and_environment_variable() {
    let flag = run(&["analyze", "z4-over-z2", "--json", "--seed", "9"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&flag)).unwrap();
    assert_eq!(v["seed"], 9);

    let env = bin()
        .args(["analyze", "z4-over-z2", "--json"])
        .env("EXTENSION_LAB_SEED", "777")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout(&env)).unwrap();
    assert_eq!(v["seed"], 777);

    // An explicit flag wins over the environment.
    let both = bin()
        .args(["analyze", "z4-over-z2", "--json", "--seed", "5"])
        .env("EXTENSION_LAB_SEED", "777")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout(&both)).unwrap();
    assert_eq!(v["seed"], 5);
}

#[test]
fn dump_matrices_flag_extends_the_report() {
    let out = run(&["analyze", "z4-over-z2", "--json", "--dump-matrices"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let mats = v["irreps"]["matrices"].as_array().expect("matrices present");
    assert_eq!(mats.len(), 2);
}

#[test]
fn count_orthogonality_algebra_subcommands() {
    for sub in ["count", "orthogonality", "algebra"] {
        let out = run(&[sub, "q8-over-z2"]);
        assert_eq!(out.status.code(), Some(0), "{sub} failed");
        let js = run(&[sub, "q8-over-z2", "--json"]);
        assert_eq!(js.status.code(), Some(0));
        let v: serde_json::Value = serde_json::from_str(&stdout(&js)).expect("valid JSON");
        assert!(v.is_object(), "{sub} JSON should be an object");
    }
    let out = run(&["count", "q8-over-z2"]);
    assert!(stdout(&out).contains("total 5 vs 5"));
}

#[test]
fn verify_all_passes_in_both_modes() {
    let out = run(&["verify-all"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("extensions pass"));

    let js = run(&["verify-all", "--json"]);
    assert_eq!(js.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&js)).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 18);
    assert!(rows.iter().all(|r| r["pass"] == true));
}

#[test]
fn unknown_entry_exits_2() {
    let out = run(&["analyze", "no-such-entry"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("no-such-entry"));
}

#[test]
fn bad_usage_exits_2() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["analyze"]).status.code(), Some(2));
    assert_eq!(run(&[]).status.code(), Some(2));
}

#[test]
fn input_file_roundtrip_and_errors() {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    std::fs::create_dir_all(&dir).unwrap();

    let good = dir.join("v4_over_z2.json");
    std::fs::write(
        &good,
        r#"{"h": {"table": [[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]]}, "normal": [0,1]}"#,
    )
    .unwrap();
    let out = run(&["analyze", "klein", "--input", good.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["name"], "klein");
    assert_eq!(v["extension"]["h_order"], 4);

    let missing = dir.join("does_not_exist.json");
    let out = run(&["analyze", "x", "--input", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let bad = dir.join("not_normal.json");
    std::fs::write(
        &bad,
        r#"{"h": {"generators": [[1,2,0],[1,0,2]]}, "normal": [0,1]}"#,
    )
    .unwrap();
    let out = run(&["analyze", "x", "--input", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("normal"));
}
