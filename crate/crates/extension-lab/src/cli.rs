//! Command-line front end.
//!
//! Exit codes: 0 all checks pass, 1 a verification failed or a pipeline
//! stage could not complete, 2 bad usage or unreadable input.

use crate::analyze::{analyze_extension, FullReport};
use crate::catalog;
use crate::config::{RunConfig, DEFAULT_SEED};
use crate::extension::ExtensionData;
use crate::jsonio::load_extension;
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use std::fmt::Write as _;
use std::path::PathBuf;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser)]
#[command(
    name = "extension-lab",
    version,
    about = "Conjugacy counting, character orthogonality, and twisted algebras for finite group extensions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Target {
    /// Built-in extension name, or a display name when --input is given.
    name: String,
    /// Load the extension from a JSON file instead of the built-in catalog.
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
    /// Seed for the randomized stages.
    #[arg(long, env = "EXTENSION_LAB_SEED", default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Emit the result as JSON on stdout.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// List the built-in extensions.
    List,
    /// Run the full pipeline and report every check.
    Analyze {
        #[command(flatten)]
        target: Target,
        /// Include irrep matrices in the JSON report.
        #[arg(long)]
        dump_matrices: bool,
    },
    /// Count conjugacy classes of H over each class of Q.
    Count {
        #[command(flatten)]
        target: Target,
    },
    /// Check the twisted character orthogonality relation.
    Orthogonality {
        #[command(flatten)]
        target: Target,
    },
    /// Build the twisted algebras and compare center dimensions.
    Algebra {
        #[command(flatten)]
        target: Target,
    },
    /// Run the full pipeline on every built-in extension.
    VerifyAll {
        /// Seed for the randomized stages.
        #[arg(long, env = "EXTENSION_LAB_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Emit one summary object per extension as a JSON array.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Serialize)]
struct VerifyRow {
    name: &'static str,
    pass: bool,
    counting: bool,
    orthogonality: bool,
    algebras: bool,
    h_classes: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

fn load_target(target: &Target) -> Result<ExtensionData, i32> {
    match &target.input {
        Some(path) => load_extension(path).map_err(|e| {
            eprintln!("error: {e}");
            EXIT_USAGE
        }),
        None => catalog::build(&target.name).map_err(|e| {
            eprintln!("error: {e}");
            EXIT_USAGE
        }),
    }
}

fn run_target(target: &Target) -> Result<FullReport, i32> {
    run_target_with(target, false)
}

fn run_target_with(target: &Target, dump_matrices: bool) -> Result<FullReport, i32> {
    let mut ext = load_target(target)?;
    if target.input.is_some() {
        ext.name = target.name.clone();
    }
    let mut cfg = RunConfig::with_seed(target.seed);
    cfg.dump_matrices = dump_matrices;
    analyze_extension(&ext, &cfg).map_err(|e| {
        eprintln!("error: {e}");
        EXIT_FAIL
    })
}

/// Writes to stdout, ignoring errors. A consumer that closes the pipe early
/// (`extension-lab list | head`) must not turn a finished run into a panic;
/// the exit code carries the verdict regardless of how much text was read.
fn write_stdout(text: &str) {
    use std::io::Write as _;
    let _ = std::io::stdout().write_all(text.as_bytes());
}

fn emit_json<T: Serialize>(value: &T) {
    let body = serde_json::to_string_pretty(value).expect("report serializes");
    write_stdout(&format!("{body}\n"));
}

fn render_analysis(out: &mut String, r: &FullReport) {
    let e = &r.extension;
    let _ = writeln!(out, "extension {}: |G|={} |H|={} |Q|={}", r.name, e.g_order, e.h_order, e.q_order);
    let split = match e.split {
        Some(true) => "split",
        Some(false) => "non-split",
        None => "split: undecided (search capped)",
    };
    let _ = writeln!(
        out,
        "  {split}, action {}, tau has {} nonidentity values",
        if r.action.trivial { "trivial" } else { "nontrivial" },
        e.tau_nontrivial
    );
    let _ = writeln!(
        out,
        "  twisted product isomorphic to H: {}",
        if e.twisted_product_ok { "yes" } else { "NO" }
    );
    let _ = writeln!(out, "  irrep dims of G: {:?}", r.irreps.dims);
    let _ = writeln!(
        out,
        "  twist residuals: intertwine {:.2e}, scalar {:.2e}, cocycle {:.2e}",
        r.twist.max_intertwine_residual, r.twist.max_scalar_defect, r.twist.max_cocycle_residual
    );
    render_counting(out, r);
    render_orthogonality(out, r);
    render_algebra(out, r);
    let _ = writeln!(out, "overall: {}", if r.pass { "PASS" } else { "FAIL" });
}

fn render_counting(out: &mut String, r: &FullReport) {
    let _ = writeln!(out, "  classes of H over each class of Q (formula vs oracle):");
    for row in &r.counting.rows {
        let _ = writeln!(
            out,
            "    q={} (class size {}): formula {} oracle {}{}",
            row.q_label,
            row.q_class_size,
            row.formula_count,
            row.oracle_count,
            if row.agrees { "" } else { "  MISMATCH" }
        );
    }
    let _ = writeln!(
        out,
        "  total {} vs {} classes of H: {}",
        r.counting.total_formula,
        r.counting.total_h_classes,
        if r.counting.pass { "PASS" } else { "FAIL" }
    );
}

fn render_orthogonality(out: &mut String, r: &FullReport) {
    let o = &r.orthogonality;
    let _ = writeln!(
        out,
        "  orthogonality over {} pairs: max deviation {:.2e} (worst pair g1={} g2={}), oracle {}: {}",
        o.pairs_checked,
        o.max_deviation,
        o.worst_pair[0],
        o.worst_pair[1],
        if o.oracle_consistent { "consistent" } else { "INCONSISTENT" },
        if o.pass { "PASS" } else { "FAIL" }
    );
}

fn render_algebra(out: &mut String, r: &FullReport) {
    let a = &r.algebras;
    let _ = writeln!(
        out,
        "  group algebra dim {}: center {}, graded center {:?} ({} per-class counts)",
        a.group_algebra_dim,
        a.group_center_dim,
        a.graded_center_dims,
        if a.graded_matches_counts { "matches" } else { "DOES NOT MATCH" }
    );
    let _ = writeln!(
        out,
        "  crossed product dim {}: center {}, embedding residual {:.2e}, rank {}",
        a.crossed_dim, a.crossed_center_dim, a.kappa_max_residual, a.kappa_rank
    );
    let _ = writeln!(
        out,
        "  groupoid algebra dim {}: center {}, graded center {:?} ({} per-class counts)",
        a.groupoid_dim,
        a.groupoid_center_dim,
        a.groupoid_graded_dims,
        if a.groupoid_graded_matches { "matches" } else { "DOES NOT MATCH" }
    );
    let _ = writeln!(out, "  algebra checks: {}", if a.pass { "PASS" } else { "FAIL" });
}

/// Parses arguments from the process environment, runs the requested command,
/// and returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match cli.command {
        Command::List => {
            let mut out = String::new();
            for entry in catalog::entries() {
                let _ = writeln!(out, "{:<18} {}", entry.name, entry.summary);
            }
            write_stdout(&out);
            EXIT_PASS
        }
        Command::Analyze { target, dump_matrices } => {
            match run_target_with(&target, dump_matrices && target.json) {
                Ok(report) => {
                    if target.json {
                        emit_json(&report);
                    } else {
                        let mut out = String::new();
                        render_analysis(&mut out, &report);
                        write_stdout(&out);
                    }
                    if report.pass {
                        EXIT_PASS
                    } else {
                        EXIT_FAIL
                    }
                }
                Err(code) => code,
            }
        }
        Command::Count { target } => match run_target(&target) {
            Ok(report) => {
                if target.json {
                    emit_json(&report.counting);
                } else {
                    let mut out = format!("extension {}:\n", report.name);
                    render_counting(&mut out, &report);
                    write_stdout(&out);
                }
                if report.counting.pass {
                    EXIT_PASS
                } else {
                    EXIT_FAIL
                }
            }
            Err(code) => code,
        },
        Command::Orthogonality { target } => match run_target(&target) {
            Ok(report) => {
                if target.json {
                    emit_json(&report.orthogonality);
                } else {
                    let mut out = format!("extension {}:\n", report.name);
                    render_orthogonality(&mut out, &report);
                    write_stdout(&out);
                }
                if report.orthogonality.pass {
                    EXIT_PASS
                } else {
                    EXIT_FAIL
                }
            }
            Err(code) => code,
        },
        Command::Algebra { target } => match run_target(&target) {
            Ok(report) => {
                if target.json {
                    emit_json(&report.algebras);
                } else {
                    let mut out = format!("extension {}:\n", report.name);
                    render_algebra(&mut out, &report);
                    write_stdout(&out);
                }
                if report.algebras.pass {
                    EXIT_PASS
                } else {
                    EXIT_FAIL
                }
            }
            Err(code) => code,
        },
        Command::VerifyAll { seed, json } => {
            let cfg = RunConfig::with_seed(seed);
            let mut rows = Vec::new();
            let mut all_pass = true;
            let mut out = String::new();
            for entry in catalog::entries() {
                let ext = entry.build();
                let row = match analyze_extension(&ext, &cfg) {
                    Ok(r) => VerifyRow {
                        name: entry.name,
                        pass: r.pass,
                        counting: r.counting.pass,
                        orthogonality: r.orthogonality.pass,
                        algebras: r.algebras.pass,
                        h_classes: r.counting.total_h_classes,
                        error: None,
                    },
                    Err(e) => VerifyRow {
                        name: entry.name,
                        pass: false,
                        counting: false,
                        orthogonality: false,
                        algebras: false,
                        h_classes: 0,
                        error: Some(e.to_string()),
                    },
                };
                all_pass &= row.pass;
                if !json {
                    match &row.error {
                        Some(msg) => {
                            let _ = writeln!(out, "{:<18} ERROR {msg}", row.name);
                        }
                        None => {
                            let _ = writeln!(
                                out,
                                "{:<18} {} ({} classes of H)",
                                row.name,
                                if row.pass { "PASS" } else { "FAIL" },
                                row.h_classes
                            );
                        }
                    }
                }
                rows.push(row);
            }
            if json {
                emit_json(&rows);
            } else {
                let _ = writeln!(
                    out,
                    "verify-all: {}/{} extensions pass",
                    rows.iter().filter(|r| r.pass).count(),
                    rows.len()
                );
                write_stdout(&out);
            }
            if all_pass {
                EXIT_PASS
            } else {
                EXIT_FAIL
            }
        }
    }
}
