//! End-to-end runs of the `hv` binary.
//!
//! Golden files live in `tests/golden/`. Set `HV_UPDATE_GOLDEN=1` to rewrite
//! them after an intended output change.

use std::path::PathBuf;
use std::process::{Command, Output};

fn hv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hv"))
        .args(args)
        .env("HV_COLOR", "0")
        .output()
        .expect("hv binary runs")
}

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

fn check_golden(name: &str, args: &[&str]) {
    let out = hv(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let path = golden_path(name);
    if std::env::var_os("HV_UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &out.stdout).unwrap();
        return;
    }
    let expected = std::fs::read(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert!(
        out.stdout == expected,
        "{name} differs from the golden file:\n{}",
        String::from_utf8_lossy(&out.stdout)
    );
}

const L_CASE: &[&str] = &[
    "--h", "1", "--hI", "0", "--cL", "1", "--cLI", "1", "--cI", "0",
];
const IRREDUCIBLE: &[&str] = &[
    "--h", "1", "--hI", "1", "--cL", "0", "--cLI", "1", "--cI", "0",
];
const I_CASE: &[&str] = &[
    "--h", "2", "--hI", "3", "--cL", "1", "--cLI", "1", "--cI", "0",
];

fn theorem_args(weight: &[&'static str]) -> Vec<&'static str> {
    let mut v = vec!["verify-theorem1", "--format", "json", "--max-degree", "4"];
    v.extend_from_slice(weight);
    v
}

#[test]
fn golden_l_case() {
    check_golden("theorem1_l_case.json", &theorem_args(L_CASE));
}

#[test]
fn golden_irreducible() {
    check_golden("theorem1_irreducible.json", &theorem_args(IRREDUCIBLE));
}

#[test]
fn golden_i_case() {
    check_golden("theorem1_i_case.json", &theorem_args(I_CASE));
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["property-suite", "--seed", "7", "--format", "json"],
        vec!["verify-det", "--max-degree", "3", "--seed", "3"],
        theorem_args(I_CASE),
    ] {
        let a = hv(&args);
        let b = hv(&args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn seeds_change_sample_points() {
    let a = hv(&[
        "verify-det",
        "--max-degree",
        "1",
        "--seed",
        "1",
        "--format",
        "json",
    ]);
    let b = hv(&[
        "verify-det",
        "--max-degree",
        "1",
        "--seed",
        "2",
        "--format",
        "json",
    ]);
    assert_ne!(a.stdout, b.stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(hv(&["singular", "--degree", "1"]).status.code(), Some(0));
    let bad_number = hv(&["det", "--h", "0.5"]);
    assert_eq!(bad_number.status.code(), Some(2));
    assert!(!bad_number.stderr.is_empty());
    let off_level = hv(&["verify-theorem1", "--cI", "1"]);
    assert_eq!(off_level.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&off_level.stderr).starts_with("error:"));
    assert_eq!(
        hv(&["det", "--mode", "symbolic", "--max-degree", "6"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(hv(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn json_envelope_fields() {
    let out = hv(&[
        "character",
        "--hI",
        "3",
        "--max-degree",
        "3",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["tool"], "hv");
    assert_eq!(v["command"], "character");
    assert_eq!(v["passed"], true);
    assert_eq!(v["config"]["weight"]["hI"], "3");
}
