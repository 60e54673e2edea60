//! End-to-end CLI behavior: subcommands, exit codes, fixture loading,
//! golden-file report comparison and byte-level determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_torsionlab"))
}

fn manifest_path(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(rel)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn list_enumerates_all_checks() {
    let out = run(&["list"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    for id in torsionlab::corpus::CHECK_IDS {
        assert!(text.contains(id), "missing {id} in list output");
    }
}

#[test]
fn verify_single_check_matches_golden() {
    for (id, golden) in [("2.90", "tests/golden/verify_290.json"), ("2.100", "tests/golden/verify_2100.json")] {
        let out = run(&["verify", id, "--json"]);
        assert!(out.status.success(), "verify {id} failed");
        let expected = std::fs::read_to_string(manifest_path(golden)).unwrap();
        assert_eq!(stdout_of(&out), expected, "golden mismatch for {id}");
    }
}

#[test]
fn verify_accepts_aliases_and_rejects_nonsense() {
    let out = run(&["verify", "2.120", "--bound", "10"]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("2.110+2.120"));

    let out = run(&["verify", "9.99"]);
    assert_eq!(out.status.code(), Some(3), "unknown ids are usage errors");
}

#[test]
fn full_suite_json_is_deterministic() {
    let a = run(&["verify", "--json", "--seed", "42"]);
    let b = run(&["verify", "--json", "--seed", "42"]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(stdout_of(&a), stdout_of(&b), "same seed must give byte-identical reports");
    let c = run(&["verify", "--json", "--seed", "43"]);
    assert_ne!(stdout_of(&a), stdout_of(&c), "the seed is recorded in the report");
}

#[test]
fn wpr_subcommand_on_fixtures() {
    let nonwpr = manifest_path("fixtures/nonwpr.json");
    let out = run(&["wpr", "--ring", nonwpr.to_str().unwrap(), "--seq", "x", "--bounds", "4", "8"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("NotProZeroUpTo(8)"), "unexpected verdict: {text}");
    assert!(text.contains("y8"), "witness missing: {text}");

    let tower = manifest_path("fixtures/tower2.json");
    let out = run(&["wpr", "--ring", tower.to_str().unwrap(), "--bounds", "4", "8"]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("ProZeroCertified"));
}

#[test]
fn cohomology_subcommand_reports_stabilization() {
    let poly = manifest_path("fixtures/poly_x.json");
    let out = run(&[
        "cohomology",
        "--ring",
        poly.to_str().unwrap(),
        "--seq",
        "x",
        "--degree",
        "1",
        "--window",
        "-3:1",
        "--json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["op"], "cech");
    assert_eq!(v["verdict"], "stabilized");
    let pieces = v["pieces"].as_array().unwrap();
    assert_eq!(pieces.len(), 5);
    let total: u64 = pieces.iter().map(|p| p["dim"].as_u64().unwrap()).sum();
    assert_eq!(total, 3, "degrees -3..-1 carry one dimension each");
}

#[test]
fn koszul_subcommand_handles_integers_and_rings() {
    let out = run(&["koszul", "--integers", "2"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("H_0 = Z/2"));
    assert!(text.contains("H_1 = 0"));

    let poly = manifest_path("fixtures/poly_xy.json");
    let out = run(&[
        "koszul",
        "--ring",
        poly.to_str().unwrap(),
        "--seq",
        "x,y",
        "--degree",
        "1",
        "--window",
        "total:8",
    ]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("total over window: 0"));
}

#[test]
fn malformed_input_exits_three() {
    let out = run(&["wpr", "--ring", "/nonexistent.json", "--seq", "x"]);
    assert_eq!(out.status.code(), Some(3));

    let out = run(&["cohomology", "--ring", "/nonexistent.json", "--seq", "x"]);
    assert_eq!(out.status.code(), Some(3));
}
