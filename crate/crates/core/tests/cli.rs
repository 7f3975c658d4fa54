mod common;

use std::fs;

use assert_cmd::Command;
use common::{fixture, fixture_path};
use fuzzy_linext::io::{parse_csv, parse_json};
use fuzzy_linext::{linearize, pivot_extend};
use predicates::str::contains;
use serde_json::Value;

fn bin() -> Command {
    Command::cargo_bin("fuzzy-linext").unwrap()
}

#[test]
fn check_valid_order() {
    bin()
        .arg("check")
        .arg(fixture_path("ex3_input.csv"))
        .assert()
        .code(0)
        .stdout(contains(
            "Zadeh fuzzy order: yes; linear: no; incomparable pairs: 4",
        ));
}

#[test]
fn check_corrupted_reports_antisymmetry() {
    bin()
        .arg("check")
        .arg(fixture_path("corrupted.csv"))
        .assert()
        .code(1)
        .stdout(contains("Zadeh fuzzy order: no"))
        .stdout(contains(
            "antisymmetry fails: r(a, b) = 0.3 and r(b, a) = 0.2",
        ));
}

#[test]
fn json_report_keys_are_stable() {
    for args in [
        vec![
            "check".to_owned(),
            fixture_path("ex1_input.csv").display().to_string(),
        ],
        vec![
            "linearize".to_owned(),
            fixture_path("ex1_input.csv").display().to_string(),
        ],
        vec![
            "gen".to_owned(),
            "--n".into(),
            "4".into(),
            "--density".into(),
            "0.5".into(),
            "--seed".into(),
            "1".into(),
        ],
    ] {
        let out = bin()
            .arg("--json")
            .args(&args)
            .assert()
            .code(0)
            .get_output()
            .stdout
            .clone();
        let v: Value = serde_json::from_slice(&out).unwrap();
        for key in [
            "command",
            "verdicts",
            "witnesses",
            "trace",
            "family",
            "timing",
        ] {
            assert!(v.get(key).is_some(), "{key} missing for {args:?}");
        }
    }
}

#[test]
fn linearize_writes_published_output() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out.csv");
    bin()
        .arg("linearize")
        .arg(fixture_path("ex3_input.csv"))
        .arg("-o")
        .arg(&out)
        .assert()
        .code(0)
        .stdout(contains("k = 2 (m = 8"));
    let written = parse_csv(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(written, fixture("ex3_output.csv"));
}

#[test]
fn linearize_json_input_keeps_format() {
    let out = bin()
        .arg("linearize")
        .arg(fixture_path("ex3_input.json"))
        .assert()
        .code(0)
        .get_output()
        .stdout
        .clone();
    let text = String::from_utf8(out).unwrap();
    let json_start = text.find('{').unwrap();
    let r = parse_json(&text[json_start..]).unwrap();
    assert_eq!(r, fixture("ex3_output.csv"));
}

#[test]
fn linearize_trace_and_policy() {
    let out = bin()
        .args(["--json", "linearize", "--trace", "--policy", "high"])
        .arg(fixture_path("ex1_input.csv"))
        .assert()
        .code(0)
        .get_output()
        .stdout
        .clone();
    let v: Value = serde_json::from_slice(&out).unwrap();
    // Placing b below a also lifts r(b, c) to 0.4, so one pivot suffices.
    assert_eq!(v["trace"]["k"], 1);
    assert_eq!(v["trace"]["pivots"][0], serde_json::json!(["b", "a"]));
    assert_eq!(
        v["trace"]["steps"][0]["raised"].as_array().unwrap().len(),
        2
    );
    assert_eq!(v["verdicts"]["linear"], true);
}

#[test]
fn linearize_rejects_non_order() {
    bin()
        .arg("linearize")
        .arg(fixture_path("corrupted.csv"))
        .assert()
        .code(2)
        .stderr(contains("not a Zadeh fuzzy order"));
}

#[test]
fn pivot_matches_library() {
    let out = bin()
        .arg("pivot")
        .arg(fixture_path("ex3_input.csv"))
        .args(["--a", "x1", "--b", "x2"])
        .assert()
        .code(0)
        .get_output()
        .stdout
        .clone();
    let text = String::from_utf8(out).unwrap();
    let csv_start = text.find(',').unwrap();
    let r = parse_csv(&text[csv_start..]).unwrap();
    assert_eq!(r, pivot_extend(&fixture("ex3_input.csv"), 0, 1).unwrap());
}

#[test]
fn pivot_precondition_failure_is_input_error() {
    bin()
        .arg("pivot")
        .arg(fixture_path("ex1_input.csv"))
        .args(["--a", "c", "--b", "a"])
        .assert()
        .code(2)
        .stderr(contains("r(a, c) = 0.4"));
    bin()
        .arg("pivot")
        .arg(fixture_path("ex1_input.csv"))
        .args(["--a", "a", "--b", "q"])
        .assert()
        .code(2)
        .stderr(contains("unknown element label `q`"));
}

#[test]
fn clamp_reports_beta() {
    bin()
        .arg("clamp")
        .arg(fixture_path("ex1_input.csv"))
        .args(["--a", "a", "--b", "c"])
        .assert()
        .code(0)
        .stdout(contains("beta = r(a, c) = 0.4"))
        .stdout(contains("a,1,0.4,0.4"));
    bin()
        .arg("clamp")
        .arg(fixture_path("ex1_input.csv"))
        .args(["--a", "a", "--b", "b"])
        .assert()
        .code(2);
}

#[test]
fn family_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let fam_dir = dir.path().join("fam");
    bin()
        .arg("family")
        .arg(fixture_path("ex3_input.csv"))
        .arg("-o")
        .arg(&fam_dir)
        .assert()
        .code(0)
        .stdout(contains("25 certificates"));
    assert!(fam_dir.join("manifest.json").is_file());
    bin()
        .arg("verify")
        .arg(fixture_path("ex3_input.csv"))
        .arg("--family")
        .arg(&fam_dir)
        .assert()
        .code(0)
        .stdout(contains("equals input: yes"));
}

#[test]
fn verify_detects_mismatch() {
    let dir = tempfile::tempdir().unwrap();
    fs::copy(fixture_path("ex3_output.csv"), dir.path().join("only.csv")).unwrap();
    bin()
        .arg("verify")
        .arg(fixture_path("ex3_input.csv"))
        .arg("--family")
        .arg(dir.path())
        .assert()
        .code(1)
        .stdout(contains("mismatch at (x1, x2): infimum 1 != 0"));
}

#[test]
fn verify_with_empty_directory_is_input_error() {
    let dir = tempfile::tempdir().unwrap();
    bin()
        .arg("verify")
        .arg(fixture_path("ex1_input.csv"))
        .arg("--family")
        .arg(dir.path())
        .assert()
        .code(2)
        .stderr(contains("empty"));
}

#[test]
fn gen_is_deterministic_and_valid() {
    let run = || {
        bin()
            .args(["gen", "--n", "6", "--density", "0.4", "--seed", "7"])
            .assert()
            .code(0)
            .get_output()
            .stdout
            .clone()
    };
    let first = run();
    assert_eq!(first, run());
    let r = parse_csv(&String::from_utf8(first).unwrap()).unwrap();
    assert_eq!(r.len(), 6);
    assert!(fuzzy_linext::check_order(&r).is_order());
    bin()
        .args(["gen", "--n", "0", "--density", "0.4", "--seed", "7"])
        .assert()
        .code(2);
}

#[test]
fn usage_errors_exit_2() {
    bin().arg("frobnicate").assert().code(2);
    bin().arg("check").assert().code(2);
    bin()
        .args(["linearize", "x.csv", "--policy", "sideways"])
        .assert()
        .code(2);
    bin()
        .args(["check", "/definitely/missing.csv"])
        .assert()
        .code(2)
        .stderr(contains("missing.csv"));
}

#[test]
fn parse_errors_are_positioned() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.csv");
    fs::write(&path, ",a,b\na,1,1.5\nb,0,1\n").unwrap();
    bin()
        .arg("check")
        .arg(&path)
        .assert()
        .code(2)
        .stderr(contains("row 2, column 3"));
}

#[test]
fn cli_is_a_thin_adapter() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let path = fixture_path("ex2_input.csv");
    let code = fuzzy_linext::cli::run(
        [
            "fuzzy-linext",
            "--json",
            "linearize",
            path.to_str().unwrap(),
        ],
        &mut out,
        &mut err,
    );
    assert_eq!(code, 0);
    let v: Value = serde_json::from_slice(&out).unwrap();
    let lib = linearize(&fixture("ex2_input.csv")).unwrap();
    assert_eq!(
        v["relation"]["matrix"],
        serde_json::json!(lib.relation.to_rows())
    );
    assert_eq!(v["trace"]["k"], lib.k);
    assert_eq!(v["trace"]["m"], lib.m);
}
