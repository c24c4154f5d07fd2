//! End-to-end tests of the command binary: golden outputs, exit codes,
//! and byte determinism of stdout.

use std::process::{Command, Output};

use serde_json::Value;

fn dynatome(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dynatome"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn parse(out: &Output) -> Value {
    serde_json::from_str(&stdout(out)).expect("stdout is a JSON document")
}

#[test]
fn mult_quadratic_period_two_golden_json() {
    let out = dynatome(&[
        "mult",
        "--family",
        "unicritical",
        "--degree",
        "2",
        "--period",
        "2",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let doc = parse(&out);
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["command"], "mult");
    assert_eq!(doc["status"], "ok");
    // λ − 4c − 4: outer index = λ-degree, inner ascending in c
    assert_eq!(doc["payload"]["m"], serde_json::json!([["-4", "-4"], ["1"]]));
}

#[test]
fn text_mode_renders_descending_with_symbols() {
    let out = dynatome(&["mult", "--period", "2"]);
    assert!(out.status.success());
    let s = stdout(&out);
    assert!(s.contains("λ - 4·c - 4"), "got: {s}");
    assert!(s.trim_end().ends_with("status: ok"), "got: {s}");
}

#[test]
fn classify_chebyshev_parameter() {
    let out = dynatome(&[
        "classify",
        "--family",
        "unicritical",
        "--degree",
        "2",
        "--c",
        "-2",
        "--max-period",
        "4",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let doc = parse(&out);
    assert_eq!(doc["payload"]["verdict"], "chebyshev");
    assert_eq!(doc["payload"]["u"], "-2");
}

#[test]
fn classify_symcubic_power_parameter() {
    let out = dynatome(&[
        "classify",
        "--family",
        "symcubic",
        "--a",
        "0",
        "--max-period",
        "2",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let doc = parse(&out);
    assert_eq!(doc["payload"]["verdict"], "power");
}

#[test]
fn parametrization_integer_family_verifies() {
    let out = dynatome(&["parametrization", "quad-int-period12", "3", "--format", "json"]);
    assert!(out.status.success());
    let doc = parse(&out);
    assert_eq!(doc["payload"]["c"], "-2");
    assert_eq!(doc["payload"]["verified"], true);
}

#[test]
fn stdout_is_byte_deterministic() {
    let a = dynatome(&["phi", "--period", "3", "--format", "json"]);
    let b = dynatome(&["phi", "--period", "3", "--format", "json"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn descent_output_independent_of_threads() {
    let a = dynatome(&["descent", "--bound", "3", "--threads", "1"]);
    let b = dynatome(&["descent", "--bound", "3", "--threads", "4"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn exit_codes_separate_usage_from_failed_verification() {
    // conflicting parameter flags are a usage error
    let usage = dynatome(&["classify", "--c", "1", "--u", "1"]);
    assert_eq!(usage.status.code(), Some(1));
    // so is an unknown flag, via the parser
    let unknown = dynatome(&["mult", "--period", "2", "--nope"]);
    assert_eq!(unknown.status.code(), Some(1));
    // an unmeetable tolerance makes the verification honestly fail
    let failed = dynatome(&[
        "crosscheck",
        "--degree",
        "2",
        "--u",
        "-1",
        "--period",
        "1",
        "--tol",
        "1e-300",
    ]);
    assert_eq!(failed.status.code(), Some(2));
    // help is not an error
    let help = dynatome(&["--help"]);
    assert_eq!(help.status.code(), Some(0));
}

#[test]
fn verify_paper_single_criterion_passes() {
    let out = dynatome(&["verify-paper", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = parse(&out);
    assert_eq!(doc["payload"]["all_pass"], true);
    assert_eq!(doc["payload"]["criteria"].as_array().unwrap().len(), 1);
}

#[test]
fn timing_goes_to_stderr_not_stdout() {
    let out = dynatome(&["qn", "--period", "2"]);
    assert!(out.status.success());
    assert!(!stdout(&out).contains("timing"));
    let err = String::from_utf8(out.stderr.clone()).expect("utf-8 stderr");
    assert!(err.contains("timing:"), "got: {err}");
}
