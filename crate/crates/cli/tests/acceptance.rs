//! Black-box checks of the `logalg` binary: deterministic reports across
//! runs and thread counts, per-task failure reporting, and exit codes.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn binary() -> &'static str {
    env!("CARGO_BIN_EXE_logalg")
}

fn session_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../sessions")
        .join(name)
}

fn run_args(args: &[&str]) -> Output {
    Command::new(binary())
        .args(args)
        .env_remove("LOGALG_DEGREE_CAP")
        .output()
        .expect("binary runs")
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("logalg-test-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn criterion_8_reports_are_byte_identical() {
    for name in ["nilpotent_cone.session", "normal_crossing.session"] {
        let session = session_path(name);
        let session = session.to_str().unwrap();

        let first = run_args(&["run", session]);
        let second = run_args(&["run", session]);
        assert!(first.status.success(), "{name} failed");
        assert_eq!(first.stdout, second.stdout, "{name}: reruns differ");

        let threaded = run_args(&["run", session, "--jobs", "4"]);
        assert_eq!(
            first.stdout, threaded.stdout,
            "{name}: thread count changed the report"
        );

        // The same bytes land in report files.
        let out1 = temp_file(&format!("{name}.1.json"), "");
        let out2 = temp_file(&format!("{name}.2.json"), "");
        let summary1 = run_args(&["run", session, "--out", out1.to_str().unwrap()]);
        let summary2 = run_args(&[
            "run",
            session,
            "--jobs",
            "3",
            "--out",
            out2.to_str().unwrap(),
        ]);
        assert_eq!(std::fs::read(&out1).unwrap(), std::fs::read(&out2).unwrap());
        assert_eq!(summary1.stdout, summary2.stdout);
        assert_eq!(std::fs::read(&out1).unwrap(), first.stdout);
        std::fs::remove_file(out1).ok();
        std::fs::remove_file(out2).ok();
    }
    println!("criterion 8 (byte-identical reports across runs and thread counts): pass");
}

#[test]
fn printed_polynomials_reparse_exactly() {
    let session = session_path("nilpotent_cone.session");
    let output = run_args(&["run", session.to_str().unwrap()]);
    let report: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();

    let ring = logalg_core::PolyRing::new(&["x", "y", "z"]).unwrap();
    let functions = report["tasks"][2]["result"]["functions"].as_array().unwrap();
    let reparsed: Vec<logalg_core::Poly> = functions
        .iter()
        .map(|v| ring.parse(v.as_str().unwrap()).unwrap())
        .collect();
    assert_eq!(
        reparsed,
        vec![
            logalg_core::Poly::one(&ring),
            ring.parse("x^2 + 4*y*z").unwrap()
        ]
    );
    // Display of a reparsed polynomial reproduces the report text.
    assert_eq!(reparsed[1].to_string(), functions[1].as_str().unwrap());
}

#[test]
fn degenerate_metric_fails_the_task_and_the_exit_code() {
    let session = temp_file(
        "degenerate.session",
        r#"{
            "ring": ["x", "y"],
            "metric": [["1", "1"], ["1", "1"]],
            "tasks": [ { "task": "koszul" } ]
        }"#,
    );
    let output = run_args(&["run", session.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(2));
    let report: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    assert_eq!(report["tasks"][0]["status"], "failed");
    assert!(report["tasks"][0]["error"]
        .as_str()
        .unwrap()
        .contains("singular"));
    std::fs::remove_file(session).ok();
}

#[test]
fn validation_problems_exit_with_code_1() {
    let empty = temp_file("empty.session", "");
    let output = run_args(&["check", empty.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&output.stderr).contains("missing ring declaration"));
    std::fs::remove_file(empty).ok();

    let unresolved = temp_file(
        "unresolved.session",
        r#"{ "ring": ["x"], "tasks": [ { "task": "cond1", "ideal": "nope" } ] }"#,
    );
    let output = run_args(&["check", unresolved.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&output.stderr).contains("unknown ideal"));
    std::fs::remove_file(unresolved).ok();

    for name in ["nilpotent_cone.session", "normal_crossing.session"] {
        let output = run_args(&["check", session_path(name).to_str().unwrap()]);
        assert_eq!(output.status.code(), Some(0), "{name} should validate");
    }
}

#[test]
fn degree_cap_applies_from_flag_and_environment() {
    let session = session_path("nilpotent_cone.session");
    let session = session.to_str().unwrap();

    let capped = run_args(&["run", session, "--degree-cap", "1"]);
    assert_eq!(capped.status.code(), Some(2));
    let report: serde_json::Value = serde_json::from_slice(&capped.stdout).unwrap();
    assert_eq!(report["tasks"][2]["task"], "invariant_functions");
    assert_eq!(report["tasks"][2]["status"], "failed");
    assert!(report["tasks"][2]["error"]
        .as_str()
        .unwrap()
        .contains("exceeds the configured cap"));

    let from_env = Command::new(binary())
        .args(["run", session])
        .env("LOGALG_DEGREE_CAP", "1")
        .output()
        .unwrap();
    assert_eq!(from_env.status.code(), Some(2));
}
