//! CLI surface tests: outputs parse with the library's own readers, errors
//! are structured JSON with the right exit codes, and "-" reads stdin.

use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::Value;

use redmonoid::exact::Matrix;
use redmonoid::weights::weight_set_from_json;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_redmonoid"))
}

fn stdout_json(args: &[&str]) -> Value {
    let out = bin().args(args).output().unwrap();
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn outputs_round_trip_through_library_readers() {
    let m = stdout_json(&[
        "sample-unit", "--kind", "orthogonal", "--n", "4", "--seed", "5",
    ]);
    let matrix = Matrix::from_json(&m).unwrap();
    assert_eq!(matrix.rows(), 4);

    let idems = stdout_json(&["idempotents", "--kind", "symplectic", "--n", "4"]);
    let list = idems.as_array().unwrap();
    assert_eq!(list.len(), 10);
    for item in list {
        Matrix::from_json(item).unwrap();
    }

    let ws = stdout_json(&[
        "weights-enum", "--kind", "symplectic", "--n", "4", "--degree", "2",
    ]);
    assert_eq!(weight_set_from_json(&ws).unwrap().len(), 3);
}

#[test]
fn member_reports_factor_string() {
    let unit = stdout_json(&[
        "sample-unit", "--kind", "symplectic", "--n", "4", "--seed", "1",
    ]);
    let dir = std::env::temp_dir().join(format!("redmonoid-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("unit.json");
    std::fs::write(&path, unit.to_string()).unwrap();
    let v = stdout_json(&[
        "member", "--kind", "symplectic", "--n", "4", "--in", path.to_str().unwrap(),
    ]);
    assert_eq!(v["member"], Value::Bool(true));
    assert!(v["c"].is_string());
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn stdin_dash_input() {
    let diag = Matrix::from_i64(
        redmonoid::exact::Field::Rational,
        &[&[1, 0, 0, 0], &[0; 4], &[0; 4], &[0; 4]],
    );
    let mut child = bin()
        .args(["torus-contains", "--kind", "symplectic", "--n", "4", "--in", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(diag.to_json().to_string().as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["contains"], Value::Bool(true));
}

#[test]
fn domain_errors_are_structured_json_exit_1() {
    // violated constraint is named
    let out = bin()
        .args(["idempotents", "--kind", "symplectic", "--n", "3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert!(v["error"].as_str().unwrap().contains("even"));

    let out = bin()
        .args(["idempotents", "--kind", "orthogonal", "--n", "2", "--field", "fp:2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert!(v["error"].as_str().unwrap().contains("characteristic"));

    // malformed JSON payload
    let dir = std::env::temp_dir().join(format!("redmonoid-cli-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(&path, "{not json").unwrap();
    let out = bin()
        .args(["member", "--kind", "symplectic", "--n", "4", "--in", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert!(v["error"].as_str().unwrap().contains("JSON"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn usage_errors_exit_2() {
    let out = bin().args(["frobnicate"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let v: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert!(v["error"].is_string());

    let out = bin().args(["member", "--kind", "symplectic"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn prime_field_matrices_on_the_wire() {
    let m = stdout_json(&[
        "sample-unit", "--kind", "symplectic", "--n", "4", "--field", "fp:10007", "--seed", "2",
    ]);
    assert_eq!(m["field"], Value::String("fp:10007".into()));
    // fp entries are bare integers
    assert!(m["entries"][0].is_i64() || m["entries"][0].is_u64());
    Matrix::from_json(&m).unwrap();
}

#[test]
fn verify_hwc_report_shape() {
    let v = stdout_json(&[
        "verify-hwc", "--kind", "full", "--n", "2", "--degree", "2", "--seed", "9",
    ]);
    assert_eq!(v["graded_dim"], 10);
    assert_eq!(v["square_sum"], 10);
    assert_eq!(v["equal"], Value::Bool(true));
    assert_eq!(v["seed"], 9);
    assert!(v["points_used"].as_u64().unwrap() > 0);
}
