use std::process::{Command, Output};

use serde_json::Value;

fn confcohom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_confcohom"))
        .args(args)
        .env_remove("CONFCOHOM_MAX_M")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn fm_of_the_plane() {
    let out = confcohom(&["poincare", "--space", "builtin:c", "--target", "fm", "--m", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["result"], serde_json::json!({"4": 2, "5": 3, "6": 1}));
}

#[test]
fn output_is_deterministic() {
    let args = ["character", "--space", "builtin:c", "--m", "4"];
    let a = confcohom(&args);
    let b = confcohom(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn exit_codes() {
    let bad_cycle = confcohom(&["character", "--space", "builtin:c", "--m", "3", "--cycle-type", "(2,2)"]);
    assert_eq!(bad_cycle.status.code(), Some(3));
    let err: Value = serde_json::from_slice(&bad_cycle.stderr).expect("stderr is JSON");
    assert!(err["error"].is_object());

    assert_eq!(confcohom(&["frobnicate"]).status.code(), Some(3));
    assert_eq!(confcohom(&["--help"]).status.code(), Some(0));

    let capped = Command::new(env!("CARGO_BIN_EXE_confcohom"))
        .args(["character", "--space", "builtin:c", "--m", "9"])
        .env("CONFCOHOM_MAX_M", "6")
        .output()
        .expect("binary runs");
    assert_eq!(capped.status.code(), Some(5));
}

#[test]
fn space_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("plane.json");
    std::fs::write(
        &path,
        r#"{"name": "plane", "poincare_c": [0, 0, 1], "dim": 2, "i_acyclic": true, "orientable": true, "connected": true}"#,
    )
    .unwrap();
    let from_file = confcohom(&["poincare", "--space", path.to_str().unwrap(), "--target", "bf", "--m", "4"]);
    let builtin = confcohom(&["poincare", "--space", "builtin:c", "--target", "bf", "--m", "4"]);
    assert_eq!(json(&from_file)["result"], json(&builtin)["result"]);
}

#[test]
fn selftest_passes() {
    let out = confcohom(&["selftest"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert!(doc["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}
