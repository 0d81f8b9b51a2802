use serde_json::Value;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cliffsym")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["classify", "0", "0"][..],
        &["spinbasis", "9"],
        &["spinbasis", "4", "--max-n", "3"],
        &["verify", "bogus"],
        &["classify", "1"],
        &["classify", "-1", "2"],
        &["--json", "--text", "classify", "1", "1"],
        &[],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn classify_report() {
    let out = run(&["classify", "1", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["ok"], true);
    assert_eq!(v["command"], serde_json::json!(["classify", "1", "3"]));
    assert_eq!(v["data"]["record"]["ring"], "H");
    assert!(v["data"]["quotient"]["complex"].is_null());

    let v = json(&run(&["classify", "3", "0"]));
    assert_eq!(v["data"]["quotient"]["complex"]["class"], "c");
}

#[test]
fn spinbasis_matrices() {
    let v = json(&run(&["spinbasis", "4"]));
    assert_eq!(v["data"]["side"], 4);
    let mats = v["data"]["matrices"].as_array().unwrap();
    assert_eq!(mats.len(), 4);
    let entries = mats[0]["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 16);
    assert!(entries.iter().all(|e| e.as_array().is_some_and(|e| e.len() == 4)));
}

#[test]
fn verify_exit_codes() {
    assert_eq!(run(&["verify", "neutrino"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "clifford"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "relations"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "symmetries"]).status.code(), Some(1));
}

#[test]
fn verify_schema() {
    let out = run(&["verify", "relations", "--seed", "7"]);
    let v = json(&out);
    for key in ["schema", "command", "ok", "counters", "checks", "wall_time_ms"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert!(v.get("data").is_none());
    let c = &v["counters"];
    let total = c["total"].as_u64().unwrap();
    let sum = ["passed", "failed", "expected_failures"].iter().map(|k| c[k].as_u64().unwrap()).sum::<u64>();
    assert_eq!(total, sum);
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len() as u64, total);
    for ch in checks {
        assert_eq!(ch["suite"], "relations");
        assert!(ch["name"].is_string());
        assert!(ch["passed"].is_boolean());
        assert!(ch["expected_failure"].is_boolean());
    }
    assert_eq!(c["expected_failures"], 1);
}

#[test]
fn seeded_runs_are_deterministic() {
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("wall_time_ms");
        v
    };
    let a = strip(json(&run(&["verify", "neutrino", "--seed", "11"])));
    let b = strip(json(&run(&["verify", "neutrino", "--seed", "11", "--parallel"])));
    assert_eq!(a, b);
}

#[test]
fn text_mode() {
    let out = run(&["--text", "verify", "relations"]);
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.lines().any(|l| l.starts_with("XFAIL")));
    assert!(s.lines().last().unwrap().contains("checks:"));
    let s = String::from_utf8(run(&["classify", "3", "0", "--text"]).stdout).unwrap();
    assert!(s.contains("ring"));
}
