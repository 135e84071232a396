use std::process::{Command, Output};

use serde_json::Value;

fn qksl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qksl")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

#[test]
fn unknown_suite_is_a_usage_error() {
    assert_eq!(qksl(&["verify", "bogus"]).status.code(), Some(2));
    assert_eq!(qksl(&["verify"]).status.code(), Some(2));
    assert_eq!(qksl(&["verify", "kom2", "--n-max", "1"]).status.code(), Some(2));
}

#[test]
fn summe_passes_per_instance() {
    let o = qksl(&["verify", "summe", "--n-max", "2", "--r-max", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<_> = out.lines().filter(|l| l.starts_with("PASS  summe")).collect();
    assert_eq!(lines.len(), 2 * 3);
    assert!(out.contains("n=2 r=1 s=2"));
    assert!(out.lines().last().unwrap().starts_with("summe: PASS"));
}

#[test]
fn suite_flag_matches_positional() {
    let a = qksl(&["verify", "kom2", "--json", "--no-timing"]);
    let b = qksl(&["verify", "--suite", "kom2", "--json", "--no-timing"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn json_is_deterministic_and_versioned() {
    let args = ["verify", "iota", "--n-max", "2", "--json", "--no-timing"];
    let a = qksl(&args);
    let b = qksl(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let doc: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["suite"], "iota");
    assert_eq!(doc["status"], "pass");
    let inst = doc["instances"].as_array().unwrap();
    assert_eq!(inst.len(), 3);
    let rs: Vec<_> = inst.iter().map(|i| i["r"].as_i64().unwrap()).collect();
    assert_eq!(rs, vec![0, 1, 2]);
    assert!(inst.iter().all(|i| i.get("timing_ms").is_none() && i["witness"].is_null()));
}

#[test]
fn timing_is_reported_unless_suppressed() {
    let doc: Value = serde_json::from_slice(&qksl(&["verify", "kom2", "--r-max", "1", "--json"]).stdout).unwrap();
    assert!(doc["instances"][0]["timing_ms"].is_u64());
}

#[test]
fn skipped_checks_are_listed() {
    let doc: Value = serde_json::from_slice(&qksl(&["verify", "kom2", "--r-max", "0", "--json", "--no-timing"]).stdout).unwrap();
    let skipped = doc["instances"][0]["skipped"].as_array().unwrap();
    assert!(!skipped.is_empty());
    assert!(skipped.iter().all(|s| s["reason"].as_str().unwrap().contains("r ≥ 1")));
    assert_eq!(doc["status"], "pass");
}

#[test]
fn verify_wolf_prints_the_table() {
    let o = qksl(&["verify", "wolf", "--n-max", "2", "--no-timing"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.matches("DEGENERATE").count(), 1);
    assert_eq!(out.matches("REGULAR").count(), 7);
    let degenerate = out.lines().find(|l| l.contains("DEGENERATE")).unwrap();
    assert!(degenerate.starts_with("Sp(3)/Sp(1)Sp(2)"));
}

#[test]
fn wolf_table_json() {
    let o = qksl(&["wolf-table", "--n", "3", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 8);
    let e8 = rows.iter().find(|r| r["name"].as_str().unwrap().starts_with("E8")).unwrap();
    assert_eq!(e8["ideals"][1]["l"], "3/5");
    assert_eq!(e8["ideals"][1]["solved"], true);
    assert_eq!(e8["verdict"], "REGULAR");
    assert_eq!(rows[0]["verdict"], "DEGENERATE");
    assert_eq!(qksl(&["wolf-table", "--n", "1"]).status.code(), Some(2));
}

#[test]
fn dims_tables() {
    let o = qksl(&["dims", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("sum       16"));
    let doc: Value = serde_json::from_slice(&qksl(&["dims", "3", "--json"]).stdout).unwrap();
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["ranks"], serde_json::json!([14, 28, 18, 4]));
    assert_eq!(doc["sum"], 64);
    assert_eq!(qksl(&["dims", "0"]).status.code(), Some(2));
}

#[test]
fn thread_cap() {
    let run = |v: &str| Command::new(env!("CARGO_BIN_EXE_qksl")).args(["verify", "kom2", "--r-max", "1"]).env("QKSL_THREADS", v).output().unwrap();
    assert_eq!(run("1").status.code(), Some(0));
    assert_eq!(run("0").status.code(), Some(2));
    assert_eq!(run("many").status.code(), Some(2));
}
