//! The command-line examples: exit codes, outputs, the output directory.

use std::path::Path;
use std::process::{Command, Output};

fn dvisit(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dvisit"))
        .args(args)
        .env("DVISIT_OUT_DIR", dir)
        .output()
        .expect("binary runs")
}

fn json(path: &Path) -> serde_json::Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn write_tree(dir: &Path) -> String {
    let path = dir.join("tree.json");
    std::fs::write(&path, r#"{"k":2,"nodes":[[],[0],[1],[0,0],[0,1],[1,0],[1,1]]}"#).unwrap();
    path.display().to_string()
}

#[test]
fn visit_tree_file() {
    let dir = tempfile::tempdir().unwrap();
    let tree = write_tree(dir.path());
    let out = dvisit(&["visit", "--tree", &tree, "--priority", "0,1", "--budget", "100", "--emit", "json"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let trace = json(&dir.path().join("visit.json"));
    assert_eq!(trace["order"], serde_json::json!([[], [1], [1, 1], [0], [0, 0], [0, 1], [1, 0]]));
    assert_eq!(trace["terminated"], true);
}

#[test]
fn visit_unary_chain() {
    let dir = tempfile::tempdir().unwrap();
    let out = dvisit(&["visit", "--tree", "unary", "--budget", "5"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let trace = json(&dir.path().join("visit.json"));
    assert_eq!(trace["order"], serde_json::json!([[], [0], [0, 0], [0, 0, 0], [0, 0, 0, 0]]));
    assert_eq!(trace["terminated"], false);
}

#[test]
fn visit_duplicate_priority_is_a_config_error() {
    let dir = tempfile::tempdir().unwrap();
    let tree = write_tree(dir.path());
    let out = dvisit(&["visit", "--tree", &tree, "--priority", "0,0"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("duplicate"));
    assert!(out.stdout.is_empty());
}

#[test]
fn visit_dot_and_explicit_out() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("sub/v.dot");
    let out = dvisit(&["visit", "--tree", "full:2:2", "--emit", "dot", "--out", target.to_str().unwrap()], dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert!(std::fs::read_to_string(target).unwrap().starts_with("digraph visit"));
}

#[test]
fn homog_parity() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["homog", "--coloring", "(x+y)%2", "--k", "2", "--horizon", "200", "--budget", "2000"];
    let out = dvisit(&args, dir.path());
    assert_eq!(out.status.code(), Some(0));
    let report = json(&dir.path().join("homog.json"));
    assert_eq!(report["verified"], true);
    assert_eq!(report["N"], 200);
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("H0: 99 elements") && stdout.contains("verified=true"), "{stdout}");
}

#[test]
fn homog_constant() {
    let dir = tempfile::tempdir().unwrap();
    let out = dvisit(&["homog", "--builtin", "constant:0", "--k", "2", "--horizon", "10"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let report = json(&dir.path().join("homog.json"));
    assert_eq!(report["H"][0], serde_json::json!([0, 1, 2, 3, 4, 5, 6, 7, 8]));
}

#[test]
fn homog_syntax_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = dvisit(&["homog", "--coloring", "x+", "--k", "2"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("syntax error"));
}

#[test]
fn homog_table_and_trace() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("t.json");
    std::fs::write(&table, r#"{"k":2,"pairs":[[0,1,0],[0,2,0],[1,2,1]]}"#).unwrap();
    let trace = dir.path().join("trace.json");
    let args = ["homog", "--table", table.to_str().unwrap(), "--horizon", "3", "--trace", trace.to_str().unwrap()];
    let out = dvisit(&args, dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&trace)["order"][0], serde_json::json!([]));
    // pairs beyond the table are a configuration error
    let out = dvisit(&["homog", "--table", table.to_str().unwrap(), "--horizon", "4"], dir.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_suites() {
    let dir = tempfile::tempdir().unwrap();
    let out = dvisit(&["check", "--suite", "visits", "--seed", "42", "--cases", "200"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("visits: pass"));
    let out = dvisit(&["check", "--suite", "erdos", "--seed", "7"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let out = dvisit(&["check", "--suite", "nosuch"], dir.path());
    assert_eq!(out.status.code(), Some(2));
}
