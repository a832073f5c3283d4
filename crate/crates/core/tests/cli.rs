use std::process::{Command, Output};

fn embedlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_embedlab")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn embed_row_for_s5() {
    let out = embedlab(&["embed", "--algorithm", "A", "--s", "5", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let row: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(&row[..6], ["A", "s=5", "320", "320", "320", "320"]);
}

#[test]
fn build_col_dot() {
    let out = embedlab(&["build", "--family", "col", "--l", "4", "--r", "3", "--format", "dot"]);
    assert!(out.status.success());
    let dot = stdout(&out);
    assert!(dot.starts_with("graph G {"));
    assert_eq!(dot.lines().filter(|l| l.contains("[coord=")).count(), 32);
    assert_eq!(dot.lines().filter(|l| l.contains(" -- ")).count(), 44);
}

#[test]
fn oracle_json() {
    let out = embedlab(&["oracle", "--guest", "fq3", "--host", "col:4,0"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["minimum_wirelength"], 32);
    assert_eq!(value["witness_map"].as_array().unwrap().len(), 8);
}

#[test]
fn exit_codes() {
    assert_eq!(embedlab(&["verify", "--algorithm", "A", "--s", "4"]).status.code(), Some(0));
    let failing = embedlab(&["verify", "--algorithm", "B", "--n", "20", "--j", "2", "--k", "4", "--m", "4"]);
    assert_eq!(failing.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&failing.stderr).contains("formula_agrees"));
    assert_eq!(embedlab(&["oracle", "--guest", "c11", "--host", "c11"]).status.code(), Some(2));
    assert_eq!(embedlab(&["embed", "--algorithm", "B", "--n", "16", "--j", "1", "--k", "3", "--m", "4"]).status.code(), Some(2));
    assert_eq!(embedlab(&["build", "--family", "col"]).status.code(), Some(2));
}

#[test]
fn report_is_deterministic_and_writes_files() {
    let dir = std::env::temp_dir().join(format!("embedlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let first = embedlab(&["report", "--format", "json", "--out", path.to_str().unwrap()]);
    assert!(first.status.success());
    assert!(first.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    let second = embedlab(&["report", "--format", "json"]);
    assert_eq!(stdout(&second), written);
    let rows: serde_json::Value = serde_json::from_str(&written).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 17);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn profile_report() {
    let out = embedlab(&["report", "--family", "circulant", "--n", "8", "--j", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().next().unwrap(), "family,n,a,I,theta,witness,certificate");
    assert_eq!(text.lines().count(), 10);
    assert_eq!(text.lines().nth(4).unwrap(), "\"circulant:8:1,2\",8,3,3,6,0 1 2,exhaustive");
}
