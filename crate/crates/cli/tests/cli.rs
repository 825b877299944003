use std::fs;
use std::path::Path;
use std::process::{Command, Output};

const S3: &str = "[perm]\ndegree: 3\ngen: (1 2 3)\ngen: (1 2)\n";

fn vanishoff(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vanishoff"))
        .args(args)
        .env_remove("VANISHOFF_CACHE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn analyze_writes_json_report() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "s3.txt", S3);
    let out = vanishoff(&["analyze", &input, "--json", "-"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["meta"]["order"], 6);
    assert_eq!(v["vanishing"]["v"]["order"], 3);
    assert_eq!(v["characters"]["cd"], serde_json::json!([1, 2]));
    assert!(v["timing"].is_null());
}

#[test]
fn analyze_summary_mentions_v() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "s3.txt", S3);
    let out = vanishoff(&["analyze", &input]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("order 6"));
    assert!(text.contains("V(G) = <(1 2 3)>"));
    assert!(text.contains("0 fail"));
}

#[test]
fn parse_error_exits_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "bad.txt", "no header here\n");
    let out = vanishoff(&["analyze", &input]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("parse"));
}

#[test]
fn missing_file_exits_with_two() {
    let out = vanishoff(&["analyze", "/nonexistent/group.txt"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn order_limit_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "s3.txt", S3);
    let out = vanishoff(&["--order-limit", "5", "analyze", &input]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_single_entry() {
    let dir = tempfile::tempdir().unwrap();
    let summary = dir.path().join("summary.json");
    let out = vanishoff(&[
        "verify",
        "--only",
        "SmallGroup(128,854)",
        "--json",
        summary.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("1 passed, 0 failed"));
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(summary).unwrap()).unwrap();
    assert_eq!(v["entries"][0]["order"], 128);
}

#[test]
fn verify_unknown_entry_is_an_input_error() {
    let out = vanishoff(&["verify", "--only", "SmallGroup(1,1)"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn chartab_prints_s3() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "s3.txt", S3);
    let out = vanishoff(&["chartab", &input]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("3 classes"));
    let rows: Vec<&str> = text
        .lines()
        .filter(|l| l.trim_start().starts_with("X."))
        .collect();
    assert_eq!(rows.len(), 3);
    assert!(rows
        .iter()
        .any(|r| r.split_whitespace().collect::<Vec<_>>() == ["X.3", "2", "-1", "0"]));
}

#[test]
fn chartab_shows_irrational_values() {
    let dir = tempfile::tempdir().unwrap();
    let c3 = "[pc]\ngens: a\npow: a^3 = 1\n";
    let input = write(dir.path(), "c3.txt", c3);
    let out = vanishoff(&["chartab", &input]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(stdout(&out).contains('z'));
}

#[test]
fn cache_directory_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let input = write(dir.path(), "s3.txt", S3);
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_vanishoff"))
            .args(["analyze", &input, "--json", "-"])
            .env("VANISHOFF_CACHE", &cache)
            .output()
            .unwrap()
    };
    let first = run();
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(fs::read_dir(&cache).unwrap().count(), 1);
    let second = run();
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn corpus_lists_and_prints_entries() {
    let out = vanishoff(&["corpus"]);
    assert!(stdout(&out).lines().any(|l| l == "SmallGroup(32,6)"));
    let out = vanishoff(&["corpus", "Q8"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("[pc]"));
}
