use std::io::Write;
use std::process::{Command, Output};

fn glweight(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_glweight"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn eval_worked_example() {
    let o = glweight(&["eval", "--perm", "(1 3 2)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "C3 - C0*C2 + C1^2");

    let o = glweight(&["eval", "--perm", "(1 3 2)", "--mn", "1,1"]);
    assert_eq!(stdout(&o).trim(), "C3 + C1^2");
}

#[test]
fn eval_diagram_and_one_line_input() {
    let o = glweight(&["eval", "--diagram", "[[1,2],[3,4]]"]);
    assert_eq!(stdout(&o).trim(), "C2^2");
    let o = glweight(&["eval", "--perm", "[3,1,2]"]);
    assert_eq!(stdout(&o).trim(), "C3 - C0*C2 + C1^2");
    let o = glweight(&["eval", "--perm", "()"]);
    assert_eq!(stdout(&o).trim(), "1");
}

#[test]
fn json_output_is_deterministic_and_parses() {
    let a = glweight(&["--format", "json", "table", "--k-max", "4"]);
    let b = glweight(&["--format", "json", "table", "--k-max", "4"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let rows: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 1 + 2 + 6 + 24);
    assert_eq!(rows[0]["sigma"], serde_json::json!([1]));
    assert_eq!(rows.last().unwrap()["sigma"], serde_json::json!([4, 3, 2, 1]));
}

#[test]
fn empty_table() {
    let o = glweight(&["table", "--k-max", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "k\tsigma\tf\tvalue\n");
}

#[test]
fn input_errors_exit_2() {
    for args in [
        &["eval", "--perm", "(1 1)"][..],
        &["eval", "--diagram", "[[1,2],[2,3]]"],
        &["eval"],
        &["eval", "--perm", "(1 2)", "--mn", "1"],
        &["hc", "--mn", "1"],
        &["eval", "--perm", "[2,2]"],
        &["frobnicate"],
    ] {
        let o = glweight(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn oracle_passes_small_cases() {
    let o = glweight(&["oracle", "--k-max", "3", "--mn", "1,1", "--mn", "2,1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("summary: 18 passed, 0 failed, 0 skipped"), "{out}");
}

#[test]
fn oracle_budget_skips() {
    let o = glweight(&["oracle", "--perm", "(1 2 3)", "--mn", "2,2", "--budget", "10"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("SKIPPED"));
}

#[test]
fn hc_gl11() {
    let o = glweight(&["hc", "--mn", "1,1", "--order", "3"]);
    let out = stdout(&o);
    assert!(out.contains("phi(C2) = x1^2 - x2^2 + x1 + x2"), "{out}");
    assert!(out.contains("C3 = 3*C2^2/(4*C1) + C1^3/4 - C1^2/2 + C1/4"), "{out}");
}

#[test]
fn cache_round_trip_and_malformed_lines() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("memo.jsonl");
    let p = path.to_str().unwrap();

    let first = glweight(&["--cache", p, "eval", "--perm", "(1 4 3 2)"]);
    assert_eq!(first.status.code(), Some(0));
    let info = glweight(&["--format", "json", "--cache", p, "cache-info"]);
    let stats: serde_json::Value = serde_json::from_slice(&info.stdout).unwrap();
    let records = stats["records"].as_u64().unwrap();
    assert!(records > 0);
    assert_eq!(stats["malformed_lines"], 0);

    std::fs::OpenOptions::new()
        .append(true)
        .open(&path)
        .unwrap()
        .write_all(b"not json\n")
        .unwrap();
    let again = glweight(&["--cache", p, "eval", "--perm", "(1 4 3 2)"]);
    assert_eq!(again.stdout, first.stdout);
    let info = glweight(&["--format", "json", "--cache", p, "cache-info"]);
    let stats: serde_json::Value = serde_json::from_slice(&info.stdout).unwrap();
    assert_eq!(stats["malformed_lines"], 1);
    assert_eq!(stats["records"].as_u64().unwrap(), records, "warm run appends nothing");
}
