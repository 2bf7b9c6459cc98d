//! End-to-end tests of the command-line surface: output formats and the
//! exit conventions (0 success/holds, 2 refuted/mismatched, 1 usage).

use std::io::Write;
use std::process::{Command, Output};

fn trilogic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trilogic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).unwrap()
}

#[test]
fn eval_prints_the_value() {
    let out = trilogic(&["eval", "--logic", "lp", "--assign", "p=t,q=b", "p & q"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "b\n");

    // The id of LP behaves like the named logic.
    let out = trilogic(&["eval", "--logic", "7418", "--assign", "p=b", "~p"]);
    assert_eq!(stdout(&out), "b\n");

    let out = trilogic(&["eval", "--assign", "p=f,q=b", "p -> q"]);
    assert_eq!(stdout(&out), "t\n");
}

#[test]
fn eval_rejects_uncovered_atoms() {
    let out = trilogic(&["eval", "--logic", "lp", "--assign", "p=t", "p & q"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("'q'"));
}

#[test]
fn entails_exit_codes_and_witness() {
    let out = trilogic(&["entails", "--logic", "lp", "--premises", "p; ~p", "q"]);
    assert_eq!(out.status.code(), Some(2));
    let text = stdout(&out);
    assert!(text.contains("refuted"));
    assert!(text.contains("witness: p=b, q=f"));

    let out = trilogic(&["entails", "--logic", "lp", "--premises", "p", "p"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "holds\n");

    let out = trilogic(&["entails", "--logic", "lp", "p | ~p"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn equiv_exit_codes_and_witness() {
    let out = trilogic(&["equiv", "--logic", "lp", "p & q", "q & p"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "equivalent\n");

    let out = trilogic(&["equiv", "--logic", "lp", "p -> q", "~p | q"]);
    assert_eq!(out.status.code(), Some(2));
    let text = stdout(&out);
    assert!(text.contains("not equivalent"));
    assert!(text.contains("witness: p=b, q=f (lhs=f, rhs=b)"));
}

#[test]
fn check_law_reports_verdicts() {
    let out = trilogic(&["check-law", "--logic", "lp", "--law", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("L1 (A & F == F): holds"));

    let out = trilogic(&["check-law", "--logic", "lp", "--law", "23"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("fails at A=b (lhs=b, rhs=t)"));

    let out = trilogic(&["check-law", "--logic", "lp", "--law", "24"]);
    assert_eq!(out.status.code(), Some(1));

    // Exactly one law source is required.
    let out = trilogic(&["check-law", "--logic", "lp"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn check_law_reads_law_files() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "absorb: A & (A | B) == A").unwrap();
    writeln!(file).unwrap();
    writeln!(file, "collapse: A -> B == ~A | B").unwrap();
    let path = file.path().to_str().unwrap().to_string();

    let out = trilogic(&["check-law", "--logic", "lp", "--law-file", &path]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("absorb (A & (A | B) == A): holds"));
    assert!(text.contains("collapse (A -> B == ~A | B): fails at A=b, B=f"));

    let mut bad = tempfile::NamedTempFile::new().unwrap();
    writeln!(bad, "oops: A &").unwrap();
    let path = bad.path().to_str().unwrap().to_string();
    let out = trilogic(&["check-law", "--logic", "lp", "--law-file", &path]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("line 1"));
}

#[test]
fn enumerate_lists_ids_and_count() {
    let out = trilogic(&["enumerate", "--satisfying", "1-12"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("7418"));
    assert_eq!(lines.next(), Some("count: 1"));
    assert_eq!(lines.next(), None);

    let out = trilogic(&["enumerate", "--satisfying", "1-8,10-12"]);
    let text = stdout(&out);
    assert!(text.ends_with("count: 3\n"));

    let out = trilogic(&["enumerate", "--satisfying", "1-23"]);
    assert_eq!(stdout(&out), "count: 0\n");

    let out = trilogic(&["enumerate", "--satisfying", "abc"]);
    assert_eq!(out.status.code(), Some(1));

    let out = trilogic(&["enumerate", "--satisfying", "24"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn catalog_export_writes_all_records() {
    let dir = tempfile::tempdir().unwrap();

    let jsonl_path = dir.path().join("catalog.jsonl");
    let out = Command::new(env!("CARGO_BIN_EXE_trilogic"))
        .args(["catalog", "export", "--format", "jsonl", "--out"])
        .arg(&jsonl_path)
        .env("TRILOGIC_THREADS", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("wrote 8192 records"));
    let text = std::fs::read_to_string(&jsonl_path).unwrap();
    assert_eq!(text.lines().count(), 8192);
    let first: serde_json::Value = serde_json::from_str(text.lines().next().unwrap()).unwrap();
    assert_eq!(first["id"], 0);
    for field in ["neg", "and", "or", "imp", "profile"] {
        assert!(first[field].is_string(), "field {field}");
    }
    let records = trilogic::catalog::import_jsonl(text.as_bytes()).unwrap();
    assert_eq!(records.len(), 8192);

    let csv_path = dir.path().join("catalog.csv");
    let out = Command::new(env!("CARGO_BIN_EXE_trilogic"))
        .args(["catalog", "export", "--format", "csv", "--out"])
        .arg(&csv_path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&csv_path).unwrap();
    assert_eq!(text.lines().count(), 8193); // header + records
    assert!(text.starts_with("id,neg,and,or,imp,profile"));
    let records = trilogic::catalog::import_csv(text.as_bytes()).unwrap();
    assert_eq!(records.len(), 8192);
}

#[test]
fn replicate_exit_matches_the_report() {
    let out = trilogic(&["replicate", "--json"]);
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let claims = report["claims"].as_array().unwrap();
    assert_eq!(claims.len(), 18);
    let all_matched = claims.iter().all(|c| c["matched"].as_bool().unwrap());
    let expected_code = if all_matched { 0 } else { 2 };
    assert_eq!(out.status.code(), Some(expected_code));

    let out = trilogic(&["replicate"]);
    assert_eq!(out.status.code(), Some(expected_code));
    let text = stdout(&out);
    for claim in claims {
        let label = claim["label"].as_str().unwrap();
        assert!(text.contains(label), "missing claim line for '{label}'");
    }
    assert!(text.contains("claims matched") || text.contains("claims mismatched"));
}

#[test]
fn tt_renders_tables() {
    let out = trilogic(&["tt", "--logic", "lp", "p | ~p"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(2).collect();
    assert_eq!(rows, ["t  | t *", "f  | t *", "b  | b *"]);

    let out = trilogic(&["tt", "--logic", "lp", "a & b & c & d & e"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("limited to 4"));
}

#[test]
fn usage_errors_exit_one_with_diagnostics() {
    let out = trilogic(&["nonsense"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!stderr(&out).is_empty());

    let out = trilogic(&["eval", "--logic", "8192", "p"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("out of range"));

    let out = trilogic(&["eval", "--logic", "lp", "p &"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("syntax error"));

    let out = trilogic(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("Usage"));
}
