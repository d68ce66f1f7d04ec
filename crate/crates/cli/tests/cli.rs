use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn run(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ordcert"))
        .args(args)
        .env("ORDCERT_CACHE_DIR", cache)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn supersingular_output_and_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(dir.path(), &["supersingular", "--p", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "count=1, poly=X\n");
    let out = run(dir.path(), &["supersingular", "--p", "11"]);
    assert_eq!(stdout(&out), "count=2, poly=X^2+10X\n");
    assert_eq!(run(dir.path(), &["supersingular", "--p", "4"]).status.code(), Some(1));
    assert_eq!(run(dir.path(), &["supersingular", "--p", "101"]).status.code(), Some(3));
    assert_eq!(run(dir.path(), &["supersingular", "--p", "3", "--bogus"]).status.code(), Some(1));
    assert_eq!(run(dir.path(), &["frobnicate"]).status.code(), Some(1));
}

#[test]
fn cache_is_written_and_corruption_is_recomputed() {
    let dir = tempfile::tempdir().unwrap();
    let first = stdout(&run(dir.path(), &["supersingular", "--p", "13"]));
    let record = dir.path().join("supersingular-13.txt");
    assert!(fs::read_to_string(&record).unwrap().starts_with("ordcert-supersingular-set v1"));
    assert_eq!(stdout(&run(dir.path(), &["supersingular", "--p", "13"])), first);

    fs::write(&record, "ordcert-supersingular-set v1\np=13\ndegree=1\ncoefficients=0 1\nsha256=00\n").unwrap();
    assert_eq!(stdout(&run(dir.path(), &["supersingular", "--p", "13"])), first);
    fs::remove_file(&record).unwrap();
    assert_eq!(stdout(&run(dir.path(), &["supersingular", "--p", "13"])), first);

    let other = tempfile::tempdir().unwrap();
    let out = run(dir.path(), &["supersingular", "--p", "7", "--cache", other.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(other.path().join("supersingular-7.txt").exists());
}

#[test]
fn certify_frey_triples() {
    let dir = tempfile::tempdir().unwrap();
    for k in ["1,2,3", "1,2,4"] {
        let out = run(dir.path(), &["certify", "--family", "frey", "--k", k, "--p", "3", "--rmin", "7"]);
        assert_eq!(out.status.code(), Some(0));
        let text = stdout(&out);
        let cert: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(cert["threshold"], 7);
        assert_eq!(cert["d"], 6);
        assert_eq!(cert["bound_kind"], "refined");
        let rs: Vec<_> = cert["exceptional"].as_array().unwrap().iter().map(|e| e["r"].as_u64().unwrap()).collect();
        assert_eq!(rs, vec![7, 11, 13]);
        // Fresh cache, same bytes.
        let again = tempfile::tempdir().unwrap();
        let second = run(again.path(), &["certify", "--family", "frey", "--k", k, "--p", "3", "--rmin", "7"]);
        assert_eq!(stdout(&second), text);
    }
    let out = run(dir.path(), &["certify", "--family", "frey", "--k", "1,2,3", "--p", "5"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("good-reduction"));
    assert_eq!(run(dir.path(), &["certify", "--k", "1,2,3", "--rmin", "5"]).status.code(), Some(1));
    assert_eq!(run(dir.path(), &["certify", "--k", "1,1,2"]).status.code(), Some(1));
    assert_eq!(run(dir.path(), &["certify", "--k", "1,2,3", "--bound", "loose"]).status.code(), Some(1));
}

#[test]
fn certify_text_and_eq2() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(dir.path(), &["certify", "--k", "1,2,3", "--bound", "eq2", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("bound=eq2 d=10"));
    assert!(text.contains("r=1093 place 0 degree=7"));
    assert!(text.ends_with("threshold=7\n"));
}

#[test]
fn norms() {
    let dir = tempfile::tempdir().unwrap();
    for (r, want) in [("7", "norm=0 "), ("11", "norm=121 "), ("13", "norm=169 ")] {
        let out = run(dir.path(), &["norm", "--r", r, "--k", "1,2,3", "--ab", "1,1"]);
        assert_eq!(out.status.code(), Some(0));
        assert!(stdout(&out).starts_with(want), "{}", stdout(&out));
    }
    let out = run(dir.path(), &["norm", "--r", "11", "--k", "1,2,3", "--ab", "1,1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["norm"], "121");
    assert_eq!(run(dir.path(), &["norm", "--r", "9", "--k", "1,2,3", "--ab", "1,1"]).status.code(), Some(1));
    assert_eq!(run(dir.path(), &["norm", "--r", "11", "--k", "1,2,3", "--ab", "0,0"]).status.code(), Some(1));
}

#[test]
fn check_and_trace() {
    let dir = tempfile::tempdir().unwrap();
    let out = stdout(&run(dir.path(), &["check", "--r", "11", "--family", "frey", "--k", "1,2,3"]));
    assert_eq!(out.matches("ordinary").count(), 3);
    assert!(!out.contains("fails"));
    let out = stdout(&run(dir.path(), &["check", "--r", "7", "--family", "frey", "--k", "1,2,3"]));
    assert!(out.contains("(1,1) fails"));
    let out = stdout(&run(dir.path(), &["check", "--r", "7", "--k", "1,2,3", "--ab", "2,2", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["places"][0]["class_statuses"][0]["class"], "(1,1)");
    assert_eq!(v["places"][0]["class_statuses"][0]["status"], "fails");

    let out = run(dir.path(), &["trace", "--r", "13", "--family", "frey", "--k", "1,2,3", "--ab", "1,0"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let traces: Vec<i64> = text
        .lines()
        .map(|l| l.split("trace=").nth(1).unwrap().split(' ').next().unwrap().parse().unwrap())
        .collect();
    assert_eq!(traces.len(), 2);
    assert!(traces.iter().all(|a| a.rem_euclid(3) != 0 && a * a <= 4 * 27));
    let out = run(dir.path(), &["trace", "--r", "11", "--k", "1,2,3", "--ab", "1,0", "--cap", "100"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn frey_dump() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(dir.path(), &["frey", "--k", "1,2,3", "--ab", "1,1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["h"]["coefficients"], serde_json::json!([4, 8, -5, -6, 1, 1]));
}
