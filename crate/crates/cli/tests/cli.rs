use std::path::PathBuf;
use std::process::{Command, Output};

use pgroup_core::io::Document;

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn pgroup(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pgroup")).args(args).output().unwrap()
}

fn group(name: &str) -> String {
    fixtures().join("groups").join(format!("{name}.group")).to_string_lossy().into_owned()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn analyze_q8() {
    let out = pgroup(&["analyze", &group("q8")]);
    assert!(out.status.success());
    let doc = Document::parse(&stdout(&out)).unwrap();
    assert_eq!(doc.get("decision", "has-property-ii"), Some("true"));
    assert_eq!(doc.get("decision", "imprimitive-irreps"), Some("5"));
    assert_eq!(doc.get("run", "provenance"), Some("group"));
    assert_eq!(doc.get("group", "cross-validation"), Some("ok"));
}

#[test]
fn trivial_group_exits_with_input_error() {
    let path = fixtures().join("degenerate/trivial.group");
    let out = pgroup(&["analyze", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("trivial group"));
}

#[test]
fn syntax_errors_report_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.group");
    std::fs::write(&path, "format presentation\nprime 2\ngenerators x\nrelation x^^2\n").unwrap();
    let out = pgroup(&["analyze", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 4, column"));
    let out = pgroup(&["analyze", dir.path().join("missing.group").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn table_only_path_matches_analyze() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["q8", "q16", "d8", "heisenberg27", "z4xz2"] {
        let table = dir.path().join(format!("{name}.table"));
        let out = pgroup(&["chartab", &group(name), "--out", table.to_str().unwrap()]);
        assert!(out.status.success(), "{name}");
        let analyzed = Document::parse(&stdout(&pgroup(&["analyze", &group(name)]))).unwrap();
        let out = pgroup(&["check-table", table.to_str().unwrap()]);
        assert!(out.status.success(), "{name}");
        let checked = Document::parse(&stdout(&out)).unwrap();
        assert_eq!(checked.get("run", "provenance"), Some("table-only"));
        assert_eq!(checked.section("decision"), analyzed.section("decision"), "{name}");
    }
}

#[test]
fn check_table_rejects_invalid_tables() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.table");
    std::fs::write(&path, "format character-table\norder 2\nprime 2\nclass 1 1 1 2:1\nclass 2 1 2 2:1\nrow 1 1, 1\nrow 2 1, 1\n").unwrap();
    let out = pgroup(&["check-table", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_cover_q8() {
    let out = pgroup(&["verify-cover", &group("q8")]);
    assert!(out.status.success());
    let doc = Document::parse(&stdout(&out)).unwrap();
    assert_eq!(doc.get("cover", "h1-dimension"), Some("9"));
    assert_eq!(doc.get("cover", "gaschutz"), Some("ok"));
}

#[test]
fn approx_adds_floats() {
    let out = pgroup(&["analyze", &group("q8"), "--approx"]);
    let text = stdout(&out);
    assert!(text.lines().filter(|l| l.starts_with("restriction-sum")).all(|l| l.contains(" ~")));
}

#[test]
fn census_is_independent_of_worker_count() {
    let dir = fixtures().join("groups");
    let one = pgroup(&["census", dir.to_str().unwrap(), "--jobs", "1"]);
    let four = pgroup(&["census", dir.to_str().unwrap(), "--jobs", "4"]);
    assert!(one.status.success());
    assert_eq!(stdout(&one), stdout(&four));
    let doc = Document::parse(&stdout(&one)).unwrap();
    let flagged: Vec<&str> = doc.section("flagged").unwrap().get_all("group").collect();
    let names: Vec<&str> = flagged.iter().map(|l| l.split_whitespace().next().unwrap()).collect();
    assert_eq!(names, vec!["q8", "q16", "g128"]);
}

#[test]
fn census_collects_failures() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::copy(group("q8"), dir.path().join("q8.group")).unwrap();
    std::fs::copy(fixtures().join("degenerate/trivial.group"), dir.path().join("trivial.group")).unwrap();
    let out_path = dir.path().join("census.txt");
    let out = pgroup(&["census", dir.path().to_str().unwrap(), "--out", out_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let doc = Document::parse(&std::fs::read_to_string(out_path).unwrap()).unwrap();
    assert_eq!(doc.get("census", "analyzed"), Some("1"));
    assert_eq!(doc.get("census", "failed"), Some("1"));
    assert!(doc.get("failures", "failure").unwrap().starts_with("trivial.group exit 1"));
}

#[test]
fn max_cosets_is_passed_through() {
    let out = pgroup(&["analyze", &group("g128"), "--max-cosets", "50"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("coset table overflow"));
}
