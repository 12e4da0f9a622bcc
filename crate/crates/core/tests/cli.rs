//! The `gstone` binary, driven through temporary files.

use serde_json::Value;
use std::path::Path;
use std::process::{Command, Output};

fn gstone(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gstone"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn example_then_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let out = gstone(dir.path(), &["example", "igr", "--points", "a:0", "b:1", "--out", "s.json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&dir.path().join("s.json"));
    assert_eq!(doc["elements"].as_array().unwrap().len(), 6);
    assert_eq!(doc["deg"]["a->b"], "1");

    let out = gstone(dir.path(), &["roundtrip", "--semigroup", "s.json", "--out", "r.json", "--max-slices", "500"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report = json(&dir.path().join("r.json"));
    assert_eq!(report["schema_version"], 1);
    assert_eq!(report["max_slices"], 500);
    assert_eq!(report["result"]["iso"], true);
    assert_eq!(report["result"]["direction"], "sg→gp→sg");
    assert!(String::from_utf8_lossy(&out.stdout).contains("iso = true"));
}

#[test]
fn reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    gstone(dir.path(), &["example", "pair-groupoid", "--points", "a:0", "b:0", "c:1", "--out", "g.json"]);
    for out in ["one.json", "two.json"] {
        let o = gstone(dir.path(), &["lemma-suite", "--seed", "5", "--out", out]);
        assert_eq!(o.status.code(), Some(0));
    }
    let read = |f: &str| std::fs::read(dir.path().join(f)).unwrap();
    assert_eq!(read("one.json"), read("two.json"));
}

#[test]
fn ring_check_over_both_fields() {
    let dir = tempfile::tempdir().unwrap();
    gstone(dir.path(), &["example", "pair-groupoid", "--points", "a:0", "b:1", "--out", "g.json"]);
    for (field, label) in [("Q", "Q"), ("F_2", "F_2")] {
        let out = gstone(dir.path(), &["ring-check", "--groupoid", "g.json", "--field", field, "--out", "r.json"]);
        assert_eq!(out.status.code(), Some(0));
        let r = json(&dir.path().join("r.json"));
        assert_eq!(r["result"]["field"], label);
        assert_eq!(r["result"]["dim_graded"], 4);
        assert_eq!(r["result"]["dim_nongraded"], 4);
        assert_eq!(r["result"]["iso"], true);
    }
    let out = gstone(dir.path(), &["ring-check", "--groupoid", "g.json", "--field", "F_4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dualize_and_validate() {
    let dir = tempfile::tempdir().unwrap();
    gstone(dir.path(), &["example", "graph-is", "--vertices", "v", "w", "--edges", "e:v:w", "--out", "gis.json"]);
    gstone(dir.path(), &["example", "completion", "--semigroup", "gis.json", "--out", "d.json"]);
    let out = gstone(dir.path(), &["dualize", "--semigroup", "d.json", "--out", "g.json"]);
    assert_eq!(out.status.code(), Some(0));
    let out = gstone(dir.path(), &["validate-groupoid", "--groupoid", "g.json"]);
    assert_eq!(out.status.code(), Some(0));
    let out = gstone(dir.path(), &["dualize", "--groupoid", "g.json", "--out", "s.json"]);
    assert_eq!(out.status.code(), Some(0));
    let out = gstone(dir.path(), &["validate-semigroup", "--semigroup", "s.json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&dir.path().join("s.json"))["elements"].as_array().unwrap().len(), 6);

    let out = gstone(dir.path(), &["export-dot", "--groupoid", "g.json", "--out", "g.dot"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(std::fs::read_to_string(dir.path().join("g.dot")).unwrap().starts_with("digraph"));
}

#[test]
fn failed_checks_exit_with_one() {
    let dir = tempfile::tempdir().unwrap();
    gstone(dir.path(), &["example", "igr", "--points", "a:0", "b:1", "--out", "s.json"]);
    let mut doc = json(&dir.path().join("s.json"));
    doc["mul"][1][1] = Value::from("0");
    std::fs::write(dir.path().join("bad.json"), doc.to_string()).unwrap();
    let out = gstone(dir.path(), &["validate-semigroup", "--semigroup", "bad.json", "--out", "v.json"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&dir.path().join("v.json"))["passed"], false);

    gstone(dir.path(), &["example", "graph-is", "--vertices", "u", "v", "w", "--edges", "e:u:v", "f:v:w", "--out", "gis.json"]);
    let out = gstone(dir.path(), &["roundtrip", "--semigroup", "gis.json"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn input_and_resource_errors() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("junk.json"), "{ not json").unwrap();
    let code = |args: &[&str]| gstone(dir.path(), args).status.code();
    assert_eq!(code(&["validate-semigroup", "--semigroup", "junk.json"]), Some(2));
    assert_eq!(code(&["roundtrip", "--semigroup", "missing.json"]), Some(2));
    assert_eq!(code(&["roundtrip", "--bogus"]), Some(2));
    assert_eq!(code(&["example", "graph-is", "--vertices", "v", "--edges", "e:v:v"]), Some(2));
    assert_eq!(code(&["example", "igr", "--points", "a"]), Some(2));

    gstone(dir.path(), &["example", "pair-groupoid", "--points", "a:0", "b:0", "c:0", "--out", "g.json"]);
    assert_eq!(code(&["roundtrip", "--groupoid", "g.json", "--max-slices", "10"]), Some(3));
    assert_eq!(code(&["roundtrip", "--groupoid", "g.json", "--max-elements", "4"]), Some(3));
    assert_eq!(code(&["roundtrip", "--groupoid", "g.json"]), Some(0));
}
