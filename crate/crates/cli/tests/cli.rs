use std::path::Path;
use std::process::{Command, Output};

fn lsa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lsa")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn emit(dir: &Path, name: &str, params: &[&str]) -> String {
    let path = dir.join(format!("{name}.json"));
    let p = path.to_str().unwrap().to_string();
    let mut args = vec!["catalog", name, "--emit", &p];
    for kv in params {
        args.push("--param");
        args.push(kv);
    }
    assert_eq!(lsa(&args).status.code(), Some(0));
    p
}

#[test]
fn check_auslander_file() {
    let dir = tempfile::tempdir().unwrap();
    let f = emit(dir.path(), "auslander3", &[]);
    let o = lsa(&["check", &f]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("left-symmetric: yes, complete: yes"));
}

#[test]
fn check_printed_dim4_table_fails_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let f = emit(dir.path(), "simple4_printed", &[]);
    let o = lsa(&["check", &f]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("left-symmetric: no"));
    assert!(out.contains("witness: (e-1, e2, e-1)"));
}

#[test]
fn graph_dot_has_four_vertices() {
    let dir = tempfile::tempdir().unwrap();
    let f = emit(dir.path(), "simple4", &[]);
    let dot = dir.path().join("g.dot");
    let o = lsa(&["graph", "--kind", "l", "--dot", dot.to_str().unwrap(), &f]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&dot).unwrap();
    let vertices = text.lines().filter(|l| l.trim_end().ends_with("\";") && !l.contains("->")).count();
    assert_eq!(vertices, 4);
    for e in ["\"-1\" -> \"0\"", "\"1\" -> \"0\"", "\"-1\" -> \"1\"", "\"2\" -> \"1\""] {
        assert!(text.contains(e), "{e}");
    }
}

#[test]
fn catalog_round_trip_is_byte_exact() {
    let dir = tempfile::tempdir().unwrap();
    let f = emit(dir.path(), "family5_mod", &["alpha=1", "beta=1/2", "gamma=3/2"]);
    let first = std::fs::read_to_string(&f).unwrap();
    assert_eq!(lsa(&["check", &f]).status.code(), Some(0));
    let printed = lsa(&["catalog", "family5_mod", "--param", "alpha=1", "--param", "beta=1/2", "--param", "gamma=3/2"]);
    assert_eq!(stdout(&printed), first);
}

#[test]
fn exit_codes() {
    assert_eq!(lsa(&["check", "no-such-input"]).status.code(), Some(2));
    assert_eq!(lsa(&["check", "auslander3", "--frobnicate"]).status.code(), Some(2));
    assert_eq!(lsa(&["catalog", "family5_mod", "--param", "alpha=1", "--param", "beta=1", "--param", "gamma=0"]).status.code(), Some(2));
    assert_eq!(lsa(&["classify", "--dim", "7"]).status.code(), Some(2));
    assert_eq!(lsa(&["simple", "auslander_squared"]).status.code(), Some(1));
    assert_eq!(lsa(&["check", "split3"]).status.code(), Some(0));
    assert_eq!(lsa(&["graph", "split3"]).status.code(), Some(1));
    assert_eq!(lsa(&["check", "idempotent1"]).status.code(), Some(1));
}

#[test]
fn malformed_file_is_a_format_error() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("bad.json");
    std::fs::write(&f, r#"{"name": "x", "dim": 2, "basis": ["a"]}"#).unwrap();
    assert_eq!(lsa(&["check", f.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn decompose_worked_seed() {
    let o = lsa(&["decompose", "auslander3", "--seed", "0,1,1", "--verbose"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("initial cartan: span(e0 + e1)"));
    assert!(out.contains("canonical cartan: span(e0)"));
    assert!(out.contains("transport word: [e1]"));
}

#[test]
fn numeric_mode_agrees() {
    let o = lsa(&["check", "family5", "--param", "lambda=2+i", "--numeric", "--eps", "1e-9"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("left-symmetric: yes, complete: yes"));
    assert_eq!(lsa(&["check", "auslander3", "--eps", "1e-9"]).status.code(), Some(2));
}

#[test]
fn classify_json_is_deterministic() {
    let a = lsa(&["classify", "--dim", "4", "--json"]);
    let b = lsa(&["classify", "--dim", "4", "--json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["classes"][0]["name"], "simple4");
}

#[test]
fn classify_writes_dot_files() {
    let dir = tempfile::tempdir().unwrap();
    let o = lsa(&["classify", "--dim", "3", "--dot", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("class auslander3 (verified)"));
    assert!(dir.path().join("dim3-1.dot").exists());
}
