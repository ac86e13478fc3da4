use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn corpus(name: &str) -> String {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus");
    root.join(format!("{name}.alg")).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nabelian"))
        .args(args)
        .env_remove("NABELIAN_CAP")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json report")
}

#[test]
fn detect_corpus_verdicts() {
    for (name, verdict) in [
        ("semisimple3", "AllN"),
        ("auslander_kx2", "ExactlyN(1)"),
        ("a2_hereditary", "NotNAbelianUpTo(11)"),
        ("nakayama_x2", "NotNAbelianUpTo(11)"),
        ("aus2_a2", "ExactlyN(2)"),
    ] {
        let out = run(&["detect", &corpus(name)]);
        assert_eq!(out.status.code(), Some(0), "{name}");
        assert_eq!(json(&out)["verdict"]["result"], verdict, "{name}");
    }
    let r = json(&run(&["detect", &corpus("auslander_kx2")]));
    assert_eq!(r["verdict"]["gldim"], "2");
    assert_eq!(r["verdict"]["domdim"], "2");
}

#[test]
fn check_a2_fails_with_witness() {
    let out = run(&["check", &corpus("a2_hereditary"), "-n", "1", "--samples", "20"]);
    assert_eq!(out.status.code(), Some(1));
    let r = json(&out);
    let tf = r["checks"].as_array().unwrap().iter().find(|c| c["name"] == "pdim_one_torsion_free").unwrap();
    assert_eq!(tf["witness"], "S(1)");
}

#[test]
fn selftest_is_deterministic() {
    let args = ["selftest", &corpus("auslander_kx2"), "--seed", "42", "--samples", "50"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(!String::from_utf8_lossy(&a.stdout).contains("timings_ms"));
}

#[test]
fn input_errors_exit_2() {
    let dir = std::env::temp_dir().join("nabelian-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.alg");
    std::fs::write(&bad, "field Q\nvertex 1\nbogus\n").unwrap();
    let out = run(&["validate", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
    assert_eq!(run(&["validate", "/no/such/file.alg"]).status.code(), Some(2));
    assert_eq!(run(&["transpose", &corpus("a2_hereditary"), "--module", "X"]).status.code(), Some(2));
    let out = run(&["ncokernel", &corpus("auslander_kx2"), "--map", "P(1)->P(2): [[a]]", "-n", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_nabelian"))
        .args(["detect", &corpus("nakayama_x2")])
        .env("NABELIAN_CAP", "3")
        .output()
        .unwrap();
    assert_eq!(json(&out)["verdict"]["result"], "NotNAbelianUpTo(3)");
    let out = Command::new(env!("CARGO_BIN_EXE_nabelian"))
        .args(["detect", &corpus("nakayama_x2"), "--cap", "5"])
        .env("NABELIAN_CAP", "3")
        .output()
        .unwrap();
    assert_eq!(json(&out)["verdict"]["cap"], 5);
}

#[test]
fn corpus_names_resolve_without_a_path() {
    let out = run(&["invariants", "aus2_a2"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["gldim"], "3");
    assert_eq!(r["gldim_op"], "3");
}

#[test]
fn resolve_transpose_ncokernel() {
    let r = json(&run(&["resolve", &corpus("aus2_a2"), "--module", "S(1)", "--length", "5"]));
    assert_eq!(r["pdim"], 3);
    let r = json(&run(&["transpose", &corpus("a2_hereditary"), "--module", "S1"]));
    assert_eq!(r["presentation"], "P(2)->P(1): [[a]]");
    let r = json(&run(&["ncokernel", &corpus("auslander_kx2"), "--map", "P(1)->P(2): [[b]]", "-n", "1"]));
    assert_eq!(r["maps"][0], "P(2)->P(1): [[a]]");
}
