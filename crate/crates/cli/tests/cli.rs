use std::fs;
use std::process::Command;

use tempfile::TempDir;

fn pomset(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_pomset")).args(args).output().expect("binary runs");
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn net_file(dir: &TempDir, name: &str, json: &str) -> String {
    let p = dir.path().join(name);
    fs::write(&p, json).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn check_reports_circuit() {
    let dir = TempDir::new().unwrap();
    let bad = net_file(&dir, "bad.json", r#"{"axioms":[[0,1],[2,3]],"conclusion":"(a#0 * b#2) | (a^#1 * b^#3)"}"#);
    let (code, out) = pomset(&["check", &bad]);
    assert_eq!(code, 1);
    assert_eq!(out.trim(), "incorrect: a#0 -B- a^#1 -R- b^#3 -B- b#2 -R- a#0");
}

#[test]
fn check_ax3_semantic() {
    let dir = TempDir::new().unwrap();
    let ax3 = net_file(
        &dir,
        "ax3.json",
        r#"{"axioms":[[0,1],[2,3],[4,5]],"conclusion":"(a#0 | a^#1) * (b#2 | b^#3) * (c#4 | c^#5)"}"#,
    );
    let (code, out) = pomset(&["check", "--semantic", &ax3]);
    assert_eq!(code, 0);
    assert_eq!(out, "correct\nsemantic: clique\n");
}

#[test]
fn include_reflexive_is_empty() {
    let (code, out) = pomset(&["include", "a < (b | c)", "a < (b | c)"]);
    assert_eq!(code, 0);
    assert_eq!(out, "0 steps\n");
    let (code, out) = pomset(&["include", "a | b", "a < b"]);
    assert_eq!(code, 1);
    assert_eq!(out, "NOT-INCLUDED\n");
}

#[test]
fn derive_and_input_errors() {
    let (code, out) = pomset(&["derive", "--system", "gmll", "(a#0 * b#2) | a^#1 | b^#3"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("ts_pa3"));
    let (code, _) = pomset(&["derive", "--system", "gmll", "a * ("]);
    assert_eq!(code, 2);
    let (code, _) = pomset(&["search-counterexample", "--axioms", "4"]);
    assert_eq!(code, 2);
    let (code, _) = pomset(&["frobnicate"]);
    assert_eq!(code, 2);
}

#[test]
fn normalize_and_sequentialize() {
    let dir = TempDir::new().unwrap();
    let cut = net_file(&dir, "cut.json", r#"{"axioms":[[0,1],[2,3]],"conclusion":"a#0 | (a^#1 * a#2) | a^#3"}"#);
    let (code, out) = pomset(&["normalize", &cut]);
    assert_eq!(code, 0);
    assert_eq!(out, "{\"axioms\":[[0,3]],\"conclusion\":\"a#0 | a^#3\"}\nloops: 0\n");
    let (code, out) = pomset(&["sequentialize", &cut]);
    assert_eq!(code, 0);
    let proof = net_file(&dir, "proof.json", &out);
    let (code, out) = pomset(&["prove-check", "--calculus", "dicograph", &proof]);
    assert_eq!(code, 0, "{out}");
    let (code, _) = pomset(&["prove-check", "--calculus", "sp", &proof]);
    assert_eq!(code, 1);
}

#[test]
fn parse_sentences() {
    let (code, out) = pomset(&["parse", "--target", "S", "Pierre", "entend", "chanter", "Marie"]);
    assert_eq!(code, 0);
    assert_eq!(out, "Pierre < entend < (Marie | chanter)\n");
    let (code, out) = pomset(&["parse", "ne", "regarde", "pas"]);
    assert_eq!(code, 0);
    assert_eq!(out, "ne < regarde < pas\n");
    let (code, out) = pomset(&["parse", "pas", "regarde", "ne"]);
    assert_eq!(code, 1);
    assert_eq!(out, "NO-PARSE\n");
    let (code, _) = pomset(&["parse", "Jean"]);
    assert_eq!(code, 2);
}

#[test]
fn counterexample_and_calibration() {
    let (code, out) = pomset(&["search-counterexample", "--axioms", "6"]);
    assert_eq!(code, 0);
    assert!(out.contains("(a#0 * (c#4 < b^#3))"));
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("space.json");
    let (code, out) = pomset(&["calibrate-space", "--max-axioms", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(fs::read_to_string(&path).unwrap(), out);
}

#[test]
fn output_is_deterministic() {
    let a = pomset(&["search-counterexample", "--axioms", "6"]);
    let b = pomset(&["search-counterexample", "--axioms", "6"]);
    assert_eq!(a, b);
}
