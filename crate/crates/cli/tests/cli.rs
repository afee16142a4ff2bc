use std::process::{Command, Output};

use serde_json::{json, Value};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qverify")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn qbin_formats() {
    let out = run(&["qbin", "4", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1+q+2q^2+q^3+q^4\n");
    assert_eq!(stdout(&run(&["qbin", "4", "2", "--format", "coeffs"])), "1 1 2 1 1\n");
    let v: Value = serde_json::from_str(&stdout(&run(&["qbin", "4", "2", "--format", "json"]))).unwrap();
    assert_eq!(v, json!({"var": "q", "coeffs": ["1", "1", "2", "1", "1"]}));
    let v: Value = serde_json::from_str(&stdout(&run(&["qbin", "3", "-1", "--format", "json"]))).unwrap();
    assert_eq!(v, json!({"var": "q", "coeffs": []}));
}

#[test]
fn verify_reports() {
    let out = run(&["verify", "eq1", "--n-max", "10"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "eq1: passed (66 parameter points)\n");

    let out = run(&["verify", "eq15", "--n-max", "6", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v, json!({"identity": "eq15", "checked": 28, "passed": true, "counterexample": null}));
}

#[test]
fn counterexample_exit_code() {
    let out = run(&["verify", "eq11", "--n-max", "6", "--perturb", "-1:2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).starts_with("eq11: FAILED at n="));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["verify", "eq99", "--n-max", "3"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "eq1"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "qbin(n"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "qbin(n, 1)"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "q", "--bind", "n"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn oversized_evaluation_exits_3() {
    assert_eq!(run(&["eval", "q^99999999"]).status.code(), Some(3));
}

#[test]
fn eval_with_bindings() {
    let out = run(&[
        "eval",
        "sum(j, -k, k, alt(j)*q^pent(j)*qbin(n, k-j)*qbin(n, k+j))",
        "--bind",
        "n=2",
        "--bind",
        "k=1",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1+q\n");
}

#[test]
fn series_and_oracles() {
    assert_eq!(stdout(&run(&["series", "rr1", "--order", "6"])), "1 1 1 1 2 2 3\n");
    assert_eq!(stdout(&run(&["series", "rr2", "--order", "6", "--side", "product"])), "1 0 1 1 1 1 2\n");
    assert_eq!(stdout(&run(&["series", "euler", "--order", "7"])), "1 -1 -1 0 0 1 0 1\n");
    assert_eq!(stdout(&run(&["oracle", "rr1", "--order", "6"])), "1 1 1 1 2 2 3\n");
    assert_eq!(stdout(&run(&["oracle", "rr2", "--order", "6", "--residues"])), "1 0 1 1 1 1 2\n");
    assert_eq!(stdout(&run(&["oracle", "box", "--n", "4", "--k", "2"])), "1+q+2q^2+q^3+q^4\n");
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "all", "--n-max", "7", "--format", "json", "--parallel"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    let seq = run(&args[..6]);
    assert_eq!(a.stdout, seq.stdout);
}
