use std::process::{Command, Output};

use serde_json::Value;

fn kfermion(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kfermion"))
        .args(args)
        .env_remove("KFERMION_MAX_K")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn normal_order_same_mode() {
    let o = kfermion(&["normal-order", "--k", "3", "xibar xi xibar xi"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "xi^2 xibar^2\n");
    let o = kfermion(&["normal-order", "--k", "5", "xibar xi"]);
    assert_eq!(stdout(&o), "q xi xibar\n");
}

#[test]
fn normal_order_oscillator() {
    let o = kfermion(&["normal-order", "--k", "5", "a ad"]);
    assert_eq!(stdout(&o), "qN^4 + q ad a\n");
    let o = kfermion(&["normal-order", "--k", "3", "a xi"]);
    assert_eq!(stdout(&o), "q xi a\n");
}

#[test]
fn integrate_top_monomial() {
    let o = kfermion(&["integrate", "--k", "2", "xi xibar"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "1\n");
    let o = kfermion(&["integrate", "--k", "3", "xi"]);
    assert_eq!(stdout(&o), "0\n");
    let o = kfermion(&["integrate", "--k", "3", "dxi xi^2"]);
    assert_eq!(stdout(&o), "1\n");
}

#[test]
fn repr_example() {
    let o = kfermion(&["repr", "--k", "3", "--state", "0,0,1", "--convention", "M"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o), "-q^2 rad(2) xibar^2\n");
    let o = kfermion(&["repr", "--k", "3", "--state", "1,0,0", "--convention", "D"]);
    assert_eq!(stdout(&o), "1\n");
    let o = kfermion(&["repr", "--k", "3", "--state", "0,1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn eval_numeric_and_latex() {
    let o = kfermion(&["eval", "--k", "4", "--numeric", "q"]);
    assert_eq!(stdout(&o), "1i\n");
    let o = kfermion(&["eval", "--k", "3", "--format", "latex", "q^2 xi xibar"]);
    assert_eq!(stdout(&o), "q^{2} \\xi \\bar\\xi\n");
    let o = kfermion(&["eval", "--k", "3", "--format", "json", "br(2)"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["result"], "-1");
    let o = kfermion(&["eval", "--k", "2", "dxi xi"]);
    assert_eq!(stdout(&o), "1\n");
}

#[test]
fn exit_codes() {
    let o = kfermion(&["verify", "--k", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("at least 2"));
    let o = kfermion(&["verify", "--k", "13"]);
    assert_eq!(o.status.code(), Some(2));
    let o = kfermion(&["eval", "--k", "3", "xi +"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("1:5"));
    let o = kfermion(&["verify", "--k", "3", "--suite", "nope"]);
    assert_eq!(o.status.code(), Some(2));
    let o = kfermion(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn max_k_guard_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_kfermion"))
        .args(["eval", "--k", "13", "q"])
        .env("KFERMION_MAX_K", "13")
        .output()
        .unwrap();
    assert!(o.status.success(), "{}", stderr(&o));
    let o = Command::new(env!("CARGO_BIN_EXE_kfermion"))
        .args(["eval", "--k", "5", "q"])
        .env("KFERMION_MAX_K", "4")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn degenerate_message_names_the_vanishing_bracket() {
    let o = kfermion(&["repr", "--k", "4", "--state", "1,0,0,0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("[k/2]_q"), "{}", stderr(&o));
}

#[test]
fn verify_odd_and_degenerate_k() {
    let o = kfermion(&["verify", "--k", "3..7", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let reports: Vec<Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(reports.len(), 5);
    for r in &reports {
        let k = r["k"].as_u64().unwrap();
        assert_eq!(r["degenerate"], k % 2 == 0);
        for s in r["suites"].as_array().unwrap() {
            let skipped = s["identities"]
                .as_array()
                .unwrap()
                .iter()
                .filter(|i| i["status"] == "skipped-degenerate")
                .count();
            let name = s["name"].as_str().unwrap();
            if k % 2 == 0 && (name == "coherent" || name == "resolution") {
                assert!(skipped > 0, "k={k} {name}");
            }
            if k % 2 == 1 {
                assert_eq!(skipped, 0);
            }
        }
    }
}

#[test]
fn verify_k2_reports_the_bm_gap() {
    let o = kfermion(&["verify", "--k", "2"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("PASS  fermionic_anticommutator"));
    assert!(out.contains("PASS  fermionic_limit_coherent"));
    assert!(stderr(&o).starts_with("4 failing identities"));
}

#[test]
fn verify_suite_filter_and_latex() {
    let o = kfermion(&[
        "verify",
        "--k",
        "5",
        "--suite",
        "fock,overlap",
        "--format",
        "latex",
    ]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.starts_with("\\begin{tabular}"));
    assert!(out.contains("overlap & overlap\\_three\\_forms & PASS"));
    assert!(!out.contains("resolution"));
}
