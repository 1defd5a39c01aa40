use serde_json::Value;
use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).to_string_lossy().into_owned()
}

fn qkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qkit")).args(args).env("QKIT_THREADS", "2").output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn check<'a>(report: &'a Value, name: &str) -> &'a Value {
    report["checks"].as_array().unwrap().iter().find(|c| c["check"] == name).unwrap_or_else(|| panic!("no check {name}"))
}

fn assert_schema(report: &Value) {
    assert_eq!(report["schema"], 1);
    assert_eq!(report["input_digest"].as_str().unwrap().len(), 64);
    for c in report["checks"].as_array().unwrap() {
        assert!(c["anchor"].as_str().is_some_and(|a| !a.is_empty()));
        if c["verdict"] == "fails" {
            assert!(!c["witnesses"].as_array().unwrap().is_empty(), "{c}");
        }
    }
}

#[test]
fn eggbox_of_b2() {
    let out = qkit(&["eggbox", &fixture("b2.tbl"), "--out", "/dev/null"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.matches("D-class").count(), 2);
    for cell in ["e11*", "e22*", "0*"] {
        assert!(text.contains(cell), "{text}");
    }
}

#[test]
fn relations_report() {
    let out = qkit(&["relations", &fixture("b2.tbl")]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_schema(&r);
    assert_eq!(r["data"]["D"].as_array().unwrap().len(), 2);
    assert_eq!(r["data"]["union_of_subgroups"], serde_json::json!(["e11", "e22", "0"]));
}

#[test]
fn malformed_table_reports_line() {
    let dir = std::env::temp_dir().join(format!("qkit-bad-{}", std::process::id()));
    std::fs::write(&dir, "2\n0 0\n0 q\n").unwrap();
    let out = qkit(&["relations", dir.to_str().unwrap()]);
    std::fs::remove_file(&dir).ok();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn check_order_examples() {
    let b2 = fixture("b2.tbl");
    let out = qkit(&["check-order", &b2, "--notion", "straight-left", "--prop31"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_schema(&r);
    assert_eq!(check(&r, "straight-left")["verdict"], "holds");
    assert_eq!(check(&r, "regular quotient equivalence")["verdict"], "holds");

    let out = qkit(&["check-order", &b2, "--sub", "0,e11,e22", "--notion", "very-large"]);
    assert_eq!(out.status.code(), Some(1));
    let r = json(&out);
    assert_schema(&r);
    assert_eq!(check(&r, "very-large")["witnesses"], serde_json::json!([["a12", "a21"]]));

    let out = qkit(&["check-order", &b2, "--sub", "e11,a12"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not closed"));
}

#[test]
fn check_starpair_examples() {
    let r = json(&qkit(&["check-starpair", &fixture("b2.tbl")]));
    assert_schema(&r);
    for c in ["embeddable", "Gi", "Gii"] {
        assert_eq!(check(&r, c)["verdict"], "holds", "{c}");
    }
    let out = qkit(&["check-starpair", &fixture("rb22.tbl")]);
    assert_eq!(out.status.code(), Some(1));
    let r = json(&out);
    assert_eq!(check(&r, "GI")["verdict"], "holds");
    assert_eq!(check(&r, "I")["verdict"], "fails");

    let r = json(&qkit(&["check-starpair", &fixture("z3.tbl"), "--pair", "equality"]));
    assert_eq!(check(&r, "Gi")["verdict"], "fails");
}

#[test]
fn harness_counts_and_exit_code() {
    let out = qkit(&["harness", "--max-order", "2", "--suites", "prop31,lemma21"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_schema(&r);
    assert_eq!(r["checks"].as_array().unwrap().len(), 2);
    assert_eq!(check(&r, "StraightEquivalence")["detail"]["failures"], serde_json::json!([]));
    // the unrestricted finite-R-class statement fails on non-regular monoids
    let out = qkit(&["harness", "--max-order", "3", "--suites", "cor310"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(qkit(&["harness", "--max-order", "4"]).status.code(), Some(2));
    assert_eq!(qkit(&["harness", "--suites", "nope"]).status.code(), Some(2));
}

#[test]
fn harness_is_deterministic_across_thread_counts() {
    let run = |threads: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_qkit"))
            .args(["harness", "--max-order", "2", "--fixtures", "--suites", "thm44,cor52"])
            .env("QKIT_THREADS", threads)
            .output()
            .unwrap();
        let mut r = json(&out);
        for c in r["checks"].as_array_mut().unwrap() {
            c["timing_ms"] = Value::Null;
        }
        r
    };
    assert_eq!(run("1"), run("4"));
}

#[test]
fn examples_at_window_five() {
    for which in ["3.4", "3.11", "3.14"] {
        let out = qkit(&["example", which, "--window", "5", "--verify"]);
        assert_eq!(out.status.code(), Some(0), "{which}: {}", String::from_utf8_lossy(&out.stderr));
        assert_schema(&json(&out));
    }
    let r = json(&qkit(&["example", "3.11"]));
    assert_eq!(check(&r, "H not a congruence")["witnesses"], serde_json::json!([["a^1", "(0,0)", "(1,0)", "(0,0)"]]));
    assert_eq!(qkit(&["example", "3.14", "--window", "3"]).status.code(), Some(2));
    assert_eq!(qkit(&["example", "3.11", "--modulus", "2"]).status.code(), Some(2));
}

#[test]
fn enumerate_counts() {
    for (n, count) in [(1, 1), (2, 8), (3, 113)] {
        let r = json(&qkit(&["enumerate", &n.to_string(), "--classes"]));
        assert_eq!(r["checks"][0]["detail"]["labeled"], count);
    }
}
