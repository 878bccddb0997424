use std::process::Command;

use flexion_core::check::{CheckReport, Expect, PointReport, Status};
use flexionlab::report::render_text;
use flexionlab::{run, Config, RunReport, SuiteReport, Totals};
use serde_json::{json, Value};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_flexionlab"))
}

#[test]
fn list_shows_anchors() {
    let out = bin().arg("list").output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let line = |name: &str| text.lines().find(|l| l.starts_with(&format!("{name} "))).unwrap().to_string();
    assert!(line("senary").contains("Theorem 1.1"));
    assert!(line("dilator").contains("Appendix A"));
    assert_eq!(text.lines().count(), 12);
}

#[test]
fn list_json_has_every_suite() {
    let out = bin().args(["list", "--report", "json"]).output().unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["suites"].as_array().unwrap().len(), 11);
    assert_eq!(v["suites"][7]["name"], "senary");
}

#[test]
fn unknown_suite_is_a_usage_error() {
    let out = bin().args(["verify", "--suite", "nope"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("nope"));
}

#[test]
fn single_suite_json_is_reproducible_and_passes() {
    let args = ["verify", "--suite", "swamu", "--max-length", "3", "--samples", "2", "--report", "json", "--jobs", "2"];
    let a = bin().args(args).output().unwrap();
    let b = bin().args(args).output().unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["config"]["suites"], json!(["swamu"]));
    let point = &v["suites"][0]["identities"][0]["points"][1];
    for key in ["identity", "length", "word", "lhs", "rhs", "status"] {
        assert!(point.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn per_suite_length_override() {
    let mut config = Config {
        suites: vec!["unit-axioms".into(), "swamu".into()],
        samples: 1,
        max_length: 3,
        ..Config::default()
    };
    config.suite_lengths.insert("swamu".into(), 2);
    let r = run(&config).unwrap();
    assert_eq!(r.suite("unit-axioms").unwrap().max_length, 3);
    assert_eq!(r.suite("swamu").unwrap().max_length, 2);
    assert!(r.passed);
}

#[test]
fn senary_runs_at_least_twenty_identities() {
    let config = Config { suites: vec!["senary".into()], samples: 1, max_length: 2, ..Config::default() };
    let r = run(&config).unwrap();
    assert!(r.suite("senary").unwrap().totals.identities >= 20);
}

#[test]
fn text_report_prints_counterexample() {
    let point = PointReport {
        identity: "X = Y".into(),
        length: 2,
        split: None,
        word: json!([["1/1", "2/1"], ["0/1", "3/1"]]),
        params: None,
        lhs: None,
        rhs: None,
        status: Status::Fail,
        attempts: 1,
        error: Some("division by zero at [(0;3)] in oz <- swap".into()),
    };
    let check = CheckReport {
        identity: "X = Y".into(),
        property: "equal".into(),
        expect: Expect::Holds,
        verdict: Status::Fail,
        passed_points: 0,
        failed_points: 1,
        skipped_points: 0,
        points: vec![point],
    };
    let report = RunReport {
        tool: "flexionlab".into(),
        version: "0".into(),
        config: run(&Config { suites: vec!["swamu".into()], max_length: 0, ..Config::default() }).unwrap().config,
        passed: false,
        totals: Totals::default(),
        wall_seconds: None,
        suites: vec![SuiteReport {
            suite: "demo".into(),
            anchor: "-".into(),
            description: String::new(),
            max_length: 2,
            passed: false,
            totals: Totals::default(),
            wall_seconds: None,
            identities: vec![check],
        }],
    };
    let text = render_text(&report);
    assert!(text.contains("FAIL  X = Y"));
    assert!(text.contains(r#"word [["1/1","2/1"],["0/1","3/1"]]"#));
    assert!(text.contains("oz <- swap"));
}
