use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .display()
        .to_string()
}

fn simplie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_simplie"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let out = simplie(&all);
    let v: Value = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    (out.status.code().unwrap(), v)
}

#[test]
fn lpa_r_infty_is_simple_over_every_field() {
    for field in ["Q", "Fp:2", "Fp:3", "Fp:5"] {
        let (code, v) = json(&["lpa", "--field", field, &fixture("r_infty.json")]);
        assert_eq!(code, 0);
        assert_eq!(v["verdicts"]["lpa_simple"]["verdict"], "Simple");
        assert_eq!(v["verdicts"]["lie"]["verdict"], "Simple", "{field}");
        assert_eq!(v["exit_code"], 0);
    }
}

#[test]
fn groupoid_pair2_over_f2() {
    let (code, v) = json(&["groupoid", "--field", "Fp:2", &fixture("pair2.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["verdicts"]["effective"]["verdict"], true);
    assert_eq!(v["verdicts"]["minimal"]["verdict"], true);
    assert_eq!(v["verdicts"]["lie"]["verdict"], "NotSimple");
    let (_, q) = json(&["groupoid", "--field", "Q", &fixture("pair2.json")]);
    assert_eq!(q["verdicts"]["lie"]["verdict"], "Simple");
}

#[test]
fn line_graph_matches_pair_groupoid() {
    for (field, expect) in [("Q", "Simple"), ("Fp:2", "NotSimple"), ("Fp:3", "Simple")] {
        let (_, l) = json(&["lpa", "--field", field, &fixture("e2.json")]);
        let (_, g) = json(&["groupoid", "--field", field, &fixture("pair2.json")]);
        assert_eq!(l["verdicts"]["lie"]["verdict"], expect);
        assert_eq!(g["verdicts"]["lie"]["verdict"], expect);
    }
}

#[test]
fn oracle_grid_agrees() {
    let (code, v) = json(&["oracle", "--primes", "2,3,5", "--max-n", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdicts"]["all_agree"], true);
    let rows = v["verdicts"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 9);
    let order: Vec<(String, u64)> = rows
        .iter()
        .map(|r| (r["groupoid"].as_str().unwrap().to_string(), r["p"].as_u64().unwrap()))
        .collect();
    let want: Vec<(String, u64)> = (2..=4)
        .flat_map(|n| [2u64, 3, 5].map(|p| (format!("P_{n}"), p)))
        .collect();
    assert_eq!(order, want);
}

#[test]
fn oracle_accepts_groupoid_inputs() {
    let (code, v) = json(&["oracle", "--primes", "3", "--max-n", "2", &fixture("pair3.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["verdicts"]["rows"].as_array().unwrap().len(), 2);
    // Z/2 is not effective: preconditions unmet.
    let (code, _) = json(&["oracle", "--primes", "3", "--max-n", "2", &fixture("z2.json")]);
    assert_eq!(code, 2);
}

#[test]
fn ep_fixtures() {
    let (code, v) = json(&["ep", &fixture("swap.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["verdicts"]["simple"]["verdict"], true);
    assert_eq!(v["verdicts"]["hausdorff"]["verdict"], true);
    assert_eq!(v["verdicts"]["center"]["verdict"], "ScalarMultiplesOfIdentity");

    let (code, v) = json(&["ep", &fixture("nhaus.json")]);
    assert_eq!(code, 2);
    assert_eq!(v["verdicts"]["hausdorff"]["verdict"], false);
    assert!(v["error"].is_string());

    let (code, _) = json(&["ep", &fixture("triv2.json")]);
    assert_eq!(code, 0);
}

#[test]
fn inapplicable_and_malformed_inputs_exit_2() {
    let (code, v) = json(&["lpa", &fixture("r1.json")]);
    assert_eq!(code, 2);
    assert_eq!(v["verdicts"]["lpa_simple"]["verdict"], "NotSimple");

    let (code, v) = json(&["lpa", &fixture("pair2.json")]);
    assert_eq!(code, 2);
    assert!(v["error"].as_str().unwrap().contains("schema"));

    let (code, _) = json(&["lpa", "/nonexistent/graph.json"]);
    assert_eq!(code, 2);
}

#[test]
fn bad_arguments_are_rejected() {
    assert!(!simplie(&["lpa", "--field", "Fp:6", &fixture("r2.json")])
        .status
        .success());
    assert!(!simplie(&["frobnicate"]).status.success());
}

#[test]
fn reports_are_deterministic() {
    let swap = fixture("swap.json");
    let pair3 = fixture("pair3.json");
    for args in [
        vec!["--format", "json", "--seed", "7", "ep", swap.as_str()],
        vec!["--format", "text", "--field", "Fp:3", "groupoid", pair3.as_str()],
        vec!["--format", "json", "oracle", "--max-n", "3"],
    ] {
        let x = simplie(&args);
        let y = simplie(&args);
        assert_eq!(x.stdout, y.stdout, "{args:?}");
        assert!(!x.stdout.is_empty());
    }
}

#[test]
fn json_reports_round_trip() {
    let (_, v) = json(&["lpa", "--field", "Fp:3", &fixture("e3.json")]);
    let text = serde_json::to_string(&v).unwrap();
    let report: simplie::cli::Report = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_value(&report).unwrap(), v);
}
