use std::process::{Command, Output};

use serde_json::Value;

fn sigmasol(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sigmasol"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn run_json(args: &[&str]) -> Value {
    let out = sigmasol(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_str(&stdout(&out)).unwrap()
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array().unwrap().iter().map(|x| x.as_str().unwrap().to_string()).collect()
}

/// Feeds every solution of a solver document back through `verify`.
fn verify_all(doc: &Value) {
    let system = &doc["system"];
    let n = system["n"].as_u64().unwrap().to_string();
    let constraints: Vec<String> = system["constraints"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| format!("{}={}", c["index"], c["target"].as_str().unwrap()))
        .collect();
    let constraints = constraints.join(",");
    let solutions = doc["solutions"].as_array().unwrap();
    assert!(!solutions.is_empty());
    for sol in solutions {
        let tuple = strings(&sol["values"]).join(",");
        let out = sigmasol(&["verify", "--n", &n, "--constraints", &constraints, "--tuple", &tuple]);
        assert_eq!(out.status.code(), Some(0), "tuple {tuple} against {constraints}");
        let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(report["pass"], Value::Bool(true));
    }
}

const SOLVER_RUNS: &[&[&str]] = &[
    &["sum-product", "--a", "1", "--b", "1", "--n", "4", "--t", "1", "--count", "3"],
    &["sum-product", "--a", "-2/3", "--b", "5", "--n", "6", "--count", "3", "--seed", "11"],
    &["sigma-product", "--i", "2", "--a", "3", "--b", "2", "--n", "4", "--free", "1", "--count", "3"],
    &["sigma-product", "--i", "4", "--a", "1/2", "--b", "-3", "--n", "6", "--count", "2"],
    &["same-values", "--i", "3", "--j", "4", "--n", "4", "--ref", "1,2,3,5", "--count", "3"],
    &["same-values", "--i", "1", "--j", "2", "--n", "3", "--ref", "1,2,3", "--count", "3"],
    &["triple-123", "--a", "4", "--d", "2", "--t", "1,2,-1/3"],
    &["triple-134", "--a", "1", "--d", "2", "--count", "2"],
    &["sigma123", "--n", "5", "--ref", "1,1,1,2", "--u", "2,3/4"],
];

#[test]
fn documented_sum_product_example() {
    let doc = run_json(&["sum-product", "--a", "1", "--b", "1", "--n", "4", "--t", "1", "--count", "1"]);
    assert_eq!(strings(&doc["solutions"][0]["values"]), ["-24/35", "96/35", "-343/240", "125/336"]);
    assert_eq!(doc["solutions"][0]["provenance"]["multiple"], 2);
    assert_eq!(doc["solutions"][0]["provenance"]["branch"], "+");
    assert_eq!(doc["system"]["constraints"][1]["index"], 4);
}

#[test]
fn plain_format_is_one_tuple_per_line() {
    let out = sigmasol(&["--format", "plain", "sum-product", "--a", "1", "--b", "1", "--n", "4", "--t", "1", "--count", "1"]);
    assert_eq!(stdout(&out), "-24/35 96/35 -343/240 125/336\n");
    let out = sigmasol(&["triple-123", "--a", "4", "--d", "2", "--t", "1", "--format", "plain"]);
    assert_eq!(stdout(&out), "3/2 1/2 1/2 3/2\n");
}

#[test]
fn documented_verify_example() {
    let out = sigmasol(&["verify", "--n", "5", "--constraints", "1=5,2=9,3=7", "--tuple", "1/5,2/5,9/5,8/5,1"]);
    assert_eq!(out.status.code(), Some(0));
    let out = sigmasol(&["verify", "--n", "3", "--constraints", "1=5", "--tuple", "1,2,3", "--format", "plain"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).starts_with("fail\n"));
}

#[test]
fn degenerate_parameters_exit_one() {
    let out = sigmasol(&["sum-product", "--a", "0", "--b", "1", "--n", "4", "--count", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("a·b ≠ 0"));
    assert!(out.stdout.is_empty());
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["sum-product", "--a", "1.5", "--b", "1", "--n", "4", "--count", "1"][..],
        &["sum-product", "--a", "1", "--b", "1", "--n", "4", "--count", "0"],
        &["sum-product", "--a", "1", "--b", "1", "--n", "4", "--count", "1", "--bogus"],
        &["verify", "--n", "3", "--constraints", "1:5", "--tuple", "1,2,3"],
        &["verify", "--n", "3", "--constraints", "1=6", "--tuple", "1,2"],
        &["sigma-product", "--i", "4", "--a", "1", "--b", "1", "--n", "4", "--count", "1"],
        &["frobnicate"],
    ] {
        let out = sigmasol(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in SOLVER_RUNS {
        let (first, second) = (sigmasol(args), sigmasol(args));
        assert_eq!(first.stdout, second.stdout, "{args:?}");
        assert_eq!(first.status.code(), Some(0), "{args:?}");
    }
}

#[test]
fn every_solver_output_round_trips_through_verify() {
    for args in SOLVER_RUNS {
        verify_all(&run_json(args));
    }
}

#[test]
fn sampled_parameters_are_echoed() {
    let args = ["sum-product", "--a", "2", "--b", "3", "--n", "6", "--count", "1", "--seed", "5"];
    let doc = run_json(&args);
    let prov = &doc["solutions"][0]["provenance"];
    assert_eq!(prov["seed"], 5);
    let free = strings(&prov["params"]["free"]);
    let t = strings(&prov["params"]["t"]);
    assert_eq!(free.len(), 2);
    let pinned = run_json(&[
        "sum-product", "--a", "2", "--b", "3", "--n", "6", "--count", "1", "--free", &free.join(","), "--t", &t[0],
    ]);
    assert_eq!(pinned["solutions"][0]["values"], doc["solutions"][0]["values"]);
}
