use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sigma-hyper"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_with_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = bin().args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped()).spawn().unwrap();
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn alpha_example() {
    let v = json(&run(&["alpha", "--n", "10", "--q", "5", "--sigma", "4,3,2", "--k", "7"]));
    assert_eq!(v["alpha_k"], 21);
    assert_eq!(v["spec"]["sigma"], serde_json::json!([4, 3, 2]));
    let profile: Vec<usize> = serde_json::from_value(v["profile"].clone()).unwrap();
    assert_eq!(profile.iter().sum::<usize>(), 21);
}

#[test]
fn alpha_all_is_increasing() {
    let v = json(&run(&["alpha", "--n", "6", "--q", "7", "--sigma", "2,3,4", "--all"]));
    let values: Vec<u64> = v["values"].as_array().unwrap().iter().map(|x| x["alpha_k"].as_u64().unwrap()).collect();
    assert_eq!(values.len(), 8);
    assert!(values.windows(2).all(|w| w[0] <= w[1]), "{values:?}");
}

#[test]
fn sigma_is_normalized() {
    let v = json(&run(&["alpha-closed", "--n", "5", "--q", "6", "--sigma", "2,4,3"]));
    assert_eq!(v["spec"]["sigma"], serde_json::json!([4, 3, 2]));
    assert!(v["alpha"].as_u64().unwrap() > 0);
}

#[test]
fn match_example() {
    let v = json(&run(&["match", "--n", "3", "--q", "9", "--sigma", "4,3,2"]));
    assert_eq!(v["nu"], 3);
    assert_eq!(v["unmatched_count"], 0);
    assert_eq!(v["strategy"], "diagonal");
    assert!(v.get("matching").is_none());
}

#[test]
fn emitted_matchings_verify() {
    for args in [
        ["--n", "3", "--q", "9", "--sigma", "4,3,2"],
        ["--n", "25", "--q", "9", "--sigma", "2,2"],
        ["--n", "6", "--q", "4", "--sigma", "2,1"],
        ["--n", "3", "--q", "5", "--sigma", "4,2"],
        ["--n", "13", "--q", "101", "--sigma", "2,2,1"],
        ["--n", "2", "--q", "3", "--sigma", "3,3"],
    ] {
        let mut full = vec!["match", "--emit"];
        full.extend(args);
        let emitted = run(&full);
        assert!(emitted.status.success());
        let verified = run_with_stdin(&["verify", "--matching", "-"], &emitted.stdout);
        assert_eq!(code(&verified), 0, "{args:?}: {}", String::from_utf8_lossy(&verified.stdout));
        assert_eq!(json(&verified)["valid"], true);
    }
}

#[test]
fn tampered_matching_exits_4() {
    let emitted = json(&run(&["match", "--emit", "--n", "3", "--q", "3", "--sigma", "2,1"]));
    let mut doc = emitted.clone();
    let first = doc["matching"]["edges"][0].clone();
    doc["matching"]["edges"].as_array_mut().unwrap().push(first);
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(doc.to_string().as_bytes()).unwrap();
    let out = run(&["verify", "--matching", file.path().to_str().unwrap()]);
    assert_eq!(code(&out), 4);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["valid"], false);
    assert!(!v["violations"].as_array().unwrap().is_empty());
    assert_eq!(v["violations"][0]["kind"], "overlap");
}

#[test]
fn bare_matching_needs_a_spec() {
    let emitted = json(&run(&["match", "--emit", "--n", "3", "--q", "3", "--sigma", "2,1"]));
    let bare = emitted["matching"].to_string();
    let out = run_with_stdin(&["verify", "--matching", "-"], bare.as_bytes());
    assert_eq!(code(&out), 1);
    let out = run_with_stdin(&["verify", "--matching", "-", "--n", "3", "--q", "3", "--sigma", "2,1"], bare.as_bytes());
    assert_eq!(code(&out), 0);
    let out = run_with_stdin(&["verify", "--matching", "-", "--n", "4", "--q", "3", "--sigma", "2,1"], bare.as_bytes());
    assert_eq!(code(&out), 4);
}

#[test]
fn spec_file_source() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(br#"{"n": 10, "q": 5, "sigma": [2, 4, 3]}"#).unwrap();
    let path = file.path().to_str().unwrap();
    let v = json(&run(&["alpha", "--spec", path, "--k", "7"]));
    assert_eq!(v["alpha_k"], 21);
    let both = run(&["alpha", "--spec", path, "--n", "10", "--q", "5", "--sigma", "4,3,2", "--k", "7"]);
    assert_eq!(code(&both), 1);
    let neither = run(&["alpha", "--k", "7"]);
    assert_eq!(code(&neither), 1);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&run(&["alpha", "--n", "3", "--q", "5", "--sigma", "2,0", "--k", "1"])), 1);
    assert_eq!(code(&run(&["alpha", "--n", "3", "--q", "5", "--sigma", "2,1", "--k", "3"])), 1);
    assert_eq!(code(&run(&["bogus"])), 1);
    assert_eq!(code(&run(&["match", "--n", "3", "--q", "4", "--sigma", "2,1", "--strategy", "diagonal"])), 2);
    assert_eq!(code(&run(&["match", "--n", "5", "--q", "6", "--sigma", "2,2", "--strategy", "rgood"])), 2);
    assert_eq!(code(&run(&["oracle", "match", "--n", "9", "--q", "9", "--sigma", "2,1"])), 3);
    assert_eq!(code(&run(&["--help"])), 0);
}

#[test]
fn budget_can_be_raised() {
    let args = ["oracle", "alpha", "--n", "5", "--q", "8", "--sigma", "1,1", "--k", "1"];
    assert_eq!(code(&run(&args)), 3);
    let out = bin().args(args).env("SIGMA_HYPER_BUDGET", "2").output().unwrap();
    assert_eq!(json(&out)["alpha_k"], 8);
    let out = bin().args(args).env("SIGMA_HYPER_BUDGET", "zero").output().unwrap();
    assert_eq!(code(&out), 1);
}

#[test]
fn permissive_marks_unproven() {
    let args = ["match", "--n", "4", "--q", "2", "--sigma", "2,1", "--strategy", "rgood"];
    assert_eq!(code(&run(&args)), 2);
    let mut permissive = args.to_vec();
    permissive.push("--permissive");
    let v = json(&run(&permissive));
    assert!(v["strategy"].as_str().unwrap().ends_with("[unproven regime]"));
    assert!(v["certificates"].as_array().unwrap().iter().any(|c| c["name"] == "unproven_regime"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["match", "--emit", "--n", "13", "--q", "101", "--sigma", "2,2,1"],
        vec!["alpha", "--all", "--n", "7", "--q", "6", "--sigma", "3,2,1"],
        vec!["sweep", "--paper-example", "--max-n", "6", "--max-q", "6"],
        vec!["edges", "--list", "--n", "3", "--q", "3", "--sigma", "2,1", "--format", "table"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn edges_and_bounds() {
    let v = json(&run(&["edges", "--count", "--n", "3", "--q", "3", "--sigma", "2,1"]));
    assert_eq!(v["count"], 54);
    let v = json(&run(&["edges", "--list", "--limit", "5", "--n", "3", "--q", "3", "--sigma", "2,1"]));
    assert_eq!(v["edges"].as_array().unwrap().len(), 5);
    assert_eq!(v["count"], 54);
    let v = json(&run(&["bounds", "--n", "5", "--q", "1", "--sigma", "1,1,1", "--alpha", "2", "--beta", "2"]));
    assert_eq!(v["feasible"], false);
}

#[test]
fn oracle_subcommands() {
    let v = json(&run(&["oracle", "alpha", "--n", "4", "--q", "4", "--sigma", "2,1", "--k", "2"]));
    let fast = json(&run(&["alpha", "--n", "4", "--q", "4", "--sigma", "2,1", "--k", "2"]));
    assert_eq!(v["alpha_k"], fast["alpha_k"]);
    let v = json(&run(&["oracle", "match", "--n", "3", "--q", "5", "--sigma", "4,2"]));
    assert_eq!(v["nu"], 2);
    let v = json(&run(&["oracle", "colouring", "--n", "2", "--q", "2", "--sigma", "1,1", "--alpha", "2", "--beta", "2"]));
    assert_eq!(v["chi"], 2);
    let v = json(&run(&["oracle", "intersection", "--n", "3", "--q", "4", "--sigma", "2,1", "--profile", "2,1,0"]));
    assert_eq!(v["max_intersection"], 3);
}

#[test]
fn sweep_agrees_with_closed_forms() {
    let v = json(&run(&["sweep", "--paper-example", "--max-n", "10", "--max-q", "10"]));
    assert_eq!(v["mismatches"], 0);
    assert_eq!(v["rows"].as_array().unwrap().len(), 8 * 7);
}

#[test]
fn table_format() {
    let out = run(&["match", "--n", "3", "--q", "9", "--sigma", "4,3,2", "--format", "table"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("strategy   diagonal"));
    assert!(text.contains("nu         3"));
}
