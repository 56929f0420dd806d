use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn forge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_partition-forge")).args(args).output().expect("binary runs")
}

fn forge_with_threads(args: &[&str], threads: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_partition-forge"))
        .args(args)
        .env("PARTITION_FORGE_THREADS", threads)
        .output()
        .expect("binary runs")
}

fn scratch(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("partition-forge-{}-{name}", std::process::id()))
}

#[test]
fn borodin_report_is_written_and_passes() {
    let path = scratch("borodin.json");
    let out = forge(&["verify-borodin", "--profile", "10", "--max-weight", "6", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(report["command"], "verify-borodin");
    assert_eq!(report["ok"], true);
    assert_eq!(report["config"]["args"]["profile"], "10");
    let records = report["checks"][0]["records"].as_array().unwrap();
    assert!(!records.is_empty());
    assert!(records.iter().all(|r| r["match"] == true && r["lhs"] == r["rhs"]));
}

#[test]
fn malformed_profile_is_a_usage_error() {
    let out = forge(&["verify-borodin", "--profile", "2X"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("profile"));
}

#[test]
fn unknown_flags_and_bad_numbers_are_usage_errors() {
    assert_eq!(forge(&["verify-asm", "--n", "many"]).status.code(), Some(2));
    assert_eq!(forge(&["verify-asm", "--bogus"]).status.code(), Some(2));
    assert_eq!(forge(&["verify-stanley", "--shape", "2,3"]).status.code(), Some(2));
    assert_eq!(forge(&["enumerate", "--object", "asm"]).status.code(), Some(2));
    assert_eq!(forge_with_threads(&["verify-asm", "--n", "2"], "zero").status.code(), Some(2));
}

#[test]
fn help_exits_cleanly() {
    let out = forge(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("verify-lambda-det"));
}

#[test]
fn perturbation_is_detected() {
    let out = forge(&["verify-lambda-det", "--n", "3", "--points", "20", "--seed", "7", "--perturb"]);
    assert_eq!(out.status.code(), Some(1));
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["ok"], false);
    let unperturbed = forge(&["verify-lambda-det", "--n", "3", "--points", "20", "--seed", "7"]);
    assert_eq!(unperturbed.status.code(), Some(0));
}

#[test]
fn oversized_bounds_are_refused() {
    let out = forge(&["verify-asm", "--n", "8"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--max-instances"));
    assert_eq!(forge(&["verify-asm", "--n", "4", "--max-instances", "10"]).status.code(), Some(2));
}

#[test]
fn reports_are_identical_across_thread_counts() {
    let args = ["verify-borodin", "--max-period", "3", "--max-weight", "6"];
    let one = forge_with_threads(&args, "1");
    let four = forge_with_threads(&args, "4");
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    let lambda = ["verify-lambda-det", "--n", "3", "--points", "5", "--seed", "11"];
    assert_eq!(forge_with_threads(&lambda, "1").stdout, forge_with_threads(&lambda, "3").stdout);
}

#[test]
fn checks_are_sorted_by_name() {
    let out = forge(&["verify-qt-borodin", "--max-period", "2", "--max-weight", "3", "--max-degree", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    let names: Vec<&str> = report["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
}

#[test]
fn enumerate_writes_json_and_csv() {
    let out = forge(&["enumerate", "--object", "asm", "--n", "3", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 8);
    assert!(text.contains("\"[[0,1,0],[1,-1,1],[0,1,0]]\""));

    let out = forge(&["enumerate", "--object", "partitions", "--n", "4"]);
    let parts: Vec<Vec<u32>> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(parts.len(), 5);

    let out = forge(&["enumerate", "--object", "tilings", "--n", "2"]);
    let tilings: Vec<Value> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(tilings.len(), 8);

    let out = forge(&["enumerate", "--object", "cpp", "--profile", "10", "--max-weight", "2", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("profile,seq\n"));
}
