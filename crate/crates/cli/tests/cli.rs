use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn idcode(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_idcode"))
        .args(args)
        .env_remove("IDCODE_BUDGET")
        .output()
        .expect("binary runs")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("idcode-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

/// Writes `gen` output to a file and returns its path.
fn generated(name: &str, family: &[&str]) -> String {
    let mut args = vec!["gen"];
    args.extend_from_slice(family);
    let out = idcode(&args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let path = scratch(name);
    std::fs::write(&path, &out.stdout).unwrap();
    path.to_string_lossy().into_owned()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn solve_p4() {
    let p4 = generated("p4.edges", &["path", "4"]);
    let out = idcode(&["solve", &p4]);
    assert_eq!(out.status.code(), Some(0));
    let j = json(&out);
    assert_eq!(j["value"], 3);
    assert_eq!(j["witness"].as_array().unwrap().len(), 3);
    let out = idcode(&["solve", &p4, "--total"]);
    assert_eq!(json(&out)["value"], 3);
}

#[test]
fn construct_fig2_left() {
    let f = generated("fig2_left.edges", &["fig2_left"]);
    let out = idcode(&["construct", &f, "--method", "parity-shift"]);
    assert_eq!(out.status.code(), Some(0));
    let j = json(&out);
    assert_eq!(j["size"], 5);
    assert_eq!(j["verdict"]["kind"], "valid");
    assert_eq!(j["method"], "parity-shift");
}

#[test]
fn verify_c7_fails() {
    let c7 = generated("c7.edges", &["cycle", "7"]);
    let out = idcode(&["verify", &c7, "--code", "0,1,2"]);
    assert_eq!(out.status.code(), Some(1));
    assert_ne!(json(&out)["verdict"]["kind"], "valid");
    let out = idcode(&["verify", &c7, "--code", "0,1,2,3,5"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn precondition_and_parse_exits() {
    let p4 = generated("p4b.edges", &["path", "4"]);
    let out = idcode(&["construct", &p4, "--method", "support-complement"]);
    assert_eq!(out.status.code(), Some(2));
    let k3 = generated("k3.edges", &["cycle", "3"]);
    assert_eq!(idcode(&["solve", &k3]).status.code(), Some(2));

    let bad = scratch("bad.edges");
    std::fs::write(&bad, "3 2\n0 1\n1 x\n").unwrap();
    assert_eq!(idcode(&["solve", bad.to_str().unwrap()]).status.code(), Some(3));
    assert_eq!(idcode(&["verify", &p4, "--code", "0,9"]).status.code(), Some(3));
    assert_eq!(idcode(&["gen", "nonsense", "3"]).status.code(), Some(3));
    assert_eq!(idcode(&["frobnicate"]).status.code(), Some(3));
}

#[test]
fn budget_exit() {
    let c12 = generated("c12.edges", &["cycle", "12"]);
    let out = Command::new(env!("CARGO_BIN_EXE_idcode"))
        .args(["solve", &c12])
        .env("IDCODE_BUDGET", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
    assert_eq!(json(&out)["proven"], false);
}

#[test]
fn gen_corona_and_bounds() {
    let g = generated("corona.edges", &["corona", "2", "path", "3"]);
    let text = std::fs::read_to_string(&g).unwrap();
    assert!(text.starts_with("9 8\n"));
    let out = idcode(&["bounds", &g, "--exact"]);
    let j = json(&out);
    assert_eq!(j["exact"], 6);
    let c8 = j["bounds"].as_array().unwrap().iter().find(|b| b["name"] == "C8").unwrap();
    assert_eq!((c8["value"].as_i64(), c8["tight"].as_bool()), (Some(6), Some(true)));
    // deterministic output
    assert_eq!(idcode(&["bounds", &g, "--exact"]).stdout, out.stdout);
}

#[test]
fn survey_small() {
    let csv = scratch("survey.csv");
    let out = idcode(&["survey", "trees", "--max-n", "6", "--out", csv.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["graphs_checked"], 12);
    let rows = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(rows.lines().count(), 13);
}
