use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_oddballoon")).args(args).output().expect("spawn oddballoon")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

#[test]
fn gen_turan() {
    let g6 = stdout(&["gen", "turan", "7", "3"]);
    assert_eq!(g6.trim(), "FFz~o");
}

#[test]
fn balloon_of_triangle() {
    let v = json(&["balloon", "--skeleton", "Bw", "--length", "5", "--json"]);
    assert_eq!(v["vertices"], 12);
    assert_eq!(v["edges"], 15);
}

#[test]
fn balloon_from_spec_file() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "Bw ; edge 0,1 = 7 ; default = 5").unwrap();
    let v = json(&["balloon", "--spec", f.path().to_str().unwrap(), "--json"]);
    assert_eq!(v["edges"], 17);
    assert_eq!(v["vertices"], 14);
}

#[test]
fn predict_even_cycle_case() {
    let c4 = stdout(&["gen", "cycle", "4"]);
    let v = json(&["predict", "--fbullet", c4.trim(), "--n", "20"]);
    assert_eq!(v["case_tag"], "AllEvenCycles");
    assert_eq!(v["edge_count"], 124);
    let named = json(&["predict", "--family", "wheel", "--k", "2", "--n", "20"]);
    assert_eq!(named, v);
}

#[test]
fn chi4_warns_on_low_chromatic_skeleton() {
    let out = run(&["predict", "--mode", "chi4", "--n", "30", "--skeleton", "Bw"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
}

#[test]
fn crack_report_has_q() {
    let v = json(&["crack", "--skeleton", "Bw", "--set", "0", "--json"]);
    assert_eq!(v["size"], 3);
    for m in v["members"].as_array().unwrap() {
        assert_eq!(m["edges"], 3);
        assert_eq!(m["bipartite"], true);
    }
}

#[test]
fn check_free_from_family_file() {
    let mut fam = tempfile::NamedTempFile::new().unwrap();
    writeln!(fam, "Bw").unwrap();
    let bip = stdout(&["gen", "bipartite", "4", "4"]);
    assert!(stdout(&["check-free", "--host", bip.trim(), "--family", fam.path().to_str().unwrap()]).starts_with("free"));
    let k4 = stdout(&["gen", "complete", "4"]);
    assert!(stdout(&["check-free", "--host", k4.trim(), "--family", "Bw"]).starts_with("contains"));
}

#[test]
fn search_ex_triangle() {
    let v = json(&["search-ex", "--n", "6", "--forbid", "Bw"]);
    assert_eq!(v["optimum"], 9);
    assert_eq!(v["exhaustive"], true);
    let refused = run(&["search-ex", "--n", "14", "--forbid", "Bw"]);
    assert!(!refused.status.success());
}

#[test]
fn f_oracle_value() {
    assert_eq!(json(&["f-oracle", "--n", "7", "--nu", "2", "--delta", "6"])["optimum"], 11);
}

#[test]
fn malformed_graph6_fails() {
    let out = run(&["crack", "--skeleton", "!!!", "--set", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("graph6"));
}

#[test]
fn output_is_deterministic_across_threads() {
    let one = stdout(&["--threads", "1", "crack-all", "--family", "wheel", "--k", "2"]);
    let four = stdout(&["--threads", "4", "crack-all", "--family", "wheel", "--k", "2"]);
    assert_eq!(one, four);
    assert!(!one.is_empty());
}

#[test]
fn quick_verify_passes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = run(&["verify", "--quick", "--strict", "--report", path.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    assert!(String::from_utf8_lossy(&out.stdout).contains("checks passed"));
    let report: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(report["schema"], "oddballoon.verification/1");
}
