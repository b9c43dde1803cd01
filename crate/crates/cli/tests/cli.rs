use std::fs;
use std::process::{Command, Output};

use heffter_cli::format::{parse_json, parse_text};

fn heffter(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_heffter")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn generate_writes_the_printed_corner() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h19.txt");
    let o = heffter(&["generate", "19", "3", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let doc = parse_text(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc.array.get(heffter::Position::new(1, 1)), Some(16));
    assert_eq!(doc.k, 3);
}

#[test]
fn out_of_scope_exit_code() {
    let o = heffter(&["generate", "12", "4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("IntegerCase"));
    assert_eq!(heffter(&["generate", "6", "7"]).status.code(), Some(2));
    assert_eq!(heffter(&["classify", "5", "5"]).status.code(), Some(2));
    assert_eq!(heffter(&["classify", "15", "6"]).status.code(), Some(0));
}

#[test]
fn verify_dumped_fixture() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h7.txt");
    let dump = heffter(&["fixtures", "dump", "H(7;3)"]);
    assert_eq!(dump.status.code(), Some(0));
    fs::write(&path, dump.stdout).unwrap();
    let o = heffter(&["verify", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("modulus: 43") && out.contains("Valid"));
}

#[test]
fn verify_rejects_zero_token() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("zero.txt");
    fs::write(&path, "3 3\n1 2 3\n4 0 6\n7 8 9\n").unwrap();
    let o = heffter(&["verify", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("0 is not allowed"));
}

#[test]
fn verify_tampered_array_names_violations() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h65.json");
    let dump = heffter(&["fixtures", "dump", "H(6;5)", "--format", "json"]);
    let mut doc = parse_json(&stdout(&dump)).unwrap();
    let (p, v) = doc.array.iter().next().unwrap();
    doc.array.replace(p, -v).unwrap();
    fs::write(&path, heffter_cli::format::to_json(&doc)).unwrap();
    let o = heffter(&["verify", path.to_str().unwrap(), "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["verdict"], "invalid");
    assert!(report["violations"].as_array().unwrap().iter().any(|v| v["kind"] == "sum_not_divisible"));
}

#[test]
fn fixture_dump_carries_masks() {
    let o = heffter(&["fixtures", "dump", "H(30;3)", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = parse_json(&stdout(&o)).unwrap();
    assert_eq!(doc.masks["K"].len(), 60);
    assert_eq!(doc.masks["H"].len(), 60);
    assert_eq!(heffter(&["fixtures", "dump", "H(99;3)"]).status.code(), Some(1));
}

#[test]
fn fixture_list_is_stable() {
    let a = stdout(&heffter(&["fixtures", "list"]));
    assert_eq!(a, stdout(&heffter(&["fixtures", "list"])));
    assert!(a.lines().count() >= 15);
    assert!(a.lines().any(|l| l == "B(10)"));
}

#[test]
fn search_prints_a_valid_array() {
    let o = heffter(&["search", "3", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = parse_text(&stdout(&o)).unwrap();
    assert!(heffter::verify_heffter(&doc.array, 3).is_valid());
}

#[test]
fn sweep_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.json");
    assert_eq!(heffter(&["sweep", "5", "--report", path.to_str().unwrap()]).status.code(), Some(1));
    let o = heffter(&["sweep", "21", "--report", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["constructed"], report["valid"]);
    let rows = report["rows"].as_array().unwrap();
    let keys: Vec<(u64, u64)> = rows.iter().map(|r| (r["n"].as_u64().unwrap(), r["k"].as_u64().unwrap())).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn round_trip_over_a_sweep() {
    for n in 4..=26 {
        for k in 3..n {
            let Ok(a) = heffter::generate(n, k) else { continue };
            let text = heffter_cli::format::to_text(&a, k);
            assert_eq!(parse_text(&text).unwrap().array, a);
            let doc = heffter_cli::format::Document::new(a.clone(), k);
            assert_eq!(parse_json(&heffter_cli::format::to_json(&doc)).unwrap(), doc);
        }
    }
}
