use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn piercing(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_piercing")).args(args).output().expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("bad json ({e}): {}", String::from_utf8_lossy(&out.stdout)))
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

/// C_n embedded in the plane: edge `i` joins `i` and `i + 1`.
fn cycle_json(n: usize) -> String {
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let rotation: Vec<Vec<usize>> = (0..n).map(|i| vec![2 * i, 2 * ((i + n - 1) % n) + 1]).collect();
    serde_json::json!({ "vertices": n, "edges": edges, "rotation": rotation }).to_string()
}

#[test]
fn ds_max_prints_a_csv_row() {
    let out = piercing(&["ds-max", "--t", "3", "--b", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let row: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(&row[..3], &["3", "2", "5"]);
}

#[test]
fn pierce_two_disjoint_sets() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "f.json", r#"{"universe": 3, "sets": [[0], [1, 2]]}"#);
    let out = piercing(&["pierce", "--input", &input]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json_of(&out);
    assert_eq!(v["tau"], 2);
    assert_eq!(v["nu"], 2);
    assert_eq!(v["certificate"]["optimal"], true);
}

#[test]
fn hand_written_disks_are_discretised() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "d.json", r#"{"disks": [{"c": [0, 0], "r": 1}, {"c": [5, 0], "r": 1}, {"c": [0.5, 0], "r": 1}]}"#);
    let out = piercing(&["pierce", "--input", &input]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(json_of(&out)["tau"], 2);
    let out = piercing(&["delaunay", "--input", &input]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["planar"], true);
}

#[test]
fn heuristic_pierce_is_valid() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "f.json", r#"{"universe": 3, "sets": [[0, 1], [1, 2], [0, 2]]}"#);
    let out = piercing(&["pierce", "--heuristic", "--input", &input]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["certificate"]["optimal"], false);
    assert!(v["tau"].as_u64().unwrap() >= 2);
}

#[test]
fn long_cycle_is_not_maximal() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "c8.json", &cycle_json(8));
    let out = piercing(&["verify-maximal", "--input", &input, "--ell", "4"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json_of(&out);
    assert_eq!(v["is_maximal"], false);
    let pairs = v["addable_pairs"].as_array().unwrap();
    assert!(pairs.iter().any(|p| p["distance"] == 4));
}

#[test]
fn partition_on_a_cycle() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "c5.json", &cycle_json(5));
    let out = piercing(&["partition", "--input", &input, "--ell", "4"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json_of(&out);
    assert_eq!(v["bound_holds"], true);
    assert_eq!(v["face_length"], 5);
}

#[test]
fn fmax_search_small() {
    let dir = tempfile::tempdir().unwrap();
    let log = dir.path().join("log.csv");
    let out = piercing(&["fmax-search", "--ell", "3", "--n-max", "6", "--log", log.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["best_face_length"], 3);
    assert_eq!(v["exhaustive"], true);
    let csv = std::fs::read_to_string(log).unwrap();
    assert!(csv.lines().count() >= 2);
}

#[test]
fn generated_disks_are_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let a = piercing(&["--seed", "5", "gen-disks", "--n", "8"]);
    let b = piercing(&["--seed", "5", "gen-disks", "--n", "8"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);

    let disks = write(dir.path(), "d.json", &String::from_utf8(a.stdout).unwrap());
    let vc = piercing(&["vc", "--input", &disks]);
    assert_eq!(vc.status.code(), Some(0));
    let v = json_of(&vc);
    assert_eq!(v["disks"], true);
    assert!(v["dual_vc"].as_u64().unwrap() <= 4);

    let del = piercing(&["delaunay", "--input", &disks]);
    assert_eq!(del.status.code(), Some(0));
    assert_eq!(json_of(&del)["planar"], true);
}

#[test]
fn experiment_needs_a_seed_and_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "f.json", r#"{"universe": 4, "sets": [[0, 1], [1, 2], [2, 3], [3, 0]]}"#);
    let no_seed = piercing(&["cs-experiment", "--input", &input, "--q", "2", "--trials", "10"]);
    assert_eq!(no_seed.status.code(), Some(1));
    let run = || piercing(&["--seed", "3", "cs-experiment", "--input", &input, "--q", "2", "--trials", "50"]).stdout;
    assert_eq!(run(), run());
}

#[test]
fn bad_input_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "bad.json", r#"{"universe": 2, "sets": [[5]]}"#);
    assert_eq!(piercing(&["pierce", "--input", &input]).status.code(), Some(1));
    assert_eq!(piercing(&["pierce", "--input", "/nonexistent.json"]).status.code(), Some(1));
}
