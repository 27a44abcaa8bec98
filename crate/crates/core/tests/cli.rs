//! Runs the `surfgraph` binary and checks exit codes and JSON output.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(file: &str) -> String {
    format!("{}/data/{file}", env!("CARGO_MANIFEST_DIR"))
}

fn surfgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_surfgraph"))
        .args(args)
        .env_remove("SURFGRAPH_GUARD_OVERRIDE")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn temp(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("surfgraph-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

/// One vertex carrying `n` nested contractible loops.
fn loops(n: usize) -> String {
    let sigma: Vec<usize> = (0..2 * n).collect();
    let edges: Vec<[usize; 2]> = (0..n).map(|i| [2 * i, 2 * i + 1]).collect();
    serde_json::json!({ "sigma": [sigma], "edges": edges }).to_string()
}

#[test]
fn kite_counts() {
    for (class, n) in [("ao", 0), ("tco", 56), ("bao", 24), ("tbo", 24)] {
        let out = surfgraph(&["count", &data("kite.json"), "--class", class]);
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
        assert_eq!(json(&out)["count"], n, "class {class}");
    }
}

#[test]
fn torus_polynomials() {
    let out = surfgraph(&["poly", &data("torus.json"), "--kind", "flow"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["coefficients"], serde_json::json!([1, -2, 1]));
    let out = surfgraph(&["poly", &data("torus.json"), "--kind", "tension"]);
    assert_eq!(json(&out)["coefficients"], serde_json::json!([]));
}

#[test]
fn info_and_dual_round_trip() {
    let out = surfgraph(&["info", &data("kite.json")]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["euler"]["genus"], 1);
    assert_eq!(v["euler"]["f_count"], 4);

    let dir = std::env::temp_dir().join(format!("surfgraph-dual-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let once = dir.join("once.json");
    let twice = dir.join("twice.json");
    assert_eq!(surfgraph(&["dual", &data("kite.json"), "--out", once.to_str().unwrap()]).status.code(), Some(0));
    assert_eq!(surfgraph(&["dual", once.to_str().unwrap(), "--out", twice.to_str().unwrap()]).status.code(), Some(0));
    let original = surfgraph::RibbonGraph::read_file(data("kite.json")).unwrap();
    assert_eq!(surfgraph::RibbonGraph::read_file(&twice).unwrap(), original);
}

#[test]
fn verify_and_batch_succeed() {
    let out = surfgraph(&["verify", &data("kite.json"), "--kmax", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let out = surfgraph(&["batch", "--edges", "3", "--kmax", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["graphs"], 20);
    assert_eq!(v["failures"], 0);
}

#[test]
fn generate_writes_one_map_per_line() {
    let out = surfgraph(&["generate", "--edges", "3", "--planar"]);
    assert_eq!(out.status.code(), Some(0));
    let maps = surfgraph::ribbon::read_corpus(&out.stdout[..]).unwrap();
    assert_eq!(maps.len(), 14);
    assert!(maps.iter().all(|g| g.is_planar()));
}

#[test]
fn witness_accepts_leading_minus() {
    let out = surfgraph(&["witness", &data("face_matrix_example.json"), "--+-"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let out = surfgraph(&["witness", &data("face_matrix_example.json"), "+-+-"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn input_errors_exit_with_two() {
    let bad = temp("odd.json", r#"{"sigma": [[0, 1, 2]], "edges": []}"#);
    assert_eq!(surfgraph(&["info", bad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(surfgraph(&["info", "/nonexistent/map.json"]).status.code(), Some(2));
    assert_eq!(surfgraph(&["count", &data("kite.json"), "--class", "xyz"]).status.code(), Some(2));
    assert_eq!(surfgraph(&["witness", &data("kite.json"), "++"]).status.code(), Some(2));
}

#[test]
fn guards_exit_with_three_unless_overridden() {
    assert_eq!(surfgraph(&["generate", "--edges", "6"]).status.code(), Some(3));
    let big = temp("loops.json", &loops(21));
    let path = big.to_str().unwrap();
    assert_eq!(surfgraph(&["count", path, "--class", "ao"]).status.code(), Some(3));
    let out = Command::new(env!("CARGO_BIN_EXE_surfgraph"))
        .args(["count", path, "--class", "ao"])
        .env("SURFGRAPH_GUARD_OVERRIDE", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(json(&out)["count"], 0);
}
