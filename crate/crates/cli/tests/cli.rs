use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn k4v(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_k4v")).args(args).env("K4V_THREADS", "2").output().expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("invalid JSON ({e}): {}", String::from_utf8_lossy(&out.stdout)))
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("k4v-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn axioms_at_low_bounds_are_green() {
    let out = k4v(&["axioms", "--max-tpow", "0", "--max-partial", "0"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let r = report(&out);
    assert_eq!(r["passed"], true);
    assert_eq!(r["command"], "axioms");
    assert!(r["checks"].as_array().unwrap().len() >= 8);
}

#[test]
fn corrupted_cocycle_reports_a_triple() {
    let out = k4v(&["axioms", "--max-tpow", "1", "--max-partial", "0", "--corrupt-cocycle"]);
    assert_eq!(out.status.code(), Some(1));
    let r = report(&out);
    let failed: Vec<&Value> = r["checks"].as_array().unwrap().iter().filter(|c| c["passed"] == false).collect();
    assert_eq!(failed.len(), 1);
    assert_eq!(failed[0]["name"], "super-Jacobi");
    let triple = failed[0]["counterexample"].as_str().unwrap();
    assert!(triple.starts_with('(') && triple.contains(','), "{triple}");
}

#[test]
fn degree_three_search_finds_one_vector() {
    let out = k4v(&["search", "--weight", "1", "0", "5/2", "-1/2", "--degree", "3"]);
    assert!(out.status.success());
    let r = report(&out);
    assert_eq!(r["result"]["kernel_dim"], 1);
    assert_eq!(r["result"]["expected_labels"], serde_json::json!(["3a"]));
    // The weight is echoed back in exact form.
    assert_eq!(r["result"]["weight"]["mu_t"], serde_json::json!({"re": "5/2", "im": "0/1"}));
    assert_eq!(r["result"]["weight"]["mu_c"], serde_json::json!({"re": "-1/2", "im": "0/1"}));
}

#[test]
fn dual_path_agrees() {
    let out = k4v(&["search", "--weight", "0", "1", "3/2", "3/2", "--degree", "1", "--dual-path"]);
    assert!(out.status.success());
    let r = report(&out);
    assert_eq!(r["result"]["kernel_dim"], 1);
    assert_eq!(r["result"]["path"], "Dual");
    assert!(r["checks"]
        .as_array()
        .unwrap()
        .iter()
        .any(|c| c["name"] == "dual path agrees with the direct path" && c["passed"] == true));
}

#[test]
fn irreducible_weight_has_empty_kernel() {
    let out = k4v(&["search", "--weight", "0", "0", "2", "0", "--degree", "2"]);
    assert!(out.status.success());
    assert_eq!(report(&out)["result"]["kernel_dim"], 0);
}

#[test]
fn malformed_weight_is_an_error() {
    let out = k4v(&["search", "--weight", "0", "0", "x", "0", "--degree", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("invalid weight"));
}

#[test]
fn zero_degree_is_an_error() {
    let out = k4v(&["search", "--weight", "0", "0", "0", "0", "--degree", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn small_theorem_sweep_records_seed() {
    let dir = scratch("sweep");
    let path = dir.join("report.json");
    let out = k4v(&[
        "verify-theorems",
        "--max-mn",
        "1",
        "--degrees",
        "1,2",
        "--off-list",
        "4",
        "--seed",
        "7",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(out.stdout.is_empty());
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(r["seed"], 7);
    assert_eq!(r["passed"], true);
    assert!(r["result"].as_array().unwrap().iter().any(|x| x["matched_theorem_label"] == "1a"));
}

#[test]
fn sweep_output_is_deterministic() {
    let args = ["verify-theorems", "--max-mn", "1", "--degrees", "1", "--off-list", "3", "--no-cross-check"];
    let strip = |mut v: Value| {
        v["elapsed_ms"] = Value::Null;
        v
    };
    assert_eq!(strip(report(&k4v(&args))), strip(report(&k4v(&args))));
}

#[test]
fn complexes_export_graph_files() {
    let dir = scratch("graph");
    let json = dir.join("graph.json");
    let out = k4v(&["complexes", "--max-mn", "2", "--out", json.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let graph: Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(graph["two_paths"], graph["vanishing_compositions"]);
    let edge = &graph["edges"][0];
    assert!(edge["from"].is_array() && edge["degree"].is_u64() && edge["label"].is_string());
    let dot = std::fs::read_to_string(dir.join("graph.dot")).unwrap();
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("->"));
}

#[test]
fn coadjoint_small_degree() {
    let out = k4v(&["coadjoint", "--max-degree", "4", "--max-s", "1"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let r = report(&out);
    let names: Vec<&str> = r["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert!(names.contains(&"φ is bijective in degree 4"));
    assert!(names.iter().any(|n| n.contains("no singular vectors of degree 3")));
}
