use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/fixtures/presentations")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn ncgb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncgb")).args(args).env_remove("NCGB_CAP").output().unwrap()
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn hilbert_of_the_quantum_plane() {
    let o = ncgb(&["hilbert", "--cap", "6", "--collapse", "--input", &fixture("quantum_plane.ncp"), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(String::from_utf8(o.stdout).unwrap().trim(), "[1,2,3,4,5,6,7]");
}

#[test]
fn cap_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_ncgb"))
        .args(["hilbert", "--collapse", "--json", "-i", &fixture("commutative_plane.ncp")])
        .env("NCGB_CAP", "3")
        .output()
        .unwrap();
    assert_eq!(stdout_json(&o), serde_json::json!([1, 2, 3, 4]));
}

#[test]
fn gb_of_a() {
    let o = ncgb(&["gb", "--max-total-degree", "11", "--input", &fixture("a_p2.ncp"), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = stdout_json(&o);
    let basis = v.as_array().unwrap();
    assert_eq!(basis.len(), 4);
    assert_eq!(basis[0]["lead_word"], "x2*x1^2");
    assert_eq!(basis[0]["multidegree"], "(2,1)");
    assert_eq!(basis[3]["minimal"], false);
    assert_eq!(basis[0]["terms"][1]["coeff"], "-4");
}

#[test]
fn verify_family_a() {
    let o = ncgb(&["verify-family", "A", "--param", "p=2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = stdout_json(&o);
    assert_eq!(v["passed"], true);
    assert_eq!(v["family"], "A");
}

#[test]
fn output_is_deterministic_with_sorted_keys() {
    let args = ["verify-family", "F", "--param", "p=2", "--param", "q=-3", "--json"];
    let a = ncgb(&args);
    let b = ncgb(&args);
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(text.starts_with("{\"cap\":12,\"family\":\"F\",\"first_failure\":null"), "{text}");
}

#[test]
fn failed_checks_exit_with_one() {
    let o = ncgb(&["normal", "-i", &fixture("a_p2.ncp"), "--element", "x1", "--json"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout_json(&o)["normality"]["normal"], false);
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(ncgb(&["search", "--type", "356"]).status.code(), Some(2));
    assert_eq!(ncgb(&["frobnicate"]).status.code(), Some(2));
    let o = ncgb(&["verify-family", "A", "--param", "p=0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("p ≠ 0"));
    assert_eq!(ncgb(&["hilbert", "-i", "/nonexistent.ncp"]).status.code(), Some(2));
}

fn complete_nodes(kind: &str) -> usize {
    let o = ncgb(&["search", "--type", kind, "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = stdout_json(&o);
    assert_eq!(v["type"], kind);
    let shapes = v["shapes"].as_array().unwrap();
    assert!(!shapes.is_empty());
    shapes.iter().flat_map(|s| s["nodes"].as_array().unwrap()).filter(|n| n["status"]["status"] == "complete").count()
}

#[test]
fn search_tree() {
    assert_eq!(complete_nodes("355"), 1);
    assert_eq!(complete_nodes("4445"), 0);
}

#[test]
fn chains_and_lyndon() {
    let o = ncgb(&["chains", "-i", &fixture("a_p2.ncp"), "--json"]);
    let v = stdout_json(&o);
    assert_eq!(v["invariants"]["d"], 5);
    assert_eq!(v["levels"][5]["degrees"]["(4,7)"], 1);
    let o = ncgb(&["lyndon", "-i", &fixture("a_p2.ncp"), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout_json(&o)["basis"]["gk"], 5);
}
