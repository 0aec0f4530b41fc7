use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/data").join(name)
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("coapprox-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn write_input(name: &str, text: &str) -> PathBuf {
    let path = scratch(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn run(args: &[&str], input: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coapprox"))
        .args(args)
        .arg("--input")
        .arg(input)
        .output()
        .unwrap()
}

fn report(args: &[&str], input: &Path) -> Value {
    let out = run(args, input);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["tool"], "coapprox");
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(v["command"], args[0]);
    v
}

fn target<'a>(v: &'a Value, name: &str) -> &'a Value {
    v["result"]["targets"]
        .as_array()
        .unwrap()
        .iter()
        .find(|t| t["name"] == name)
        .unwrap()
}

fn strings(v: &Value) -> Vec<&str> {
    v.as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect()
}

#[test]
fn analyze_reports() {
    let v = report(&["analyze"], &data("worked_l1_6.json"));
    assert_eq!(v["result"]["zero_set"], serde_json::json!([]));
    assert_eq!(v["result"]["d"], 4);
    let v = report(&["analyze"], &data("y1_l1_7.json"));
    assert_eq!(v["result"]["zero_set"], serde_json::json!([4, 7]));
}

#[test]
fn norming_set_report() {
    let v = report(&["norming-set"], &data("worked_l1_6.json"));
    assert_eq!(v["result"]["q"], 4);
    assert_eq!(v["result"]["spanning_basis"].as_array().unwrap().len(), 4);
}

#[test]
fn solve_report() {
    let v = report(&["solve"], &data("worked_l1_6.json"));
    assert_eq!(target(&v, "b1")["kind"], "not-exists");
    assert_eq!(target(&v, "b1")["brute_force"]["passing_candidates"], 0);
    let b2 = target(&v, "b2");
    assert_eq!(b2["kind"], "unique");
    assert_eq!(strings(&b2["coefficients"]), ["1/7", "-3/7", "1"]);
    assert_eq!(b2["oracle"]["verdict"], "confirmed");
}

#[test]
fn classify_reports() {
    let expected = [
        ("y1_l1_7.json", true, false),
        ("y2_l1_7.json", false, false),
        ("y3_l1_5.json", true, true),
    ];
    for (file, coproximinal, co_chebyshev) in expected {
        let v = report(&["classify"], &data(file));
        assert_eq!(v["result"]["coproximinal"], coproximinal, "{file}");
        assert_eq!(v["result"]["co_chebyshev"], co_chebyshev, "{file}");
    }
}

#[test]
fn threshold_report() {
    let v = report(&["threshold"], &data("extended_l1_7.json"));
    let t = target(&v, "b1-extended");
    assert_eq!(t["delta0"], "41/21");
    assert_eq!(t["exists"], false);
    assert_eq!(target(&v, "b1-at-threshold")["exists"], true);
}

#[test]
fn validation_errors_exit_2() {
    let bad = write_input(
        "bad.json",
        r#"{"n": 2, "basis": [["1", "1/0"]], "targets": []}"#,
    );
    let out = run(&["analyze"], &bad);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("basis[1][2]"));
    let out = run(&["bogus"], &bad);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["solve", "--trials", "0"], &data("worked_l1_6.json"));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn too_many_hyperplanes_exit_3() {
    let ones: Vec<String> = (0..21).map(|_| "\"1\"".to_string()).collect();
    let ks: Vec<String> = (1..=21).map(|k| format!("\"{k}\"")).collect();
    let text = format!(
        r#"{{"n": 21, "basis": [[{}], [{}]], "targets": []}}"#,
        ones.join(","),
        ks.join(",")
    );
    let out = run(&["norming-set"], &write_input("wide.json", &text));
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn threshold_without_zero_set_exits_4() {
    let out = run(&["threshold"], &data("worked_l1_6.json"));
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn output_file_is_deterministic() {
    let path = scratch("solve.json");
    let status = Command::new(env!("CARGO_BIN_EXE_coapprox"))
        .args(["solve", "--seed", "11", "--output"])
        .arg(&path)
        .arg("--input")
        .arg(data("worked_l1_6.json"))
        .status()
        .unwrap();
    assert!(status.success());
    let first = std::fs::read(&path).unwrap();
    let again = run(&["solve", "--seed", "11"], &data("worked_l1_6.json"));
    assert_eq!(first, again.stdout);
    let v: Value = serde_json::from_slice(&first).unwrap();
    assert_eq!(target(&v, "b2")["oracle"]["seed"], 11);
}
