use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_panhandle")).args(args).output().expect("spawn panhandle")
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json on stdout")
}

#[test]
fn trefoil_table_csv() {
    let o = run(&["table", "--torus", "2,3", "--framing", "-3"]);
    assert!(o.status.success());
    let csv = String::from_utf8(o.stdout).unwrap();
    let mut lines = csv.lines();
    assert!(lines.next().unwrap().starts_with("z\\v,"));
    // lowest row is (v^-1 - v) times the framed trefoil row; its coefficients sum to 0
    let low: i64 = lines.next().unwrap().split(',').skip(1).map(|c| c.parse::<i64>().unwrap()).sum();
    assert_eq!(low, 0);
}

#[test]
fn vertical_is_default_framing() {
    let a = run(&["table", "--torus", "2,3", "--format", "json"]);
    let b = run(&["table", "--torus", "2,3", "--corrected", "0", "--format", "json"]);
    let c = run(&["table", "--torus", "2,3", "--framing", "-3", "--format", "json"]);
    assert_eq!(stdout_json(&a), stdout_json(&b));
    assert_eq!(stdout_json(&a), stdout_json(&c));
}

#[test]
fn invariants_of_t34() {
    let o = run(&["invariants", "--torus", "3,4"]);
    assert!(o.status.success());
    let v = stdout_json(&o);
    assert_eq!(v["a"], 7);
    assert_eq!(v["ell"], 7);
    assert_eq!(v["mfw"], 7);
    assert_eq!(v["vertical_framing"][0], -8);
}

#[test]
fn oracle_on_braid() {
    let o = run(&["oracle", "--braid", "s1 s1 s1"]);
    assert!(o.status.success());
    let v = stdout_json(&o);
    assert_eq!(v["components"], 1);
    assert_eq!(v["polynomial"]["terms"].as_array().unwrap().len(), 3);
}

#[test]
fn oracle_budget_is_a_compute_error() {
    let o = run(&["oracle", "--braid", "1 1 1", "--cable", "0", "--max-crossings", "4"]);
    assert_eq!(o.status.code(), Some(1));
    let e: Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(e["error"], "BudgetExceeded");
}

#[test]
fn usage_errors_exit_3() {
    for args in [&["table", "--torus", "2,3,4"][..], &["frobnicate"], &["verify", "--suite", "nope"]] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(3), "{args:?}");
        let e: Value = serde_json::from_slice(&o.stderr).unwrap();
        assert_eq!(e["error"], "Usage");
    }
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn verify_exit_codes() {
    let ok = run(&["verify", "--suite", "adams"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(stdout_json(&ok)["pass"], true);
    let grid = run(&["verify", "--suite", "8"]);
    assert_eq!(grid.status.code(), Some(0));
}

#[test]
fn stabilized_grid_loses_tb() {
    let base = stdout_json(&run(&["grid", "--standard", "2,3"]));
    let st = stdout_json(&run(&["grid", "--standard", "2,3", "--stabilize", "1^2"]));
    assert_eq!(st["size"].as_i64().unwrap(), base["size"].as_i64().unwrap() + 2);
    assert_eq!(st["tb"].as_i64().unwrap(), base["tb"].as_i64().unwrap() - 2);
}
