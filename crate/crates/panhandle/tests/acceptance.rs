//! One test per acceptance criterion. Each writes a single PASS/FAIL line
//! straight to stderr so the line shows up even when output is captured.

use std::io::Write;

use panhandle::verify::{run_suite, SuiteReport};

fn report(criterion: u32) -> SuiteReport {
    let r = run_suite(&criterion.to_string()).expect("known criterion");
    let failed: Vec<String> = r.failures().map(|c| format!("{} ({})", c.id, c.detail)).collect();
    let line = if r.pass {
        format!("criterion {criterion:>2} [{}]: PASS ({} checks)\n", r.suite, r.checks.len())
    } else {
        format!("criterion {criterion:>2} [{}]: FAIL {}/{} checks failed: {}\n", r.suite, failed.len(), r.checks.len(), failed.join("; "))
    };
    std::io::stderr().write_all(line.as_bytes()).unwrap();
    r
}

fn assert_criterion(criterion: u32) {
    let r = report(criterion);
    let failed: Vec<&str> = r.failures().map(|c| c.id.as_str()).collect();
    assert!(r.pass, "criterion {criterion} failed checks: {failed:?}");
}

#[test]
fn criterion_01_table_reproduction() {
    assert_criterion(1);
}

#[test]
fn criterion_02_panhandle_sweep() {
    assert_criterion(2);
}

#[test]
fn criterion_03_adams_plethysm() {
    assert_criterion(3);
}

#[test]
fn criterion_04_adjoint_closed_forms() {
    assert_criterion(4);
}

#[test]
fn criterion_05_oracle_equivalence() {
    assert_criterion(5);
}

#[test]
fn criterion_06_degree_laws() {
    assert_criterion(6);
}

#[test]
fn criterion_07_invariant_formulas() {
    assert_criterion(7);
}

#[test]
fn criterion_08_grid_tb() {
    assert_criterion(8);
}

#[test]
fn criterion_09_conway_rows() {
    assert_criterion(9);
}

#[test]
fn criterion_10_large_n() {
    assert_criterion(10);
}

#[test]
fn calibration_rederives_ledger() {
    assert_criterion(0);
}
