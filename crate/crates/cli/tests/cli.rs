//! Exit codes and output shapes of the command-line interface.

use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_charlab")).args(args).output().expect("runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn orbits_lists_the_expected_labels() {
    let (code, stdout, _) = run(&["orbits", "--pair", "BDI:2,1", "--format", "json"]);
    assert_eq!(code, 0);
    let rows: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 2);
}

#[test]
fn atlas_list_has_five_labels_for_rank_one_symplectic_split() {
    let (code, stdout, _) = run(&["atlas", "--pair", "CI:1", "--list"]);
    assert_eq!(code, 0);
    let rows: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 5);
}

#[test]
fn bad_pair_syntax_is_a_usage_error() {
    let (code, _, stderr) = run(&["orbits", "--pair", "XX:1"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("unknown pair type"));
}

#[test]
fn unknown_suite_and_identity_are_usage_errors() {
    let (code, _, _) = run(&["verify", "--suite", "nope"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["verify", "--identity", "nope"]);
    assert_eq!(code, 2);
}

#[test]
fn single_identity_verification_exits_zero_when_it_holds() {
    let (code, stdout, _) = run(&["verify", "--identity", "Fodd", "--order", "40"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("\"holds\":true"));
}

#[test]
fn richardson_count_prints_exact_rationals() {
    let (code, stdout, _) = run(&["richardson", "--pair", "BDI:0,0", "--count"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "1/2");
    let (code, stdout, _) = run(&["richardson", "--pair", "CI:2", "--count"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "4");
}

#[test]
fn series_command_prints_coefficients() {
    let (code, stdout, _) = run(&["series", "--name", "hecke-d", "--order", "4"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "k,coefficient\n0,1\n1,1\n2,2\n3,3\n4,4");
}

#[test]
fn counts_fullsupport_reports_both_modes() {
    let (code, stdout, _) = run(&["counts", "--pair", "BDI:0,0", "--what", "fullsupport"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("formula,1/2"));
    assert!(stdout.contains("true,1"));
}

#[test]
fn atlas_verify_emits_the_matrix_header() {
    let (code, stdout, _) = run(&["atlas", "--verify", "--max-rank", "3"]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("pair,orbital,charLabels,formulaValue,ok"));
    assert!(!stdout.contains(",false"));
}

#[test]
fn weyl_rank_bound_exceeded_is_a_runtime_failure() {
    let (code, _, stderr) = run(&["weyl", "--pair", "CI:9", "--chi", "0"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("brute force bound"));
}
