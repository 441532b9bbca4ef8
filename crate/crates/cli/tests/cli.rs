use std::process::{Command, Output};

use serde_json::Value;

fn asw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_asw"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = asw(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn strings(v: &Value) -> Vec<&str> {
    v.as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect()
}

#[test]
fn series_z2_over_f2() {
    let v = json(&["series", "--q", "2", "--p", "2", "--group", "1", "--trunc", "4"]);
    assert_eq!(strings(&v["coefficients"]), ["1", "0", "6", "0", "24"]);
    assert_eq!(strings(&v["counts"]), ["1", "1", "7", "7", "31"]);
    assert_eq!(v["group"], "Z/2");
}

#[test]
fn disc_bound_for_z4() {
    let v = json(&["bounds", "disc", "--p", "2", "--group", "2", "--f-exp", "3"]);
    assert_eq!(v["bound"], "8");
}

#[test]
fn compare_z2_all_equal() {
    let v = json(&["compare", "--q", "2", "--p", "2", "--group", "1", "--trunc", "8"]);
    assert_eq!(v["all_equal"], true);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 9);
    assert!(rows.iter().all(|r| r["verdict"] == "equal"));
    assert_eq!(rows[8]["engine"], "384");
}

#[test]
fn compare_klein_four() {
    let v = json(&["compare", "--q", "2", "--p", "2", "--group", "1,1", "--trunc", "4"]);
    assert_eq!(v["all_equal"], true);
}

#[test]
fn csv_series_table() {
    let out = asw(&["series", "--q", "2", "--p", "2", "--group", "1", "--trunc", "2", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "n,coefficient,count\n0,1,1\n1,0,1\n2,6,7\n"
    );
}

#[test]
fn csv_flat_report() {
    let out = asw(&["bounds", "disc", "--p", "2", "--group", "2", "--f-exp", "3", "--format", "csv"]);
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.starts_with("key,value\n"));
    assert!(s.contains("\nbound,8\n"));
}

#[test]
fn group_invariants() {
    let v = json(&["group", "--p", "2", "--group", "1,1"]);
    assert_eq!(v["alpha"], "3/2");
    assert_eq!(v["cyclic"], false);
    assert_eq!(strings(&v["signature"]), ["2"]);
}

#[test]
fn local_factor_identities_hold() {
    let v = json(&["local-factor", "--p", "3", "--group", "1", "--trunc", "6"]);
    assert_eq!(v["identity_ok"], true);
    assert_eq!(v["psi_gap_ok"], true);
    assert_eq!(strings(&v["psi"])[1], "0");
}

#[test]
fn delsarte_counts() {
    let v = json(&["delsarte", "--p", "2", "--group", "1,1", "--index", "4,2"]);
    assert_eq!(v["counts"]["epimorphisms"], "6");
    assert_eq!(v["counts"]["quotients"], "1");
    assert_eq!(v["f_polynomial"]["text"], "X1^2 - 3*X1 + 2");
}

#[test]
fn oracles() {
    let v = json(&["oracle", "unit", "--q", "2", "--pi", "0,1", "--m", "5"]);
    assert_eq!(v["hasse_holds"], true);
    assert_eq!(strings(&v["power_indices"]), ["4", "2", "2"]);
    let v = json(&["oracle", "asw", "--p", "2", "--n", "4"]);
    assert_eq!(strings(&v["coefficients"]), ["1", "0", "6", "0", "24"]);
    let v = json(&["oracle", "asw", "--p", "2", "--place", "0,1:2"]);
    assert_eq!(v["exact_conductor_count"], "2");
}

#[test]
fn diagnose_reports_period() {
    let v = json(&["diagnose", "--q", "2", "--p", "2", "--group", "1", "--trunc", "16"]);
    assert_eq!(v["period"], "2");
    assert_eq!(v["alpha"], "1");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["series", "--q", "2", "--p", "2", "--group", "1,2", "--trunc", "4"][..],
        &["series", "--q", "2", "--p", "2", "--group", "0", "--trunc", "4"],
        &["series", "--q", "2", "--p", "2", "--trunc", "4"],
        &["bogus"],
        &["series", "--q", "2", "--p", "2", "--group", "1", "--trunc", "4", "--format", "xml"],
    ] {
        assert_eq!(asw(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn computation_errors_exit_1() {
    for args in [
        &["series", "--q", "4", "--p", "3", "--group", "1", "--trunc", "4"][..],
        &["series", "--q", "2", "--p", "2", "--group", "1", "--trunc", "1000"],
        &["oracle", "asw", "--p", "2", "--n", "40"],
        &["compare", "--q", "2", "--p", "2", "--group", "2", "--trunc", "4"],
        &["oracle", "unit", "--q", "2", "--pi", "1,0,1", "--m", "2"],
    ] {
        let out = asw(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error: "));
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["diagnose", "--q", "3", "--p", "3", "--group", "1", "--trunc", "12"];
    let a = asw(&args);
    let b = asw(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}
