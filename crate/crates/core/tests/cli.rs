//! The `grpn` binary end to end.

use std::process::{Command, Output};

use serde_json::Value;

fn grpn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grpn")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

#[test]
fn stats_of_an_element() {
    let out = grpn(&["stats", "--r", "8", "--p", "2", "--n", "6", "--element", "6 2^5 4^4 3^1 1^6 5^3"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["stats"]["fmaj"], 59);
    assert_eq!(v["stats"]["fdes"], 16);
}

#[test]
fn enumerate_and_basis() {
    let out = grpn(&["enumerate", "--r", "1", "--p", "1", "--n", "1"]);
    assert_eq!(json(&out), serde_json::json!(["1"]));
    let out = grpn(&["basis", "--r", "6", "--p", "3", "--n", "2"]);
    assert_eq!(json(&out).as_array().unwrap().len(), 24);
    let out = grpn(&["enumerate", "--r", "2", "--p", "2", "--n", "2", "--which", "h"]);
    assert_eq!(json(&out).as_array().unwrap().len(), 4);
}

#[test]
fn straighten_and_hilbert() {
    let out = grpn(&["straighten", "--r", "6", "--p", "2", "--n", "3", "--exponents", "11,8,1"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("1^5 3^1 2^2"), "{text}");
    let out = grpn(&["hilbert", "--r", "2", "--p", "2", "--n", "2"]);
    assert_eq!(json(&out)["coefficients"], serde_json::json!(["1", "2", "1"]));
}

#[test]
fn tables_and_tableaux() {
    let out = grpn(&["chartable", "--r", "2", "--n", "2"]);
    assert!(out.status.success());
    let csv = String::from_utf8(out.stdout).unwrap();
    assert_eq!(csv.lines().count(), 6);
    let out = grpn(&["tableaux", "--r", "2", "--n", "2", "--shape", "[[1],[1]]"]);
    assert!(out.status.success());
    let out = grpn(&["orbits", "--r", "2", "--p", "2", "--n", "2"]);
    assert!(out.status.success());
    let out = grpn(&["osyt", "--r", "2", "--p", "2", "--n", "2"]);
    assert!(out.status.success());
}

#[test]
fn verification_exit_codes() {
    let out = grpn(&["verify", "fmaj-product", "--r", "6", "--p", "3", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["pass"], true);
    let out = grpn(&["verify", "main", "--r", "2", "--p", "2", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["all_equal"], true);
    let out = grpn(&["verify", "pri", "--r", "6", "--p", "3", "--n", "2", "--cap", "4", "--strict-paper"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["pass"], false);
}

#[test]
fn usage_errors() {
    let out = grpn(&["enumerate", "--r", "4", "--p", "3", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    assert_eq!(grpn(&["stats", "--r", "2", "--n", "2", "--element", "1 1"]).status.code(), Some(2));
    assert_eq!(grpn(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "stembridge", "--r", "3", "--p", "3", "--n", "2"];
    assert_eq!(grpn(&args).stdout, grpn(&args).stdout);
}
