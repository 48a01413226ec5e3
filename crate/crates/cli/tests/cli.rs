use serde_json::Value;
use std::process::{Command, Output};

fn igusa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_igusa")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid json")
}

const EXAMPLE: &str = "x^3+x*y+y^2+z^2";

#[test]
fn zeta_json_has_closed_form() {
    let out = igusa(&["zeta", "-f", EXAMPLE, "--prime", "3", "--lmax", "3", "--format", "json"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["reduced"]["text"], "(-2/27*t^3 + 2*t^2) / ((t - 3) * (t^2 - 27))");
    assert_eq!(v["faces"].as_array().unwrap().len(), 11);
    assert_eq!(v["oracle"]["agrees"], true);
}

#[test]
fn symbolic_zeta_is_free_of_symbols() {
    let out = igusa(&["zeta", "-f", EXAMPLE, "--symbolic", "--format", "json"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["depends_on_symbols"], false);
}

#[test]
fn character_twist_keeps_a_pole() {
    let out = igusa(&["char-zeta", "-f", EXAMPLE, "--prime", "5", "--order", "2", "--format", "json"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["reduced"]["text"], "(-4/25*t^2) / ((t^2 - 125))");
}

#[test]
fn motivic_specializes() {
    let out = igusa(&["motivic", "-f", EXAMPLE, "--specialize", "5", "--format", "json"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["specialized"]["agrees_with_padic"], true);
}

#[test]
fn fundpar_lists_extra_point() {
    let out = igusa(&["fundpar", "2,4,3", "0,1,0", "0,0,1", "--format", "json"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["multiplicity"], 2);
    let pts: Vec<Value> = v["points"].as_array().unwrap().iter().map(|p| p["point"].clone()).collect();
    assert!(pts.contains(&serde_json::json!([1, 2, 2])));
    assert_eq!(v["closed_form_agrees"], true);
}

#[test]
fn verify_passes() {
    let out = igusa(&["verify", "-f", EXAMPLE, "--prime", "3", "--lmax", "4"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn bad_input_exits_one() {
    assert_eq!(igusa(&["zeta", "-f", "x^^2", "--prime", "3"]).status.code(), Some(1));
    assert_eq!(igusa(&["zeta", "-f", "x", "--prime", "4"]).status.code(), Some(1));
    assert_eq!(igusa(&["fundpar", "1,0", "2,0"]).status.code(), Some(1));
    assert_eq!(igusa(&["zeta"]).status.code(), Some(1));
    assert_eq!(igusa(&["--help"]).status.code(), Some(0));
}
