use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_partgenus"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    serde_json::from_str(&stdout(&all)).expect("valid json")
}

#[test]
fn genus_of_worked_example() {
    let v = json(&["genus", "1,3,4,6,7|2,5,9|8|10"]);
    assert_eq!(v["genus"], 2);
    assert_eq!(v["genus_max"], 3);
    assert_eq!(v["face_count"], 3);
    assert_eq!(v["type"], "[1^2 3 5]");
    assert_eq!(json(&["genus", "1,3|2,4"])["genus"], 1);
    assert_eq!(json(&["genus", "1"])["genus"], 0);
    assert!(stdout(&["genus", "1,3|2,4"]).contains("genus      1"));
}

#[test]
fn parse_errors_exit_nonzero_with_position() {
    let out = run(&["genus", "1,2|2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("position 4"));
}

#[test]
fn enumerate_counts() {
    assert_eq!(stdout(&["enumerate", "--n", "8", "--type", "2^4", "--genus", "2", "--class", "primitive", "--count"]).trim(), "21");
    assert_eq!(stdout(&["enumerate", "--n", "4", "--genus", "1", "--count"]).trim(), "1");
    assert_eq!(json(&["enumerate", "--n", "5", "--count"])["count"], 52);
}

#[test]
fn enumerate_table_json() {
    let v = json(&["enumerate", "--n", "4"]);
    assert_eq!(v["n"], 4);
    let rows = v["counts"].as_array().unwrap();
    let total: u64 = rows.iter().map(|r| r["count"].as_u64().unwrap()).sum();
    assert_eq!(total, 15);
    assert!(rows.iter().any(|r| r["type"] == "[2^2]" && r["genus"] == 1 && r["count"] == 1));
}

#[test]
fn enumerate_list_filters() {
    let listed = stdout(&["enumerate", "--n", "4", "--genus", "1", "--list"]);
    assert_eq!(listed.trim(), "1,3|2,4");
    let v = json(&["enumerate", "--n", "3", "--singleton-free", "--list"]);
    assert_eq!(v.as_array().unwrap().len(), 1);
}

#[test]
fn orbits_of_two_triangles() {
    let v = json(&["enumerate", "--n", "6", "--type", "3^2", "--genus", "2", "--orbits"]);
    let orbits = v["orbits"].as_array().unwrap();
    assert_eq!(orbits.len(), 1);
    assert_eq!(orbits[0]["stabilizer_order"], 6);
    assert_eq!(orbits[0]["orbit_length"], 1);
    let out = run(&["enumerate", "--n", "6", "--orbits"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn budget_is_enforced() {
    let out = run(&["--budget", "10", "enumerate", "--n", "6"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}

#[test]
fn reduce_trace() {
    let text = stdout(&["reduce", "--trace", "1,3,4,6,7|2,5,9|8|10"]);
    assert!(text.contains("remove singleton"));
    assert!(text.ends_with("result: 1,3,5|2,4,6 (primitive)\n"));
    let v = json(&["reduce", "1,2|3", "--confluence", "5", "--seed", "7"]);
    assert_eq!(v["trace"]["classification"], "empty");
    assert_eq!(v["confluent"], true);
}

#[test]
fn gf_expansions() {
    assert_eq!(
        stdout(&["gf", "--genus", "1", "--kappa", "doublets", "--order", "10"]).trim(),
        "x^4 + 10*x^6 + 70*x^8 + 420*x^10 + O(x^11)"
    );
    assert_eq!(
        stdout(&["gf", "--kappa", "ones", "--order", "5"]).trim(),
        "1 + x + 2*x^2 + 5*x^3 + 14*x^4 + 42*x^5 + O(x^6)"
    );
    let v = json(&["gf", "--genus", "2", "--kappa", "triplets", "--order", "9"]);
    let coeffs = v["coefficients"].as_array().unwrap();
    assert_eq!(coeffs[0]["power"], 6);
    assert_eq!(coeffs[1]["terms"][0]["coefficient"], "144");
    let symbolic = stdout(&["gf", "--genus", "1", "--order", "4"]);
    assert!(symbolic.contains("k2^2*x^4"));
    assert_eq!(run(&["gf", "--genus", "3"]).status.code(), Some(2));
    assert_eq!(run(&["gf", "--kappa", "bogus"]).status.code(), Some(2));
}

#[test]
fn verify_passes() {
    for g in ["0", "1", "2"] {
        let text = stdout(&["verify", "--n-max", "8", "--genus", g]);
        assert!(text.trim_end().ends_with("pass"), "{text}");
    }
    let v = json(&["verify", "--n-max", "5", "--fixtures"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["oracle"].as_array().unwrap().len(), 3);
    assert!(v["fixtures"].as_array().unwrap().len() > 10);
    assert_eq!(run(&["verify", "--kappa", "ones"]).status.code(), Some(2));
}

#[test]
fn census_table() {
    let v = json(&["--threads", "1", "census", "--genus", "2"]);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 13);
    let row = |n: u64| rows.iter().find(|r| r["n"] == n).unwrap();
    assert_eq!(row(18)["two_vertices_only"], 105);
    assert_eq!(row(12)["two_3_vertices_semiprim"], 36);
    assert_eq!(run(&["census", "--genus", "1"]).status.code(), Some(2));
}
