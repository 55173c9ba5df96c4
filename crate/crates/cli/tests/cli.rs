use std::process::{Command, Output};

fn hecke(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hecke")).args(args).output().expect("spawn hecke")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

#[test]
fn p_for_a1() {
    let o = hecke(&["compute", "P", "--type", "A1", "--lambda", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "e[1] + e[-1]");
}

#[test]
fn pieri_a1_from_zero() {
    let o = hecke(&["compute", "pieri", "--type", "A1", "--lambda", "0", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["U"], "0");
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 1);
    assert_eq!(terms[0]["nu"], serde_json::json!([1]));
    assert_eq!(terms[0]["V"], "q^-1 + q");
}

#[test]
fn quasi_minuscule_pieri_runs() {
    let o = hecke(&["pieri", "--type", "C2", "--omega", "quasi", "--lambda", "2,1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!json(&o)["terms"].as_array().unwrap().is_empty());
}

#[test]
fn hall_littlewood_expansion() {
    let o = hecke(&["hl", "--n", "3", "--lambda", "2,1,0", "--expand"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let terms = v["terms"].as_array().unwrap();
    // All permutations of (2,1,0) plus (1,1,1).
    assert_eq!(terms.len(), 7);
    let at = |m: [i64; 3]| terms.iter().find(|t| t["monomial"] == serde_json::json!(m)).unwrap()["coeff"].clone();
    assert_eq!(at([2, 1, 0]), "q^4");
}

#[test]
fn hall_littlewood_at_zero_is_schur() {
    let o = hecke(&["hl", "--n", "3", "--lambda", "2,1,0", "--q", "0", "--expand"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let terms = v["terms"].as_array().unwrap();
    let total: i64 = terms.iter().map(|t| t["coeff"].as_str().unwrap().parse::<i64>().unwrap()).sum();
    // s_{21} in three variables has eight tableaux.
    assert_eq!(total, 8);
}

#[test]
fn morris_agrees_with_brute_force() {
    let o = hecke(&["morris", "--n", "3", "--r", "2", "--lambda", "2,1,0", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["brute_force_agrees"], true);
    assert_eq!(v["terms"].as_array().unwrap().len(), 3);
}

#[test]
fn spherical_value() {
    let o = hecke(&["spherical", "--type", "B2", "--lambda", "1,0", "--x", "2/3,5/7", "--q", "1/2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["rows"].as_array().unwrap().len(), 1);
}

#[test]
fn spherical_table_csv() {
    let o = hecke(&["spherical", "--type", "A2", "--x", "2/3,5/7", "--q", "1/2", "-L", "2", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("lambda;Phi;Delta"));
    assert_eq!(lines.count(), 6);
}

#[test]
fn degenerate_point_is_usage_error() {
    let o = hecke(&["spherical", "--type", "A1", "--x", "1", "--q", "1/2", "--lambda", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("resample"));
}

#[test]
fn a2_braid_table_has_five_rows() {
    let o = hecke(&["verify", "--type", "A2", "--suite", "braid"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let check = &v["checks"][0];
    assert_eq!(check["status"], "pass");
    let rows = check["table"].as_array().unwrap();
    assert_eq!(rows.len(), 5);
    assert!(rows.iter().all(|r| r["matches"] == true));
}

#[test]
fn g2_intertwine_passes() {
    let o = hecke(&["verify", "--type", "G2", "--suite", "intertwine", "-L", "3"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn numeric_all_is_deterministic() {
    let args = ["verify", "--type", "A1", "--suite", "all", "--q", "1/2", "--seed", "7"];
    let a = hecke(&args);
    let b = hecke(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
}

#[test]
fn bare_letter_takes_rank() {
    let o = hecke(&["compute", "P", "--type", "A", "--rank", "1", "--lambda", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let o = hecke(&["compute", "P", "--type", "A2", "--rank", "3", "--lambda", "1,0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(hecke(&["verify", "--type", "A3", "--suite", "braid"]).status.code(), Some(2));
    assert_eq!(hecke(&["compute", "P", "--type", "A2", "--lambda", "1,x"]).status.code(), Some(2));
    assert_eq!(hecke(&["compute", "P", "--type", "Z9", "--lambda", "1"]).status.code(), Some(2));
    assert_eq!(hecke(&["hl", "--lambda", "1,0"]).status.code(), Some(2));
    assert_eq!(hecke(&["hl", "--n", "2", "--lambda", "0,1"]).status.code(), Some(2));
    assert_eq!(hecke(&["verify", "--bogus"]).status.code(), Some(2));
}

#[test]
fn config_file_supplies_defaults() {
    let dir = std::env::temp_dir().join(format!("hecke-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cfg.json");
    std::fs::write(&path, r#"{"type": "A1", "format": "json"}"#).unwrap();
    let o = hecke(&["--config", path.to_str().unwrap(), "compute", "P", "--lambda", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["P"], "e[1] + e[-1]");
    std::fs::write(&path, r#"{"colour": 1}"#).unwrap();
    let o = hecke(&["--config", path.to_str().unwrap(), "compute", "P", "--type", "A1", "--lambda", "1"]);
    assert_eq!(o.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn gln_suite_passes() {
    let o = hecke(&["verify", "--suite", "gln", "--n", "2", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("id;status;relation"));
    assert!(out.lines().skip(1).all(|l| l.contains(";pass;")));
}
