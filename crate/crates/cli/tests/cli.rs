use std::collections::BTreeMap;
use std::process::{Command, Output};

fn qschur(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qschur")).args(args).output().expect("runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn dims_of_s11() {
    let out = qschur(&["dims", "--m", "1", "--n", "1", "--r", "4"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "16");
}

#[test]
fn semisimple_with_certificate() {
    let out = qschur(&["semisimple", "--m", "1", "--n", "1", "--r", "3", "--l", "2", "--oracle", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["prediction"], true);
    assert_eq!(v["certificate"]["semisimple"], true);
    assert_eq!(v["certificate"]["rank"], v["certificate"]["dim"]);
}

#[test]
fn dm_grid_and_word() {
    let out = qschur(&["dm", "--matrix", "1,0,1;0,2,0;1,0,0", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["permutation"]["images"], serde_json::json!([1, 5, 3, 4, 2]));
    assert_eq!(v["length"], 5);
    assert_eq!(v["word"].as_array().unwrap().len(), 5);
}

/// JSON output parses back and feeds further products.
#[test]
fn json_round_trip() {
    let t = r#"{"2,1":"1"}"#;
    let out = qschur(&["heckemul", "--left", t, "--right", t, "--format", "json"]);
    assert!(out.status.success());
    let square: BTreeMap<String, String> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(square.len(), 2);
    let again = serde_json::to_string(&square).unwrap();
    let out = qschur(&["heckemul", "--left", &again, "--right", r#"{"1,2":"1"}"#, "--format", "json"]);
    let same: BTreeMap<String, String> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(same, square);

    let out = qschur(&["mul", "--m", "1", "--n", "1", "--a", "1,1;0,0", "--b", "1,0;0,1", "--format", "json"]);
    let prod: BTreeMap<String, String> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(prod, BTreeMap::from([("1,1;0,0".to_string(), "1".to_string())]));
}

#[test]
fn closure_exit_status() {
    assert!(qschur(&["closure", "--kind", "inf", "--m", "2", "--n", "1", "--r", "3", "--l", "2"]).status.success());
    let out = qschur(&["closure", "--kind", "little", "--m", "3", "--r", "3", "--l", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("witness"));
}

#[test]
fn guard_is_enforced() {
    let out = qschur(&["genmat", "--m", "2", "--n", "1", "--r", "3", "--gen", "E1", "--guard", "10"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("10"));
}

#[test]
fn unknown_flag_is_rejected() {
    let out = qschur(&["dims", "--m", "1", "--r", "2", "--bogus"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("Usage"));
}

#[test]
fn verify_subset() {
    let out = qschur(&["verify", "--quick", "--criterion", "1", "--criterion", "8"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("2/2 criteria pass"));
}
