use std::process::{Command, Output};

fn ospz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ospz"))
        .args(args)
        .env("OSPZ_COLOR", "0")
        .output()
        .expect("spawn ospz")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim_end().to_string()
}

#[test]
fn normalize_prints_pbw_form() {
    let o = ospz(&["normalize", "t(-1)^2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "X(-2)");
}

#[test]
fn zmul_and_theta() {
    let o = ospz(&["zmul", "E(1)", "E(1)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "(2/H) * E(0) <> E(2)");

    let o = ospz(&["theta", "E(2)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "-E(-2)");
}

#[test]
fn json_format_is_valid() {
    let o = ospz(&["--format", "json", "zmul", "E(2)", "E(-2)"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v.is_object() || v.is_array());
}

#[test]
fn syntax_errors_exit_two_with_position() {
    let o = ospz(&["normalize", "t(1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("1:4"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(ospz(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(ospz(&["--format", "yaml", "phi-table"]).status.code(), Some(2));
}

#[test]
fn passing_suite_exits_zero() {
    let o = ospz(&["verify", "lemmas"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("16/16"));
}

#[test]
fn failing_suite_exits_one_and_writes_report() {
    let path = std::env::temp_dir().join(format!("ospz-relations-{}.json", std::process::id()));
    let o = ospz(&["--json-out", path.to_str().unwrap(), "verify", "relations"]);
    assert_eq!(o.status.code(), Some(1));
    let body = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    let v: serde_json::Value = serde_json::from_str(&body).unwrap();
    assert_eq!(v["suite"], "relations");
    assert_eq!(v["failed"], 3);
}
