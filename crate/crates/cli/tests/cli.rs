use std::process::Command;

use serde_json::Value;

fn pisub(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_pisub"))
        .args(args)
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn list_prints_the_registry() {
    let (code, out) = pisub(&["list"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 10);
    assert!(lines[0].starts_with("pgl27-intro\t"));
    let deep: Vec<&str> = lines.iter().filter(|l| l.contains("[deep]")).copied().collect();
    assert_eq!(deep.len(), 1);
    assert!(deep[0].starts_with("alpha-aut"));
}

#[test]
fn verify_emits_a_json_array() {
    let (code, out) = pisub(&["verify", "--scenario", "pgl27-intro"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    let r = &v.as_array().unwrap()[0];
    assert_eq!(r["schema_version"], "pisub-report/1");
    assert_eq!(r["scenario"], "pgl27-intro");
    assert_eq!(r["status"], "pass");
    assert!(r["consumed_facts"].as_array().unwrap().is_empty());
}

#[test]
fn text_format() {
    let (code, out) = pisub(&["verify", "--scenario", "star-properties", "--format", "text"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("star-properties: pass"));
}

#[test]
fn unknown_scenario_exits_2() {
    let (code, out) = pisub(&["verify", "--scenario", "no-such-scenario"]);
    assert_eq!(code, 2);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v[0]["status"], "error");
}

#[test]
fn expired_budget_turns_remaining_scenarios_into_errors() {
    let (code, out) = pisub(&[
        "verify",
        "--scenario",
        "pgl27-intro",
        "--scenario",
        "wreath-remark",
        "--max-seconds",
        "0",
    ]);
    assert_eq!(code, 2);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v[1]["status"], "error");
}

#[test]
fn element_cap_is_enforced() {
    let (code, out) = pisub(&["verify", "--scenario", "pgl27-intro", "--element-cap", "10"]);
    assert_eq!(code, 2);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v[0]["status"], "error");
}

#[test]
fn out_writes_a_file() {
    let path = std::env::temp_dir().join(format!("pisub-cli-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let (code, out) = pisub(&["verify", "--scenario", "pgl27-intro", "--out", p]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v[0]["status"], "pass");
    std::fs::remove_file(path).unwrap();
}

#[test]
fn all_conflicts_with_named_scenarios() {
    let (code, _) = pisub(&["verify", "--all", "--scenario", "pgl27-intro"]);
    assert_eq!(code, 2);
}
