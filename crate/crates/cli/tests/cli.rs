use std::path::PathBuf;
use std::process::{Command, Output};

fn stlie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stlie")).args(args).output().expect("binary runs")
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn tmp(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn verify_passes_with_exit_zero() {
    let o = stlie(&["verify", "--n", "4", "--preset", "gf:2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.contains("verdict: PASS"));
    assert!(out.contains("pass  theorem.h2_st"));
    assert!(!out.contains("timings"));
}

#[test]
fn json_reports_are_byte_identical() {
    let (a, b) = (tmp("gf3_n3_a.json"), tmp("gf3_n3_b.json"));
    for p in [&a, &b] {
        let o = stlie(&["verify", "--n", "3", "--preset", "gf:3", "--json", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
    }
    let (x, y) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(x, y);
    let v: serde_json::Value = serde_json::from_slice(&x).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["verdict"], "PASS");
    assert_eq!(v["dims"]["offending_span"], 6);
    assert_eq!(v["computed"]["h2_st"], 6);
    assert!(v.get("timings_ms").is_none());
}

#[test]
fn human_output_is_deterministic() {
    let a = stlie(&["verify", "--n", "4", "--preset", "dual:2"]);
    let b = stlie(&["verify", "--n", "4", "--preset", "dual:2"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn timings_appear_only_on_request() {
    let o = stlie(&["verify", "--n", "3", "--preset", "gf:2", "--timings", "--json", "-"]);
    assert_eq!(o.status.code(), Some(0));
    // stdout carries only the JSON document
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["timings_ms"]["uce"].is_number());
}

#[test]
fn guard_exceeded_exits_three() {
    let o = stlie(&["verify", "--n", "5", "--preset", "matrix:2:2"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("guard"));
    let o = stlie(&["h2", "sl", "--n", "4", "--preset", "gf:2", "--max-dim", "10"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(stlie(&["verify", "--n", "4", "--preset", "gf:4"]).status.code(), Some(2));
    assert_eq!(stlie(&["verify", "--n", "2", "--preset", "gf:2"]).status.code(), Some(2));
    assert_eq!(stlie(&["verify", "--n", "4"]).status.code(), Some(2));
    assert_eq!(stlie(&["ring", "info", "--ring", "/nonexistent/ring.toml"]).status.code(), Some(2));
    let o = stlie(&["ring", "info", "--ring", &data("bad_key.toml")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown basis element \"y\""));
}

#[test]
fn h2_commands_compare_with_prediction() {
    let o = stlie(&["h2", "st", "--n", "4", "--preset", "gf:2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("computed 6, predicted 6"));
    let o = stlie(&["h2", "st", "--n", "5", "--preset", "gf:2"]);
    assert!(stdout(&o).contains("computed 0, predicted 0"));
    let o = stlie(&["h2", "sl", "--n", "3", "--preset", "gf:3"]);
    assert!(stdout(&o).contains("computed 6, predicted 6"));
}

#[test]
fn ring_info_examples() {
    let o = stlie(&["ring", "info", "--preset", "gf:2"]);
    let out = stdout(&o);
    assert!(out.contains("R_2: 1") && out.contains("R_3: 0") && out.contains("HC_1: 0"), "{out}");
    let out = stdout(&stlie(&["ring", "info", "--preset", "poly:2:x^2"]));
    assert!(out.contains("dim 2") && out.contains("R_2: 2"), "{out}");
    let out = stdout(&stlie(&["ring", "info", "--preset", "matrix:2:2"]));
    assert!(out.contains("dim 4") && out.contains("I_2: 4"), "{out}");
}

#[test]
fn ring_files_match_presets() {
    let a = stlie(&["ring", "info", "--ring", &data("dual_f2.toml")]);
    let b = stlie(&["ring", "info", "--preset", "dual:2"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let o = stlie(&["verify", "--n", "4", "--ring", &data("m2_f2.toml")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("W 0"));
}
