use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_clusterqp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json on stdout")
}

#[test]
fn classify_catalog_label() {
    let o = cli(&["classify", "e0"]);
    assert!(o.status.success());
    assert_eq!(String::from_utf8_lossy(&o.stdout).trim(), "E0(1)");
}

#[test]
fn nullroot_e7() {
    let o = cli(&["nullroot", "e7"]);
    assert!(o.status.success());
    let v = stdout_json(&o);
    let delta: Vec<i64> = serde_json::from_value(v["delta"].clone()).unwrap();
    assert_eq!(delta, [1, 1, 1, 1, 3, 2, 2, 1, 1, 1]);
}

#[test]
fn output_is_deterministic() {
    let a = cli(&["nullroot", "e5"]);
    let b = cli(&["nullroot", "e5"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn usage_and_input_errors_exit_2() {
    for args in [&["bogus"][..], &["classify", "/no/such/file.json"]] {
        let o = cli(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        let v: Value = serde_json::from_slice(&o.stderr).expect("json on stderr");
        assert!(v["error"]["kind"].is_string());
        assert!(v["error"]["message"].is_string());
    }
}

#[test]
fn mutate_with_files() {
    let dir = tempfile::tempdir().unwrap();
    let seed = dir.path().join("seed.json");
    fs::write(&seed, r#"{"lambda": [[0, 1], [-1, 0]]}"#).unwrap();
    let word = dir.path().join("word.json");
    fs::write(&word, r#"[{"mut": {"k": 1, "sign": "+"}}, {"mut": {"k": 1, "sign": "-"}}]"#).unwrap();
    let s = seed.to_str().unwrap();

    let o = cli(&["mutate", s, word.to_str().unwrap(), "--check-trivial"]);
    assert!(o.status.success());
    assert_eq!(stdout_json(&o)["trivial"], true);

    let o = cli(&["mutate", s, "m1+ o m1+", "--check-trivial"]);
    assert_eq!(o.status.code(), Some(1));

    let out = dir.path().join("out.json");
    let o = cli(&["--out", out.to_str().unwrap(), "mutate", s, "m1+"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(v["exchange_matrix"], serde_json::json!([[0, -1], [1, 0]]));
}

#[test]
fn verify_all_passes() {
    let o = cli(&["verify-all"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn qp6_orbit_check() {
    let o = cli(&["qp6", "orbit", "--steps", "10", "--seed", "3", "--check"]);
    assert!(o.status.success());
    let csv = String::from_utf8_lossy(&o.stdout);
    assert_eq!(csv.lines().count(), 12);
    assert!(csv.starts_with("step,map,a0"));
    let v: Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(v["passed"], true);
}
