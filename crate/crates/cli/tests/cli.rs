use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn whecke(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_whecke")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json report")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("whecke-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn series_of_c2_in_characteristic_two() {
    let v = json(&whecke(&["series", "--group", "cyclic:2", "--p", "2", "--max", "5"]));
    assert_eq!(v["coefficients"], serde_json::json!([1, 1, 1, 2, 2, 3]));
    assert_eq!(v["schema_version"], 1);
}

#[test]
fn level_one_cyclotomic_dimension() {
    let v = json(&whecke(&["cyclo", "dim", "--group", "cyclic:2", "--n", "2", "--p", "3", "--weight", "Lambda0"]));
    assert_eq!(v["dim"], 8);
    assert_eq!(v["passed"], true);
    let v = json(&whecke(&["cyclo", "dim", "--group", "cyclic:2", "--n", "2", "--p", "3", "--weight", r#"{"0":1,"1":1}"#]));
    assert_eq!(v["dim"], 32);
}

#[test]
fn depth_zero_crystal_is_one_node() {
    let out = whecke(&["crystal", "graph", "--p", "2", "--depth", "0"]);
    assert!(out.status.success());
    let dot = String::from_utf8(out.stdout).unwrap();
    assert_eq!(dot.matches("label=").count(), 1);
    assert!(!dot.contains("->"));
}

#[test]
fn crystal_json_edges_are_one_indexed() {
    let args = ["crystal", "graph", "--p", "3", "--group", "cyclic:2", "--depth", "1", "--format", "json"];
    let v = json(&whecke(&args));
    let edges = v["edges"].as_array().unwrap();
    assert_eq!(v["nodes"].as_array().unwrap().len(), 1 + edges.len());
    let ks: Vec<u64> = edges.iter().map(|e| e["k"].as_u64().unwrap()).collect();
    assert!(ks.contains(&1) && ks.contains(&2) && !ks.contains(&0));
}

#[test]
fn output_is_byte_identical_for_a_seed() {
    let args = ["center", "--group", "cyclic:2", "--p", "3", "--n", "2", "--candidates", "12", "--seed", "7"];
    let a = whecke(&args);
    let b = whecke(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn usage_errors_are_machine_readable() {
    for args in [&["series", "--p", "2"][..], &["series", "--group", "nope", "--p", "2", "--max", "3"], &["cyclo", "dim", "--p", "4", "--n", "1"]] {
        let out = whecke(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let d: Value = serde_json::from_slice(&out.stderr).expect("json diagnostic");
        assert!(d["error"]["message"].is_string());
        assert!(d["error"]["kind"].is_string());
    }
}

#[test]
fn hecke_mul_from_files() {
    let a = scratch("a.json");
    let b = scratch("b.json");
    // x_1 and s_1 in H_2(C_2).
    std::fs::write(&a, r#"[{"alpha":[1,0],"g":[0,0],"w":[1,2],"coeff":[1]}]"#).unwrap();
    std::fs::write(&b, r#"[{"alpha":[0,0],"g":[0,0],"w":[2,1],"coeff":[1]}]"#).unwrap();
    let args = ["hecke", "mul", "--n", "2", "--group", "cyclic:2", "--p", "3", a.to_str().unwrap(), b.to_str().unwrap()];
    let v = json(&whecke(&args));
    let product = v["product"].as_array().unwrap();
    assert_eq!(product.len(), 1);
    assert_eq!(product[0]["alpha"], serde_json::json!([1, 0]));
    assert_eq!(product[0]["w"], serde_json::json!([2, 1]));
    // s_1 x_1 = x_2 s_1 − t_{1,2} picks up |G| correction terms.
    let swapped = json(&whecke(&["hecke", "mul", "--n", "2", "--group", "cyclic:2", "--p", "3", b.to_str().unwrap(), a.to_str().unwrap()]));
    assert_eq!(swapped["product"].as_array().unwrap().len(), 3);
}

#[test]
fn report_file_and_verification_commands() {
    let path = scratch("jm.json");
    let out = whecke(&["jm", "--group", "symmetric:3", "--p", "2", "--n", "2", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["passed"], true);
    for args in [
        &["hecke", "verify", "--group", "cyclic:3", "--p", "2", "--n", "2", "--samples", "20"][..],
        &["classes", "--group", "symmetric:3", "--p", "3", "--n", "2"],
        &["branch", "--group", "cyclic:2", "--p", "3", "--n", "2"],
        &["crystal", "check", "--p", "2", "--n", "3"],
    ] {
        assert_eq!(json(&whecke(args))["passed"], true, "{args:?}");
    }
}
