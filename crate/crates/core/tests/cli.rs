use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn lpp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lpp"))
        .args(args)
        .env_remove("LPP_SEED")
        .output()
        .expect("binary runs")
}

fn model_file(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("lpp-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn json(out: &[u8]) -> Value {
    serde_json::from_slice(out).expect("valid JSON")
}

#[test]
fn exact_diagonal_single_site() {
    let m = model_file(
        "diag.json",
        r#"{"variant":"diagonal","q":["1/2"],"alpha":"1/2"}"#,
    );
    let out = lpp(&["exact", "--model", m.to_str().unwrap(), "--l", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out.stdout);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["value"], "63/64");
    assert_eq!(v["exactness"], "rational");
}

#[test]
fn missing_field_is_named() {
    let m = model_file("bad.json", r#"{"variant":"diagonal","q":["1/2"]}"#);
    let out = lpp(&["exact", "--model", m.to_str().unwrap(), "--l", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out.stderr);
    assert!(v["error"]["message"].as_str().unwrap().contains("alpha"));
}

#[test]
fn invalid_parameter_and_usage_errors_exit_2() {
    let m = model_file(
        "big.json",
        r#"{"variant":"johansson","a":["3/2"],"b":["1/2"]}"#,
    );
    let out = lpp(&["exact", "--model", m.to_str().unwrap(), "--l", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out.stderr)["error"]["kind"], "invalid_parameter");

    let out = lpp(&["exact", "--l", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out.stderr)["error"]["kind"], "usage");
}

#[test]
fn verify_johansson_passes_and_is_reproducible() {
    let m = model_file(
        "j.json",
        r#"{"variant":"johansson","a":["1/2"],"b":["1/2"]}"#,
    );
    let args = [
        "verify",
        "--model",
        m.to_str().unwrap(),
        "--lmax",
        "3",
        "--samples",
        "20000",
        "--seed",
        "7",
    ];
    let a = lpp(&args);
    let b = lpp(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a.stdout);
    assert_eq!(v["verdict"], "PASS");
    let exact: Vec<&str> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["exact_value"].as_str().unwrap())
        .collect();
    assert_eq!(exact, ["3/4", "15/16", "63/64", "255/256"]);
}

#[test]
fn verify_failure_exits_1() {
    let m = model_file(
        "j2.json",
        r#"{"variant":"johansson","a":["1/2"],"b":["1/2"]}"#,
    );
    // an absurd z bound turns sampling noise into failures
    let out = lpp(&[
        "verify",
        "--model",
        m.to_str().unwrap(),
        "--lmax",
        "3",
        "--samples",
        "2000",
        "--z-max",
        "1e-9",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out.stdout)["verdict"], "FAIL");
}

#[test]
fn seed_from_environment() {
    let m = model_file(
        "s.json",
        r#"{"variant":"bernoulli","a":["1/2","1/3"],"b":["1/2"]}"#,
    );
    let run = |env: Option<&str>, extra: &[&str]| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_lpp"));
        c.args(["sample", "--model", m.to_str().unwrap(), "--count", "5"])
            .args(extra);
        match env {
            Some(s) => c.env("LPP_SEED", s),
            None => c.env_remove("LPP_SEED"),
        };
        c.output().unwrap().stdout
    };
    assert_eq!(run(Some("42"), &[]), run(None, &["--seed", "42"]));
}

#[test]
fn csv_output() {
    let m = model_file(
        "c.json",
        r#"{"variant":"johansson","a":["1/2"],"b":["1/2"]}"#,
    );
    let out = lpp(&[
        "rmt",
        "--model",
        m.to_str().unwrap(),
        "--lmax",
        "1",
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(
        text,
        "l,prob,exactness,route\n0,3/4,rational,toeplitz\n1,15/16,rational,toeplitz\n"
    );
}

#[test]
fn rsk_with_lemmas() {
    let m = model_file(
        "x.json",
        r#"{"rows":[{"i":2,"x":[2,1]},{"i":1,"x":[1,3]}]}"#,
    );
    let out = lpp(&[
        "rsk",
        "--matrix",
        m.to_str().unwrap(),
        "--symmetry",
        "anti-diagonal",
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v = json(&out.stdout);
    assert_eq!(v["command"], "rsk");
    assert_eq!(v["lemmas"]["weight_conserved"], true);
    let weight: u64 = v["shape"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| p.as_u64().unwrap())
        .sum();
    assert_eq!(weight, 7);
    assert_eq!(v["lemmas"]["odd_counts_agree"], true);
}

#[test]
fn rmt_point_reflection_falls_back() {
    let m = model_file("p.json", r#"{"variant":"point_reflection","q":["1/3"]}"#);
    let out = lpp(&["rmt", "--model", m.to_str().unwrap(), "--l", "2"]);
    let v = json(&out.stdout);
    assert_eq!(v["result"]["route"], "exact_fallback");
    assert!(v["result"]["note"].is_string());
}

#[test]
fn out_file() {
    let m = model_file(
        "o.json",
        r#"{"variant":"johansson","a":["1/2"],"b":["1/2"]}"#,
    );
    let target = m.with_file_name("result.json");
    let out = lpp(&[
        "exact",
        "--model",
        m.to_str().unwrap(),
        "--l",
        "0",
        "--out",
        target.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(target).unwrap()).unwrap();
    assert_eq!(v["value"], "3/4");
}
