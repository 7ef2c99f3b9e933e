use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hecke-skein"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn homfly_trefoil() {
    let out = run(&["homfly", "--strands", "2", "--word", "1 1 1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["writhe"], 3);
    // 2v² - v⁴ + v²z² = v²s² + v²s⁻² - v⁴
    let num = &v["polynomial"]["num"];
    assert_eq!(num, &serde_json::json!([[2, -2, "1"], [2, 2, "1"], [4, 0, "-1"]]));
    assert_eq!(v["polynomial"]["den"], serde_json::json!([[0, 0, "1"]]));
}

#[test]
fn negative_generators_and_inferred_strands() {
    let a = run(&["homfly", "--word", "1 -2 1 -2"]);
    let b = run(&["homfly", "--strands", "3", "--word", "1 -2 1 -2"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn closure_of_one_crossing() {
    let out = run(&["closure", "--strands", "2", "--word", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["basis"], "schur");
    let terms = v["terms"].as_array().unwrap();
    let parts: Vec<&Value> = terms.iter().map(|t| &t["partition"]).collect();
    assert_eq!(parts, vec![&serde_json::json!([1, 1]), &serde_json::json!([2])]);
    assert_eq!(terms[0]["coeff"]["num"], serde_json::json!([[0, -1, "-1"]]));
    assert_eq!(terms[1]["coeff"]["num"], serde_json::json!([[0, 1, "1"]]));
}

#[test]
fn eval_h1_is_delta() {
    let out = run(&["eval", "--elem", "h1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    // (v⁻¹ - v)/(s - s⁻¹) = (v⁻¹s - vs)/(s² - 1)
    assert_eq!(v["num"], serde_json::json!([[-1, 1, "1"], [1, 1, "-1"]]));
    assert_eq!(v["den"], serde_json::json!([[0, 0, "-1"], [0, 2, "1"]]));
}

#[test]
fn psi_and_characters() {
    let out = run(&["psi", "--n", "2", "--elem", "h1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["n"], 2);
    let out = run(&["characters", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out).as_array().unwrap().len(), 3);
}

#[test]
fn verify_reports() {
    let out = run(&["verify", "murphy-linear", "--n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["status"], "pass");
    assert_eq!(v["theorem"], "murphy-linear");
    assert_eq!(v["params"]["n"], 4);

    let out = run(&["verify", "ah", "--degree", "4"]);
    assert_eq!(out.status.code(), Some(0));

    let out = run(&["verify", "phi-distinct", "--n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let listed = v["details"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["name"].as_str().unwrap().starts_with("t_"))
        .count();
    assert_eq!(listed, 7);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["verify", "no-such-identity"][..],
        &["verify", "murphy-linear", "--n", "7"],
        &["verify", "ah", "--degree", "9"],
        &["homfly", "--strands", "2", "--word", "1 0"],
        &["eval", "--elem", "h1 + q3"],
        &["bogus"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
    let out = run(&["eval", "--elem", "h1 + q3"]);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("`q`"), "{err}");
    let out = run(&["homfly", "--word", "1 2x"]);
    assert!(String::from_utf8(out.stderr).unwrap().contains("`2x`"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["homfly", "--word", "1 1 -2 1 3 -2 3"][..],
        &["closure", "--word", "2 1 2 1"],
        &["characters", "--n", "3"],
        &["psi", "--n", "3", "--elem", "p2 - 2*e2*h1"],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
    let strip = |out: Output| {
        let mut v = json(&out);
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v.to_string()
    };
    let a = strip(run(&["verify", "row-idem", "--n", "3"]));
    let b = strip(run(&["verify", "row-idem", "--n", "3"]));
    assert_eq!(a, b);
}

#[test]
fn out_file_and_pretty() {
    let dir = std::env::temp_dir().join(format!("hecke-skein-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("trefoil.json");
    let out = run(&["homfly", "--word", "1 1 1", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written = std::fs::read(&path).unwrap();
    assert_eq!(written, run(&["homfly", "--word", "1 1 1"]).stdout);
    std::fs::remove_dir_all(&dir).unwrap();

    let out = run(&["eval", "--elem", "1", "--pretty"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "1");
}
