use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_twisted-alexander"))
}

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn compute_trefoil_from_files() {
    let pres = data("trefoil.pres");
    let rep = data("trefoil_rep.json");
    let (code, out, _) = run(&["compute", "--presentation", pres.to_str().unwrap(), "--representation", rep.to_str().unwrap()]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["display"], "t^2 + 1");
    assert_eq!(v["polynomial"], true);
    assert_eq!(v["removed_column"], "y");
    assert!(v["delta"]["num"]["terms"].is_array());

    let (code, out, _) = run(&[
        "compute",
        "--presentation",
        pres.to_str().unwrap(),
        "--representation",
        rep.to_str().unwrap(),
        "--column",
        "x",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["removed_column"], "x");
    assert_eq!(v["display"], "t^2 + 1");
}

#[test]
fn relator_violation_exits_2() {
    let (code, _, err) = run(&[
        "compute",
        "--presentation",
        data("trefoil.pres").to_str().unwrap(),
        "--representation",
        data("trefoil_bad_rep.json").to_str().unwrap(),
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("relator r_1 violated"), "{err}");
}

#[test]
fn closed_form_n1_and_coprimality() {
    let (code, out, _) = run(&["closed-form", "--p", "2", "--q", "3", "--a", "1", "--b", "1", "--n", "1"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["display"], "(t^2 - t + 1) / (t - 1)");
    let (code, _, err) = run(&["closed-form", "--p", "2", "--q", "4", "--a", "1", "--b", "1"]);
    assert_eq!(code, 2);
    assert!(err.contains("p,q not coprime"));
    let (code, _, _) = run(&["closed-form", "--p", "2"]);
    assert_eq!(code, 2);
}

#[test]
fn verify_grid_elements_and_corruption() {
    for args in [
        ["--mu", "1", "--p", "2", "--q", "3", "--a", "1", "--b", "1", "--n", "2"],
        ["--mu", "2", "--p", "2", "--q", "3", "--a", "1", "--b", "1", "--n", "3"],
    ] {
        let mut full = vec!["verify"];
        full.extend(args);
        let (code, out, _) = run(&full);
        assert_eq!(code, 0);
        assert_eq!(serde_json::from_str::<Value>(&out).unwrap()["pass"], true);
    }
    let (code, out, _) = run(&["verify", "--p", "2", "--q", "3", "--a", "1", "--b", "1", "--corrupt"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["pass"], false);
    assert!(v["diagnostic"].as_str().unwrap().contains("no monomial unit"));
}

#[test]
fn sample_is_reproducible_and_constant() {
    let dir = tempfile::tempdir().unwrap();
    let run_once = |tag: &str| {
        let out = dir.path().join(format!("report_{tag}.json"));
        let pts = dir.path().join(format!("points_{tag}.json"));
        let (code, _, _) = run(&[
            "--seed",
            "42",
            "--out",
            out.to_str().unwrap(),
            "sample",
            "--mu",
            "2",
            "--p",
            "2",
            "--q",
            "3",
            "--a",
            "1",
            "--b",
            "1",
            "--count",
            "10",
            "--points",
            pts.to_str().unwrap(),
        ]);
        assert_eq!(code, 0);
        (std::fs::read(out).unwrap(), std::fs::read(pts).unwrap())
    };
    let (r1, p1) = run_once("a");
    let (r2, p2) = run_once("b");
    assert_eq!(r1, r2);
    assert_eq!(p1, p2);
    let v: Value = serde_json::from_slice(&r1).unwrap();
    assert!(v["max_deviation"].as_f64().unwrap() < 1e-6);
    assert_eq!(v["locally_constant"], true);
    assert_eq!(serde_json::from_slice::<Value>(&p1).unwrap().as_array().unwrap().len(), 10);

    let (code, _, err) = run(&["sample", "--mu", "2", "--p", "2", "--q", "3", "--a", "0", "--b", "0"]);
    assert_eq!(code, 2);
    assert!(err.contains("boundary label not irreducible Case 1.1"));
}

#[test]
fn torsion_and_growth_tables() {
    let (_, out, _) = run(&["--format", "csv", "torsion", "--p", "2", "--q", "3", "--a", "1", "--b", "1"]);
    assert_eq!(out, "n,torsion\n2,2.0\n");
    let (_, out, _) = run(&["--format", "csv", "torsion", "--mu", "2", "--p", "2", "--q", "3", "--a", "1", "--b", "1"]);
    assert_eq!(out, "n,torsion\n2,8.0\n");
    let (code, _, err) = run(&["torsion", "--p", "2", "--q", "3", "--a", "1", "--b", "1", "--n", "3"]);
    assert_eq!(code, 2);
    assert!(err.contains("parity"), "{err}");

    let (code, out, _) = run(&["--format", "csv", "growth", "--p", "2", "--q", "3", "--a", "1", "--b", "1", "--n-max", "200"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "n,torsion,log_torsion_over_n,predicted_limit,gap");
    assert_eq!(lines.len(), 101);
    let gap: f64 = lines[100].rsplit(',').next().unwrap().parse().unwrap();
    assert!(gap < 0.01);
}
