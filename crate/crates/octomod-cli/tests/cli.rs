use std::process::{Command, Output};

use octomod::bimodule::ModuleShape;
use octomod::homalg::right_mult_operator;
use octomod::json::{map_from_json, map_to_json};
use octomod::Octonion;

fn octomod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_octomod"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn mul_examples() {
    for (a, b, want) in [
        ("e1", "e2", "e3"),
        ("1+e1", "1+e1", "2e1"),
        ("0", "e5", "0"),
    ] {
        let out = octomod(&["mul", a, b]);
        assert!(out.status.success());
        assert_eq!(stdout(&out).trim(), want);
    }
}

#[test]
fn mul_parse_error_reports_position() {
    let out = octomod(&["mul", "1+e9", "e1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("position"));
}

#[test]
fn table_cells() {
    let out = octomod(&["table"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let rows: Vec<Vec<&str>> = text
        .lines()
        .map(|l| l.split_whitespace().collect())
        .collect();
    assert_eq!(rows.len(), 9);
    assert_eq!(rows[0], ["1", "e1", "e2", "e3", "e4", "e5", "e6", "e7"]);
    // rows[i + 1] = [label, e_i e_0, ..., e_i e_7]
    assert_eq!(rows[2][3], "e3");
    for i in 1..8 {
        assert_eq!(rows[i + 1][i + 1], "-1");
    }
    assert_eq!(&rows[1][1..], &rows[0][..]);
}

#[test]
fn compose_right_multiplications() {
    let dir = tempfile::tempdir().unwrap();
    let o = ModuleShape::standard(1);
    let p = Octonion::parse("1+e1-e4").unwrap();
    let q = Octonion::parse("e2+2e7").unwrap();
    let fp = dir.path().join("rp.json");
    let fq = dir.path().join("rq.json");
    let out = dir.path().join("out.json");
    std::fs::write(&fp, map_to_json(&right_mult_operator(o, &p)).unwrap()).unwrap();
    std::fs::write(&fq, map_to_json(&right_mult_operator(o, &q)).unwrap()).unwrap();
    let res = octomod(&[
        "compose",
        "left",
        fp.to_str().unwrap(),
        fq.to_str().unwrap(),
        out.to_str().unwrap(),
    ]);
    assert!(
        res.status.success(),
        "{}",
        String::from_utf8_lossy(&res.stderr)
    );
    let got = map_from_json(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(got, right_mult_operator(o, &q.mul(&p)));

    let wrong_side = octomod(&[
        "compose",
        "right",
        fp.to_str().unwrap(),
        fq.to_str().unwrap(),
        out.to_str().unwrap(),
    ]);
    assert_eq!(wrong_side.status.code(), Some(2));
}

#[test]
fn hom_dim_one_one() {
    let out = octomod(&["hom-dim", "1", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("8nm = 8"));
    assert_eq!(text.matches(": 8").count(), 2);
}

#[test]
fn check_single_and_json() {
    let out = octomod(&[
        "check",
        "right_mult_order",
        "--trials",
        "10",
        "--seed",
        "42",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("pass"));

    let out = octomod(&[
        "check",
        "discovery_right_mult_order",
        "--trials",
        "10",
        "--json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v[0]["status"], "discovery-fail");
    assert!(v[0]["counterexample"]["inputs"]["p"].is_array());
}

#[test]
fn check_is_deterministic() {
    let args = [
        "check",
        "tensor_defect",
        "--trials",
        "5",
        "--seed",
        "9",
        "--json",
    ];
    assert_eq!(stdout(&octomod(&args)), stdout(&octomod(&args)));
}

#[test]
fn check_all_passes() {
    let out = octomod(&["check", "all", "--trials", "100", "--seed", "42"]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(!stdout(&out).lines().any(|l| l.starts_with("fail")));
}

#[test]
fn usage_errors() {
    assert_eq!(
        octomod(&["check", "no_such_identity"]).status.code(),
        Some(2)
    );
    assert_eq!(octomod(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(octomod(&["hom-dim", "0", "1"]).status.code(), Some(2));
    assert_eq!(
        octomod(&["check", "all", "--max-rank", "0"]).status.code(),
        Some(2)
    );
}
