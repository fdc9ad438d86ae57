use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use evolat::cli::main_with_args;
use evolat::{parse_algebra, to_canonical};
use proptest::prelude::*;
use serde_json::Value;

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn evolat(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_evolat")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.display().to_string()
}

#[test]
fn success_exits_zero() {
    for args in [
        vec!["classify", &data("fig1.json")],
        vec!["onedim", &data("e_reg_0_14_14.json")],
        vec!["canon", &data("reg_f5.json")],
        vec!["lattice", &data("chain3.json")],
    ] {
        let (code, out, err) = evolat(&args);
        assert_eq!(code, 0, "{args:?}: {err}");
        assert!(!out.is_empty());
    }
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(evolat(&["frobnicate"]).0, 1);
    assert_eq!(evolat(&["lattice"]).0, 1);
    assert_eq!(evolat(&["quotient", &data("chain3.json")]).0, 1);
}

#[test]
fn malformed_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("syntax.json", r#"{"field":"Q","dim":2,"matrix":[["1","0"]"#),
        ("ragged.json", r#"{"field":"Q","dim":2,"matrix":[["1","0"],["1"]]}"#),
        ("char2.json", r#"{"field":{"Fp":2},"dim":1,"matrix":[["1"]]}"#),
        ("composite.json", r#"{"field":{"Fp":9},"dim":1,"matrix":[["1"]]}"#),
        ("literal.json", r#"{"field":"Q","dim":1,"matrix":[["1/0"]]}"#),
        ("extra.json", r#"{"field":"Q","dim":1,"matrix":[["1"]],"colour":"red"}"#),
    ];
    for (name, text) in cases {
        let (code, _, err) = evolat(&["classify", &write(dir.path(), name, text)]);
        assert_eq!(code, 2, "{name}: {err}");
        assert!(err.starts_with("error: "), "{name}: {err}");
    }
    assert_eq!(evolat(&["classify", "/nonexistent/algebra.json"]).0, 2);
}

#[test]
fn out_of_scope_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let four = r#"{"field":"Q","dim":4,"matrix":[["0","1","0","0"],["0","0","1","0"],["0","0","0","1"],["0","0","0","0"]]}"#;
    let (code, _, err) = evolat(&["lattice", &write(dir.path(), "four.json", four)]);
    assert_eq!(code, 3, "{err}");
    assert!(err.contains("--field-override"));
}

#[test]
fn tampered_golden_exits_four() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().display().to_string();
    assert_eq!(evolat(&["figures", "--golden-dir", &d, "--bless"]).0, 0);
    let (code, out, _) = evolat(&["figures", "--golden-dir", &d]);
    assert_eq!(code, 0);
    assert_eq!(out.matches("MATCH").count(), 2);
    let golden = dir.path().join("figure2.txt");
    let text = fs::read_to_string(&golden).unwrap();
    fs::write(&golden, text.replacen("span{e1}", "span{e3}", 1)).unwrap();
    let (code, _, err) = evolat(&["figures", "--golden-dir", &d]);
    assert_eq!(code, 4, "{err}");
    assert!(err.contains("figure2.txt"));
}

#[test]
fn vendored_goldens_match() {
    let (code, out, err) = main_with_args(["evolat", "figures"]);
    assert_eq!(code, 0, "{err}");
    assert!(out.contains("Figure 2: 4 lines, 4 planes — MATCH"));
    assert!(out.contains("Figure 1: family + 1 line + 2 planes — MATCH"));
}

#[test]
fn reports_carry_semantics_labels() {
    let (_, out, _) = main_with_args(["evolat", "lattice", &data("fig1.json")]);
    assert!(out.contains("lattice semantics: literal field Q"));
    assert!(out.contains("verdict semantics: decisions under quadratically-closed semantics"));
    let (_, out, _) = main_with_args(["evolat", "lattice", &data("fig1.json"), "--closure"]);
    assert!(out.contains("lattice semantics: decisions under quadratically-closed semantics"));
    let (_, out, _) = main_with_args(["evolat", "lattice", &data("reg_f5.json")]);
    assert!(out.contains("lattice semantics: literal finite field F_5"));
    let (_, out, _) = main_with_args(["evolat", "classify", &data("chain3.json")]);
    assert!(out.contains("decisions under quadratically-closed semantics"));
}

#[test]
fn field_override_exposes_the_pentagon() {
    let (code, out, err) = main_with_args(["evolat", "lattice", &data("diag3.json"), "--field-override", "Fp:3"]);
    assert_eq!(code, 0, "{err}");
    assert!(out.contains("nodes: 15 (by dimension: 1, 7, 6, 1)"), "{out}");
    assert!(out.contains("modular law: fails"));
    assert!(out.contains("pentagon: bottom"));
    let (code, _, _) = main_with_args(["evolat", "lattice", &data("diag3.json"), "--field-override", "Fp:4"]);
    assert_eq!(code, 1, "a composite modulus is a usage error");
}

#[test]
fn json_export_schema() {
    let (code, out, _) = main_with_args(["evolat", "lattice", &data("e_reg_0_14_14.json"), "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    let nodes = v["nodes"].as_array().unwrap();
    assert_eq!(nodes.len(), 10);
    for (i, n) in nodes.iter().enumerate() {
        assert_eq!(n["id"].as_u64(), Some(i as u64));
        assert_eq!(n["basis"].as_array().unwrap().len() as u64, n["dim"].as_u64().unwrap());
        assert!(n["label"].is_string());
    }
    assert_eq!(v["covers"].as_array().unwrap().len(), 17);
    assert_eq!(v["modular"], Value::Bool(true));
    assert!(v["pentagon"].is_null());
}

#[test]
fn dot_output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let render = |name: &str| -> String {
        let p: PathBuf = dir.path().join(name);
        let (code, _, err) = main_with_args(["evolat", "lattice", &data("e_reg_0_14_14.json"), "--dot", p.to_str().unwrap()]);
        assert_eq!(code, 0, "{err}");
        fs::read_to_string(p).unwrap()
    };
    let a = render("a.dot");
    assert_eq!(a, render("b.dot"));
    assert!(a.starts_with("digraph"));
    assert!(a.contains("rankdir=BT"));
}

#[test]
fn quotient_prints_a_loadable_file() {
    let (code, out, err) = main_with_args(["evolat", "quotient", &data("chain3.json"), "--ideal", "3"]);
    assert_eq!(code, 0, "{err}");
    let q = parse_algebra(&out).unwrap();
    assert_eq!(q.dim(), 2);
    let (code, _, _) = main_with_args(["evolat", "quotient", &data("chain3.json"), "--ideal", "1"]);
    assert_eq!(code, 2, "span{{e1}} is not an ideal of the chain");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_files_round_trip(
        p in prop::sample::select(vec![0u32, 3, 5, 7]),
        n in 1usize..=4,
        entries in prop::collection::vec((-9i64..=9, 1i64..=5), 16),
    ) {
        let field = if p == 0 { r#""Q""#.to_string() } else { format!(r#"{{"Fp":{p}}}"#) };
        let rows: Vec<String> = (0..n)
            .map(|i| {
                let r: Vec<String> = (0..n)
                    .map(|j| {
                        let (a, b) = entries[i * 4 + j];
                        if p == 0 { format!(r#""{a}/{b}""#) } else { format!(r#""{a}""#) }
                    })
                    .collect();
                format!("[{}]", r.join(","))
            })
            .collect();
        let text = format!(r#"{{"field":{field},"dim":{n},"matrix":[{}]}}"#, rows.join(","));
        let e = parse_algebra(&text).unwrap();
        let canon = to_canonical(&e).unwrap();
        let back = parse_algebra(&canon).unwrap();
        prop_assert_eq!(back.matrix(), e.matrix());
        prop_assert_eq!(back.field(), e.field());
        prop_assert_eq!(to_canonical(&back).unwrap(), canon);
    }
}
