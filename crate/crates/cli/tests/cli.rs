use std::path::PathBuf;
use std::process::Command;

use axial::report::{AlphaDoc, InvariantsDoc, PowersDoc};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn axial(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_axial")).args(args).output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn path(name: &str) -> String {
    data(name).to_string_lossy().into_owned()
}

#[test]
fn invariants_of_the_six_variable_example() {
    let (code, out, _) = axial(&["invariants", &path("six_vars.ideal"), "--json"]);
    assert_eq!(code, 0);
    let doc: InvariantsDoc = serde_json::from_str(&out).unwrap();
    assert_eq!(doc.axial, vec![Some(2), Some(3), Some(5), None, None, None]);
    assert_eq!(doc.sreg, vec![2, 3, 5, 5, 5, 5]);
    assert_eq!(doc.regularity, 5);
    assert_eq!(doc.height, 3);
    assert!(doc.gin.certified);
    assert!(doc.verdicts.values().all(|v| v.holds));
    let value: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(value["axial"], serde_json::json!([2, 3, 5, null, null, null]));
    assert_eq!(value["reduction"]["2"], serde_json::Value::Null);
    assert_eq!(value["reduction"]["5"], serde_json::json!(1));
}

#[test]
fn json_round_trip() {
    let (_, out, _) = axial(&["invariants", &path("six_vars.ideal"), "--json"]);
    let doc: InvariantsDoc = serde_json::from_str(&out).unwrap();
    let again: InvariantsDoc = serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
    assert_eq!(doc, again);
    let (_, out, _) = axial(&["annihilators", &path("six_vars.ideal"), "--json"]);
    let doc: AlphaDoc = serde_json::from_str(&out).unwrap();
    assert_eq!(serde_json::from_str::<AlphaDoc>(&serde_json::to_string(&doc).unwrap()).unwrap(), doc);
}

#[test]
fn groebner_basis_ends_in_y_cubed() {
    let (code, out, _) = axial(&["gb", &path("ci.ideal")]);
    assert_eq!(code, 0);
    let basis: Vec<&str> = out.lines().skip(1).take_while(|l| l.starts_with("  ")).collect();
    assert_eq!(basis.last().map(|l| l.trim()), Some("y^3"));
}

#[test]
fn powers_of_a_monomial_ideal() {
    let (code, out, _) = axial(&["powers", &path("sq.ideal"), "--invariant", "sreg:2", "--n-max", "5", "--json"]);
    assert_eq!(code, 0);
    let doc: PowersDoc = serde_json::from_str(&out).unwrap();
    assert_eq!((doc.slope, doc.intercept), (Some(2), Some(0)));
    assert_eq!(doc.status, "stabilized");
    assert_eq!(doc.points.iter().map(|p| p.1).collect::<Vec<_>>(), [2, 4, 6, 8, 10].map(Some));
}

#[test]
fn annihilator_table_text() {
    let (code, out, _) = axial(&["annihilators", &path("six_vars.ideal")]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 6);
    assert_eq!(lines[0].split_whitespace().collect::<Vec<_>>(), ["alpha", "0", "1", "2", "3", "4", "5"]);
    assert_eq!(lines[2].split_whitespace().collect::<Vec<_>>(), ["1:", "1[e]", "1", "1", "1", "1", "1[c]"]);
    assert_eq!(lines[5].split_whitespace().collect::<Vec<_>>(), ["4:", ".", ".", ".", "1[ec]", ".", "."]);
}

#[test]
fn betti_table_text() {
    let (code, out, _) = axial(&["betti", &path("six_vars.ideal")]);
    assert_eq!(code, 0);
    let row: Vec<&str> = out.lines().find(|l| l.starts_with("1:")).unwrap().split_whitespace().collect();
    assert_eq!(row, ["1:", ".", "6", "15", "20", "15", "6", "1"]);
}

#[test]
fn same_seed_same_bytes() {
    for cmd in ["gin", "invariants", "powers"] {
        let a = axial(&[cmd, &path("ci.ideal"), "--seed", "7", "--json"]);
        let b = axial(&[cmd, &path("ci.ideal"), "--seed", "7", "--json"]);
        assert_eq!(a, b, "{cmd}");
    }
}

#[test]
fn verification_passes() {
    for (cmd, file) in [("gb", "ci.ideal"), ("invariants", "ci.ideal"), ("annihilators", "cube_f3.ideal")] {
        let (code, _, err) = axial(&[cmd, &path(file), "--verify"]);
        assert_eq!(code, 0, "{cmd} {file}: {err}");
    }
}

#[test]
fn input_errors_exit_with_one() {
    let (code, out, err) = axial(&["gin", &path("bad.ideal")]);
    assert_eq!(code, 1);
    assert!(out.is_empty());
    assert!(err.contains("line 3, column 6"), "{err}");
    let (code, _, err) = axial(&["gin", &path("missing.ideal")]);
    assert_eq!(code, 1);
    assert!(err.contains("cannot read"));
    let (code, _, _) = axial(&["powers", &path("sq.ideal"), "--invariant", "sreg:9"]);
    assert_eq!(code, 1);
}

#[test]
fn char_p_cube_report() {
    let (code, out, _) = axial(&["invariants", &path("cube_f3.ideal"), "--json"]);
    assert_eq!(code, 0);
    let doc: InvariantsDoc = serde_json::from_str(&out).unwrap();
    assert!(doc.gin.small_field);
    assert!(!doc.gin.strongly_stable);
    assert_eq!(doc.sreg, vec![3, 5, 7]);
    assert!(!doc.verdicts["sreg_eq_omega"].holds);
}
