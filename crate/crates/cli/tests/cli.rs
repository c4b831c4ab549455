use serde_json::Value;
use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn liesplit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liesplit")).args(args).output().expect("binary runs")
}

fn run_on(args: &[&str], file: &str) -> Output {
    let path = fixture(file);
    let mut all = args.to_vec();
    all.push(path.to_str().unwrap());
    liesplit(&all)
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("report is JSON")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn decompose_sl2_sum_into_two_ideals() {
    let out = run_on(&["--json", "decompose-algebra"], "sl2sl2.json");
    assert_eq!(out.status.code(), Some(0));
    let report = json_of(&out);
    assert_eq!(report["results"]["pieces"].as_array().unwrap().len(), 2);
    assert_eq!(report["results"]["direct"], Value::Bool(true));
}

#[test]
fn torus_is_a_split_pair() {
    let out = run_on(&["--json", "simple-components"], "torus2.json");
    assert_eq!(out.status.code(), Some(0));
    let report = json_of(&out);
    assert_eq!(report["results"]["verdict"], "SPLIT_PAIR");
    assert_eq!(report["results"]["split_weights"], serde_json::json!([[["1"]], [["-1"]]]));
}

#[test]
fn bad_jacobi_names_the_triple() {
    let out = run_on(&["validate"], "badjacobi.json");
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("(0, 1, 2)"), "{err}");
}

#[test]
fn json_is_deterministic_and_parses() {
    for (cmd, file) in [("decompose-module", "natural-plus-adjoint.json"), ("involution-split", "swap.json")] {
        let a = run_on(&["--json", cmd], file);
        let b = run_on(&["--json", cmd], file);
        assert_eq!(a.stdout, b.stdout);
        let v = json_of(&a);
        let again: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
        assert_eq!(v, again);
        assert!(v.get("checks").is_some() && v.get("hypotheses").is_some());
    }
}

#[test]
fn text_rendering() {
    let roots = stdout(&run_on(&["roots"], "sl2.json"));
    assert!(roots.contains("L = {(-2), (2)}"), "{roots}");
    let empty = stdout(&run_on(&["weights"], "sl2-trivial.json"));
    assert!(empty.contains("P = {}"), "{empty}");
}

#[test]
fn algebra_by_file_reference() {
    let out = run_on(&["--json", "simple-components"], "natural-ref.json");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["results"]["verdict"], "SIMPLE");
}

#[test]
fn out_of_hypotheses_exits_three() {
    let out = run_on(&["--json", "simple-components"], "natural-plus-natural.json");
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json_of(&out)["results"]["verdict"], "OUT_OF_HYPOTHESES");
    assert_eq!(run_on(&["decompose-algebra"], "borel.json").status.code(), Some(3));
    assert_eq!(run_on(&["decompose-algebra"], "ef-zero.json").status.code(), Some(3));
}

#[test]
fn oracle_depth_override() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("chain.json");
    std::fs::write(
        &path,
        r#"{"roots": [["0","2"],["0","-2"]], "weights": [["1","0"],["-1","0"],["1","2"],["-1","-2"],["1","4"],["-1","-4"]]}"#,
    )
    .unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(liesplit(&["connect-weights", p]).status.code(), Some(0));
    // Too short a bound hides the two-step chain (1,0) -> (1,4), so the
    // cross-check reports a failed conclusion.
    let short = liesplit(&["--json", "--max-depth", "1", "connect-weights", p]);
    assert_eq!(short.status.code(), Some(2));
    assert_eq!(json_of(&short)["results"]["classes"].as_array().unwrap().len(), 1);
}

#[test]
fn pair_with_explicit_algebra() {
    let ok = liesplit(&["pair", fixture("sl2sl2.json").to_str().unwrap(), fixture("sl2sl2-naturals.json").to_str().unwrap()]);
    assert_eq!(ok.status.code(), Some(0));
    let bad = liesplit(&["pair", fixture("sl2.json").to_str().unwrap(), fixture("sl2sl2-naturals.json").to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn generated_files_are_valid_inputs() {
    let dir = tempfile::tempdir().unwrap();
    for seed in [1u64, 2, 3] {
        let a = liesplit(&["generate", "--seed", &seed.to_string()]);
        let b = liesplit(&["generate", "--seed", &seed.to_string()]);
        assert_eq!(a.stdout, b.stdout);
        let path = dir.path().join(format!("m{seed}.json"));
        std::fs::write(&path, &a.stdout).unwrap();
        let code = liesplit(&["decompose-module", path.to_str().unwrap()]).status.code();
        assert!(matches!(code, Some(0) | Some(3)), "seed {seed}: {code:?}");
    }
    assert_eq!(liesplit(&["fixture", "nope"]).status.code(), Some(1));
    assert!(stdout(&liesplit(&["fixture", "--list"])).contains("torus2"));
}
