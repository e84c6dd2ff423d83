use std::fs;
use std::path::Path;
use std::process::Command;

use homcas::cli::parse;
use serde_json::Value;

const SL2: &str = r#"{"kind":"classical_algebra","dim":3,"bracket":[
 {"i":0,"j":1,"k":0,"c":"2"},{"i":1,"j":0,"k":0,"c":"-2"},
 {"i":1,"j":2,"k":2,"c":"2"},{"i":2,"j":1,"k":2,"c":"-2"},
 {"i":0,"j":2,"k":1,"c":"1"},{"i":2,"j":0,"k":1,"c":"-1"}]}"#;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn homcas(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_homcas"))
        .args(args)
        .output()
        .unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn records(stdout: &str) -> Vec<Value> {
    stdout
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

fn summary(stdout: &str) -> Value {
    records(stdout)
        .into_iter()
        .find(|r| r.get("verdict").is_some())
        .unwrap()
}

fn round_trips(text: &str) -> bool {
    let file = parse(text).unwrap();
    file.decode()
        .unwrap()
        .encode(file.name.as_deref())
        .to_canonical_string()
        == text
}

#[test]
fn group_algebra_antipode_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let (a, h) = (dir.path().join("a.json"), dir.path().join("h.json"));
    let r = homcas(&[
        "group-algebra",
        "--order",
        "3",
        "--aut-exp",
        "2",
        "-o",
        p(&a),
    ]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(summary(&r.stdout)["verdict"], "pass");
    assert_eq!(homcas(&["check", p(&a)]).code, 0);
    let r = homcas(&["antipode", p(&a), "-o", p(&h)]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let r = homcas(&["check", p(&h)]);
    assert_eq!(r.code, 0);
    for rec in records(&r.stdout) {
        if rec.get("axiom").is_some() {
            assert_eq!(rec["passed"], true);
            assert!(rec["checked"].as_u64().unwrap() > 0);
        }
    }
    let file: Value = serde_json::from_str(&fs::read_to_string(&h).unwrap()).unwrap();
    assert_eq!(file["kind"], "hom_hopf");
    let s = &file["antipode"];
    // g^i ↦ g^{-i}
    for (row, expected) in [(0, [1, 0, 0]), (1, [0, 0, 1]), (2, [0, 1, 0])] {
        for col in 0..3 {
            assert_eq!(s[row][col].as_str().unwrap(), expected[col].to_string());
        }
    }
}

#[test]
fn emitted_files_round_trip_byte_for_byte() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let r = homcas(&["group-algebra", "--order", "4", "--aut-exp", "3"]);
    assert_eq!(r.code, 0);
    assert!(round_trips(&r.stdout));
    fs::write(&a, &r.stdout).unwrap();
    let r = homcas(&["antipode", p(&a)]);
    assert_eq!(r.code, 0);
    assert!(round_trips(&r.stdout));
    let again = homcas(&["group-algebra", "--order", "4", "--aut-exp", "3"]);
    assert_eq!(again.stdout, fs::read_to_string(&a).unwrap());
}

#[test]
fn perturbed_coefficient_exits_one_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let bad = dir.path().join("bad.json");
    assert_eq!(
        homcas(&[
            "group-algebra",
            "--order",
            "3",
            "--aut-exp",
            "2",
            "-o",
            p(&a)
        ])
        .code,
        0
    );
    let mut v: Value = serde_json::from_str(&fs::read_to_string(&a).unwrap()).unwrap();
    v["mult"][1]["c"] = Value::String("2".into());
    fs::write(&bad, serde_json::to_string(&v).unwrap()).unwrap();
    let r = homcas(&["check", p(&bad)]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("[FAIL]"), "{}", r.stderr);
    assert!(r.stderr.contains(" at ["));
    assert_eq!(summary(&r.stdout)["verdict"], "fail");
    let failed: Vec<Value> = records(&r.stdout)
        .into_iter()
        .filter(|x| x["passed"] == false)
        .collect();
    assert!(!failed.is_empty());
    assert!(failed.iter().all(|x| x["witness"]["indices"].is_array()));
}

#[test]
fn invalid_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("zero.json");
    fs::write(&f, r#"{"kind":"classical_algebra","dim":1,"mult":[{"i":0,"j":0,"k":0,"c":"1/0"}],"unit":["1"]}"#).unwrap();
    let r = homcas(&["check", p(&f)]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.starts_with("error:"), "{}", r.stderr);
    fs::write(&f, r#"{"kind":"hom_algebra","dim":1,"oops":1}"#).unwrap();
    assert_eq!(homcas(&["check", p(&f)]).code, 2);
    assert_eq!(
        homcas(&["check", p(&dir.path().join("missing.json"))]).code,
        2
    );
}

#[test]
fn coherence_counts_trees() {
    let r = homcas(&["coherence", "--leaves", "4", "--verify-paths"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let trees = records(&r.stdout)
        .into_iter()
        .find(|x| x.get("trees").is_some())
        .unwrap();
    assert_eq!(trees["trees"], 5);
    assert_eq!(trees["leaves"], 4);
}

#[test]
fn twist_then_enveloping() {
    let dir = tempfile::tempdir().unwrap();
    let (sl2, auto, out) = (
        dir.path().join("sl2.json"),
        dir.path().join("auto.json"),
        dir.path().join("t.json"),
    );
    fs::write(&sl2, SL2).unwrap();
    fs::write(&auto, r#"[["2","0","0"],["0","1","0"],["0","0","1/2"]]"#).unwrap();
    let r = homcas(&["twist", p(&sl2), "--auto", p(&auto), "-o", p(&out)]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(
        parse(&fs::read_to_string(&out).unwrap()).unwrap().kind,
        homcas::cli::Kind::HomLie
    );
    let r = homcas(&["enveloping", p(&out), "--max-degree", "3"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let dims = records(&r.stdout)
        .into_iter()
        .find(|x| x.get("degree_dims").is_some())
        .unwrap();
    assert_eq!(dims["degree_dims"], serde_json::json!([1, 3, 6, 10]));
    fs::write(&auto, r#"[["2","0","0"],["0","2","0"],["0","0","1"]]"#).unwrap();
    assert_eq!(
        homcas(&["twist", p(&sl2), "--auto", p(&auto), "-o", p(&out)]).code,
        2
    );
}

#[test]
fn tensor_algebra_and_free_hopf_module() {
    let dir = tempfile::tempdir().unwrap();
    let (mu, a, h, fnm) = (
        dir.path().join("mu.json"),
        dir.path().join("a.json"),
        dir.path().join("h.json"),
        dir.path().join("f.json"),
    );
    fs::write(&mu, r#"[["1","1"],["0","2"]]"#).unwrap();
    let r = homcas(&["tensor-algebra", "--mu", p(&mu), "--max-degree", "3"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(summary(&r.stdout)["verdict"], "pass");
    assert_eq!(
        homcas(&[
            "group-algebra",
            "--order",
            "3",
            "--aut-exp",
            "2",
            "-o",
            p(&a)
        ])
        .code,
        0
    );
    assert_eq!(homcas(&["antipode", p(&a), "-o", p(&h)]).code, 0);
    fs::write(&mu, r#"[["0","1"],["1","0"]]"#).unwrap();
    let r = homcas(&["hopfmod", p(&h), p(&mu), "--free", "-o", p(&fnm)]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let co = records(&r.stdout)
        .into_iter()
        .find(|x| x.get("coinvariants_dim").is_some())
        .unwrap();
    assert_eq!(co["dim"], 6);
    assert_eq!(co["coinvariants_dim"], 2);
    let r = homcas(&["hopfmod", p(&h), p(&fnm)]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(homcas(&["check", p(&fnm)]).code, 0);
}

#[test]
fn antipode_of_monoid_has_no_solution() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("m.json");
    // {1, z} with z·z = z
    fs::write(
        &f,
        r#"{"kind":"hom_bialgebra","dim":2,"alpha":[["1","0"],["0","1"]],
        "mult":[{"i":0,"j":0,"k":0,"c":"1"},{"i":0,"j":1,"k":1,"c":"1"},{"i":1,"j":0,"k":1,"c":"1"},{"i":1,"j":1,"k":1,"c":"1"}],
        "unit":["1","0"],
        "comult":[{"i":0,"j":0,"k":0,"c":"1"},{"i":1,"j":1,"k":1,"c":"1"}],
        "counit":["1","1"]}"#,
    )
    .unwrap();
    assert_eq!(homcas(&["check", p(&f)]).code, 0);
    let r = homcas(&["antipode", p(&f)]);
    assert_eq!(r.code, 1, "{}", r.stderr);
}
