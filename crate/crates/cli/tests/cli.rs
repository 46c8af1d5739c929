use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_duptilt")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn path(name: &str) -> String {
    data(name).to_string_lossy().into_owned()
}

#[test]
fn pentagon_text_export() {
    let s = stdout(&["stt", &path("a2.json"), "--max-dim", "2"]);
    assert!(s.starts_with("# dimension bound: 2\n# elements: 5\n"));
    assert!(s.contains("# cover relations (upper > lower): 5\n"));
    assert!(s.contains("(1/2 ⊕ 2, 0)"));
    assert!(s.contains("(0, P(1)⊕P(2))"));
}

#[test]
fn json_export_parses() {
    let s = stdout(&["stt", &path("a2.json"), "--max-dim", "2", "--export", "json"]);
    let v: serde_json::Value = serde_json::from_str(&s).unwrap();
    assert_eq!(v["dimension_bound"], 2);
    assert_eq!(v["elements"].as_array().unwrap().len(), 5);
    assert_eq!(v["hasse_edges"].as_array().unwrap().len(), 5);
}

#[test]
fn dot_export() {
    let s = stdout(&["stt", &path("a2.json"), "--export", "dot"]);
    assert!(s.starts_with("// dimension bound: 3\ndigraph"));
    assert_eq!(s.matches("->").count(), 5);
}

#[test]
fn missing_file_is_a_usage_error() {
    assert_eq!(run(&["stt", "missing.json"]).status.code(), Some(2));
}

#[test]
fn malformed_input_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.json");
    std::fs::write(&p, "{\"field\": 2}").unwrap();
    assert_eq!(run(&["info", p.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn too_small_bound_is_a_resource_error() {
    // the algebra is fine, but the dimension-1 catalog cannot decompose 1/2
    let out = run(&["verify", &path("a2.json"), "--theorem", "thm:f", "--max-dim", "1"]);
    assert_eq!(out.status.code(), Some(3), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn verify_alias_passes() {
    let s = stdout(&["verify", &path("a2.json"), "--theorem", "thm:f"]);
    let v: serde_json::Value = serde_json::from_str(&s).unwrap();
    assert_eq!(v[0]["theorem"], "fbar-tilting");
    assert_eq!(v[0]["status"], "pass");
    assert_eq!(v[0]["counts"]["dimension_bound"], 3);
    assert_eq!(v[0]["counts"]["dup_dimension_bound"], 4);
}

#[test]
fn verify_unknown_theorem() {
    assert_eq!(run(&["verify", &path("a2.json"), "--theorem", "nope"]).status.code(), Some(2));
}

#[test]
fn verify_all_and_properties_on_a3rel() {
    for t in ["all", "properties"] {
        let s = stdout(&["verify", &path("a3rel.json"), "--theorem", t]);
        let v: Vec<serde_json::Value> = serde_json::from_str(&s).unwrap();
        assert!(!v.is_empty());
        assert!(v.iter().all(|r| r["status"] == "pass"), "{s}");
    }
}

#[test]
fn dup_matches_fixture_and_output_flag() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("dup.json");
    stdout(&["dup", &path("a2.json"), "-o", out.to_str().unwrap()]);
    assert_eq!(std::fs::read(&out).unwrap(), std::fs::read(data("a2_dup.json")).unwrap());
}

#[test]
fn deterministic_output() {
    let args = ["stt", &path("a2_dup.json"), "--max-dim", "3", "--export", "json"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn duplication_maps() {
    let a2 = path("a2.json");
    assert_eq!(stdout(&["gbar", &a2, "--pair", "(0, P(1)⊕P(2))"]), "(1/2 ⊕ 2, P(1•)⊕P(2•))\n");
    assert_eq!(stdout(&["fbar", &a2, "--pair", "(1/2 ⊕ 2, 0)"]), "(1/2 ⊕ 1•/2•/1 ⊕ 2 ⊕ 2•/1/2, 0)\n");
    let mgs = stdout(&["mgs", &a2]);
    assert_eq!(mgs.lines().count(), 3);
    let psi = stdout(&["psi", &a2, "--left", "0", "--right", "1"]);
    assert_eq!(psi.lines().count(), 6);
    let phi = stdout(&["phi", &a2, "--left", "4", "--right", "1"]);
    assert_eq!(phi, "(1/2 ⊕ 2, P(1•)⊕P(2•))\n");
    assert_eq!(run(&["phi", &a2, "--left", "1", "--right", "4"]).status.code(), Some(2));
}

#[test]
fn map_f_of_a_simple() {
    let dir = tempfile::tempdir().unwrap();
    let m = dir.path().join("s1.json");
    // S(1) over A3 with relation, algebra given inline
    let alg: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(data("a3rel.json")).unwrap()).unwrap();
    let doc = serde_json::json!({ "algebra": alg, "dims": [1, 0, 0], "action": {} });
    std::fs::write(&m, doc.to_string()).unwrap();
    let s = stdout(&["mapF", &path("a3rel.json"), "--module", m.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_str(&s).unwrap();
    assert_eq!(v["dims"], serde_json::json!([1, 1, 0, 0, 0, 1]));
    let s = stdout(&["map-g", &path("a3rel.json"), "--module", m.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_str(&s).unwrap();
    assert_eq!(v["dims"], serde_json::json!([0, 0, 0, 1, 0, 0]));
}

#[test]
fn tilt_of_duplicated_a2() {
    let s = stdout(&["tilt", &path("a2_dup.json"), "--max-dim", "3"]);
    assert!(s.contains("# elements: 5\n"));
}

#[test]
fn field_override() {
    let s = stdout(&["info", &path("a2.json"), "--field", "3"]);
    let v: serde_json::Value = serde_json::from_str(&s).unwrap();
    assert_eq!(v["field"], 3);
    assert_eq!(run(&["info", &path("a2.json"), "--field", "4"]).status.code(), Some(2));
    assert_eq!(run(&["info", &path("a2_dup.json"), "--field", "3"]).status.code(), Some(2));
}
