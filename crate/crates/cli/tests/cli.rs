use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::NamedTempFile;

const SYMPLECTIC: &str = r#"{"n":2,"repr":"aut","j":{"j1":[["0","0"],["0","0"]],"j2":[["0","-1"],["1","0"]],"j3":[["0","-1"],["1","0"]],"j4":[["0","0"],["0","0"]]}}"#;

// ω = a1∧b1 + a2∧b2 and B = a1∧a2 - b1∧b2, coordinates (p1, q1, p2, q2)
const SUBNOTQUOT: &str = r#"{"n":4,"repr":"aut","j":{
 "j1":[["0","0","0","1"],["0","0","1","0"],["0","-1","0","0"],["-1","0","0","0"]],
 "j2":[["0","-1","0","0"],["1","0","0","0"],["0","0","0","-1"],["0","0","1","0"]],
 "j3":[["0","0","0","0"],["0","0","0","0"],["0","0","0","0"],["0","0","0","0"]],
 "j4":[["0","0","0","1"],["0","0","1","0"],["0","-1","0","0"],["-1","0","0","0"]]}}"#;

fn file(contents: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

fn gclin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gclin")).args(args).output().unwrap()
}

fn path(f: &NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn validate_standard_symplectic() {
    let f = file(SYMPLECTIC);
    let out = gclin(&["validate", path(&f)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["result"], Value::Bool(true));
}

#[test]
fn validate_names_the_broken_equation() {
    let f = file(&SYMPLECTIC.replace(r#"["1","0"]],"j3""#, r#"["2","0"]],"j3""#));
    let out = gclin(&["validate", path(&f)]);
    assert_eq!(out.status.code(), Some(1));
    let w = json(&out)["witness"].to_string();
    assert!(w.contains("skewness of J2"), "{w}");
}

#[test]
fn spinor_round_trip_is_byte_identical() {
    let f = file(SUBNOTQUOT);
    let direct = gclin(&["convert", path(&f), "--to", "aut"]);
    assert_eq!(direct.status.code(), Some(0));
    let sp = gclin(&["convert", path(&f), "--to", "spinor"]);
    assert!(json(&sp).get("standard_form").is_some());
    let g = file(std::str::from_utf8(&sp.stdout).unwrap());
    let back = gclin(&["convert", path(&g), "--to", "aut"]);
    assert_eq!(direct.stdout, back.stdout);
    let e = gclin(&["convert", path(&f), "--to", "E"]);
    let h = file(std::str::from_utf8(&e.stdout).unwrap());
    assert_eq!(gclin(&["convert", path(&h), "--to", "aut"]).stdout, direct.stdout);
}

#[test]
fn demo_subnotquot_output() {
    let out = gclin(&["demo", "subnotquot"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap().trim_end(),
        r#"{"is_gc_subspace":true,"is_gc_quotient":false,"witness":"pi(p1+i q2)"}"#
    );
}

#[test]
fn demos_run() {
    let n = json(&gclin(&["demo", "notquot"]));
    assert_eq!(n["c_is_gc_subspace"], Value::Bool(false));
    assert_eq!(n["quotient_is_gc"], Value::Bool(true));
    let g = json(&gclin(&["demo", "graphnotsub"]));
    assert_eq!(g["satisfies_graph_condition"], Value::Bool(true));
    assert_eq!(g["is_gc_subspace"], Value::Bool(false));
}

#[test]
fn malformed_inputs_exit_2() {
    let f = file("{\"n\":2,");
    assert_eq!(gclin(&["validate", path(&f)]).status.code(), Some(2));
    let g = file(r#"{"n":2,"repr":"aut","j":{"j1":[["0"]],"j2":[],"j3":[],"j4":[]}}"#);
    assert_eq!(gclin(&["convert", path(&g), "--to", "E"]).status.code(), Some(2));
    assert_eq!(gclin(&["convert", "/nonexistent/x.json", "--to", "E"]).status.code(), Some(2));
    assert_eq!(gclin(&["no-such-verb"]).status.code(), Some(2));
}

#[test]
fn invalid_structure_is_malformed_for_operations() {
    let f = file(&SYMPLECTIC.replace(r#"["1","0"]],"j3""#, r#"["2","0"]],"j3""#));
    let out = gclin(&["classify-type", path(&f)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(json(&out)["error"].as_str().unwrap().contains("skewness of J2"));
}

#[test]
fn false_predicate_exits_1_with_witness() {
    let s = file(SYMPLECTIC);
    let w = file(r#"{"ambient_dim":2,"basis":[["1","0"]]}"#);
    let out = gclin(&["subspace", path(&s), path(&w), "--test", "gc"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["result"], Value::Bool(false));
    assert!(v["witness"].is_array());
    let out = gclin(&["subspace", path(&s), path(&w), "--test", "lagrangian"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn quotient_of_fixture_is_not_gc() {
    let s = file(SUBNOTQUOT);
    let w = file(r#"{"ambient_dim":4,"basis":[["1","0","0","0"],["0","1","0","0"]]}"#);
    let sub = gclin(&["induce", path(&s), path(&w), "--sub"]);
    assert_eq!(sub.status.code(), Some(0));
    let quot = gclin(&["induce", path(&s), path(&w), "--quot"]);
    assert_eq!(quot.status.code(), Some(1));
    assert!(json(&quot)["witness"].is_array());
}

#[test]
fn transforms_and_recovery() {
    let s = file(SYMPLECTIC);
    let b = file(r#"{"n":2,"matrix":[["0","1"],["-1","0"]]}"#);
    let out = gclin(&["transform", path(&s), "--b", path(&b)]);
    assert_eq!(out.status.code(), Some(0));
    let t = file(std::str::from_utf8(&out.stdout).unwrap());
    let r = json(&gclin(&["recover", path(&t)]));
    assert_eq!(r["result"]["type"], "B-symplectic");
    assert_eq!(r["result"]["b"]["matrix"], serde_json::json!([["0/1", "1/1"], ["-1/1", "0/1"]]));
    let twice = gclin(&["transform", path(&s), "--twist"]);
    let tw = file(std::str::from_utf8(&twice.stdout).unwrap());
    let back = gclin(&["transform", path(&tw), "--twist"]);
    assert_eq!(back.stdout, gclin(&["convert", path(&s), "--to", "aut"]).stdout);
}

#[test]
fn relations_compose_and_classify() {
    let diag = format!(
        r#"{{"source":{SYMPLECTIC},"target":{SYMPLECTIC},"graph":{{"ambient_dim":4,"basis":[["1","0","1","0"],["0","1","0","1"]]}}}}"#
    );
    let d = file(&diag);
    let out = gclin(&["compose", path(&d), path(&d)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["result"]["graph"]["basis"].as_array().unwrap().len(), 2);
    assert_eq!(gclin(&["canonical-rel", path(&d)]).status.code(), Some(0));
    let zero = file(&format!(
        r#"{{"source":{SYMPLECTIC},"target":{SYMPLECTIC},"graph":{{"ambient_dim":4,"basis":[]}}}}"#
    ));
    let out = gclin(&["canonical-rel", path(&zero)]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["isotropic"], Value::Bool(true));
    assert!(json(&out)["witness"].is_object());
}

#[test]
fn output_is_deterministic() {
    let s = file(SUBNOTQUOT);
    let a = gclin(&["decompose", path(&s)]);
    let b = gclin(&["decompose", path(&s)]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
