//! End-to-end checks of the `digitseal` binary: exit codes, output formats,
//! schema conformance and print/parse round trips.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

use digitseal::input::parse_poly;
use digitseal_core::IntPoly;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_digitseal"));
    c.env_remove("DIGITSEAL_PRECISION_CAP");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn manifest(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(rel)
}

fn fixture() -> String {
    manifest("fixtures/table_psl.txt").display().to_string()
}

fn schema(name: &str) -> jsonschema::Validator {
    let text = std::fs::read_to_string(manifest(&format!("schemas/{name}.schema.json"))).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    jsonschema::validator_for(&v).expect("schema compiles")
}

fn assert_valid(name: &str, doc: &Value) {
    let v = schema(name);
    let errors: Vec<String> = v.iter_errors(doc).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{name} schema violations: {errors:?}\n{doc:#}");
}

fn json(args: &[&str]) -> (i32, Value) {
    let o = run(args);
    let v = serde_json::from_str(&stdout(&o)).unwrap_or_else(|e| panic!("{e}: {}", stdout(&o)));
    (o.status.code().unwrap(), v)
}

#[test]
fn decide_exit_codes() {
    assert_eq!(code(&["decide", "--newman", "x^3-x+1"]), 0);
    assert_eq!(code(&["decide", "--littlewood", "x^4+x^3-x+1"]), 1);
    assert_eq!(code(&["decide", "--custom", "0,1", "x-2"]), 1);
    assert_eq!(code(&["decide", "--newman", "x^3+x^2-x+1"]), 1);
}

#[test]
fn inconclusive_exit_code() {
    // Phi_3 has unimodular roots: without exclusion nothing can be decided.
    assert_eq!(code(&["decide", "--newman", "x^2+x+1"]), 2);
    // A depth cap that is too small for the shortest witness.
    assert_eq!(code(&["decide", "--newman", "--depth-cap", "3", "x^3-x+1"]), 2);
}

#[test]
fn usage_errors_are_not_verdict_codes() {
    assert_eq!(code(&[]), 64);
    assert_eq!(code(&["frobnicate"]), 64);
    assert_eq!(code(&["decide", "--newman", "--littlewood", "x+2"]), 64);
    assert_eq!(code(&["decide", "2x+1"]), 64);
    assert_eq!(code(&["decide", "x^^2"]), 64);
    assert_eq!(code(&["decide", "--custom", "0", "x+2"]), 64);
    assert_eq!(code(&["decide", "--format", "dot", "x+2"]), 64);
    assert_eq!(code(&["verify", "x+1"]), 64);
    assert_eq!(code(&["verify", "x+1", "--witness", "++x"]), 64);
    assert_eq!(code(&["verify", "x+1", "--witness-file", "/nonexistent/witness.txt"]), 3);
    assert_eq!(code(&["--help"]), 0);
    let o = bin().args(["decide", "x+2"]).env("DIGITSEAL_PRECISION_CAP", "lots").output().unwrap();
    assert_eq!(o.status.code(), Some(64));
}

#[test]
fn negated_input_is_normalized() {
    let (c, v) = json(&["decide", "--newman", "--format", "json", "-x^3+x-1"]);
    assert_eq!(c, 0);
    assert_eq!(v["negated_input"], true);
    assert_eq!(v["poly"], "x^3-x+1");
}

#[test]
fn verdict_json_matches_schema() {
    let (c, v) = json(&["decide", "--newman", "--format", "json", "x^3-x+1"]);
    assert_eq!(c, 0);
    assert_valid("verdict", &v);
    assert_eq!(v["verdict"], "found");
    let w = parse_poly(v["witness"]["poly"].as_str().unwrap()).unwrap();
    assert!(w.rem_monic(&IntPoly::from_i64s(&[1, -1, 0, 1])).unwrap().is_zero());
    let (c, v) = json(&["decide", "--littlewood", "--format", "json", "x^4+x^3-x+1"]);
    assert_eq!(c, 1);
    assert_valid("verdict", &v);
    let (c, v) = json(&["decide", "--newman", "--format", "json", "x^2+x+1"]);
    assert_eq!(c, 2);
    assert_valid("verdict", &v);
    assert_eq!(v["reason"], "unimodular_unresolved");
}

#[test]
fn witness_prints_both_forms_and_digit_string() {
    let o = run(&["witness", "--newman", "x^3-x+1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines, ["x^5+x^4+1", "1,0,0,0,1,1", "++000+"]);
    // Each printed form re-parses to the same polynomial, and the digit
    // string verifies.
    assert_eq!(parse_poly(lines[0]).unwrap(), parse_poly(lines[1]).unwrap());
    assert_eq!(code(&["verify", "--newman", "x^3-x+1", "--witness", lines[2]]), 0);
}

#[test]
fn fixture_verifies_against_square_and_base() {
    let f = fixture();
    assert_eq!(code(&["verify", "x^6-2x^4+2x^3+x^2-2x+1", "--witness-file", &f]), 0);
    assert_eq!(code(&["verify", "x^3-x+1", "--witness-file", &f]), 0);
    assert_eq!(code(&["verify", "--newman", "x^3-x+1", "--witness-file", &f]), 1);
}

#[test]
fn flipped_fixture_sign_is_rejected() {
    let text = std::fs::read_to_string(fixture()).unwrap();
    let pos = text.find(['+', '-']).unwrap() + 17;
    let mut bytes = text.into_bytes();
    bytes[pos] = if bytes[pos] == b'+' { b'-' } else { b'+' };
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("flipped.txt");
    std::fs::write(&path, bytes).unwrap();
    let p = path.display().to_string();
    assert_eq!(code(&["verify", "x^6-2x^4+2x^3+x^2-2x+1", "--witness-file", &p]), 1);
}

#[test]
fn verify_json_matches_schema() {
    let (c, v) = json(&["verify", "--format", "json", "x^3-x+1", "--witness-file", &fixture()]);
    assert_eq!(c, 0);
    assert_valid("verify", &v);
    assert_eq!(v["witness"]["degree"], 195);
}

#[test]
fn classify_formats() {
    let (c, v) = json(&["classify", "--format", "json", "--mahler", "x^4+x^3-x+1", "x^3-x+1", "x^2+x+1"]);
    assert_eq!(c, 0);
    assert_valid("classify", &v);
    let recs = v.as_array().unwrap();
    assert_eq!(recs[0]["littlewood"]["answer"], "no");
    assert_eq!(recs[1]["newman"]["answer"], "yes");
    assert_eq!(recs[2]["structure"], "C");
    let o = run(&["classify", "--format", "csv", "--littlewood", "x^4+x^3-x+1"]);
    let out = stdout(&o);
    assert!(out.starts_with("poly,coeffs,noncyclotomic,structure,littlewood,newman,mahler"));
    assert!(out.contains("x^4+x^3-x+1,\"1,-1,0,1,1\""), "{out}");
    assert!(out.lines().nth(1).unwrap().contains(",no,-,"), "{out}");
}

#[test]
fn tables_small_budget() {
    let (c, v) = json(&["tables", "--max-degree", "4", "--format", "json", "--workers", "2"]);
    assert_eq!(c, 0);
    assert_valid("tables", &v);
    let not_l = v["listings"].as_array().unwrap().iter().find(|l| l["name"] == "not_l").unwrap();
    let mut polys: Vec<&str> = not_l["entries"].as_array().unwrap().iter().map(|e| e["poly"].as_str().unwrap()).collect();
    polys.sort();
    assert_eq!(polys, ["-x^4+x^3-x-1", "-x^4-x^3+x-1", "x^4+x^3-x+1", "x^4-x^3+x+1"]);
    let (c, v) = json(&["tables", "--family", "newman", "--max-degree", "5", "--format", "json"]);
    assert_eq!(c, 0);
    assert_valid("tables", &v);
}

#[test]
fn tables_write_csv_directory() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().display().to_string();
    assert_eq!(code(&["tables", "--max-degree", "3", "--out", &d, "--mahler-cutoff", "1.6"]), 0);
    let counts = std::fs::read_to_string(dir.path().join("counts.csv")).unwrap();
    assert_eq!(counts.lines().next().unwrap(), "degree,total,l_not_n,n_not_l,l_and_n,not_l,not_n,not_l_or_n,undecided");
    assert_eq!(counts.lines().nth(3).unwrap(), "3,36,24,0,12,0,24,0,0");
    let part = std::fs::read_to_string(dir.path().join("partition.csv")).unwrap();
    assert!(part.starts_with("degree,total,c,f1,f2,m,other\n"));
    let minus = std::fs::read_to_string(dir.path().join("listing_minus_not_n.csv")).unwrap();
    assert_eq!(minus.lines().next().unwrap(), "poly,coeffs,reciprocal_of,mahler");
    assert_eq!(minus.lines().count(), 5, "{minus}");
    assert!(minus.lines().any(|l| l.starts_with("x^3+x^2-x+1,") && l.ends_with(",x^3-x^2+x+1,")), "{minus}");
    assert!(dir.path().join("listing_small_mahler_not_n.csv").exists());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("tables.json")).unwrap()).unwrap();
    assert_valid("tables", &v);
}

#[test]
fn export_graph_formats() {
    let (c, v) = json(&["export-graph", "--newman", "--format", "json", "x^3-x+1"]);
    assert_eq!(c, 0);
    assert_valid("graph", &v);
    assert_eq!(v["reaches_zero"], true);
    assert_eq!(v["vertices"][0], "0");
    let o = run(&["export-graph", "--littlewood", "x^4+x^3-x+1"]);
    assert_eq!(o.status.code(), Some(0));
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph remainders {"));
    assert!(dot.contains("n0 [label=\"0\"]"));
    assert!(dot.trim_end().ends_with('}'));
    assert_eq!(code(&["export-graph", "--newman", "x^2+x+1"]), 3);
}

#[test]
fn printed_polynomials_round_trip() {
    let polys = ["x^4+x^3-x+1", "-x^7+3x^2-12", "2X^3 + 1", "1,0,-5,0,0,7", "-x^2+x-1"];
    for p in polys {
        let (_, v) = json(&["classify", "--format", "json", "--littlewood", p]);
        let rec = &v[0];
        let printed = parse_poly(rec["poly"].as_str().unwrap()).unwrap();
        let coeffs: Vec<i64> = rec["coeffs"].as_array().unwrap().iter().map(|c| c.as_i64().unwrap()).collect();
        assert_eq!(printed, IntPoly::from_i64s(&coeffs), "{p}");
        assert_eq!(printed, parse_poly(p).unwrap(), "{p}");
    }
}
