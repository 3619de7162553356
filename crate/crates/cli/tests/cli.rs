use std::io::Write;

use homassoc::catalog::catalog_get;
use homassoc::catalog::Params;
use homassoc_cli::dsl::serialize;
use homassoc_cli::run_args;
use serde_json::Value;
use tempfile::NamedTempFile;

fn run(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["homassoc", "--deterministic"];
    full.extend_from_slice(args);
    let out = run_args(full);
    let json: Value = serde_json::from_str(&out.text).unwrap_or_else(|e| panic!("{e}: {}", out.text));
    assert_eq!(out.code, exit_code(&json["status"]), "{}", out.text);
    (out.code, json)
}

fn exit_code(status: &Value) -> i32 {
    match status.as_str().unwrap() {
        "ok" => 0,
        "fail" => 1,
        "error" => 2,
        "budget" => 3,
        s => panic!("unknown status {s}"),
    }
}

fn file(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn path(f: &NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

const NOT_HOM_ASSOC: &str = "algebra bad\ndim 2\nbasis e1 e2\nmul e1 e1 = e2\nmul e2 e1 = e1\nalpha e1 = e1\nalpha e2 = e2\n";

#[test]
fn verify_exported_catalog_entry() {
    let (code, show) = run(&["catalog", "show", "A2_4"]);
    assert_eq!(code, 0);
    let doc = file(show["details"]["document"].as_str().unwrap());
    let (code, r) = run(&["verify", path(&doc)]);
    assert_eq!(code, 0);
    assert_eq!(r["algebra_label"], "A2_4");
    assert_eq!(r["details"]["hom-associative"], true);
    assert!(r["witnesses"].as_array().unwrap().is_empty());
}

#[test]
fn verify_reports_a_witness_triple() {
    let doc = file(NOT_HOM_ASSOC);
    let (code, r) = run(&["verify", path(&doc)]);
    assert_eq!(code, 1);
    let w = r["witnesses"].as_array().unwrap();
    assert!(!w.is_empty());
    let assoc: Vec<_> = w.iter().filter(|w| w["property"] == "hom-associative").collect();
    assert!(!assoc.is_empty());
    assert_eq!(assoc[0]["indices"].as_array().unwrap().len(), 3);
    assert_ne!(assoc[0]["lhs"], assoc[0]["rhs"]);
}

#[test]
fn verify_from_catalog_source_with_params() {
    let (code, r) = run(&["verify", "catalog:A2_5", "--params", "k=7/2"]);
    assert_eq!(code, 0, "{r}");
    let (code, r) = run(&["verify", "catalog:A2_5", "--params", "nope=1"]);
    assert_eq!(code, 2);
    assert!(r["message"].as_str().unwrap().contains("nope"));
}

#[test]
fn cohomology_of_a2_3_reports_certified_discrepancies() {
    let (code, r) = run(&["cohomology", "catalog:A2_3", "--degree", "2"]);
    assert_eq!(code, 0);
    assert_eq!(r["dims"]["c2"], 4);
    assert_eq!(r["dims"]["z2"], 4);
    assert_eq!(r["dims"]["b2"], 1);
    assert_eq!(r["dims"]["h2"], 3);
    assert_eq!(r["details"]["published"]["z2"], 3);
    assert_eq!(r["details"]["published"]["h2"], 2);
    let d = r["discrepancies"].as_array().unwrap();
    let quantities: Vec<_> = d.iter().map(|d| d["quantity"].as_str().unwrap()).collect();
    assert_eq!(quantities, ["z2", "h2"]);
    assert!(d.iter().all(|d| d["certificate"]["valid"] == true));
}

#[test]
fn cohomology_of_a_file_without_catalog_link_has_no_published_data() {
    let doc = file(&serialize(&catalog_get("A2_3", &Params::new()).unwrap().with_label("mine")));
    let (code, r) = run(&["cohomology", path(&doc)]);
    assert_eq!(code, 0);
    assert_eq!(r["dims"]["z2"], 4);
    assert_eq!(r["dims"]["z3"], 7);
    assert!(r["details"].get("published").is_none());
    assert_eq!(run_args(["homassoc", "cohomology", path(&doc), "--degree", "4"]).code, 2);
}

fn parse_error(text: &str) -> (u64, u64, String) {
    let doc = file(text);
    let (code, r) = run(&["verify", path(&doc)]);
    assert_eq!(code, 2);
    let d = &r["details"];
    assert_eq!(d["file"], path(&doc));
    (d["line"].as_u64().unwrap(), d["column"].as_u64().unwrap(), r["message"].as_str().unwrap().to_string())
}

#[test]
fn parse_errors_exit_2_with_positions() {
    let (l, c, m) = parse_error("algebra a\ndim 2\nbasis e1 e2\nmul e1 e9 = e1\n");
    assert_eq!((l, c), (4, 8));
    assert!(m.contains("unknown basis name e9"));
    let (l, c, m) = parse_error("algebra a\ndim 2\nbasis e1 e2\nmul e1 e1 = e1\nmul e1 e1 = e2\n");
    assert_eq!((l, c), (5, 1));
    assert!(m.contains("duplicate product"));
    let (l, _, m) = parse_error("algebra a\ndim 2\nbasis e1 e2\nalpha e1 = 3/0*e1\n");
    assert_eq!(l, 4);
    assert!(m.contains("malformed scalar"));
    let (l, _, m) = parse_error("algebra a\ndim 3\nbasis e1 e2\n");
    assert_eq!(l, 3);
    assert!(m.contains("dim mismatch"));
}

#[test]
fn missing_file_and_bad_arguments_exit_2() {
    let (code, _) = run(&["verify", "/nonexistent/file.alg"]);
    assert_eq!(code, 2);
    let (code, _) = run(&["verify", "catalog:NOPE"]);
    assert_eq!(code, 2);
    assert_eq!(run_args(["homassoc", "frobnicate"]).code, 2);
    assert_eq!(run_args(["homassoc", "--help"]).code, 0);
}

#[test]
fn deterministic_output_is_byte_identical() {
    for args in [
        vec!["homassoc", "--deterministic", "fingerprint", "catalog:A3_9"],
        vec!["homassoc", "--deterministic", "cohomology", "catalog:A2_7"],
        vec!["homassoc", "--deterministic", "groebner", "ideal", "-n", "1"],
    ] {
        let a = run_args(args.clone());
        let b = run_args(args);
        assert_eq!(a, b);
        assert!(!a.text.contains("timestamp"));
    }
    let live = run_args(["homassoc", "center", "catalog:A2_4"]);
    assert!(live.text.contains("timestamp"));
}

#[test]
fn human_rendering() {
    let out = run_args(["homassoc", "--human", "center", "catalog:A2_4"]);
    assert_eq!(out.code, 0);
    assert!(out.text.starts_with("center [A2_4]: ok"), "{}", out.text);
}

#[test]
fn twist_and_untwist() {
    let m = file("map phi\ndim 2\nbasis e1 e2\nimage e1 = e1\nimage e2 = -e2\n");
    let (code, r) = run(&["twist", "catalog:A2_4", "--morphism", path(&m)]);
    assert_eq!(code, 0, "{r}");
    let twisted = file(r["details"]["document"].as_str().unwrap());
    let (code, _) = run(&["verify", path(&twisted)]);
    assert_eq!(code, 0);
    let (code, r) = run(&["untwist", path(&twisted)]);
    assert_eq!(code, 0);
    let back = homassoc_cli::dsl::parse_algebra(r["details"]["document"].as_str().unwrap()).unwrap();
    let a24 = catalog_get("A2_4", &Params::new()).unwrap();
    assert_eq!(back.product(), a24.product());

    let not_morphism = file("map psi\ndim 2\nbasis e1 e2\nimage e1 = e2\nimage e2 = e1\n");
    let (code, _) = run(&["twist", "catalog:A2_4", "--morphism", path(&not_morphism)]);
    assert_eq!(code, 1);
    let (code, _) = run(&["untwist", "catalog:A2_3"]);
    assert_eq!(code, 1);
}

#[test]
fn structure_commands() {
    let (code, r) = run(&["simple", "catalog:T2_1"]);
    assert_eq!(code, 0);
    assert_eq!(r["dims"]["multiplication_algebra"], 16);
    let (code, r) = run(&["simple", "catalog:A2_3"]);
    assert_eq!(code, 1);
    assert_eq!(r["dims"]["ideal"], 1);
    let (code, r) = run(&["center", "catalog:A2_4"]);
    assert_eq!(code, 0);
    assert_eq!(r["dims"]["center"], 2);
    let (code, r) = run(&["assoc-type", "catalog:AT2_1"]);
    assert_eq!(code, 0);
    assert_eq!(r["details"]["verdict"], "associative_type");
    let (code, r) = run(&["derivations", "catalog:A2_4", "--k", "0"]);
    assert_eq!(code, 0);
    assert_eq!(r["dims"]["derivations"], 1);
    let (code, r) = run(&["fingerprint", "catalog:A2_8"]);
    assert_eq!(code, 0);
    assert_eq!(r["algebra_label"], "A2_8");
}

#[test]
fn catalog_commands() {
    let (code, r) = run(&["catalog", "list", "--family", "dim2"]);
    assert_eq!(code, 0);
    assert_eq!(r["dims"]["entries"], 9);
    let (code, r) = run(&["catalog", "list"]);
    assert_eq!(code, 0);
    assert_eq!(r["dims"]["entries"], 72);
    let (code, r) = run(&["catalog", "show", "T2_1"]);
    assert_eq!(code, 0);
    assert_eq!(r["discrepancies"].as_array().unwrap().len(), 3);
    let (code, r) = run(&["catalog", "verify-all"]);
    assert_eq!(code, 0);
    assert_eq!(r["dims"]["entries"], 72);
}

#[test]
fn groebner_commands() {
    let (code, r) = run(&["groebner", "member", "-p", "a11*c111 - a11^2*c111", "--equations", "multiplicativity"]);
    assert_eq!(code, 0, "{r}");
    assert_eq!(r["dims"]["n"], 1);
    assert_eq!(r["details"]["member"], true);
    let (code, r) = run(&["groebner", "member", "-p", "c111", "--equations", "multiplicativity"]);
    assert_eq!(code, 1);
    assert_eq!(r["details"]["member"], false);
    let (code, r) = run(&["groebner", "ideal", "-n", "1", "--equations", "multiplicativity", "--order", "lex"]);
    assert_eq!(code, 0);
    assert_eq!(r["dims"]["basis"], 1);
    let (code, _) = run(&["groebner", "ideal", "-n", "2", "--budget", "5"]);
    assert_eq!(code, 3);
}

#[test]
fn noniso_verdicts() {
    let (code, r) = run(&["noniso", "catalog:A2_8", "catalog:A2_9"]);
    assert_eq!(code, 0);
    assert_eq!(r["details"]["verdict"], "proven_non_isomorphic");
    let (code, r) = run(&["noniso", "catalog:A2_1", "catalog:A2_3"]);
    assert_eq!(code, 0);
    assert_eq!(r["details"]["verdict"], "separated_by_fingerprint");
    let (code, r) = run(&["noniso", "catalog:A2_4", "catalog:A2_4"]);
    assert_eq!(code, 1);
    assert_eq!(r["details"]["verdict"], "inconclusive");
}

#[test]
fn deform_with_a_jet_file() {
    let jet = file("jet d\ndim 2\nbasis e1 e2\norder 1\nmul 1 e1 e1 = e1\n");
    let (code, r) = run(&["deform", "catalog:A2_3", "--jet", path(&jet)]);
    assert_eq!(code, 0, "{r}");
    assert_eq!(r["details"]["obstruction"], "extendable");
    let ext = homassoc_cli::dsl::parse_jet(r["details"]["extension"].as_str().unwrap()).unwrap();
    assert_eq!(ext.order, 2);

    let bad = file("jet d\ndim 2\nbasis e1 e2\norder 1\nmul 1 e1 e2 = e1\n");
    let (code, _) = run(&["deform", "catalog:A2_3", "--jet", path(&bad)]);
    assert_ne!(code, 0);
}
