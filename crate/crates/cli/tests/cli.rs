use std::io::Write;
use std::process::{Command, Output};

use coxeter_ehrhart_cli::ResultDocument;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coxeter-ehrhart")).args(args).env("NO_COLOR", "1").output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> ResultDocument {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    ResultDocument::from_json(&stdout(&full)).unwrap()
}

fn zonotope_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn strings(rows: &[&[&str]]) -> Vec<Vec<String>> {
    rows.iter().map(|r| r.iter().map(|s| s.to_string()).collect()).collect()
}

#[test]
fn integral_polynomial() {
    let out = stdout(&["ehrhart", "B", "3", "--variant", "integral"]);
    assert!(out.contains("ehr(t) = 1 + 9t + 39t² + 87t³"), "{out}");
}

#[test]
fn standard_quasipolynomial_in_json() {
    let doc = json(&["ehrhart", "B", "2", "--variant", "standard"]);
    assert_eq!(doc.period, Some(2));
    assert_eq!(doc.constituents, strings(&[&["1", "4", "7"], &["0", "2", "7"]]));
    assert_eq!(doc.request.rank_label.as_deref(), Some("B_2"));
    assert_eq!(doc.request.table_label.as_deref(), Some("B_2"));
    assert!(!doc.interpolated);
}

#[test]
fn point_polytope() {
    let out = stdout(&["ehrhart", "A", "1"]);
    assert!(out.contains("ehr(t) = 1\n"), "{out}");
    assert!(out.contains("root system A_0"), "{out}");
}

#[test]
fn both_labels_for_type_a() {
    let doc = json(&["ehrhart", "A", "3"]);
    assert_eq!(doc.request.rank_label.as_deref(), Some("A_2"));
    assert_eq!(doc.request.table_label.as_deref(), Some("A_3"));
    assert_eq!(doc.constituents, strings(&[&["1", "3", "3"]]));
}

#[test]
fn json_round_trips() {
    let text = stdout(&["--format", "json", "ehrhart", "A", "4", "--t", "1,2,3"]);
    let doc = ResultDocument::from_json(&text).unwrap();
    assert_eq!(doc.to_json(), text);
    let text = stdout(&["--format", "json", "tables", "table1"]);
    assert_eq!(ResultDocument::from_json(&text).unwrap().to_json(), text);
}

#[test]
fn routes_agree() {
    let forest = json(&["ehrhart", "D", "3", "--t", "1,2,3,4"]);
    let generic = json(&["ehrhart", "D", "3", "--route", "generic", "--t", "1,2,3,4"]);
    let egf = json(&["ehrhart", "D", "3", "--route", "egf", "--t", "1,2,3,4"]);
    assert_eq!(forest.constituents, generic.constituents);
    assert_eq!(forest.evaluations, generic.evaluations);
    assert_eq!(forest.evaluations, egf.evaluations);
    assert!(egf.interpolated);
    assert_eq!(egf.constituents, forest.constituents);
    assert!(egf.note.contains("interpolated"));
}

#[test]
fn egf_route_without_enough_points_gives_values_only() {
    let doc = json(&["ehrhart", "B", "2", "--route", "egf", "--t", "1,2"]);
    assert!(doc.constituents.is_empty());
    assert!(!doc.interpolated);
    let values: Vec<&str> = doc.evaluations.iter().map(|e| e.value.as_str()).collect();
    assert_eq!(values, ["9", "37"]);
}

#[test]
fn tables_match() {
    let out = stdout(&["tables", "table1"]);
    assert!(out.contains("C_4  1+20t+192t²+1080t³+3036t⁴  [match]"), "{out}");
    assert!(out.contains("A_2  1+t  [match]"), "{out}");
    assert!(out.contains("15 of 15 rows match"));
    assert!(out.contains("A_2 = family A on 2 coordinates (root system A_1)"));
    let out = stdout(&["tables", "table2"]);
    assert!(out.contains("B_3  1+9t+39t²+87t³ for t even, 6t²+87t³ for t odd  [match]"), "{out}");
    assert!(!out.contains("MISMATCH"));
}

#[test]
fn half_shifted_segment() {
    let f = zonotope_file(r#"{"generators": [[1]], "shift": ["1/2"]}"#);
    let doc = json(&["zonotope", f.path().to_str().unwrap(), "--t", "1,2", "--verify"]);
    assert_eq!(doc.period, Some(2));
    assert_eq!(doc.constituents, strings(&[&["1", "1"], &["0", "1"]]));
    let values: Vec<(&str, Option<&str>)> =
        doc.evaluations.iter().map(|e| (e.value.as_str(), e.oracle.as_deref())).collect();
    assert_eq!(values, [("1", Some("1")), ("3", Some("3"))]);
    assert_eq!(doc.agreement, Some(true));
}

#[test]
fn root_zonotope_from_file() {
    let f = zonotope_file(r#"{"generators": [[1, -1], [1, 1]]}"#);
    let out = stdout(&["zonotope", f.path().to_str().unwrap()]);
    assert!(out.contains("ehr(t) = 1 + 2t + 2t²"), "{out}");
    let out = stdout(&["--verify", "zonotope", f.path().to_str().unwrap(), "--t", "1"]);
    assert!(out.contains("ehr(1) = 5  oracle 5 (agrees)"), "{out}");
}

#[test]
fn zonotope_parse_errors_name_the_place() {
    let f = zonotope_file("{\"generators\": [[1, 2]\n");
    let out = run(&["zonotope", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"), "{}", String::from_utf8_lossy(&out.stderr));
    let f = zonotope_file(r#"{"generators": [[1, "x"]]}"#);
    let out = run(&["zonotope", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("generators[0][1]"));
    let out = run(&["zonotope", "/nonexistent/zonotope.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sequences() {
    let doc = json(&["sequences", "tree", "5"]);
    let values: Vec<&str> = doc.sequence.iter().map(|s| s.series.as_str()).collect();
    assert_eq!(values, ["1", "1", "3", "16", "125"]);
    let doc = json(&["sequences", "signed_pseudotree", "6"]);
    let values: Vec<&str> = doc.sequence.iter().map(|s| s.series.as_str()).collect();
    assert_eq!(&values[..4], ["0", "1", "16", "312"]);
    assert!(doc.sequence[3].brute_force.is_some() && doc.sequence[4].brute_force.is_none());
    assert_eq!(doc.agreement, Some(true));
}

#[test]
fn count_with_oracle() {
    let out = run(&["count", "B", "2", "--t", "1", "--oracle"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("ehr(1) = 9  oracle 9 (agrees)"));
}

#[test]
fn roots_listing() {
    let doc = json(&["roots", "B", "2"]);
    let roots = doc.roots.unwrap();
    assert_eq!(roots.roots, strings(&[&["1", "-1"], &["1", "1"], &["1", "0"], &["0", "1"]]));
    assert_eq!(roots.minus_rho, ["-3/2", "-1/2"]);
    assert_eq!(roots.shift, ["1/2", "1/2"]);
    assert!(!roots.integral);
}

#[test]
fn csv_encodes_the_same_values() {
    let doc = json(&["ehrhart", "C", "2", "--t", "1,2"]);
    let csv = stdout(&["--format", "csv", "ehrhart", "C", "2", "--t", "1,2"]);
    assert!(csv.starts_with("record,key,position,value,extra\n"));
    for e in &doc.evaluations {
        assert!(csv.contains(&format!("evaluation,{},,{},\n", e.t, e.value)), "{csv}");
    }
    assert!(csv.contains("coefficient,0,2,14,\n"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["ehrhart", "E", "3"]).status.code(), Some(2));
    assert_eq!(run(&["ehrhart", "B", "2", "--t", "0"]).status.code(), Some(2));
    assert_eq!(run(&["ehrhart", "B", "0"]).status.code(), Some(2));
    assert_eq!(run(&["ehrhart", "B", "9"]).status.code(), Some(3));
    assert_eq!(run(&["count", "C", "4", "--t", "3", "--oracle", "--max-box", "100"]).status.code(), Some(3));
    assert_eq!(run(&["ehrhart", "B", "3", "--route", "egf", "--order", "2"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    for args in [&["tables", "table2"][..], &["--format", "csv", "sequences", "signed_tree", "6"], &["roots", "C", "3"]] {
        assert_eq!(run(args).stdout, run(args).stdout);
    }
}

#[test]
fn large_systems_by_series() {
    let doc = json(&["ehrhart", "C", "10", "--variant", "integral", "--route", "egf", "--t", "1"]);
    assert_eq!(doc.evaluations.len(), 1);
    assert!(doc.constituents.is_empty());
}
