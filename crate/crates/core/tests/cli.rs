use std::fs;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weak-iasi")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn sparing_on_petersen() {
    let v = json(&["sparing", "--named", "petersen"]);
    assert_eq!(v["command"], "sparing");
    assert_eq!(v["graph"]["n"], 10);
    assert_eq!(v["results"]["phi"], 3);
    assert_eq!(v["results"]["bipartization_number"], 3);
    assert_eq!(v["results"]["mismatch"], false);
    assert!(v["timings_ms"]["sparing"].is_number());
}

#[test]
fn sparing_on_a_family_member() {
    let v = json(&["sparing", "--named", "cycle", "--param", "5", "--labeling"]);
    assert_eq!(v["results"]["phi"], 1);
    assert_eq!(v["results"]["labeling"]["vertex_labels"].as_object().unwrap().len(), 5);
}

#[test]
fn durer_mismatch_is_flagged() {
    let out = run(&["sparing", "--named", "dürer"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["results"]["phi"], 6);
    assert_eq!(v["results"]["bipartization_number"], 4);
    assert_eq!(v["results"]["mismatch"], true);
    assert!(String::from_utf8_lossy(&out.stderr).contains("mismatch"));
}

#[test]
fn compact_json_output() {
    let out = run(&["--json-indent", "0", "sparing", "--named", "path", "--param", "4"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.trim_end().lines().count(), 1);
}

#[test]
fn check_theorems_on_grotzsch() {
    let v = json(&["check-theorems", "--named", "grotzsch"]);
    let reports = v["results"].as_array().unwrap();
    assert_eq!(reports.len(), 7);
    for r in reports {
        assert!(["holds", "fails", "not-applicable"].contains(&r["verdict"].as_str().unwrap()), "{r}");
    }
    let decomposition = reports.iter().find(|r| r["theorem"] == "odd-cycle-decomposition").unwrap();
    assert_eq!(decomposition["verdict"], "not-applicable");
}

#[test]
fn named_list() {
    let v = json(&["named", "--list"]);
    let names: Vec<&str> =
        v["results"]["graphs"].as_array().unwrap().iter().map(|g| g["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["petersen", "frucht", "grotzsch", "durer", "dodecahedron"]);
}

#[test]
fn oracle_agrees_and_rejects_large_graphs() {
    let v = json(&["oracle", "--named", "complete", "--param", "5"]);
    assert_eq!(v["results"]["agree"], true);
    let out = run(&["oracle", "--named", "petersen"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("at most 7"));
}

#[test]
fn verify_reports_a_broken_labeling() {
    let dir = TempDir::new().unwrap();
    let labeling = dir.path().join("labels.json");
    fs::write(&labeling, r#"{"vertex_labels":{"0":[0,1],"1":[4,5],"2":[9]}}"#).unwrap();
    let v = json(&["verify", "--named", "cycle", "--param", "3", "--labeling", labeling.to_str().unwrap()]);
    assert_eq!(v["results"]["weak_iasi"], false);
    assert_eq!(v["results"]["weak_violation"]["edge"], serde_json::json!([0, 1]));
    assert!(v["results"]["mono_edges"].is_null());
}

#[test]
fn verify_accepts_a_solver_labeling() {
    let dir = TempDir::new().unwrap();
    let v = json(&["sparing", "--named", "frucht", "--labeling"]);
    let labeling = dir.path().join("labels.json");
    fs::write(&labeling, v["results"]["labeling"].to_string()).unwrap();
    let checked = json(&["verify", "--named", "frucht", "--labeling", labeling.to_str().unwrap()]);
    assert_eq!(checked["results"]["weak_iasi"], true);
    assert_eq!(checked["results"]["mono_edges"], v["results"]["mono_edges"]);
}

#[test]
fn dot_output_marks_mono_edges() {
    let dir = TempDir::new().unwrap();
    let dot = dir.path().join("g.dot");
    json(&["sparing", "--named", "petersen", "--dot", dot.to_str().unwrap()]);
    let text = fs::read_to_string(dot).unwrap();
    assert!(text.starts_with("graph"));
    assert_eq!(text.matches("class=\"mono\"").count(), 3);
}

#[test]
fn graph_files_in_both_formats() {
    let dir = TempDir::new().unwrap();
    let edges = dir.path().join("c5.txt");
    fs::write(&edges, "# a five-cycle\n5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n").unwrap();
    let from_edges = json(&["sparing", "--graph", edges.to_str().unwrap()]);
    assert_eq!(from_edges["results"]["phi"], 1);

    let graph_json = dir.path().join("c5.json");
    fs::write(&graph_json, r#"{"n":5,"edges":[[0,1],[1,2],[2,3],[3,4],[0,4]]}"#).unwrap();
    let from_json = json(&["sparing", "--graph", graph_json.to_str().unwrap()]);
    assert_eq!(from_json["results"], from_edges["results"]);
}

#[test]
fn parse_errors_exit_2_with_a_line_number() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "3 2\n0 1\n1 x\n").unwrap();
    let out = run(&["sparing", "--graph", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("line 3"), "{stderr}");
    assert!(out.stdout.is_empty());
}

#[test]
fn unknown_names_and_missing_sources_fail() {
    let out = run(&["sparing", "--named", "heawood"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("heawood"));
    assert_eq!(run(&["sparing"]).status.code(), Some(2));
}
