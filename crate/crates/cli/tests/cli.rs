use std::process::{Command, Output};

use serde_json::Value;

fn orbitsym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orbitsym"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn verify_is_clean_at_low_rank() {
    let out = orbitsym(&["verify", "--max-rank", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["missing"], Value::Array(vec![]));
    assert_eq!(v["extra"], Value::Array(vec![]));
}

#[test]
fn orbit_report() {
    let out = orbitsym(&["orbit", "EIII", "1"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["tangent_dim"], 21);
    assert_eq!(v["kind"], "most_singular");
    assert_eq!(v["symmetric"], false);

    let v = json(&orbitsym(&["orbit", "AI(3)", "{1}"]));
    assert_eq!(v["symmetric"], true);
}

#[test]
fn roots_dump() {
    let v = json(&orbitsym(&["roots", "G2", "2"]));
    assert_eq!(v.as_array().unwrap().len(), 6);
    let v = json(&orbitsym(&["roots", "BC", "2"]));
    assert_eq!(v.as_array().unwrap().len(), 6);
    assert_eq!(v[0]["ortho_coords"][0], "0");
}

#[test]
fn classify_single_space() {
    let v = json(&orbitsym(&["classify", "--space", "G"]));
    assert_eq!(v["schema_version"], 1);
    let findings = v["spaces"][0]["verdict"]["findings"].as_array().unwrap();
    assert_eq!(findings.len(), 2);
    assert!(findings.iter().all(|f| f["class"] == "almost_symmetry"));
}

#[test]
fn classify_is_deterministic() {
    let a = orbitsym(&["classify", "--max-rank", "3"]);
    let b = orbitsym(&["classify", "--max-rank", "3"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn emit_table_formats() {
    let md = orbitsym(&["emit", "--table", "a", "--format", "md", "--max-rank", "3"]);
    assert!(md.status.success());
    let text = String::from_utf8(md.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("| 1 |") && l.contains("sp(q)") && l.contains("u(q)")));

    let js = orbitsym(&["emit", "--table", "a", "--format", "json", "--max-rank", "2"]);
    let v = json(&js);
    assert_eq!(v["schema_version"], 1);
    assert!(v["rows"].as_array().unwrap().iter().any(|r| r["g"] == "g2"));

    let bad = orbitsym(&["emit", "--table", "a", "--format", "xml"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn table_b() {
    let out = orbitsym(&["verify-table-b", "--max-n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out).as_array().unwrap().len(), 5);
}

#[test]
fn catalog_dump() {
    let v = json(&orbitsym(&["catalog", "--format", "json", "--max-rank", "2"]));
    let g = v.as_array().unwrap().iter().find(|e| e["label"] == "G").unwrap();
    assert_eq!(g["known_dim"], 8);
    assert_eq!(g["flags"]["maximal_rank"], true);
    assert_eq!(g["mults"]["long"], 1);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(orbitsym(&["orbit", "XYZ", "1"]).status.code(), Some(2));
    assert_eq!(orbitsym(&["orbit", "AI(3)", "4"]).status.code(), Some(2));
    assert_eq!(orbitsym(&["orbit", "AI(3)", ""]).status.code(), Some(2));
    assert_eq!(orbitsym(&["list", "--max-rank", "1"]).status.code(), Some(2));
    assert_eq!(orbitsym(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(orbitsym(&["roots", "E6", "5"]).status.code(), Some(2));
}
