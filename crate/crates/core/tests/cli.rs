use std::process::{Command, Output};

use serde_json::Value;

fn tightpoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tightpoly")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = tightpoly(&all);
    let v = serde_json::from_slice(&out.stdout).expect("valid JSON on stdout");
    (out.status.code().unwrap(), v)
}

#[test]
fn classify_48_32() {
    let (code, v) = json(&["classify", "48", "32"]);
    assert_eq!(code, 0);
    let records = v["records"].as_array().unwrap();
    assert_eq!(records.len(), 10);
    assert!(records.iter().all(|r| r["orientable"] == true && r["order"] == 3072));
    assert_eq!(v["matched_cases"], serde_json::json!([1]));
}

#[test]
fn classify_4_6_text() {
    let out = tightpoly(&["classify", "4", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("lambda"));
    assert_eq!(text.matches("delta").count(), 2);

    let (_, v) = json(&["classify", "4", "6"]);
    let records = v["records"].as_array().unwrap();
    assert_eq!(records.iter().filter(|r| r["orientable"] == true).count(), 1);
    assert_eq!(records.iter().filter(|r| r["orientable"] == false).count(), 2);
}

#[test]
fn classify_exit_codes() {
    let (code, v) = json(&["classify", "5", "4"]);
    assert_eq!(code, 3);
    assert_eq!(v["records"], serde_json::json!([]));
    assert_eq!(v["exists"], false);
    assert_eq!(tightpoly(&["classify", "1", "4"]).status.code(), Some(2));
    assert_eq!(tightpoly(&["classify", "four", "4"]).status.code(), Some(2));
    assert_eq!(tightpoly(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(tightpoly(&["--help"]).status.code(), Some(0));
}

#[test]
fn verify_small_ranges() {
    let (code, v) = json(&["verify", "--max-p", "8", "--max-q", "6"]);
    assert_eq!(code, 0);
    assert_eq!(v["clean"], true);
    let rows = v["rows"].as_array().unwrap();
    for t in [[8, 6], [8, 3]] {
        let row = rows.iter().find(|r| r["type"] == serde_json::json!(t)).unwrap();
        assert_eq!(row["nonorientable"], 0);
    }

    let (code, v) = json(&["verify", "--max-p", "2", "--max-q", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["types"], 1);

    assert_eq!(tightpoly(&["verify", "--max-p", "1"]).status.code(), Some(2));
}

#[test]
fn verify_skips_need_permission() {
    let args = ["verify", "--max-p", "6", "--max-q", "6", "--budget", "1000"];
    let (code, v) = json(&args);
    assert_eq!(code, 4);
    assert_eq!(v["clean"], false);
    let mut allowed = args.to_vec();
    allowed.push("--allow-skips");
    let (code, v) = json(&allowed);
    assert_eq!(code, 0);
    assert_eq!(v["clean"], true);
}

#[test]
fn inspect_named_groups() {
    let (code, v) = json(&["inspect", "lambda", "4,4,-1,1"]);
    assert_eq!(code, 0);
    assert_eq!(v["order"], 32);
    assert_eq!(v["sggi"]["is_tight"], true);
    assert_eq!(v["invariants"]["orientable"], true);
    assert_eq!(v["invariants"]["euler_characteristic"], 0);
    assert_eq!(v["parameters"], serde_json::json!({"i": 3, "j": 1}));

    let (code, v) = json(&["inspect", "delta", "4,3,2,-2,-1,2"]);
    assert_eq!(code, 0);
    assert_eq!(v["order"], 24);
    assert_eq!(v["sggi"]["is_tight"], true);
    assert_eq!(v["invariants"]["orientable"], false);
    assert_eq!(v["polyhedron"], true);
}

#[test]
fn inspect_errors() {
    let out = tightpoly(&["inspect", "coxeter", "5,5"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8(out.stderr).unwrap().contains("--max-cosets"));
    assert_eq!(tightpoly(&["inspect", "lambda", "4,4"]).status.code(), Some(2));
    assert_eq!(tightpoly(&["inspect", "torus", "4,4"]).status.code(), Some(2));
    assert_eq!(tightpoly(&["inspect", "custom", "/nonexistent/relators"]).status.code(), Some(2));
    // Raising the bound makes a finite group go through.
    let out = tightpoly(&["inspect", "coxeter", "3,5", "--max-cosets", "10"]);
    assert_eq!(out.status.code(), Some(4));
    let out = tightpoly(&["inspect", "coxeter", "3,5", "--max-cosets", "1000"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn inspect_custom_presentation() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("hemicube.txt");
    // [4,3] with (ρ0ρ1ρ2)³ added.
    std::fs::write(&path, "# hemicube\naa\nbb\ncc\nacac\nabababab\nbcbcbc\nabcabcabc\n").unwrap();
    let (code, v) = json(&["inspect", "custom", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["family"], "custom");
    assert_eq!(v["order"], 24);
    assert_eq!(v["invariants"]["orientable"], false);

    std::fs::write(&path, "aa\nbb\nacac\n").unwrap();
    assert_eq!(tightpoly(&["inspect", "custom", path.to_str().unwrap()]).status.code(), Some(2));
    std::fs::write(&path, "aa\nbx\n").unwrap();
    assert_eq!(tightpoly(&["inspect", "custom", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn export_files() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("hemi.dot");
    let out = tightpoly(&["inspect", "delta", "4,3,2,-2,-1,2", "--export", "dot", dot.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("graph flags {"));
    assert_eq!(text.matches(" -- ").count(), 36);

    let js = dir.path().join("hemi.json");
    let out = tightpoly(&["inspect", "delta", "4,3,2,-2,-1,2", "--export", "json", js.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&js).unwrap()).unwrap();
    assert_eq!(v["order"], 24);
    assert_eq!(v["euler"], 1);
    assert_eq!(v["type"], serde_json::json!([4, 3]));

    let bad = dir.path().join("hemi.svg");
    let out = tightpoly(&["inspect", "delta", "4,3,2,-2,-1,2", "--export", "svg", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!bad.exists());
}

#[test]
fn json_is_byte_stable() {
    for args in [
        vec!["classify", "12", "6", "--json"],
        vec!["inspect", "lambda", "48,32,11,17", "--json"],
        vec!["verify", "--max-p", "4", "--max-q", "4", "--json"],
    ] {
        let a = tightpoly(&args).stdout;
        let b = tightpoly(&args).stdout;
        assert_eq!(a, b);
        assert!(!a.is_empty());
    }
    // Negative and reduced parameters describe the same group.
    let a = tightpoly(&["inspect", "lambda", "4,4,-1,1", "--json"]).stdout;
    let b = tightpoly(&["inspect", "lambda", "4,4,3,1", "--json"]).stdout;
    assert_eq!(a, b);
}
