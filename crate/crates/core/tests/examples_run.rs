//! Every example runs to completion with its default arguments.
//!
//! `cargo test` builds the examples next to the test binaries; with a
//! narrower target selection run `cargo build --examples` first.

use std::path::PathBuf;
use std::process::Command;

fn example(name: &str) -> PathBuf {
    let deps = std::env::current_exe().unwrap().parent().unwrap().to_path_buf();
    let path = deps.parent().unwrap().join("examples").join(format!("{name}{}", std::env::consts::EXE_SUFFIX));
    assert!(path.exists(), "{} not built; run `cargo build --examples`", path.display());
    path
}

fn run(name: &str, args: &[&str]) -> String {
    let out = Command::new(example(name)).args(args).output().unwrap();
    assert!(out.status.success(), "{name}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn coset_enumeration() {
    assert!(!run("coset_enumeration", &[]).is_empty());
}

#[test]
fn hemicube() {
    assert!(!run("hemicube", &[]).is_empty());
}

#[test]
fn toroidal_4_4() {
    assert!(!run("toroidal_4_4", &[]).is_empty());
}

#[test]
fn square_roots() {
    assert!(!run("square_roots", &[]).is_empty());
}

#[test]
fn custom_presentation() {
    assert!(!run("custom_presentation", &[]).is_empty());
}

#[test]
fn classify_type() {
    assert!(!run("classify_type", &[]).is_empty());
    assert!(!run("classify_type", &["12", "6"]).is_empty());
}

#[test]
fn export_map() {
    let json: serde_json::Value = serde_json::from_str(&run("export_map", &[])).unwrap();
    assert_eq!(json["order"], 24);
    assert!(run("export_map", &["dot"]).starts_with("graph flags {"));
}

#[test]
fn verify_sweep() {
    assert!(run("verify_sweep", &["4", "4"]).contains("0 with mismatches"));
}

#[test]
fn worked_48_32() {
    assert!(!run("worked_48_32", &[]).is_empty());
}
