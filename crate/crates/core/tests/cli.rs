use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use serde_json::Value;
use tempfile::TempDir;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_positroid"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn json(bytes: &[u8]) -> Value {
    serde_json::from_slice(bytes).unwrap()
}

fn read(p: &Path) -> Value {
    json(&std::fs::read(p).unwrap())
}

fn path(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_str().unwrap().to_owned()
}

#[test]
fn convert_round_trip() {
    let out = run(
        &["convert", "--from", "perm", "--to", "necklace"],
        r#"{"n": 5, "w": [3, 4, 5, 1, 2]}"#,
    );
    assert!(out.status.success());
    let necklace = json(&out.stdout);
    assert_eq!(necklace, json(br#"[[1,2],[2,3],[3,4],[4,5],[1,5]]"#));
    let out = run(
        &["convert", "--from", "necklace", "--to", "positroid"],
        &necklace.to_string(),
    );
    let positroid = json(&out.stdout);
    assert_eq!(positroid["bases"].as_array().unwrap().len(), 10);
    let out = run(
        &["convert", "--from", "positroid", "--to", "perm"],
        &positroid.to_string(),
    );
    assert_eq!(json(&out.stdout)["w"], json(b"[3,4,5,1,2]"));
}

#[test]
fn graph_pipeline_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let g = path(&dir, "g.json");
    let out = run(&["graph", "build", "--perm", "3,4,5,1,2", "--out", &g], "");
    assert!(out.status.success());
    let reduced = run(&["graph", "reduce-check", "--in", &g], "");
    assert_eq!(json(&reduced.stdout)["reduced"], Value::Bool(true));

    let faces = path(&dir, "faces.json");
    run(&["graph", "faces", "--in", &g, "--out", &faces], "");
    assert_eq!(
        read(Path::new(&faces))["labels"].as_array().unwrap().len(),
        7
    );

    let tiling = path(&dir, "tiling.json");
    run(&["graph", "tile", "--in", &g, "--out", &tiling], "");
    let t = read(Path::new(&tiling));
    assert_eq!((t["k"].as_u64(), t["n"].as_u64()), (Some(2), Some(5)));

    let membrane = path(&dir, "membrane.json");
    run(&["graph", "membrane", "--in", &g, "--out", &membrane], "");
    let m = read(Path::new(&membrane));
    assert_eq!(m["boundary"], json(br#"["12","23","34","45","15"]"#));

    let svg = path(&dir, "t.svg");
    run(
        &[
            "graph", "svg", "--in", &g, "--kind", "tiling", "--out", &svg,
        ],
        "",
    );
    let text = std::fs::read_to_string(&svg).unwrap();
    assert!(text.starts_with("<?xml"));
    assert_eq!(text.matches("class=\"outline\"").count(), 1);

    let dot = run(&["graph", "dot", "--in", &g], "");
    assert!(String::from_utf8(dot.stdout).unwrap().contains("graph"));
}

#[test]
fn measurement_is_seeded() {
    let dir = tempfile::tempdir().unwrap();
    let g = path(&dir, "g.json");
    run(&["graph", "build", "--perm", "3,4,1,2", "--out", &g], "");
    let a = run(&["measure", "--graph", &g, "--seed", "4"], "");
    let b = run(&["measure", "--graph", &g, "--seed", "4"], "");
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a.stdout).as_object().unwrap().len(), 6);
}

#[test]
fn counts() {
    let fg = json(&run(&["flipgraph", "--k", "1", "--n", "6"], "").stdout);
    assert_eq!(fg["nodes"], 14);
    let p = json(&run(&["paths", "--k", "2", "--n", "5"], "").stdout);
    assert_eq!(p["paths"], "62");
    let w = json(&run(&["wsc", "enumerate", "--k", "2", "--n", "4"], "").stdout);
    assert_eq!(w["collections"].as_array().unwrap().len(), 2);
}

#[test]
fn verify_writes_a_report() {
    let dir = tempfile::tempdir().unwrap();
    let r = path(&dir, "report.json");
    let out = run(
        &[
            "verify",
            "--suite",
            "bijections",
            "--max-n",
            "4",
            "--out",
            &r,
        ],
        "",
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(read(Path::new(&r))["passed"], Value::Bool(true));
}

#[test]
fn input_errors_exit_with_two() {
    let out = run(&["convert", "--from", "perm", "--to", "necklace"], "{bad");
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out.stderr)["error"], "ParseError");
    let out = run(
        &["convert", "--from", "perm", "--to", "necklace"],
        r#"{"n": 3, "w": [1, 1, 2]}"#,
    );
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out.stderr)["error"], "InvalidPermutation");
    let out = run(
        &["graph", "reduce-check", "--in", "/nonexistent/g.json"],
        "",
    );
    assert_eq!(out.status.code(), Some(2));
}
