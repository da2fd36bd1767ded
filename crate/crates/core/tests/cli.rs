//! Golden tests for the command-line surface: exact output and the
//! documented exit-code contract.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_signed-chordal"))
}

fn run_on(args: &[&str], path: &Path) -> Output {
    bin().args(args).arg(path).output().expect("binary runs")
}

fn write(dir: &Path, name: &str, body: &str) -> std::path::PathBuf {
    let p = dir.join(name);
    fs::write(&p, body).unwrap();
    p
}

const NEG_C4: &str = "signedgraph 1\ne 0 1 -\ne 1 2 -\ne 2 3 -\ne 0 3 -\n";

#[test]
fn recognize_positive_k33_prints_nine_edges() {
    let dir = tempfile::tempdir().unwrap();
    let mut body = String::from("signedgraph 1\n");
    for u in 0..3 {
        for v in 3..6 {
            body.push_str(&format!("e {u} {v} +\n"));
        }
    }
    let p = write(dir.path(), "k33.sg", &body);
    let out = run_on(&["recognize"], &p);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines.len(), 9);
    assert_eq!(lines[0], "0 3");
}

#[test]
fn recognize_negative_c4_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "neg.sg", NEG_C4);
    let out = run_on(&["recognize"], &p);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
}

#[test]
fn recognize_rejects_self_loop_with_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "loop.sg", "signedgraph 1\ne 0 0 +\n");
    let out = run_on(&["recognize"], &p);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("loop"));
}

#[test]
fn recognize_reports_parse_errors_with_line_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "bad.sg", "signedgraph 1\ne 0 1 +\nq 1 2\n");
    let out = run_on(&["recognize"], &p);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("line 3"));
}

#[test]
fn witness_on_pendant_negative_cycle() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(
        dir.path(),
        "pendant.sg",
        "signedgraph 1\ne 0 1 -\ne 1 2 -\ne 2 3 -\ne 0 3 -\ne 0 4 +\n",
    );
    let out = run_on(&["witness"], &p);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(stdout, "F1\n0 0\n1 1\n2 2\n3 3\n");
}

#[test]
fn witness_on_signed_c8() {
    let dir = tempfile::tempdir().unwrap();
    let mut body = String::from("signedgraph 1\n");
    for i in 0..8 {
        body.push_str(&format!("e {i} {} {}\n", (i + 1) % 8, if i % 2 == 0 { '+' } else { '-' }));
    }
    let p = write(dir.path(), "c8.sg", &body);
    let out = run_on(&["witness"], &p);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(stdout.lines().next(), Some("C2k k=4"));
    assert_eq!(stdout.lines().count(), 9);
}

#[test]
fn witness_on_chordal_input_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "tree.sg", "signedgraph 1\ne 0 1 -\ne 1 2 -\n");
    let out = run_on(&["witness"], &p);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn export_dot_colours_the_negative_cycle_red() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "neg.sg", NEG_C4);
    let out = run_on(&["export-dot"], &p);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(stdout.matches("color=red").count(), 4);
    assert_eq!(stdout.matches("color=blue").count(), 0);
}

#[test]
fn digraph_mode_translates_arcs() {
    let dir = tempfile::tempdir().unwrap();
    let cycle = write(dir.path(), "cycle.dg", "digraph 1\na 0 1\na 1 2\na 2 3\na 3 0\n");
    let out = run_on(&["recognize", "--mode", "digraph"], &cycle);
    assert_eq!(out.status.code(), Some(1));

    let pair = write(dir.path(), "pair.dg", "digraph 1\na 0 1\na 1 0\n");
    let out = run_on(&["recognize", "--mode", "digraph"], &pair);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn graph_mode_accepts_non_bipartite_input() {
    let dir = tempfile::tempdir().unwrap();
    let triangle =
        write(dir.path(), "tri.sg", "signedgraph 1\ne 0 1 +\ne 1 2 +\ne 0 2 +\n");
    // Bigraph mode refuses the odd cycle; graph mode recognizes it.
    let out = run_on(&["recognize"], &triangle);
    assert_eq!(out.status.code(), Some(2));
    let out = run_on(&["recognize", "--mode", "graph"], &triangle);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "0\n1\n2\n");
}

#[test]
fn json_input_and_output() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(
        dir.path(),
        "g.json",
        r#"{"format":"signedgraph","version":1,"n":2,"edges":[[0,1,"-"]]}"#,
    );
    let out = run_on(&["recognize"], &p);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "0 1\n");
}

#[test]
fn catalog_writes_members_and_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let outdir = dir.path().join("cat");
    let out = bin()
        .args(["catalog", "--family", "F1", "--outdir"])
        .arg(&outdir)
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0));
    let manifest = fs::read_to_string(outdir.join("manifest.tsv")).unwrap();
    let lines: Vec<&str> = manifest.lines().collect();
    assert_eq!(lines.len(), 2, "header plus the single member");
    assert!(lines[1].contains("F1"));
    let member = fs::read_to_string(outdir.join("F1_0000.sg")).unwrap();
    let g = signed_chordal::fileformat::parse_graph(&member).unwrap();
    assert_eq!((g.n(), g.m()), (4, 4));
}

#[test]
fn catalog_parametric_families() {
    let dir = tempfile::tempdir().unwrap();
    let outdir = dir.path().join("sum");
    let out = bin()
        .args(["catalog", "--family", "Sum", "--params", "t1=1,k1=1,t2=1,k2=1", "--outdir"])
        .arg(&outdir)
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0));
    let manifest = fs::read_to_string(outdir.join("manifest.tsv")).unwrap();
    assert!(manifest.lines().count() > 1);
    // Bad parameters are input errors.
    let out = bin()
        .args(["catalog", "--family", "C2k", "--params", "k=2", "--outdir"])
        .arg(dir.path().join("nope"))
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_reports_and_exit_codes() {
    let out = bin()
        .args(["verify", "--suite", "comp", "--bounds", "2,2"])
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("examined: 16"));
    assert!(stdout.contains("discrepancies: 0"));

    let out = bin()
        .args(["verify", "--suite", "comp", "--bounds", "2,2", "--json"])
        .output()
        .expect("binary runs");
    let report: signed_chordal::oracle::VerificationReport =
        serde_json::from_slice(&out.stdout).expect("valid report JSON");
    assert_eq!(report.examined, 16);

    let out = bin()
        .args(["verify", "--suite", "no-such-suite"])
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_honours_budget_env() {
    let out = bin()
        .args(["verify", "--suite", "main", "--bounds", "4"])
        .env("SIGNED_CHORDAL_BUDGET", "10")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("budget"));
}
