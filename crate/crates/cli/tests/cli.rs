use std::io::Write;
use std::process::{Command, Output, Stdio};

fn sunlet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sunlet"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = sunlet(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn fsm_count_prints_two() {
    assert_eq!(stdout(&["oracle", "fsm-count", "--p", "5"]), "2\n");
}

#[test]
fn decompose_reports_the_frozen_count() {
    assert_eq!(stdout(&["oracle", "decompose"]), "solutions: 192\n");
    let capped = stdout(&["oracle", "decompose", "--limit", "3", "--list"]);
    assert_eq!(capped.lines().count(), 4);
    assert!(capped.starts_with("solutions: 3 (capped)"));
}

#[test]
fn walks_print_coordinates() {
    let h = stdout(&["oracle", "expand-h", "--n", "3"]);
    assert!(h.starts_with("(0,0) (0,1) (0,2) (1,2)"));
    let s = stdout(&["oracle", "staircases", "--n", "2"]);
    assert!(s.ends_with("tiling: ok\n"));
    assert_eq!(s.lines().count(), 3);
}

#[test]
fn verify_reads_standard_input() {
    let doc = stdout(&["build", "--theorem", "2", "--n", "3", "--report"]);
    assert!(doc.contains("\"report\""));
    let mut child = Command::new(env!("CARGO_BIN_EXE_sunlet"))
        .args(["verify", "--in", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(doc.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["rOnVertices"], 2);
    assert_eq!(report["factorImagesAreSunlets"], true);
}

#[test]
fn renderers_produce_their_formats() {
    let dot = stdout(&["build", "--theorem", "3", "--n", "2", "--format", "dot"]);
    assert!(dot.starts_with("digraph"));
    let svg = stdout(&[
        "build",
        "--theorem",
        "1",
        "--n",
        "4",
        "--format",
        "svg",
        "--layout",
        "annular",
    ]);
    assert!(svg.contains("<svg"));
    assert_eq!(svg.matches("class=\"vertex\"").count(), 16);
}

#[test]
fn out_of_range_parameters_exit_three() {
    assert_eq!(
        sunlet(&["build", "--theorem", "2", "--n", "1"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        sunlet(&["oracle", "fsm-count", "--p", "2"]).status.code(),
        Some(3)
    );
    assert_eq!(
        sunlet(&["oracle", "decompose", "--rows", "6", "--cols", "6"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn seedless_is_accepted() {
    assert_eq!(
        stdout(&["--seedless", "build", "--theorem", "3", "--n", "2"]),
        stdout(&["build", "--theorem", "3", "--n", "2"])
    );
}
