//! End-to-end tests of the command-line interface.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_gridmatch"));
    cmd.args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    let mut child = cmd.spawn().expect("spawn gridmatch");
    if let Some(text) = stdin {
        child
            .stdin
            .as_mut()
            .unwrap()
            .write_all(text.as_bytes())
            .unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().expect("wait for gridmatch")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn gen_parity_then_solve_round_trip() {
    for (x, expected) in [("1101", "no"), ("0110", "yes"), ("", "yes"), ("1", "no")] {
        let gen = run(&["gen-parity", x], None);
        assert!(gen.status.success(), "gen-parity failed for {x:?}");
        let instance = stdout_of(&gen);
        for engine in ["monoid", "brute", "both"] {
            let solve = run(&["solve", "-", "--engine", engine], Some(&instance));
            assert!(solve.status.success(), "solve --engine {engine} failed");
            assert_eq!(
                stdout_of(&solve).trim(),
                format!("PM: {expected}"),
                "x={x:?} engine={engine}"
            );
        }
    }
}

#[test]
fn solve_exit_code_mirrors_answer() {
    let gen = run(&["gen-parity", "11"], None);
    let instance = stdout_of(&gen);
    let solve = run(&["solve", "-", "--exit-code"], Some(&instance));
    assert_eq!(solve.status.code(), Some(0), "even parity should exit 0");

    let gen = run(&["gen-parity", "111"], None);
    let instance = stdout_of(&gen);
    let solve = run(&["solve", "-", "--exit-code"], Some(&instance));
    assert_eq!(solve.status.code(), Some(1), "odd parity should exit 1");
}

#[test]
fn malformed_input_is_a_usage_error() {
    let solve = run(&["solve", "-"], Some("glp 2 6 4\n"));
    assert_eq!(solve.status.code(), Some(2));
}

#[test]
fn verify_parity_reports_case_count() {
    let out = run(&["verify-parity", "--max-n", "6"], None);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).trim(), "OK 127 cases");
}

#[test]
fn treedecomp_prints_cutwidth_and_width() {
    let gen = run(&["gen-parity", "10"], None);
    let out = run(&["treedecomp", "-"], Some(&stdout_of(&gen)));
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("cutwidth: 3"), "got: {text}");
    assert!(text.contains("width: 3"), "got: {text}");
}

#[test]
fn explore_reports_stats_and_no_even_order_groups() {
    let out = run(
        &[
            "explore",
            "--width",
            "3",
            "--budget",
            "2000",
            "--pool-size",
            "16",
        ],
        None,
    );
    assert!(out.status.success());
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("even_order_groups=0"), "got: {stderr}");
}
