//! Exit codes and error reporting of the command-line tool.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_affweyl")).args(args).output().unwrap()
}

#[test]
fn true_and_false_answers() {
    let yes = run(&["bruhat", "--rs", "A2", "--x", "w:[1] mu:[0,0]", "--y", "w:[1,2] mu:[0,0]"]);
    assert_eq!(yes.status.code(), Some(0));
    let no = run(&["bruhat", "--rs", "A2", "--x", "w:[1,2] mu:[0,0]", "--y", "w:[1] mu:[0,0]"]);
    assert_eq!(no.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&no.stdout).unwrap();
    assert!(v.is_object());
}

#[test]
fn methods_agree() {
    let x = "w:[2] mu:[1,-1]";
    let y = "w:[1,2,1] mu:[2,0]";
    let codes: Vec<_> = ["oracle", "length-positive", "datum"]
        .iter()
        .map(|m| run(&["bruhat", "--rs", "A2", "--x", x, "--y", y, "--method", m]).status.code())
        .collect();
    assert!(codes.iter().all(|c| *c == codes[0] && c.unwrap() <= 1), "{codes:?}");
}

#[test]
fn parse_errors_exit_two() {
    let out = run(&["bruhat", "--rs", "A2", "--x", "w:[7] mu:[0,0]", "--y", "w:[] mu:[0,0]"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    assert_eq!(run(&["bruhat", "--rs", "Q9", "--x", "w:[] mu:[0]", "--y", "w:[] mu:[0]"]).status.code(), Some(2));
    assert_eq!(run(&["demazure", "--rs", "A2"]).status.code(), Some(2));
}

#[test]
fn dot_only_for_graphs() {
    let ok = run(&["--format", "dot", "qbg", "--rs", "A2"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8(ok.stdout).unwrap().contains("digraph"));
    let bad = run(&["--format", "dot", "demazure", "--rs", "A2", "--x", "w:[] mu:[0,0]", "--y", "w:[] mu:[0,0]"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn table_output() {
    let out = run(&["--format", "table", "demazure", "--rs", "B2", "--x", "w:[1] mu:[1,0]", "--y", "w:[2] mu:[0,1]"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(!out.stdout.is_empty());
}

#[test]
fn vacuous_sweep_passes() {
    let out = run(&["sweep", "--suite", "bruhat-master", "--rs", "A1", "--max-cases", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["vacuous"], true);
}
