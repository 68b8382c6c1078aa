//! Golden tests for the command-line interface: pinned outputs, byte
//! stability across runs, and exit codes.

use std::path::PathBuf;
use std::process::{Command, Output};

use forest_specht::generate;
use forest_specht::graph::Color;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_forest-specht"))
}

fn fixture(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!(
        "forest_specht_cli_{}_{name}",
        std::process::id()
    ));
    std::fs::write(&path, contents).expect("write fixture");
    path
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn CLI")
}

fn stdout_of(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8 stdout")
}

fn p3_file() -> PathBuf {
    fixture("p3.json", &generate::path(3).to_json_string())
}

#[test]
fn volume_all_cross_check_table() {
    let p3 = p3_file();
    let out = stdout_of(&["volume", p3.to_str().unwrap(), "--all"]);
    assert_eq!(
        out.trim(),
        r#"{"apm":2,"ehrhart":2,"labelings":2,"leaf":2}"#
    );
}

#[test]
fn volume_single_methods_print_the_integer() {
    let p3 = p3_file();
    for method in ["apm", "leaf", "ehrhart", "labelings"] {
        let out = stdout_of(&["volume", p3.to_str().unwrap(), "--method", method]);
        assert_eq!(out.trim(), "2", "method {method}");
    }
}

#[test]
fn specht_dimension_of_c4() {
    let c4 = fixture("c4.json", &generate::cycle4().to_json_string());
    let out = stdout_of(&["specht", c4.to_str().unwrap()]);
    assert_eq!(out.trim(), r#"{"dimension":2}"#);
}

#[test]
fn specht_accepts_diagram_ascii() {
    let square = fixture("square.txt", "##\n##\n");
    let out = stdout_of(&["specht", square.to_str().unwrap()]);
    assert_eq!(out.trim(), r#"{"dimension":2}"#);
}

#[test]
fn specht_decompose_and_tensor() {
    let p3 = p3_file();
    let out = stdout_of(&["specht", p3.to_str().unwrap(), "--decompose"]);
    assert_eq!(
        out.trim(),
        r#"{"decomposition":{"[2,1]":1},"dimension":2}"#
    );
    let out = stdout_of(&["specht", p3.to_str().unwrap(), "--tensor", "2"]);
    assert_eq!(
        out.trim(),
        r#"{"N":2,"character":{"[1,2]":1,"[2,1]":1},"dimension":2}"#
    );
}

#[test]
fn schurfun_bases_and_specializations() {
    let t3 = fixture("t3.json", &generate::star(3, Color::White).to_json_string());
    let out = stdout_of(&["schurfun", t3.to_str().unwrap(), "--basis", "s"]);
    assert_eq!(out.trim(), r#"{"[3]":1}"#);

    let p3 = p3_file();
    let out = stdout_of(&["schurfun", p3.to_str().unwrap(), "--basis", "h"]);
    assert_eq!(out.trim(), r#"{"[2,1]":1,"[3]":-1}"#);
    let out = stdout_of(&["schurfun", p3.to_str().unwrap(), "--principal", "2"]);
    assert_eq!(out.trim(), "2");
    let out = stdout_of(&["schurfun", p3.to_str().unwrap(), "--exp"]);
    assert_eq!(out.trim(), r#""1/3""#);
}

#[test]
fn tableaux_counts_and_content() {
    let p3 = p3_file();
    let out = stdout_of(&["tableaux", p3.to_str().unwrap(), "--n-labels", "2", "--count"]);
    assert_eq!(out.trim(), r#"{"count":2}"#);
    let out = stdout_of(&[
        "tableaux",
        p3.to_str().unwrap(),
        "--n-labels",
        "2",
        "--content",
    ]);
    assert_eq!(
        out.trim(),
        r#"{"content":{"[1,2]":1,"[2,1]":1},"count":2}"#
    );
    let p4 = fixture("p4.json", &generate::path(4).to_json_string());
    let out = stdout_of(&["tableaux", "--standard", p4.to_str().unwrap()]);
    assert_eq!(out.trim(), r#"{"count":5}"#);
}

#[test]
fn gen_outputs_match_the_library() {
    let out = stdout_of(&["gen", "path", "3"]);
    assert_eq!(out.trim(), generate::path(3).to_json_string());
    let out = stdout_of(&["gen", "star", "4", "--center", "black"]);
    assert_eq!(out.trim(), generate::star(4, Color::Black).to_json_string());
    let out = stdout_of(&["gen", "caterpillar", "2", "1"]);
    assert_eq!(out.trim(), generate::caterpillar(2, 1).to_json_string());
}

#[test]
fn gen_random_forest_is_seed_deterministic() {
    let a = stdout_of(&["gen", "random-forest", "6", "--seed", "1"]);
    let b = stdout_of(&["gen", "random-forest", "6", "--seed", "1"]);
    assert_eq!(a, b);
    let c = stdout_of(&["gen", "random-forest", "6", "--seed", "2"]);
    assert_ne!(a, c);
}

#[test]
fn check_small_is_deterministic_and_green() {
    let a = stdout_of(&["check", "--scope", "small", "--seed", "7"]);
    let b = stdout_of(&["check", "--scope", "small", "--seed", "7"]);
    assert_eq!(a, b);
    assert!(a.contains(r#""failed":0"#));
}

#[test]
fn check_fault_injection_fails_with_the_instance() {
    let p3 = p3_file();
    let _ = p3;
    let out = run(&["check", "--scope", "small", "--inject-fault"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("leaf-recurrence-volume"));
    assert!(text.contains(r#""failures""#));
}

#[test]
fn domain_errors_exit_one_usage_errors_exit_two() {
    let c4 = fixture("c4_err.json", &generate::cycle4().to_json_string());
    let out = run(&["volume", c4.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not a forest"));

    let out = run(&["volume", "/nonexistent/file.json"]);
    assert_eq!(out.status.code(), Some(1));

    let out = run(&["volume"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["no-such-subcommand"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn caps_are_flag_and_config_adjustable() {
    let p8 = fixture("p8.json", &generate::path(8).to_json_string());
    // Default Ehrhart cap refuses eight edges.
    let out = run(&["volume", p8.to_str().unwrap(), "--method", "ehrhart"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("ehrhart_n_max"));
    // Raised via flag.
    let out = stdout_of(&[
        "volume",
        p8.to_str().unwrap(),
        "--method",
        "ehrhart",
        "--ehrhart-n-max",
        "8",
    ]);
    assert_eq!(out.trim(), "1385");
    // Raised via config file.
    let cfg = fixture("caps.json", r#"{"ehrhart_n_max": 8}"#);
    let out = stdout_of(&[
        "volume",
        p8.to_str().unwrap(),
        "--method",
        "ehrhart",
        "--config",
        cfg.to_str().unwrap(),
    ]);
    assert_eq!(out.trim(), "1385");
}

#[test]
fn thread_cap_does_not_change_the_report() {
    let default = stdout_of(&["check", "--scope", "small", "--seed", "3"]);
    let capped = bin()
        .args(["check", "--scope", "small", "--seed", "3"])
        .env("FOREST_SPECHT_THREADS", "1")
        .output()
        .expect("spawn CLI");
    assert!(capped.status.success());
    assert_eq!(String::from_utf8(capped.stdout).unwrap(), default);
}
