use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use polarcsm::IntPoly;
use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polarcsm")).args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_polarcsm"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    assert!(o.status.success(), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    serde_json::from_str(&stdout(&run(&all))).unwrap()
}

fn value_of<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix(" = ")))
        .unwrap_or_else(|| panic!("no line for {key} in\n{text}"))
}

fn as_poly(v: &Value) -> IntPoly {
    IntPoly::new(v.as_array().unwrap().iter().map(|c| c.as_i64().unwrap()).collect())
}

#[test]
fn polar_twisted_cubic() {
    let out = stdout(&run(&["polar", &data("twisted_cubic.txt")]));
    assert_eq!(out.lines().last(), Some("g = [1, -1, -2, -2]"));
    assert!(out.contains("g(F1*F2*F3) = [1, 5, 10, 6]"));
    assert!(out.contains("g(F2*F3) = [1, 3, 5, 3]"));
    assert!(out.starts_with("# seed = 42, prime = 2147483647, trials = 3\n"));
}

#[test]
fn polar_quadric_is_homaloidal() {
    let out = stdout(&run(&["polar", &data("quadric.txt")]));
    assert!(out.contains("g = [1, 1, 1, 1]"));
    assert!(out.contains("homaloidal: true"));
    let out = stdout(&run(&["polar", &data("plane_quartic.txt")]));
    assert!(out.contains("homaloidal: false"));
}

#[test]
fn csm_reports() {
    let out = stdout(&run(&["csm", &data("quadric.txt")]));
    assert_eq!(value_of(&out, "gamma_S"), "4 + 4*t + 2*t^2");
    let out = stdout(&run(&["csm", &data("twisted_cubic.txt")]));
    assert_eq!(value_of(&out, "chi(S)"), "2");
    assert!(out.contains("huh_check: true"));
    let out = stdout(&run_stdin(&["csm", "-"], "vars: x0 x1 x2 x3\nx0 + x1 - 2*x3\n"));
    assert_eq!(value_of(&out, "gamma_S"), "3 + 3*t + t^2");
}

#[test]
fn involute_and_gring() {
    let out = stdout(&run(&["involute", "4-2t+2t^2"]));
    assert_eq!(out.lines().last(), Some("4 + 4*t + 2*t^2"));
    let out = stdout(&run(&["involute", "-t + t^2"]));
    assert_eq!(out.lines().last(), Some("2*t + t^2"));
    let out = stdout(&run(&["gring", "star", "2+t", "2+t"]));
    assert_eq!(out.lines().last(), Some("4 + 4*t + 2*t^2"));
    let out = stdout(&run(&["gring", "dot", "P^1", "P^1"]));
    assert_eq!(out.lines().last(), Some("4 + 4*t + t^2"));
    let out = stdout(&run(&["gring", "join", "P1", "P1"]));
    assert_eq!(out.lines().last(), Some("4 + 6*t + 4*t^2 + t^3"));
    let out = stdout(&run(&["gring", "cone", "2 + 2*t"]));
    assert_eq!(out.lines().last(), Some("3 + 4*t + 2*t^2"));
    let out = stdout(&run(&["gring", "class", "A^2"]));
    assert_eq!(out.lines().last(), Some("1 + 2*t + t^2"));
    let out = stdout(&run(&["gring", "sigma", "4 + 4t + 2t^2"]));
    assert_eq!(out.lines().last(), Some("4 + (4)*t + (1)*t^2"));
}

#[test]
fn arrangement_both_methods() {
    let out = stdout(&run(&["arrangement", &data("four_lines.txt"), "--method", "both"]));
    assert_eq!(value_of(&out, "P_reduced"), "2 - 3*t + t^2");
    assert!(out.contains("match: true"));
    let lattice = stdout(&run(&["arrangement", &data("braid_a3.txt"), "--method", "lattice"]));
    assert_eq!(value_of(&lattice, "P_reduced"), "6*t - 5*t^2 + t^3");
    assert!(!lattice.contains("match"));
    let algebraic = stdout(&run(&["arrangement", &data("triangle.txt"), "--method", "algebraic"]));
    assert_eq!(value_of(&algebraic, "P_reduced"), "1 - 2*t + t^2");
}

#[test]
fn usage_errors_exit_2() {
    let empty = std::env::temp_dir().join("polarcsm-empty-input.txt");
    std::fs::write(&empty, "").unwrap();
    assert_eq!(run(&["polar", empty.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["polar", "/nonexistent/ideal.txt"]).status.code(), Some(2));
    assert_eq!(run_stdin(&["polar", "-"], "vars: x0 x1\nx0 +\n").status.code(), Some(2));
    assert_eq!(run_stdin(&["polar", "-"], "vars: x0 x1\nx0^2 + x1\n").status.code(), Some(2));
    assert_eq!(run_stdin(&["arrangement", "-"], "vars: x0 x1\nx0*x1\n").status.code(), Some(2));
    assert_eq!(run(&["involute", "4 4t"]).status.code(), Some(2));
    assert_eq!(run(&["--prime", "1000", "involute", "t"]).status.code(), Some(2));
    assert_eq!(run(&["--trials", "0", "involute", "t"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn resource_cap_exits_3() {
    let o = run(&["--max-reductions", "1", "polar", &data("twisted_cubic.txt")]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("resource cap"));
}

#[test]
fn json_is_deterministic_and_echoes_params() {
    let args = ["--json", "--seed", "7", "--trials", "2", "polar", &data("twisted_cubic_fg.txt")];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(stdout(&a), stdout(&b));
    let v: Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["command"], "polar");
    assert_eq!(v["params"]["seed"], 7);
    assert_eq!(v["params"]["trials"], 2);
    assert_eq!(v["params"]["prime"], 2147483647u64);
    assert_eq!(v["result"]["g"], serde_json::json!([1, -1, -2, -2]));
    assert_eq!(v["result"]["subsets"][2]["generators"], serde_json::json!([1, 2]));
    assert_eq!(v["result"]["subsets"][2]["g"], serde_json::json!([1, 4, 6, 3]));
}

#[test]
fn reported_polynomials_round_trip() {
    let file = data("twisted_cubic.txt");
    let text = stdout(&run(&["csm", &file]));
    let v = json(&["csm", &file]);
    for (line_key, json_key) in [
        ("gamma_S", "gamma_S"),
        ("gamma_complement", "gamma_complement"),
        ("chi_S(t)", "chi_S"),
        ("chi_complement(t)", "chi_complement"),
    ] {
        let printed: IntPoly = value_of(&text, line_key).parse().unwrap();
        assert_eq!(printed, as_poly(&v["result"][json_key]), "{line_key}");
    }

    let file = data("four_lines.txt");
    let text = stdout(&run(&["arrangement", &file]));
    let v = json(&["arrangement", &file]);
    for key in ["P", "P_reduced", "P_reduced_algebraic"] {
        let printed: IntPoly = value_of(&text, key).parse().unwrap();
        assert_eq!(printed, as_poly(&v["result"][key]), "{key}");
    }
    assert_eq!(v["result"]["match"], true);

    let v = json(&["involute", "4 - 2*t + 2*t^2"]);
    assert_eq!(as_poly(&v["result"]["output"]), "4+4t+2t^2".parse().unwrap());
}

#[test]
fn saturation_method_flag() {
    let out = stdout(&run(&["--degree-method", "saturation", "polar", &data("quadric_cone.txt")]));
    assert_eq!(out.lines().last(), Some("g = [1, 1, 1, 0]"));
}
