use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_quasiring"));
    c.env_remove("QUASIRING_BUDGET");
    c
}

fn spec(name: &str) -> String {
    format!("{}/../../specs/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn check_pass_exits_zero() {
    let o = run(&["check", &spec("discrete.qr"), "T34"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("T34  PASS"));
}

#[test]
fn fail_exits_one_and_shows_witness() {
    let o = run(&["run", &spec("t26.qr")]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("T26 witness:") && out.contains("χ_U=(1,0,0)"), "{out}");
}

#[test]
fn parse_errors_exit_two() {
    let mut child = bin().args(["analyze", "-"]).stdin(Stdio::piped()).stderr(Stdio::piped()).spawn().unwrap();
    child.stdin.take().unwrap().write_all(b"space Z discrete 2\nring R = C(Z, W)\n").unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("2:"));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["generate", "--primes", "2", "--algebra", "zmod:4"]).status.code(), Some(2));
}

#[test]
fn budget_env_exits_three() {
    let mut child =
        bin().args(["ideals", "-"]).env("QUASIRING_BUDGET", "100").stdin(Stdio::piped()).stderr(Stdio::piped()).spawn().unwrap();
    child.stdin.take().unwrap().write_all(b"space Z discrete 6 algebra Y zmod 3 ring R = C(Z, Y)").unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn json_report() {
    let o = run(&["ideals", &spec("discrete.qr"), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["sections"][0]["kind"], "ideals");
    assert_eq!(v["sections"][0]["primes"].as_array().unwrap().len(), 2);
}

#[test]
fn generate_and_fuzz() {
    let o = run(&["generate", "--primes", "3", "--algebra", "zmod:2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("8 functions"));
    let o = run(&["fuzz", "--seed", "3", "--instances", "4", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["sections"][0]["instances"], 4);
}

#[test]
fn sequence_backend() {
    let o = run(&["run", &spec("sequence.qr"), "--prefix", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("sequence backend") && out.contains("6 PASS"), "{out}");
}
