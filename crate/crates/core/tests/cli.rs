use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_barbell-w3"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn eval_reduces() {
    let o = run(&["eval", "t^2 u u^-1 t^-2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1\n");
    assert_eq!(stdout(&run(&["eval", "t_1 t_3 t_3^-1 u_1"])), "t_1 u_1\n");
}

#[test]
fn psi_of_target() {
    let o = run(&["psi", "--k", "3", "t_1^-1 t_3 u_3^-3 t_3^-2 - 2 t_1^2 u_1^3 t_1^-1 t_3"]);
    assert_eq!(stdout(&o), "3\n");
}

#[test]
fn psi_reads_json_file() {
    let target = run(&["target", "d2", "--k", "4"]);
    let expr = stdout(&target);
    let x = barbell_w3::RingElement::parse(expr.trim(), None).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("x.json");
    std::fs::write(&path, x.to_json()).unwrap();
    let o = run(&["psi", "--k", "4", "--in", path.to_str().unwrap()]);
    assert_eq!(stdout(&o), "3\n");
    let o = run(&["psi", "--k", "5", "--in", path.to_str().unwrap()]);
    assert_eq!(stdout(&o), "0\n");
}

#[test]
fn table_json_has_21_rows() {
    let o = run(&["table", "--k", "3", "--format", "json"]);
    let rows: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 21);
    assert!(rows.iter().all(|r| r["admissible"] == false && r["m1_solution"].is_object()));
}

#[test]
fn span_dump_is_a_json_array() {
    let o = run(&["span-dump", "--max-syllables", "1", "--max-exponent", "1", "--kinds", "1,6"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let items = v.as_array().unwrap();
    assert_eq!(items.len(), 16);
    assert!(items.iter().all(|g| g["i"] == 1 || g["i"] == 6));
}

#[test]
fn verify_report_is_deterministic_and_untimed() {
    let args = ["verify", "hexagon", "--kmax", "3", "--max-syllables", "1", "--max-exponent", "2", "--trials", "200", "--seed", "7"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(!text.contains("elapsed_ms"));
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["suite"], "hexagon");
    assert_eq!(v["overall"], "pass");
    assert!(String::from_utf8_lossy(&a.stderr).contains("ms"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["eval", "t x"]).status.code(), Some(2));
    assert_eq!(run(&["target", "d3", "--k", "1"]).status.code(), Some(2));
    assert_eq!(run(&["target", "d1", "--k", "0"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "span", "--max-exponent", "0"]).status.code(), Some(2));
    assert_eq!(run(&["span-dump", "--max-syllables", "1", "--max-exponent", "1", "--kinds", "2"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
