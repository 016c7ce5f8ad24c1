//! End-to-end tests of the command-line surface and its exit codes.

use std::process::{Command, Output};

fn sixlogic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sixlogic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn decide_worked_sequent_cross() {
    let out = sixlogic(&["decide", "p | q => ~(~p & ~q)", "--engine", "cross"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("provable"));
}

#[test]
fn decide_not_provable_is_exit_one() {
    let out = sixlogic(&["decide", "p, ~p => q"]);
    assert_eq!(exit_code(&out), 1);
    assert!(stdout(&out).contains("not provable"));
    assert!(stdout(&out).contains("counterexample"));
}

#[test]
fn decide_json_carries_stats_and_witness() {
    let out = sixlogic(&["decide", "p => #p", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["verdict"], "provable");
    assert_eq!(v["engine"], "cross");
    assert!(v["stats"]["states"].as_u64().unwrap() > 0);
    assert_eq!(v["witness"]["rule"], "(=>#)");
}

#[test]
fn decide_engine_selection() {
    for engine in ["semantic", "backward", "saturation"] {
        let out = sixlogic(&["decide", "=> #p | ~#p", "--engine", engine]);
        assert_eq!(exit_code(&out), 0, "{engine}");
    }
}

#[test]
fn gen_two_reports_230_rules() {
    let out = sixlogic(&["gen", "two", "--matrix", "m6"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("230 logic rules"), "{text}");
    assert!(text.contains("~: 16"));
    assert!(text.contains("#: 18"));
    assert!(text.contains("|: 98"));
    assert!(text.contains("&: 98"));
}

#[test]
fn gen_sf_exports_84_rules() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sf.json");
    let out = sixlogic(&["gen", "sf", "--out", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    let rules: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(rules.as_array().unwrap().len(), 84);
}

#[test]
fn table_circ_prints_the_consistency_column() {
    let out = sixlogic(&["table", "circ"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    let outputs: Vec<&str> = text
        .lines()
        .map(|l| l.split("-> ").nth(1).unwrap())
        .collect();
    assert_eq!(outputs, vec!["1", "0", "0", "0", "0", "1"]);

    let out = sixlogic(&["table", "bullet", "--format", "json"]);
    let rows: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(rows[0]["output"], "0");
    assert_eq!(rows[1]["output"], "1");
}

#[test]
fn eval_reports_value_and_designation() {
    let out = sixlogic(&["eval", "p & q", "--assign", "p=n,q=b"]);
    assert_eq!(exit_code(&out), 1, "1/3 is undesignated");
    assert_eq!(stdout(&out).trim(), "1/3");

    let out = sixlogic(&["eval", "#p", "--assign", "p=n"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out).trim(), "1");
}

#[test]
fn entails_and_theorem() {
    let out = sixlogic(&["entails", "p & q |- p"]);
    assert_eq!(exit_code(&out), 0);
    let out = sixlogic(&["entails", "p |- q"]);
    assert_eq!(exit_code(&out), 1);
    let out = sixlogic(&["theorem", "#p | ~#p"]);
    assert_eq!(exit_code(&out), 0);
    let out = sixlogic(&["theorem", "p | ~p"]);
    assert_eq!(exit_code(&out), 1);
}

#[test]
fn prove_then_check_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("proof.json");
    let out = sixlogic(&["prove", "#~#(p & q) => ~#p | ~#q", "--out", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);

    let out = sixlogic(&["check-proof", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("valid proof"));

    // corrupt the certificate: retag the root
    let text = std::fs::read_to_string(&path).unwrap();
    let corrupted = text.replacen("(=>|)", "(=>&)", 1);
    assert_ne!(text, corrupted);
    std::fs::write(&path, corrupted).unwrap();
    let out = sixlogic(&["check-proof", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 1);
    assert!(stdout(&out).contains("invalid proof"));
}

#[test]
fn prove_unprovable_gives_counterexample() {
    let out = sixlogic(&["prove", "=> p | ~p"]);
    assert_eq!(exit_code(&out), 1);
    assert!(stdout(&out).contains("counterexample: p=n"));
}

#[test]
fn streamline_replays_the_recorded_script() {
    let out = sixlogic(&["streamline", "--replay", "table1"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 18);
    assert!(text.lines().last().unwrap().contains("[=> B] / => A | B"));

    let out = sixlogic(&["streamline", "--replay", "tableau"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn gsub_lists_the_closure() {
    let out = sixlogic(&["gsub", "#~#(p & q) => ~#p | ~#q", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["count"], 15);
}

#[test]
fn parse_errors_exit_two() {
    let out = sixlogic(&["decide", "p | "]);
    assert_eq!(exit_code(&out), 2);
    let out = sixlogic(&["valid", "p => => q"]);
    assert_eq!(exit_code(&out), 2);
    let out = sixlogic(&["eval", "p", "--assign", "p=7"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn resource_limits_exit_three() {
    let out = sixlogic(&["valid", "a1,a2,a3,a4,a5,a6,a7,a8,a9 => a1"]);
    assert_eq!(exit_code(&out), 3);
    // the cap is adjustable
    let out = sixlogic(&[
        "valid",
        "a1,a2,a3,a4,a5,a6,a7,a8,a9 => a1",
        "--var-cap",
        "9",
    ]);
    assert_eq!(exit_code(&out), 0);
}

#[test]
fn decide_file_batches() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sequents.txt");
    std::fs::write(&path, "# fixtures\np => #p\n\np | q => ~(~p & ~q)\n").unwrap();
    let out = sixlogic(&["decide", "--file", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out).lines().count(), 2);

    std::fs::write(&path, "p => #p\np => q\n").unwrap();
    let out = sixlogic(&["decide", "--file", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 1);
}
