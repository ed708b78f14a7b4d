//! End-to-end tests of the binary: spec'd outputs and exit codes.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_blowdown"))
        .args(args)
        .env_remove("BLOWDOWN_MAX_J")
        .output()
        .expect("binary runs")
}

fn stdout_lines(out: &Output) -> Vec<serde_json::Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).expect("valid JSON line"))
        .collect()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn enumerate_counts() {
    let out = run(&["enumerate", "--a", "2", "--b", "0"]);
    assert_eq!(code(&out), 0);
    let lines = stdout_lines(&out);
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[1]["count"], 1);

    let out = run(&["enumerate", "--a", "4", "--b", "0"]);
    let lines = stdout_lines(&out);
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[3]["count"], 3);
    assert_eq!(
        lines[0]["sequence"],
        serde_json::json!([[4, 0], [4, 1], [4, 2], [4, 3], [4, 4]])
    );
}

#[test]
fn enumerate_csv_has_one_row_per_sequence() {
    let out = run(&["enumerate", "--a", "3", "--b", "-3", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8_lossy(&out.stdout);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.len(), 9, "header plus eight rows");
    assert!(rows[0].starts_with("sequence,t,w,c2_defect"));
    assert!(rows[1].starts_with("\"3,-3;3,-2"));
}

#[test]
fn enumerate_is_byte_deterministic() {
    let a = run(&["enumerate", "--a", "3", "--b", "-3"]);
    let b = run(&["enumerate", "--a", "3", "--b", "-3"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn enumerate_respects_env_cap() {
    let out = Command::new(env!("CARGO_BIN_EXE_blowdown"))
        .args(["enumerate", "--a", "6", "--b", "-6"])
        .env("BLOWDOWN_MAX_J", "3")
        .output()
        .expect("binary runs");
    assert_eq!(code(&out), 2);
    let lines = stdout_lines(&out);
    assert!(lines[0]["error"]
        .as_str()
        .unwrap()
        .contains("enumeration cap exceeded"));
}

#[test]
fn invariants_reports_and_rejects() {
    let out = run(&["invariants", "3,-3;3,-2;1,1"]);
    assert_eq!(code(&out), 0);
    let v = &stdout_lines(&out)[0];
    assert_eq!(v["w"], 3);
    assert_eq!(v["c2_defect"], 5);
    assert_eq!(v["z"], 2);

    let out = run(&["invariants", "0,0"]);
    let v = &stdout_lines(&out)[0];
    assert_eq!((v["w"].as_i64(), v["c2_defect"].as_i64(), v["z"].as_i64()),
               (Some(0), Some(0), Some(0)));

    let out = run(&["invariants", "2,-2;2,0"]);
    assert_eq!(code(&out), 2);
    let v = &stdout_lines(&out)[0];
    assert_eq!(v["valid"], false);
    assert!(v["violations"]
        .as_array()
        .unwrap()
        .contains(&serde_json::json!("ii")));
}

#[test]
fn audit_exit_codes_and_reports() {
    let out = run(&["audit", "--claim", "thm05", "--j", "3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_lines(&out)[0]["holds"], true);

    let out = run(&["audit", "--claim", "thm02", "--j", "2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_lines(&out)[0]["holds"], true);

    let out = run(&["audit", "--claim", "thm02", "--j", "3", "--strict"]);
    assert_eq!(code(&out), 3);
    let v = &stdout_lines(&out)[0];
    assert_eq!(v["holds"], false);
    assert_eq!(v["missing"].as_array().unwrap().len(), 4);

    // non-strict audits exit 0 even when the claim fails
    let out = run(&["audit", "--claim", "thm02", "--j", "3"]);
    assert_eq!(code(&out), 0);
}

#[test]
fn audit_csv_rows() {
    let out = run(&["audit", "--claim", "thm02", "--j", "2", "--format", "csv"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(text.lines().count(), 4, "header plus three attained pairs");
}

#[test]
fn bundle_operations() {
    let out = run(&["bundle", "--j", "2", "--p", "[]", "--op", "cech"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_lines(&out)[0]["w"], 1);

    let out = run(&["bundle", "--j", "3", "--p", "[]", "--op", "invariants"]);
    let v = &stdout_lines(&out)[0];
    assert_eq!(v["w"], 3);
    assert_eq!(v["z"], 6);

    let out = run(&[
        "bundle",
        "--j",
        "2",
        "--p",
        r#"[{"i":1,"l":1,"c":"1"}]"#,
        "--op",
        "verify",
    ]);
    assert_eq!(code(&out), 0);
    let v = &stdout_lines(&out)[0];
    assert_eq!(v["agree"], true);
    assert_eq!(v["w_cech"], 1);

    let out = run(&["bundle", "--j", "1", "--op", "matrix"]);
    assert_eq!(
        String::from_utf8_lossy(&out.stdout).trim(),
        r#"{"u_truncation":4,"det":{"unit":"1","exp":0},"entries":[[[{"l":1,"i":0,"c":"1"}],[]],[[],[{"l":-1,"i":0,"c":"1"}]]]}"#
    );

    let out = run(&[
        "bundle",
        "--j",
        "1",
        "--p",
        r#"[{"i":1,"l":0,"c":"1"}]"#,
        "--op",
        "cech",
    ]);
    assert_eq!(code(&out), 2);
}

#[test]
fn rank_r_operations() {
    let out = run(&["rank-r", "--tuples", "0,0,-2;0,0,-1", "--op", "w"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_lines(&out)[0]["value"], 1);

    let out = run(&["rank-r", "--tuples", "1,0,-1", "--op", "w"]);
    assert_eq!(stdout_lines(&out)[0]["value"], 0);

    let out = run(&["rank-r", "--tuples", "0,-2,-3", "--op", "bound"]);
    assert_eq!(stdout_lines(&out)[0]["value"], 3);

    let out = run(&["rank-r", "--tuples", "0,-2,-3", "--op", "w"]);
    assert_eq!(code(&out), 2);

    let out = run(&["rank-r", "--tuples", "0,-2,0", "--op", "bound"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn version_prints_schema() {
    let out = run(&["--version"]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("schema 1"));
}

#[test]
fn malformed_arguments_exit_two() {
    let out = run(&["enumerate", "--a", "zero", "--b", "0"]);
    assert_eq!(code(&out), 2);
    let out = run(&["audit", "--claim", "bogus", "--j", "2"]);
    assert_eq!(code(&out), 2);
    // a < b is rejected by the library with an input error
    let out = run(&["enumerate", "--a", "0", "--b", "4"]);
    assert_eq!(code(&out), 2);
}
