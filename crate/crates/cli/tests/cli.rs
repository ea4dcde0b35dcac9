//! End-to-end runs of the `polydiagram` binary.

use std::process::{Command, Output};

use num_rational::BigRational;
use polydiagram_cli::format::rational_from_json;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polydiagram"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn area_all_methods_agree() {
    let o = run(&[
        "area", "--q", "2", "--n", "0", "--k", "2", "--method", "all",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "method,area,decimal\nclosed,5/2,2.5\ngeneral,5/2,2.5\nshoelace,5/2,2.5\npick,5/2,2.5\n"
    );
}

#[test]
fn area_degenerate_warns_on_stderr() {
    let o = run(&[
        "area", "--q", "1", "--n", "0", "--k", "2", "--method", "general",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "method,area,decimal\ngeneral,0/1,0\n");
    assert!(stderr(&o).contains("warning"));
}

#[test]
fn area_shoelace_degree_three() {
    let o = run(&[
        "area", "--q", "2", "--n", "0", "--k", "3", "--method", "shoelace", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(
        rational_from_json(&v["rows"][0]["area"]),
        Some(BigRational::new(15.into(), 2.into()))
    );
    assert_eq!(v["params"]["q"], "2");
}

#[test]
fn area_pick_reports_counts() {
    let o = run(&[
        "area", "--q", "2", "--k", "2", "--method", "pick", "--format", "markdown",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("| pick | 5/2 | 2.5 |"));
    assert!(out.contains("- interior: 0"));
    assert!(out.contains("- boundary: 7"));
}

#[test]
fn huge_base_stays_exact() {
    let q = "123456789012345678901234567890";
    let o = run(&[
        "area", "--q", q, "--n", "3", "--k", "2", "--method", "all", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["summary"]["agree"], true);
    assert_eq!(
        v["rows"].as_array().unwrap().len(),
        3,
        "pick is skipped over budget"
    );
    assert!(stderr(&o).contains("Pick oracle skipped"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["area", "--q", "0"],
        vec!["area", "--q", "-4"],
        vec!["area", "--q", "2", "--n", "-1"],
        vec!["area", "--q", "2", "--k", "0"],
        vec!["area", "--q", "2", "--k", "3", "--method", "closed"],
        vec!["area", "--q", "1", "--method", "pick"],
        vec![
            "area",
            "--q",
            "10",
            "--k",
            "6",
            "--method",
            "pick",
            "--pick-budget",
            "10",
        ],
        vec!["area", "--q", "2", "--format", "xml"],
        vec!["area"],
        vec!["table", "--q-from", "5", "--q-to", "4"],
        vec!["table", "--q-from", "0"],
        vec!["diff", "--order", "1", "--q-from", "3", "--q-to", "3"],
        vec!["diff", "--order", "0"],
        vec!["verify", "--q-max", "0"],
        vec!["render", "--q", "0"],
        vec!["bogus"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stderr(&o));
        assert!(o.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn table_defaults() {
    let o = run(&["table"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "q,area,area_decimal,ratio,ratio_decimal");
    assert_eq!(lines[1], "2,5/2,2.5,12/5,2.4");
    assert_eq!(lines[15], "16,285/2,142.5,64/57,1.1228");
    assert_eq!(lines.len(), 16);
}

#[test]
fn table_undefined_ratio_marker() {
    let o = run(&[
        "table", "--k", "2", "--n", "0", "--q-from", "1", "--q-to", "1", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let row = &v["rows"][0];
    assert_eq!(row["q"], "1");
    assert_eq!(
        rational_from_json(&row["area"]),
        Some(BigRational::from_integer(0.into()))
    );
    assert_eq!(row["ratio"], Value::Null);
    let csv = stdout(&run(&["table", "--q-from", "1", "--q-to", "1"]));
    assert_eq!(csv.lines().nth(1), Some("1,0/1,0,undefined,undefined"));
}

#[test]
fn diff_outputs() {
    let o = run(&[
        "diff", "--k", "2", "--n", "0", "--order", "2", "--q-from", "1", "--q-to", "10",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let values: Vec<&str> = out
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap())
        .collect();
    assert_eq!(values, vec!["1/1"; 8]);

    let o = run(&[
        "diff", "--k", "2", "--n", "1", "--order", "2", "--q-from", "2", "--q-to", "4",
    ]);
    assert_eq!(stdout(&o), "q,difference,decimal\n2,11/1,11\n");
}

#[test]
fn verify_small_grids() {
    let o = run(&["verify", "--q-max", "1", "--n-max", "0", "--k-max", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["summary"]["points"], "1");
    assert_eq!(v["summary"]["failures"], "0");

    let o = run(&["verify", "--q-max", "16", "--n-max", "0", "--k-max", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["summary"]["table_golden"], "pass");

    let o = run(&[
        "verify", "--q-max", "4", "--n-max", "1", "--k-max", "2", "--format", "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("check,passed,failed\ncross_check,16,0\n"));
}

#[test]
fn render_to_file_and_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d.svg");
    let o = run(&[
        "render",
        "--q",
        "2",
        "--n",
        "0",
        "--k",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.contains(r#"version="1.1""#));
    for label in ["(1,0)", "(1,2)", "(2,1)", "(4,0)"] {
        assert!(svg.contains(label));
    }
    let again = run(&["render", "--q", "2", "--n", "0", "--k", "2"]);
    assert_eq!(stdout(&again), svg);
}

#[test]
fn render_degenerate_warns() {
    let o = run(&["render", "--q", "1", "--k", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("segment"));
    assert!(stdout(&o).contains("<path"));
}

#[test]
fn render_unwritable_path_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("d.svg");
    let o = run(&["render", "--q", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}
