//! End-to-end checks of the command-line interface: subcommands, output
//! formats, determinism, and exit codes.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_conformal-hochschild"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

#[test]
fn u3_json_output_is_schema_stable_and_deterministic() {
    let args =
        ["u3", "cohomology", "--n-max", "3", "--deg-max", "8", "--method", "both", "--out", "json"];
    let first = run(&args);
    assert!(first.status.success(), "{}", String::from_utf8_lossy(&first.stderr));
    let second = run(&args);
    assert_eq!(first.stdout, second.stdout, "byte-identical across runs");
    let value: serde_json::Value = serde_json::from_str(&stdout(&first)).expect("valid json");
    assert_eq!(value["family"], "U(3)");
    assert_eq!(value["caps"]["n_max"], 3);
    assert_eq!(value["caps"]["deg_max"], 8);
    assert_eq!(value["totals"]["1"], 0);
    assert_eq!(value["totals"]["2"], 1);
    assert_eq!(value["totals"]["3"], 1);
    let entries = value["entries"].as_array().expect("entries array");
    assert_eq!(entries.len(), 3 * 9);
    for field in ["n", "d", "dim_space", "dim_kernel", "dim_ker_delta", "dim_im_delta", "cohomology"]
    {
        assert!(entries[0].get(field).is_some(), "missing field {field}");
    }
}

#[test]
fn u2_table_vanishes() {
    let out = run(&["u2", "cohomology", "--n-max", "3", "--deg-max", "8", "--out", "json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    for n in 1..=3 {
        assert_eq!(value["totals"][n.to_string()], 0);
    }
}

#[test]
fn csv_mirrors_entries() {
    let out = run(&["u3", "cohomology", "--n-max", "2", "--deg-max", "4", "--out", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "n,d,dim_space,dim_kernel,dim_ker_delta,dim_im_delta,cohomology"
    );
    assert_eq!(lines.count(), 2 * 5);
}

#[test]
fn current_builtin_matrix_algebra() {
    let out = run(&[
        "current",
        "--algebra",
        "builtin:mat:2",
        "--n-max",
        "2",
        "--deg-max",
        "2",
        "--out",
        "json",
    ]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(value["family"], "current:mat(2)");
    assert_eq!(value["totals"]["1"], 0);
    assert_eq!(value["totals"]["2"], 0);
}

#[test]
fn current_structure_constant_document() {
    // the 2-dimensional algebra x k[x]/(x^3) given explicitly
    let doc = r#"{"dim": 2, "labels": ["x", "x2"],
        "table": [[[[0,1],[1,1]], [[0,1],[0,1]]],
                  [[[0,1],[0,1]], [[0,1],[0,1]]]]}"#;
    let dir = std::env::temp_dir().join("conformal-hochschild-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("truncpoly3.json");
    std::fs::write(&path, doc).unwrap();
    let out = run(&[
        "current",
        "--algebra",
        path.to_str().unwrap(),
        "--n-max",
        "1",
        "--deg-max",
        "2",
        "--out",
        "json",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(value["totals"]["1"], 1); // dim A/A^2 = 1
}

#[test]
fn selftest_suite_passes() {
    for suite in ["current", "morse"] {
        let out = run(&["selftest", "--suite", suite]);
        assert!(out.status.success(), "suite {suite}");
        let text = stdout(&out);
        assert!(text.contains("[PASS]"), "suite {suite}");
        assert!(!text.contains("[FAIL]"), "suite {suite}");
    }
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["selftest", "--suite", "bogus"]).status.code(), Some(2));
    assert_eq!(run(&["u3", "cohomology", "--method", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["unknown-command"]).status.code(), Some(2));
}

#[test]
fn bad_algebra_exits_1() {
    let out = run(&["current", "--algebra", "builtin:nope:2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error:"));
}

#[test]
fn output_file_is_written() {
    let dir = std::env::temp_dir().join("conformal-hochschild-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let _ = std::fs::remove_file(&path);
    let out = run(&[
        "u3",
        "cohomology",
        "--n-max",
        "2",
        "--deg-max",
        "3",
        "--out",
        "json",
        "--output-file",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).expect("report file");
    let value: serde_json::Value = serde_json::from_str(&text).expect("valid json");
    assert_eq!(value["caps"]["n_max"], 2);
}
