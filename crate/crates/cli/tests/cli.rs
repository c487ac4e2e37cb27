use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidcover"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn surface_line() {
    let out = run(&["surface", "--d", "4", "--n", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "b=1 g=3 rank=6\n");
}

#[test]
fn surface_json() {
    let out = run(&["--format", "json", "surface", "--d", "5", "--n", "5"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["boundary"], 5);
    assert_eq!(v["genus"], 6);
    assert_eq!(v["rank"], 16);
}

#[test]
fn tables_have_one_row_per_n() {
    let text = stdout(&run(&["tables", "--d", "4", "--n-max", "8"]));
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 9);
    assert_eq!(lines[0].split_whitespace().collect::<Vec<_>>(), ["n", "b", "g", "rank"]);
    assert_eq!(lines[8].split_whitespace().collect::<Vec<_>>(), ["8", "4", "9", "21"]);

    let json = stdout(&run(&["tables", "--d", "4", "--n-max", "8", "--format", "json"]));
    assert_eq!(json.lines().count(), 8);
}

#[test]
fn eval_of_trivial_word_is_identity() {
    let text = stdout(&run(&["eval", "--d", "3", "--n", "2", "--word", "1 -1"]));
    assert_eq!(text, "x[1,1] -> x[1,1]\nx[1,2] -> x[1,2]\n");
}

#[test]
fn word_may_start_with_an_inverse() {
    let out = run(&["eval", "--d", "3", "--n", "2", "--word", "-1 1"]);
    assert!(out.status.success());
}

#[test]
fn aut_and_matrix() {
    let text = stdout(&run(&["aut", "--d", "3", "--n", "2", "--i", "1"]));
    assert_eq!(text, "x[1,1] -> x[1,2]^-1\nx[1,2] -> x[1,2]*x[1,1]\n");

    let json = stdout(&run(&[
        "--format", "json", "matrix", "--d", "3", "--n", "2", "--word", "1",
    ]));
    let rows: Vec<serde_json::Value> = json.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows[0]["entries"], serde_json::json!([0, -1]));
    assert_eq!(rows[1]["entries"], serde_json::json!([1, 1]));
    assert_eq!(rows[2]["determinant"], "1");
}

#[test]
fn lift_lists_swapped_vertices_and_every_edge() {
    let json = stdout(&run(&["lift", "--d", "3", "--n", "3", "--i", "1", "--format", "json"]));
    let records: Vec<serde_json::Value> = json.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(records.iter().filter(|r| r.get("vertex").is_some()).count(), 2);
    assert_eq!(records.iter().filter(|r| r.get("edge").is_some()).count(), 12);
    assert_eq!(records[2]["edge"], "e[0,1]");
    assert_eq!(records[2]["image"], "e[0,1]*e[1,2]");
}

#[test]
fn dehn_sheet_wraps() {
    let a = stdout(&run(&["dehn", "--d", "3", "--n", "3", "--i", "1", "--j", "2"]));
    let b = stdout(&run(&["dehn", "--d", "3", "--n", "3", "--i", "1", "--j", "-1"]));
    assert_eq!(a, b);
}

#[test]
fn verify_passes() {
    let out = run(&["verify", "--d", "3", "--n", "4", "--suite", "all"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).ends_with("d=3 n=4: 24/24 checks passed\n"));
}

#[test]
fn verify_failure_exits_one() {
    let out = run(&[
        "--letter-budget", "2", "verify", "--d", "5", "--n", "4", "--suite", "dehn",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL dehn i=1"));
}

#[test]
fn range_errors_name_the_parameter() {
    let out = run(&["aut", "--d", "3", "--n", "3", "--i", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("`i`"));

    let out = run(&["lift", "--d", "1", "--n", "3", "--i", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("`d`"));
}

#[test]
fn usage_and_budget_errors_exit_two() {
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    assert_eq!(run(&["surface", "--d", "3"]).status.code(), Some(2));
    assert_eq!(
        run(&["eval", "--d", "3", "--n", "3", "--word", "1 x"]).status.code(),
        Some(2)
    );
    let out = run(&[
        "--letter-budget", "3", "eval", "--d", "4", "--n", "4", "--word", "1 2 3 1 2",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["verify", "--d", "4", "--n", "4"][..],
        &[
            "--format", "json", "eval", "--d", "4", "--n", "5", "--word", "1 2 -3 4 2",
        ],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout);
    }
}
