use std::process::{Command, Output};

use fuss_catalan::render::{parse_triangle_csv, parse_triangle_json};
use fuss_catalan::{triangle_convolution, Method, TriangleParams};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fuss-catalan"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn p5_table_matches_golden_file() {
    let out = run(&["triangle", "--p", "5", "--n-max", "10", "--format", "table"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), include_str!("golden/p5_table.txt"));
}

#[test]
fn order_one_rows() {
    let out = run(&["triangle", "--p", "1", "--n-max", "3", "--format", "csv"]);
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows, ["0,1,,,,1", "1,1,0,,,1", "2,1,0,0,,1", "3,1,0,0,0,1"]);
}

#[test]
fn csv_last_line() {
    let out = run(&["triangle", "--p", "3", "--n-max", "3", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().last(), Some("3,1,4,7,0,12"));
}

#[test]
fn csv_and_json_round_trip() {
    let expected = triangle_convolution(TriangleParams::new(10, 30).unwrap());
    let json = run(&["triangle", "--p", "10", "--n-max", "30", "--format", "json"]);
    assert!(parse_triangle_json(&stdout(&json))
        .unwrap()
        .same_cells(&expected));
    let csv = run(&["triangle", "--p", "10", "--n-max", "30", "--format", "csv"]);
    let parsed = parse_triangle_csv(&stdout(&csv), 10, Method::Convolution).unwrap();
    assert_eq!(parsed, expected);
    let closed = run(&[
        "triangle",
        "--p",
        "10",
        "--n-max",
        "30",
        "--method",
        "closed-form",
        "--format",
        "json",
    ]);
    let parsed = parse_triangle_json(&stdout(&closed)).unwrap();
    assert_eq!(parsed.method(), Method::ClosedForm);
    assert!(parsed.same_cells(&expected));
}

#[test]
fn invalid_arguments_exit_2() {
    for args in [
        &["triangle", "--p", "0", "--n-max", "3"][..],
        &["triangle", "--p", "2", "--n-max", "-1"],
        &["triangle", "--p", "2", "--n-max", "3", "--format", "xml"],
        &["verify", "--scope", "partitions", "--n-max", "8"],
        &["enumerate", "--family", "double-partitions", "--n", "10"],
        &["frobnicate"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    let out = run(&["enumerate", "--family", "double-partitions", "--n", "10"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("n <= 9"));
}

#[test]
fn verify_sequences() {
    let out = run(&["verify", "--scope", "sequences"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let signed = text
        .lines()
        .filter(|l| l.starts_with("PASS") && l.contains("signed"))
        .count();
    assert_eq!(signed, 10);
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_triangles_and_partitions() {
    let out = run(&[
        "verify",
        "--scope",
        "triangles",
        "--p-max",
        "10",
        "--n-max",
        "30",
    ]);
    assert!(out.status.success(), "{}", stdout(&out));
    let out = run(&["verify", "--scope", "partitions", "--n-max", "5"]);
    assert!(out.status.success(), "{}", stdout(&out));
    let text = stdout(&out);
    for needle in ["T^2", "T^3", "T^4"] {
        assert!(
            text.lines()
                .any(|l| l.starts_with("PASS") && l.contains(needle)),
            "{needle}"
        );
    }
    let out = run(&["verify", "--scope", "paths"]);
    assert!(out.status.success(), "{}", stdout(&out));
}

#[test]
fn enumerate_listings() {
    let out = run(&["enumerate", "--family", "matchings", "--n", "2"]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(lines.last(), Some(&"histogram {1:1, 2:1}"));

    let out = run(&["enumerate", "--family", "double-partitions", "--n", "1"]);
    let text = stdout(&out);
    assert_eq!(text.lines().nth(1), Some("[1]/[1]  1"));
    assert_eq!(text.lines().last(), Some("histogram {1:1}"));

    let out = run(&[
        "enumerate",
        "--family",
        "double-partitions",
        "--n",
        "3",
        "--format",
        "csv",
    ]);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 1 + 12 + 1);
    assert_eq!(text.lines().last(), Some("histogram,{1:7 2:4 3:1}"));
}

#[test]
fn bench_reports_three_methods() {
    let out = run(&["bench", "--p", "2", "--n-max", "0", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 4);
    for m in ["convolution", "alternating", "closed-form"] {
        assert!(text.contains(m));
    }
    let out = run(&["bench", "--p", "5", "--n-max", "60", "--repetitions", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("outputs agree"));
}
