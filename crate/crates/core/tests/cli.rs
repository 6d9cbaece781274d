use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use qwalk::closed_form::q2_oracle_distribution;
use qwalk::evolution::evolve_half_line;
use qwalk::harness::{parse_json, Rows};
use qwalk::{Coin, WalkKind};

fn qwalk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qwalk"))
        .args(args)
        .output()
        .unwrap()
}

fn qwalk_threads(args: &[&str], threads: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qwalk"))
        .args(args)
        .env("QWALK_THREADS", threads)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    assert!(
        o.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn oracle_first_step_is_exact() {
    let out = stdout(&qwalk(&["oracle", "--steps", "1"]));
    assert_eq!(out, "x,p0,p1,p\n0,0,0.5,0.5\n1,0,0.5,0.5\n");
}

#[test]
fn simulate_first_step_matches_within_rounding() {
    let out = stdout(&qwalk(&["simulate", "--steps", "1", "--theta", "pi/4"]));
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("x,p0,p1,p"));
    for (line, x) in lines.zip(0..) {
        let v: Vec<f64> = line.split(',').map(|f| f.parse().unwrap()).collect();
        assert_eq!(v[0], x as f64);
        assert_eq!(v[1], 0.0);
        assert!((v[2] - 0.5).abs() < 1e-15 && (v[3] - 0.5).abs() < 1e-15);
    }
}

#[test]
fn exact_rational_line_walk() {
    let out = stdout(&qwalk(&[
        "exact",
        "--walk",
        "line",
        "--steps",
        "1",
        "--precision",
        "exact",
    ]));
    assert_eq!(out, "x,p0,p1,p\n-2,,,0.5\n-1,,,0.5\n");
}

#[test]
fn json_output_parses_back_to_the_library_values() {
    let out = stdout(&qwalk(&[
        "simulate", "--steps", "40", "--theta", "1.0", "--format", "json",
    ]));
    let table = parse_json(&out).unwrap();
    assert_eq!(table.meta.t, Some(40));
    let want = evolve_half_line(&Coin::new(1.0).unwrap(), 40).distribution();
    match table.rows {
        Rows::Distribution(rows) => assert_eq!(rows, want.rows),
        other => panic!("unexpected rows {other:?}"),
    }
}

#[test]
fn exact_json_keeps_rationals() {
    let out = stdout(&qwalk(&["oracle", "--steps", "12", "--format", "json"]));
    let table = parse_json(&out).unwrap();
    let want = q2_oracle_distribution(WalkKind::HalfLine, 12).unwrap();
    match table.rows {
        Rows::Exact(rows) => assert_eq!(rows, want.rows),
        other => panic!("unexpected rows {other:?}"),
    }
}

#[test]
fn output_is_identical_across_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    let args = |sub: &str| {
        vec![
            "sweep".to_string(),
            "--thetas".into(),
            "pi/6,pi/4,1.0".into(),
            "--ts".into(),
            "5..9,30".into(),
            "--out".into(),
            dir.path().join(sub).display().to_string(),
        ]
    };
    for (sub, threads) in [("one", "1"), ("four", "4")] {
        let a = args(sub);
        let a: Vec<&str> = a.iter().map(String::as_str).collect();
        stdout(&qwalk_threads(&a, threads));
    }
    let names = |sub: &str| {
        let mut v: Vec<_> = fs::read_dir(dir.path().join(sub))
            .unwrap()
            .map(|e| e.unwrap().file_name())
            .collect();
        v.sort();
        v
    };
    assert_eq!(names("one"), names("four"));
    assert_eq!(names("one").len(), 3 * 6 + 1);
    for name in names("one") {
        let a = fs::read(dir.path().join("one").join(&name)).unwrap();
        let b = fs::read(dir.path().join("four").join(&name)).unwrap();
        assert_eq!(a, b, "{name:?}");
    }
    let index = fs::read_to_string(dir.path().join("one/index.csv")).unwrap();
    assert!(index.starts_with("theta,t,file\n0.5235987755982989,5,"));
}

#[test]
fn repeated_runs_are_byte_identical() {
    let args = ["verify", "--steps", "20", "--thetas", "pi/3,1.0"];
    assert_eq!(
        stdout(&qwalk_threads(&args, "1")),
        stdout(&qwalk_threads(&args, "3"))
    );
}

#[test]
fn figure_writes_each_table() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    stdout(&qwalk(&[
        "figure", "fig4", "fig8", "--out", out, "--format", "json",
    ]));
    for name in [
        "fig4_evolve.json",
        "fig4_exact.json",
        "fig8_evolve.json",
        "fig8_approx.json",
    ] {
        let text = fs::read_to_string(Path::new(out).join(name)).unwrap();
        parse_json(&text).unwrap();
    }
}

#[test]
fn exit_codes() {
    assert_eq!(qwalk(&["verify", "--steps", "5"]).status.code(), Some(0));
    assert_eq!(
        qwalk(&["exact", "--theta", "0", "--steps", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        qwalk(&["oracle", "--steps", "3", "--theta", "pi/3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(qwalk(&["simulate", "--steps", "-1"]).status.code(), Some(2));
    assert_eq!(qwalk(&["bogus"]).status.code(), Some(2));
    let o = qwalk(&[
        "simulate",
        "--steps",
        "2",
        "--out",
        "/nonexistent/dir/x.csv",
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
}

#[test]
fn verify_reports_domain_errors_with_exit_two() {
    let o = qwalk(&[
        "verify",
        "--suite",
        "exactVsSim",
        "--thetas",
        "pi/2",
        "--steps",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let body = String::from_utf8(o.stdout).unwrap();
    assert!(
        body.lines().skip(1).all(|l| l.ends_with("domainError")),
        "{body}"
    );
}
