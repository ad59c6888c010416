use std::process::{Command, Output};

fn schurpp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schurpp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn passing_suite_exits_zero() {
    let out = schurpp(&["verify", "thm1", "--n", "1..2", "--m", "0..2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("6 passed, 0 failed"), "{text}");
    assert!(!text.contains("FAIL"), "{text}");
}

#[test]
fn parity_violation_is_a_usage_error() {
    let out = schurpp(&["verify", "lemma2", "--n", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("even n"));
}

#[test]
fn unknown_target_is_a_usage_error() {
    let out = schurpp(&["verify", "thm9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn known_false_class_fails_a_plain_comparison() {
    let out = schurpp(&[
        "verify",
        "gf-cross",
        "--class",
        "sym-all-heights-even",
        "--n",
        "2",
        "--m",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("FAIL") && text.contains("-q^4"), "{text}");
}

#[test]
fn default_gf_cross_suite_asserts_the_inequality() {
    let out = schurpp(&["verify", "gf-cross"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("gf-cross-negative"));
}

#[test]
fn json_reports_are_byte_stable_without_timestamp() {
    let args = [
        "verify",
        "weyl",
        "--format",
        "json",
        "--no-timestamp",
        "--workers",
        "2",
    ];
    let a = schurpp(&args);
    let b = schurpp(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(!text.contains("timestamp"), "{text}");
    assert!(!text.contains("wall_time_ms"), "{text}");
    assert!(text.contains("\"pass\": 9"), "{text}");
}

#[test]
fn csv_report_has_header_and_rows() {
    let out = schurpp(&["verify", "lemma1", "--n", "1..2", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("identity,params,holds,witness_monomial,wall_time_ms")
    );
    assert_eq!(lines.filter(|l| l.starts_with("lemma1,")).count(), 2);
}

#[test]
fn gf_prints_coefficients_and_verdict() {
    let out = schurpp(&["gf", "--class", "sym", "--n", "2", "--m", "1", "--weight", "size"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().next(), Some("1,1,0,1,1"));

    let out = schurpp(&[
        "gf",
        "--class",
        "sym-diag-even",
        "--n",
        "2",
        "--m",
        "2",
        "--compare",
        "size-even",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("equal to size-even"));

    let out = schurpp(&[
        "gf",
        "--class",
        "sym-all-heights-even",
        "--n",
        "2",
        "--m",
        "2",
        "--compare",
        "size-even",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("NOT equal"));
}

#[test]
fn gf_box_too_large_is_a_usage_error() {
    let out = schurpp(&["gf", "--class", "sym", "--n", "2", "--m", "9"]);
    assert_eq!(out.status.code(), Some(2));
    // raising the cap makes the same request valid
    let out = schurpp(&["gf", "--class", "sym", "--n", "2", "--m", "9", "--max-box", "4,4,9"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn explore_examples() {
    let out = schurpp(&["explore", "--m", "1", "--n", "1"]);
    assert_eq!(stdout(&out).trim(), "1 + (t + v)*x1");

    let out = schurpp(&["explore", "--m", "0", "--n", "3"]);
    assert_eq!(stdout(&out).trim(), "1");

    // t=0, v=1 reduces every weight to 1: the plain boxed Schur sum
    let out = schurpp(&["explore", "--m", "1", "--n", "2", "--t", "0", "--v", "1"]);
    assert_eq!(stdout(&out).trim(), "1 + x2 + x1 + x1*x2");

    let out = schurpp(&["explore", "--m", "1", "--n", "9"]);
    assert_eq!(out.status.code(), Some(2));
}
