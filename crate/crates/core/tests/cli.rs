use std::path::PathBuf;
use std::process::{Command, Output};

use braidalg::cli::{diff_reports, run_with, ReportDiff, Suite, SuiteConfig, SuiteReport};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
        .display()
        .to_string()
}

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidalg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run(args: &[&str]) -> (u8, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("braidalg").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn mul_qshuffle_diag_q() {
    let (code, out, _) = run(&[
        "mul",
        "--product",
        "qshuffle",
        "--lhs",
        "e1",
        "--rhs",
        "e2",
        "--input",
        &data("diag_q.json"),
    ]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "e1|e2 + q*e2|e1");
}

#[test]
fn mul_classical_shuffle() {
    let (code, out, _) = run(&["mul", "--product", "shuffle", "--lhs", "e1|e1", "--rhs", "e1"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "3*e1|e1|e1");
}

#[test]
fn mul_quasi_shuffle_weight_defaults_to_one() {
    let (code, out, _) = run(&[
        "mul",
        "--product",
        "quasi_shuffle",
        "--gallery",
        "dual-numbers",
        "--lhs",
        "e1",
        "--rhs",
        "e2",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "e1 + e1|e2 + e2|e1");
    let (_, zero, _) = run(&[
        "mul",
        "--product",
        "quasi_shuffle",
        "--gallery",
        "dual-numbers",
        "--weight",
        "0",
        "--lhs",
        "e1",
        "--rhs",
        "e2",
    ]);
    assert_eq!(zero.trim(), "e1|e2 + e2|e1");
}

#[test]
fn mul_zero_prints_zero() {
    let (code, out, _) = run(&[
        "mul",
        "--product",
        "qmixable",
        "--gallery",
        "dual-numbers",
        "--lhs",
        "e1",
        "--rhs",
        "e1",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "0");
}

#[test]
fn mul_overflow_exits_3() {
    let (code, _, err) = run(&[
        "mul",
        "--product",
        "shuffle",
        "--lhs",
        "e1|e1",
        "--rhs",
        "e1",
        "--max-degree",
        "2",
    ]);
    assert_eq!(code, 3);
    assert!(err.contains("error"));
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(
        run(&[
            "mul",
            "--product",
            "qshuffle",
            "--lhs",
            "e1",
            "--rhs",
            "e2",
            "--input",
            "/nonexistent.json"
        ])
        .0,
        2
    );
    assert_eq!(
        run(&["mul", "--product", "shuffle", "--lhs", "e1|", "--rhs", "e2"]).0,
        2
    );
    assert_eq!(
        run(&["mul", "--product", "nonsense", "--lhs", "e1", "--rhs", "e2"]).0,
        2
    );
    assert_eq!(run(&["check", "--suite", "bcd", "--input", &data("broken.json")]).0, 2);
    assert_eq!(run(&["check", "--suite", "ybe", "--max-degree", "0"]).0, 2);
}

#[test]
fn mixable_without_unit_is_rejected() {
    let (code, _, err) = run(&[
        "mul",
        "--product",
        "qmixable",
        "--input",
        &data("zinbiel_plane.json"),
        "--lhs",
        "e1",
        "--rhs",
        "e1",
    ]);
    assert_eq!(code, 2, "{err}");
}

#[test]
fn broken_braiding_fails_with_witness() {
    let out = bin(&["check", "--suite", "ybe", "--input", &data("broken.json")]);
    assert_eq!(out.status.code(), Some(1));
    let report: SuiteReport = serde_json::from_slice(&out.stdout).unwrap();
    let ybe = report.check("input/ybe").unwrap();
    assert!(!ybe.report.witnesses.is_empty());
}

#[test]
fn bcd_on_diag_q_passes() {
    let out = bin(&[
        "check",
        "--suite",
        "bcd",
        "--input",
        &data("diag_q.json"),
        "--max-degree",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn gallery_suites_exit_codes() {
    assert_eq!(run(&["check", "--suite", "specializations", "--max-degree", "4"]).0, 0);
    assert_eq!(
        run(&["check", "--suite", "shuffle-decompositions", "--max-degree", "4"]).0,
        1
    );
}

#[test]
fn report_file_and_summary() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ybe.json");
    let (code, out, _) = run(&[
        "check",
        "--suite",
        "ybe",
        "--max-degree",
        "3",
        "--report",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.starts_with("ybe: Pass ("));
    let report: SuiteReport = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report.config.max_degree, Some(3));
}

#[test]
fn reports_are_byte_identical() {
    let a = bin(&["check", "--suite", "berba", "--max-degree", "3"]).stdout;
    let b = bin(&["check", "--suite", "berba", "--max-degree", "3"]).stdout;
    assert!(!a.is_empty());
    assert_eq!(a, b);
}

#[test]
fn input_digest_is_recorded() {
    let out = bin(&["check", "--suite", "ybe", "--input", &data("flip2.json")]);
    let report: SuiteReport = serde_json::from_slice(&out.stdout).unwrap();
    let digest = report.config.input.expect("input echoed");
    assert_eq!(digest.sha256.len(), 64);
}

fn write(dir: &tempfile::TempDir, name: &str, r: &SuiteReport) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, r.to_json()).unwrap();
    p.display().to_string()
}

#[test]
fn report_diff_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let base = braidalg::cli::run_suite(&SuiteConfig::new(Suite::Ybe).with_degree(3)).unwrap();
    let a = write(&dir, "a.json", &base);
    let b = write(&dir, "b.json", &base);
    assert_eq!(run(&["report-diff", &a, &b]).0, 0);

    let mut flipped = base.clone();
    flipped.checks[0].verdict = braidalg::structures::Status::Fail;
    let c = write(&dir, "c.json", &flipped);
    let (code, out, _) = run(&["report-diff", &a, &c]);
    assert_eq!(code, 1);
    assert_eq!(
        out.lines().collect::<Vec<_>>(),
        vec![format!("{}: pass -> fail", base.checks[0].key())]
    );

    let other = braidalg::cli::run_suite(&SuiteConfig::new(Suite::Ybe).with_degree(4)).unwrap();
    let d = write(&dir, "d.json", &other);
    assert_eq!(run(&["report-diff", &a, &d]).0, 2);
}

#[test]
fn diff_reports_flags_missing_checks() {
    let base = braidalg::cli::run_suite(&SuiteConfig::new(Suite::BetaIdentities).with_degree(3)).unwrap();
    let mut fewer = base.clone();
    let gone = fewer.checks.pop().unwrap().key();
    assert_eq!(
        diff_reports(&base, &fewer),
        ReportDiff::Lines(vec![format!("{gone}: only in A")])
    );
    assert_eq!(
        diff_reports(&fewer, &base),
        ReportDiff::Lines(vec![format!("{gone}: only in B")])
    );
}
