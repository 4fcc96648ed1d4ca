//! Running a verification suite from code and reading its report.

use braidalg::cli::{run_suite, Suite, SuiteConfig};

fn main() -> braidalg::Result<()> {
    let report = run_suite(&SuiteConfig::new(Suite::Bcd).with_degree(4))?;
    println!(
        "{}: {:?}, {} checks",
        report.suite.name(),
        report.status,
        report.checks.len()
    );
    for c in report.checks.iter().take(6) {
        println!("  {:<40} expect {:?}, verdict {:?}", c.key(), c.expect, c.verdict);
    }
    let negative = report.checks.iter().find(|c| c.instance.starts_with("negative/"));
    if let Some(w) = negative.and_then(|c| c.report.witnesses.first()) {
        println!(
            "negative control witness: {} on {}: {} vs {}",
            w.identity, w.input, w.lhs, w.rhs
        );
    }
    Ok(())
}
