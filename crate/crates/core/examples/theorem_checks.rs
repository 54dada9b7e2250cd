//! Run every verification suite with default settings and summarize.

use xop_zeros::lab::suites::{run_suite, Suite, SuiteConfig};

fn main() -> xop_zeros::Result<()> {
    let cfg = SuiteConfig::default();
    for suite in Suite::EACH {
        let report = run_suite(suite, &cfg)?;
        let failed = report.checks.iter().filter(|c| c.gates()).count();
        let findings = report.findings().count();
        println!(
            "{:<14} {:>3} checks, {failed} failed, {findings} findings",
            report.suite,
            report.checks.len()
        );
        for c in report.findings() {
            println!("    {}: {}", c.name, c.detail);
        }
    }
    Ok(())
}
