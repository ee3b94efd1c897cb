//! Runs the obstruction suite over every ring in the catalog and prints one
//! line per ring, or the full report for a single catalog address.

use std::time::Instant;

use fusionkit::catalog;
use fusionkit::obstructions::{run_suite, SuiteOptions};

fn main() -> fusionkit::Result<()> {
    if let Some(name) = std::env::args().nth(1) {
        let report = run_suite(&catalog::ring(&name)?, &SuiteOptions::default())?;
        print!("{}", report.to_text());
        return Ok(());
    }
    for name in catalog::ring_names() {
        let start = Instant::now();
        let ring = catalog::ring(&name)?;
        let report = run_suite(&ring, &SuiteOptions::default())?;
        let failing: Vec<&str> = report
            .checks
            .iter()
            .filter(|c| c.status == fusionkit::report::Status::Fail)
            .map(|c| c.check.as_str())
            .collect();
        println!(
            "{name:<18} rank {:>2}  {:<13} {:>6.1} ms  {}",
            ring.rank(),
            report.aggregate.to_string(),
            start.elapsed().as_secs_f64() * 1e3,
            failing.join(", ")
        );
    }
    Ok(())
}
