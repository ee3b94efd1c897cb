//! Runs every modular-data check on the bundled modular data.
//!
//! Pass a catalog address (for example `sl2-modular@l=3`) to restrict the run.

use fusionkit::catalog;
use fusionkit::modulardata::{full_report, gauss_sum_and_charge};
use fusionkit::DEFAULT_TOLERANCE;

fn main() -> fusionkit::Result<()> {
    let names: Vec<String> = match std::env::args().nth(1) {
        Some(name) => vec![name],
        None => catalog::modular_names(),
    };
    for name in names {
        let md = catalog::modular_data(&name)?;
        let report = full_report(&md, DEFAULT_TOLERANCE);
        print!("{}", report.to_text());
        if let Ok(g) = gauss_sum_and_charge(&md) {
            println!(
                "  global dimension {}, central charge {} mod 8\n",
                md.global_dim(),
                g.c_mod_8
            );
        }
    }
    Ok(())
}
