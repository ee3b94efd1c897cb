//! Which group orders `m` survive the `A_n(G)` test, for small `n`.
//!
//! `A_n(G)` has basis `G ∪ {X}` with `X² = nX + Σ g`. The test asks that
//! `FPdim(X)² / |G|` be an algebraic integer and that `|G| ≤ 2n²`.

use fusionkit::catalog::{an_g_ring, cyclic};
use fusionkit::obstructions::{an_g_test, run_suite, SuiteOptions};
use fusionkit::report::Status;

fn main() -> fusionkit::Result<()> {
    for n in 0..=6u64 {
        let survivors: Vec<String> = (1..=100)
            .filter(|&m| an_g_test(n, m).status == Status::Pass)
            .map(|m| m.to_string())
            .collect();
        println!(
            "n = {n}: orders up to 100 that pass: {}",
            survivors.join(" ")
        );
    }

    let c = an_g_test(1, 3);
    println!(
        "\nn = 1, |G| = 3: {} with value {} and minimal polynomial {}",
        c.status, c.values["value"], c.values["min_poly"]
    );

    // The ring itself is a perfectly good fusion ring; only the suite notices.
    let ring = an_g_ring(1, &cyclic(3));
    let report = run_suite(&ring, &SuiteOptions::default())?;
    println!("\n{}", report.to_text());
    Ok(())
}
