//! A walk through the bundled catalog: every entry with its kind and
//! provenance, then a few entries emitted in their file formats.

use fusionkit::catalog;

fn main() -> fusionkit::Result<()> {
    let listing = catalog::list();
    println!("{} entries", listing.len());
    for l in &listing {
        let flag = if l.obstructed {
            "  (fails the obstruction suite)"
        } else {
            ""
        };
        println!(
            "  {:<22} {:<13} {}{flag}",
            l.name,
            l.kind.to_string(),
            l.provenance
        );
    }

    // Parameterized addresses go beyond the listing.
    for address in ["vec-z5", "an-z2@n=3", "verlinde-sl2@l=12", "rep-a4"] {
        let ring = catalog::ring(address)?;
        println!("{address}: {} of rank {}", ring.name(), ring.rank());
    }

    let entry = catalog::entry("fibonacci-modular")?;
    println!(
        "\n{} ({}, {}):\n{}",
        entry.name,
        entry.kind,
        entry.provenance,
        entry.payload.to_json()
    );
    Ok(())
}
