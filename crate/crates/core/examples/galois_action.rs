//! The Galois group of `Q(ζ_n)` acting on modular data: each `σ_m` permutes
//! the labels, with signs.
//!
//! Pass a catalog address (default `sl2-modular@l=3`).

use fusionkit::catalog;
use fusionkit::modulardata::galois_orbit_check;

fn main() -> fusionkit::Result<()> {
    let name = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "sl2-modular@l=3".into());
    let md = catalog::modular_data(&name)?;
    let (check, action) = galois_orbit_check(&md)?;
    println!(
        "{}: conductor {}, check {}",
        md.name(),
        action.conductor,
        check.status
    );
    for e in &action.elements {
        let perm: Vec<String> = e.permutation.iter().map(|j| j.to_string()).collect();
        let signs: Vec<&str> = e
            .signs
            .iter()
            .map(|&s| if s > 0 { "+" } else { "-" })
            .collect();
        println!(
            "  σ_{:<3} permutation [{}]  signs [{}]",
            e.m,
            perm.join(" "),
            signs.join(" ")
        );
    }

    // The dimension of each label under every σ_m, to see the orbits.
    println!("\nGalois images of the quantum dimensions:");
    for i in 0..md.rank() {
        let d = md.dim(i);
        let images: Vec<String> = action
            .elements
            .iter()
            .map(|e| format!("{:.4}", d.galois(e.m).to_f64()))
            .collect();
        println!("  d_{i} = {:.6}: {}", d.to_f64(), images.join(", "));
    }
    Ok(())
}
