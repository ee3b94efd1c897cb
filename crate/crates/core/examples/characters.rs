//! Characters of commutative fusion rings, and representation rings built
//! from group character tables.

use fusionkit::catalog::{self, rep_ring_from_characters};
use fusionkit::fusionring::characters;

fn main() -> fusionkit::Result<()> {
    for name in ["fibonacci", "ising", "verlinde-sl2@l=3"] {
        let ring = catalog::ring(name)?;
        println!("{}: labels {:?}", ring.name(), ring.labels());
        for ch in characters(&ring)? {
            let values: Vec<String> = ch
                .values
                .iter()
                .map(|z| {
                    if z.im.abs() < 1e-12 {
                        format!("{:.6}", z.re)
                    } else {
                        format!("{:.4}{:+.4}i", z.re, z.im)
                    }
                })
                .collect();
            let tag = if ch.frobenius_perron {
                "  (Frobenius-Perron)"
            } else {
                ""
            };
            println!("  [{}]{tag}", values.join(", "));
        }
    }

    for group in ["s3", "q8", "a4"] {
        let table = catalog::character_table(group)?;
        let ring = rep_ring_from_characters(&table)?;
        println!(
            "\nRep({group}) from its character table, rank {}:",
            ring.rank()
        );
        for i in 0..ring.rank() {
            for j in i..ring.rank() {
                let terms: Vec<String> = ring
                    .support(i, j)
                    .map(|k| match ring.n(i, j, k) {
                        1 => ring.label(k).to_string(),
                        m => format!("{m}{}", ring.label(k)),
                    })
                    .collect();
                println!(
                    "  {} x {} = {}",
                    ring.label(i),
                    ring.label(j),
                    terms.join(" + ")
                );
            }
        }
    }
    Ok(())
}
