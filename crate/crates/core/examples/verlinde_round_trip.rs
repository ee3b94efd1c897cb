//! Builds sl2 modular data at levels 1..=8, recovers the fusion rules with
//! the Verlinde formula and compares them with the truncated Clebsch–Gordan
//! rule.

use std::time::Instant;

use fusionkit::catalog::{verlinde_sl2_modular, verlinde_sl2_ring};
use fusionkit::modulardata::{gauss_sum_and_charge, unitarity_check, verlinde_fusion};

fn main() -> fusionkit::Result<()> {
    println!("level  rank  D                     c mod 8   unitary  fusion matches");
    for l in 1..=8 {
        let start = Instant::now();
        let md = verlinde_sl2_modular(l)?;
        let fusion = verlinde_fusion(&md)?;
        let matches = fusion.same_structure(&verlinde_sl2_ring(l));
        let gauss = gauss_sum_and_charge(&md)?;
        let unitary = unitarity_check(&md).passed();
        println!(
            "{l:>5}  {:>4}  {:<20.15}  {:<8.5}  {unitary:<7}  {matches}  ({:.0} ms)",
            md.rank(),
            md.global_dim().to_f64(),
            gauss.c_mod_8,
            start.elapsed().as_secs_f64() * 1e3
        );
    }

    let md = verlinde_sl2_modular(3)?;
    let fusion = verlinde_fusion(&md)?;
    println!("\nlevel 3 fusion rules from the S-matrix:");
    for i in 0..fusion.rank() {
        for j in i..fusion.rank() {
            let terms: Vec<&str> = fusion.support(i, j).map(|k| fusion.label(k)).collect();
            println!(
                "  {} x {} = {}",
                fusion.label(i),
                fusion.label(j),
                terms.join(" + ")
            );
        }
    }
    Ok(())
}
