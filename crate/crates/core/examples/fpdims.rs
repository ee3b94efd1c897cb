//! Frobenius–Perron dimensions with certified minimal polynomials and exact
//! cyclotomic lifts.
//!
//! Pass a catalog address to inspect a single ring.

use fusionkit::catalog;
use fusionkit::fusionring::fpdims;

fn main() -> fusionkit::Result<()> {
    let names = match std::env::args().nth(1) {
        Some(name) => vec![name],
        None => vec![
            "fibonacci".into(),
            "ising".into(),
            "verlinde-sl2@l=3".into(),
            "ty-z3".into(),
            "rep-s3".into(),
        ],
    };
    for name in names {
        let ring = catalog::ring(&name)?;
        let fp = fpdims(&ring)?;
        println!("{} (rank {})", ring.name(), ring.rank());
        for (i, d) in fp.dims.iter().enumerate() {
            let exact = d.exact().map(|e| format!("  = {e}")).unwrap_or_default();
            let poly = d
                .certified_min_poly()
                .map(|p| p.to_string())
                .unwrap_or_else(|| "uncertified".into());
            println!(
                "  {:>6}  {:.15}  min poly {poly}{exact}",
                ring.label(i),
                d.approx()
            );
        }
        println!("  FPdim = {}", fp.ring_dim);
        if let Some(e) = fp.exact_ring_dim() {
            println!("        = {e}");
        }
        println!(
            "  homomorphism residual {:.1e}, exact: {:?}\n",
            fp.homomorphism.max_residual, fp.homomorphism.exact
        );
    }
    Ok(())
}
