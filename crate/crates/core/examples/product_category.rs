//! The tensor square of the Fibonacci ring, and the pseudo-unitarity gap
//! for the norms of Fibonacci ⊠ Yang–Lee.

use fusionkit::catalog;
use fusionkit::fusionring::{fpdims, tensor_product};
use fusionkit::numberfield::CyclotomicNumber;
use fusionkit::obstructions::pseudo_unitarity_gap;

fn main() -> fusionkit::Result<()> {
    let fib = catalog::fibonacci_ring();
    let ff = tensor_product(&fib, &fib)?;
    let fp = fpdims(&ff)?;
    println!("{}: labels {:?}", ff.name(), ff.labels());
    for (i, d) in fp.dims.iter().enumerate() {
        println!(
            "  FPdim({}) = {}",
            ff.label(i),
            d.exact()
                .map(|e| e.to_string())
                .unwrap_or_else(|| d.to_string())
        );
    }
    println!("  FPdim = {}  ≈ {:.12}", fp.ring_dim, fp.ring_dim.approx());

    // Squared norms of the Galois-twisted product: d_τ = φ on the left,
    // 1 - φ on the right.
    let yl = catalog::yang_lee_modular();
    let fm = catalog::fibonacci_modular();
    let norms: Vec<CyclotomicNumber> = (0..2)
        .flat_map(|a| (0..2).map(move |b| (a, b)))
        .map(|(a, b)| {
            let d = fm.dim(a) * yl.dim(b);
            &d * &d
        })
        .collect();
    let c = pseudo_unitarity_gap(&ff, Some(&norms));
    println!("\npseudo_unitarity_gap: {}", c.status);
    for (k, v) in &c.values {
        println!("  {k}: {v}");
    }
    let expected =
        CyclotomicNumber::from_int(5).checked_div(fp.exact_ring_dim().expect("lifted"))?;
    let closed_form = (3.0 - 5f64.sqrt()) / 2.0;
    println!(
        "  D / FPdim = {expected} ≈ {:.12}, (3 - √5)/2 ≈ {closed_form:.12}",
        expected.to_f64()
    );
    Ok(())
}
