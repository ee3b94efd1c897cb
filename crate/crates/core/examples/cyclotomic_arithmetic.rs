//! Exact arithmetic in cyclotomic fields: products, quotients, Galois
//! orbits, minimal polynomials and square roots of integers.

use fusionkit::numberfield::{is_algebraic_integer, rat, sqrt_integer_in, CyclotomicNumber};

fn main() -> fusionkit::Result<()> {
    let z5 = CyclotomicNumber::zeta(5);
    let a = &z5 + &z5.pow(4);
    println!("a = ζ5 + ζ5^4 = {a}  ≈ {:.12}", a.to_f64());
    println!(
        "minimal polynomial of a: {}",
        a.minimal_polynomial().to_primitive_int()
    );
    for c in a.galois_orbit() {
        println!("  conjugate {c}  ≈ {:.12}", c.to_f64());
    }

    let phi = &CyclotomicNumber::one() + &a;
    println!("φ = 1 + a = {phi}  ≈ {:.12}", phi.to_f64());
    let phi_sq = &phi * &phi;
    println!(
        "φ² - φ - 1 = {}",
        &(&phi_sq - &phi) - &CyclotomicNumber::one()
    );
    println!(
        "1/φ = {}  ≈ {:.12}",
        phi.inverse()?,
        phi.inverse()?.to_f64()
    );
    println!("φ is an algebraic integer: {}", is_algebraic_integer(&phi));
    println!(
        "φ/2 is an algebraic integer: {}",
        is_algebraic_integer(&phi.scale(&rat(1, 2)))
    );

    // Equality is by value, across conductors.
    let i = CyclotomicNumber::zeta(4);
    let i_in_12 = CyclotomicNumber::zeta_pow(12, 3);
    println!("ζ4 == ζ12^3: {}", i == i_in_12);

    for (k, n) in [(2i64, 8u64), (3, 12), (5, 5), (-3, 3), (7, 28), (2, 5)] {
        match sqrt_integer_in(&k.into(), n) {
            Some(r) => println!("√{k} in Q(ζ{n}) = {r}"),
            None => println!("√{k} is not in Q(ζ{n})"),
        }
    }
    Ok(())
}
