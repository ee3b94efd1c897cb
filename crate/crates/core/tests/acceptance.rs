//! Acceptance criteria, one line per criterion.
//!
//! Runs as a plain binary (`harness = false`) so the summary is always
//! printed. Exits non-zero if any criterion fails.

use std::time::Instant;

use fusionkit::catalog::{self, cyclic, group_ring, so3_dimension};
use fusionkit::fusionring::{fpdims, tensor_product, universal_grading};
use fusionkit::modulardata::{
    class_equation_check, dimension_bound_check_tol, galois_orbit_check, gauss_sum_and_charge,
    moddivi_check, numobj_check, unitarity_check, verlinde_fusion,
};
use fusionkit::numberfield::{rat, BigRational, CyclotomicNumber, IntPolynomial};
use fusionkit::obstructions::{
    an_g_test, integer_fpdim_consequences, prime_square_test, pseudo_unitarity_gap, run_suite,
    SuiteOptions,
};
use fusionkit::report::Status;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sqrt5() -> CyclotomicNumber {
    // 2ζ_5 + 2ζ_5^4 + 1 = √5
    let z = CyclotomicNumber::zeta_pow(5, 1);
    let z4 = CyclotomicNumber::zeta_pow(5, 4);
    &(&z + &z4).scale(&rat(2, 1)) + &CyclotomicNumber::one()
}

/// `a + b√5`.
fn q5(a: (i64, i64), b: (i64, i64)) -> CyclotomicNumber {
    &CyclotomicNumber::from_rational(rat(a.0, a.1)) + &sqrt5().scale(&rat(b.0, b.1))
}

fn fibonacci_numbers() -> Outcome {
    let ring = catalog::ring("fibonacci").map_err(|e| e.to_string())?;
    let fp = fpdims(&ring).map_err(|e| e.to_string())?;
    let tau = fp.dim(1);
    ensure(
        tau.certified_min_poly() == Some(&IntPolynomial::from_i64(&[-1, -1, 1])),
        || format!("min poly of FPdim(tau) is {:?}", tau.certified_min_poly()),
    )?;
    ensure(tau.exact() == Some(&q5((1, 2), (1, 2))), || {
        format!("FPdim(tau) = {:?}", tau.exact())
    })?;
    let delta = q5((5, 2), (1, 2));
    ensure(fp.exact_ring_dim() == Some(&delta), || {
        format!("ring_dim = {}", fp.ring_dim)
    })?;
    let so3 = so3_dimension(5).map_err(|e| e.to_string())?;
    ensure(so3 == delta, || format!("so3_dimension(5) = {so3}"))
}

fn product_category() -> Outcome {
    let fib = catalog::ring("fibonacci").map_err(|e| e.to_string())?;
    let ff = tensor_product(&fib, &fib).map_err(|e| e.to_string())?;
    let fp = fpdims(&ff).map_err(|e| e.to_string())?;
    let delta = q5((15, 2), (5, 2));
    ensure(fp.exact_ring_dim() == Some(&delta), || {
        format!("Δ = {}", fp.ring_dim)
    })?;

    // Norms of Fibonacci ⊠ Yang–Lee: 1, φ², φ'², (φφ')² = 1.
    let one = CyclotomicNumber::one();
    let norms = vec![one.clone(), q5((3, 2), (1, 2)), q5((3, 2), (-1, 2)), one];
    let c = pseudo_unitarity_gap(&ff, Some(&norms));
    ensure(c.status == Status::Pass, || {
        format!("pseudo_unitarity_gap: {:?} {:?}", c.status, c.witnesses)
    })?;
    ensure(c.values["global_dim"] == "5", || {
        format!("D = {}", c.values["global_dim"])
    })?;
    let ratio = CyclotomicNumber::from_int(5)
        .checked_div(&delta)
        .map_err(|e| e.to_string())?;
    ensure(ratio == q5((3, 2), (-1, 2)), || format!("D/Δ = {ratio}"))?;
    ensure(c.values["ratio_min_poly"] == "x^2 - 3x + 1", || {
        format!("ratio poly {}", c.values["ratio_min_poly"])
    })?;

    let flagged = c.values["norm_below_fpdim"]
        .as_array()
        .cloned()
        .unwrap_or_default();
    let fpsq = q5((7, 2), (3, 2));
    let tt = ff.rank() - 1;
    let lam = fp.dim(tt).exact().ok_or("no lift for the last object")?;
    ensure(lam * lam == fpsq, || {
        format!("FPdim^2 of last object is {}", lam * lam)
    })?;
    ensure(
        flagged
            .iter()
            .any(|f| f.as_str().is_some_and(|s| s.contains("|V|^2 = 1,"))),
        || format!("flagged objects {flagged:?}"),
    )
}

fn verlinde_round_trip() -> Outcome {
    let start = Instant::now();
    for l in 1..=8 {
        let md = catalog::verlinde_sl2_modular(l).map_err(|e| e.to_string())?;
        let ring = verlinde_fusion(&md).map_err(|e| format!("level {l}: {e}"))?;
        ensure(ring.same_structure(&catalog::verlinde_sl2_ring(l)), || {
            format!("level {l}: fusion differs")
        })?;
        let u = unitarity_check(&md);
        ensure(u.status == Status::Pass, || {
            format!("level {l}: unitarity {:?}", u.witnesses)
        })?;
        let g = gauss_sum_and_charge(&md).map_err(|e| e.to_string())?;
        ensure(g.norm_is_global_dim, || {
            format!("level {l}: |gauss|^2 != D")
        })?;
        let m = moddivi_check(&md);
        ensure(m.status == Status::Pass, || {
            format!("level {l}: moddivi {:?}", m.witnesses)
        })?;
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 5.0, || format!("took {secs:.2} s"))
}

fn yang_lee_sharpness() -> Outcome {
    let md = catalog::yang_lee_modular();
    let expected_d = q5((5, 2), (-1, 2));
    ensure(md.global_dim() == &expected_d, || {
        format!("D = {}", md.global_dim())
    })?;
    let c = dimension_bound_check_tol(&md, 1e-9);
    let lhs = c.values["lhs"].as_f64().unwrap_or(f64::NAN);
    let rhs = c.values["rhs"].as_f64().unwrap_or(f64::NAN);
    ensure(c.status == Status::Pass && (lhs - rhs).abs() < 1e-9, || {
        format!("{:?}: lhs {lhs}, rhs {rhs}", c.status)
    })?;
    ensure(
        c.values.get("equality").and_then(|v| v.as_bool()) == Some(true),
        || format!("equality not flagged: {:?}", c.values),
    )
}

fn an_g_screen() -> Outcome {
    for m in 1..=10u64 {
        let c = an_g_test(1, m);
        let want = if m <= 2 { Status::Pass } else { Status::Fail };
        ensure(c.status == want, || format!("n=1, m={m}: {:?}", c.status))?;
    }
    for n in 2..=5u64 {
        for m in 1..=200u64 {
            if an_g_test(n, m).status == Status::Pass {
                ensure(m <= 2 * n * n, || format!("n={n}, m={m} passes above 2n^2"))?;
            }
        }
    }
    Ok(())
}

fn class_equation() -> Outcome {
    let cd = catalog::center_datum("rep_s3_double").map_err(|e| e.to_string())?;
    let c = class_equation_check(&cd);
    ensure(c.status == Status::Pass, || {
        format!("class_equation {:?}", c.witnesses)
    })?;
    let mut terms: Vec<BigRational> = c.values["terms"]
        .as_array()
        .into_iter()
        .flatten()
        .filter_map(|t| t.as_str())
        .filter_map(|t| {
            let (n, d) = t.split_once('/').unwrap_or((t, "1"));
            Some(rat(n.trim().parse().ok()?, d.trim().parse().ok()?))
        })
        .collect();
    terms.sort();
    ensure(terms == vec![rat(1, 6), rat(1, 3), rat(1, 2)], || {
        format!("terms {terms:?}")
    })?;
    let z2 = catalog::center_datum("vec_z2_double").map_err(|e| e.to_string())?;
    let n = numobj_check(&z2);
    ensure(
        n.status == Status::Pass && n.values["sum_of_squares"] == 2,
        || format!("numobj {:?}", n.values),
    )
}

fn structure_theorems() -> Outcome {
    let ising = catalog::ring("ising").map_err(|e| e.to_string())?;
    let c = prime_square_test(&ising, 2);
    ensure(c.status == Status::Pass, || {
        format!("Ising p=2: {:?}", c.witnesses)
    })?;
    let z9 = group_ring(&cyclic(9));
    let c = prime_square_test(&z9, 3);
    ensure(c.status == Status::Pass, || {
        format!("Vec Z/9 p=3: {:?}", c.witnesses)
    })?;

    let g = universal_grading(&ising).map_err(|e| e.to_string())?;
    ensure(g.group_order == 2 && g.is_cyclic(), || {
        format!("grading group of order {}", g.group_order)
    })?;
    let fp = fpdims(&ising).map_err(|e| e.to_string())?;
    let comp_dims: Vec<CyclotomicNumber> = g
        .components
        .iter()
        .map(|comp| {
            comp.iter().fold(CyclotomicNumber::zero(1), |acc, &i| {
                let d = fp
                    .dim(i)
                    .exact()
                    .cloned()
                    .unwrap_or_else(|| CyclotomicNumber::zero(1));
                &acc + &(&d * &d)
            })
        })
        .collect();
    ensure(
        comp_dims
            .iter()
            .all(|d| d == &CyclotomicNumber::from_int(2)),
        || format!("component dims {comp_dims:?}"),
    )?;

    let c = integer_fpdim_consequences(&ising);
    ensure(c.status == Status::Pass, || {
        format!("integer_fpdim_consequences {:?}", c.witnesses)
    })?;
    ensure(
        c.values["sqrt_dims"] == serde_json::json!(["sigma = sqrt(2)"]),
        || format!("sqrt_dims {}", c.values["sqrt_dims"]),
    )?;
    ensure(c.values["adjoint_subring"] == "{1, eps}", || {
        format!("adjoint {}", c.values["adjoint_subring"])
    })
}

fn galois_cyclotomicity() -> Outcome {
    for name in catalog::modular_names() {
        let md = catalog::modular_data(&name).map_err(|e| e.to_string())?;
        let (c, action) = galois_orbit_check(&md).map_err(|e| format!("{name}: {e}"))?;
        ensure(c.status == Status::Pass, || {
            format!("{name}: {:?}", c.witnesses)
        })?;
        let n = md.conductor();
        for row in md.s_tilde() {
            for x in row {
                ensure(n % x.conductor() == 0, || {
                    format!("{name}: entry {x} outside Q(ζ_{n})")
                })?;
            }
        }
        for a in &action.elements {
            for b in &action.elements {
                let ab = action
                    .element(a.m * b.m % n)
                    .ok_or_else(|| format!("{name}: missing σ_{}", a.m * b.m))?;
                let composed: Vec<usize> = (0..md.rank())
                    .map(|i| a.permutation[b.permutation[i]])
                    .collect();
                ensure(composed == ab.permutation, || {
                    format!("{name}: σ_{} σ_{} does not act as σ_{}", a.m, b.m, ab.m)
                })?;
            }
        }
    }
    Ok(())
}

fn random_cyclotomic(rng: &mut ChaCha8Rng, n: u64) -> CyclotomicNumber {
    let coeffs: Vec<BigRational> = (0..n)
        .map(|_| rat(rng.gen_range(-9..=9), rng.gen_range(1..=4)))
        .collect();
    CyclotomicNumber::from_exponent_coeffs(n, &coeffs)
}

fn property_suites() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let conductors = [1u64, 3, 4, 5, 8, 12];
    for t in 0..10_000 {
        let n = conductors[rng.gen_range(0..conductors.len())];
        let m = conductors[rng.gen_range(0..conductors.len())];
        let a = random_cyclotomic(&mut rng, n);
        let b = random_cyclotomic(&mut rng, m);
        let c = random_cyclotomic(&mut rng, n);
        ensure(&(&a * &b) * &c == &a * &(&b * &c), || {
            format!("triple {t}: associativity")
        })?;
        ensure(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), || {
            format!("triple {t}: distributivity")
        })?;
        ensure(&a + &b == &b + &a && &a * &b == &b * &a, || {
            format!("triple {t}: commutativity")
        })?;
        if !b.is_zero() {
            let inv = b.inverse().map_err(|e| e.to_string())?;
            ensure((&b * &inv).is_one(), || {
                format!("triple {t}: b * b^-1 != 1")
            })?;
        }
    }

    let options = SuiteOptions::default();
    for name in catalog::ring_names() {
        let ring = catalog::ring(&name).map_err(|e| e.to_string())?;
        let fp = fpdims(&ring).map_err(|e| format!("{name}: {e}"))?;
        ensure(fp.homomorphism.max_residual < 1e-9, || {
            format!(
                "{name}: FP homomorphism residual {:e}",
                fp.homomorphism.max_residual
            )
        })?;
        ensure(fp.homomorphism.exact != Some(false), || {
            format!("{name}: exact FP homomorphism fails")
        })?;
        for (i, d) in fp.dims.iter().enumerate() {
            ensure(d.approx() >= 1.0 - 1e-12, || {
                format!("{name}: FPdim({}) = {}", ring.label(i), d.approx())
            })?;
        }
        let first = run_suite(&ring, &options)
            .map_err(|e| e.to_string())?
            .to_json();
        let second = run_suite(&ring, &options)
            .map_err(|e| e.to_string())?
            .to_json();
        ensure(first == second, || {
            format!("{name}: suite output differs between runs")
        })?;
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        (
            "Fibonacci FPdim, ring dimension and so3_dimension(5), exact",
            fibonacci_numbers,
        ),
        (
            "Fibonacci x Fibonacci dimension and pseudo-unitarity gap, exact",
            product_category,
        ),
        (
            "Verlinde round trip for sl2 levels 1..8, exact, under 5 s",
            verlinde_round_trip,
        ),
        (
            "Yang-Lee dimension bound equality, tol 1e-9",
            yang_lee_sharpness,
        ),
        ("A_n(G) screen, exact", an_g_screen),
        (
            "class equation for Z(Rep S3) and numobj for Z(Vec Z/2), exact",
            class_equation,
        ),
        (
            "prime square, grading and integer FPdim theorems, exact",
            structure_theorems,
        ),
        (
            "Galois action on every catalog modular datum, exact",
            galois_cyclotomicity,
        ),
        (
            "seeded property suites (field axioms, FP homomorphism tol 1e-9, determinism)",
            property_suites,
        ),
    ];
    let mut failed = 0;
    for (k, (label, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let ms = start.elapsed().as_secs_f64() * 1e3;
        match outcome {
            Ok(()) => println!("criterion {}: PASS  {label}  ({ms:.0} ms)", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {label}  ({ms:.0} ms): {why}", k + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
