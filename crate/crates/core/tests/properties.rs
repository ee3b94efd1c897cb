//! Property tests. Every proptest run uses a fixed seed.

use fusionkit::catalog::{self, cyclic, group_ring, verlinde_sl2_ring};
use fusionkit::fusionring::{fpdims, tensor_product, FusionRing};
use fusionkit::modulardata::{full_report, unitarity_check};
use fusionkit::numberfield::{
    char_poly, perron_root, rat, BigRational, CyclotomicNumber, IntPolynomial,
};
use fusionkit::obstructions::{an_g_test, run_suite, SuiteOptions};
use fusionkit::report::{Exactness, Status};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

fn config(cases: u32) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(20_251_016),
        failure_persistence: None,
        ..Config::default()
    }
}

const CONDUCTORS: [u64; 7] = [1, 3, 4, 5, 7, 8, 12];

fn cyclo() -> impl Strategy<Value = CyclotomicNumber> {
    prop::sample::select(&CONDUCTORS[..]).prop_flat_map(|n| {
        prop::collection::vec((-9i64..=9, 1i64..=5), n as usize).prop_map(move |cs| {
            let coeffs: Vec<BigRational> = cs.into_iter().map(|(a, b)| rat(a, b)).collect();
            CyclotomicNumber::from_exponent_coeffs(n, &coeffs)
        })
    })
}

fn close(a: num_complex::Complex64, b: num_complex::Complex64) -> bool {
    (a - b).norm() <= 1e-8 * (1.0 + a.norm().max(b.norm()))
}

proptest! {
    #![proptest_config(config(10_000))]

    #[test]
    fn field_axioms(a in cyclo(), b in cyclo(), c in cyclo()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inverse().unwrap()).is_one());
        }
    }
}

proptest! {
    #![proptest_config(config(512))]

    #[test]
    fn numeric_embedding_is_a_homomorphism(a in cyclo(), b in cyclo()) {
        prop_assert!(close((&a * &b).to_complex(), a.to_complex() * b.to_complex()));
        prop_assert!(close((&a + &b).to_complex(), a.to_complex() + b.to_complex()));
        prop_assert!(close(a.conj().to_complex(), a.to_complex().conj()));
    }

    #[test]
    fn galois_maps_are_ring_automorphisms(a in cyclo(), b in cyclo(), m in 1u64..120) {
        let n = a.conductor() * b.conductor();
        prop_assume!(num_integer::Integer::gcd(&m, &n) == 1);
        let lhs = (&a * &b).embed(n).galois(m);
        let rhs = &a.embed(n).galois(m) * &b.embed(n).galois(m);
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(a.conj().conj(), a.clone());
    }

    #[test]
    fn minimal_polynomial_vanishes(a in cyclo()) {
        let p = a.minimal_polynomial();
        let value = p.coeffs().iter().rev().fold(CyclotomicNumber::zero(1), |acc, c| {
            &(&acc * &a) + &CyclotomicNumber::from_rational(c.clone())
        });
        prop_assert!(value.is_zero());
        prop_assert_eq!(a.galois_orbit().len(), p.degree().unwrap_or(0));
    }

    #[test]
    fn embedding_preserves_value(a in cyclo(), k in 1u64..5) {
        let n = a.conductor() * k;
        prop_assert_eq!(a.embed(n), a.clone());
        prop_assert_eq!(a.embed(n).minimize_conductor(), a);
    }

    #[test]
    fn perron_root_bounds_the_spectrum(entries in prop::collection::vec(0i64..4, 9)) {
        let m: Vec<Vec<i64>> = entries.chunks(3).map(|r| r.to_vec()).collect();
        prop_assume!(entries.iter().any(|&v| v > 0));
        let p = char_poly(&m);
        match perron_root(&m) {
            Ok(root) => {
                let roots = fusionkit::numberfield::roots::complex_roots_f64(root.annihilator());
                let spectral = roots.iter().map(|z| z.norm()).fold(0.0, f64::max);
                prop_assert!((root.approx() - spectral).abs() < 1e-6, "{} vs {}", root.approx(), spectral);
                let (lo, hi) = root.interval();
                let q = root.annihilator();
                prop_assert!(q.sign_at(lo) * q.sign_at(hi) <= 0);
            }
            Err(fusionkit::Error::NilpotentInput) => {
                prop_assert_eq!(p, IntPolynomial::from_i64(&[0, 0, 0, 1]));
            }
            Err(e) => prop_assert!(false, "{}", e),
        }
    }

    #[test]
    fn an_g_passes_respect_the_bound(n in 1u64..12, m in 1u64..400) {
        if an_g_test(n, m).status == Status::Pass {
            prop_assert!(m <= 2 * n * n);
        }
    }
}

fn catalog_rings() -> Vec<(String, FusionRing)> {
    catalog::ring_names()
        .into_iter()
        .map(|name| {
            let ring = catalog::ring(&name).unwrap();
            (name, ring)
        })
        .collect()
}

#[test]
fn fp_dimensions_are_homomorphisms_at_least_one() {
    for (name, ring) in catalog_rings() {
        let fp = fpdims(&ring).unwrap();
        assert!(
            fp.homomorphism.holds(1e-9),
            "{name}: residual {:e}",
            fp.homomorphism.max_residual
        );
        assert!(fp.homomorphism.max_residual < 1e-9, "{name}");
        for (i, d) in fp.dims.iter().enumerate() {
            assert!(
                d.approx() >= 1.0 - 1e-12,
                "{name}: FPdim({}) = {}",
                ring.label(i),
                d.approx()
            );
        }
        assert!(
            (fp.dims[ring.unit()].approx() - 1.0).abs() < 1e-12,
            "{name}"
        );
        let sum: f64 = fp.dims.iter().map(|d| d.approx().powi(2)).sum();
        assert!((sum - fp.ring_dim.approx()).abs() < 1e-9 * sum, "{name}");
    }
}

#[test]
fn dual_objects_share_dimensions() {
    for (name, ring) in catalog_rings() {
        let fp = fpdims(&ring).unwrap();
        for i in 0..ring.rank() {
            let j = ring.dual(i);
            assert!(
                (fp.dims[i].approx() - fp.dims[j].approx()).abs() < 1e-12,
                "{name}: {i} vs {j}"
            );
        }
    }
}

proptest! {
    #![proptest_config(config(24))]

    #[test]
    fn product_dimensions_multiply(a in 0usize..6, b in 2usize..9) {
        let x = verlinde_sl2_ring(a);
        let y = group_ring(&cyclic(b));
        let xy = tensor_product(&x, &y).unwrap();
        let (fx, fy, fxy) = (fpdims(&x).unwrap(), fpdims(&y).unwrap(), fpdims(&xy).unwrap());
        let expected = fx.ring_dim.approx() * fy.ring_dim.approx();
        prop_assert!((fxy.ring_dim.approx() - expected).abs() < 1e-9 * expected);
    }

    #[test]
    fn perturbed_s_matrices_are_rejected(l in 1usize..6, i in 0usize..7, num in 1i64..5) {
        let md = catalog::verlinde_sl2_modular(l).unwrap();
        // A diagonal entry off the first row leaves D alone and breaks row i.
        let i = 1 + i % (md.rank() - 1);
        let bad = md.perturbed(i, i, rat(num, 7)).unwrap();
        prop_assert_eq!(unitarity_check(&bad).status, Status::Fail);
    }
}

#[test]
fn suite_output_is_deterministic() {
    let options = SuiteOptions::default();
    for (name, ring) in catalog_rings() {
        let a = run_suite(&ring, &options).unwrap().to_json();
        let b = run_suite(&ring, &options).unwrap().to_json();
        assert_eq!(a, b, "{name}");
    }
}

#[test]
fn exact_passes_reverify_in_multiprecision() {
    let options = SuiteOptions::default();
    for (name, ring) in catalog_rings() {
        let report = run_suite(&ring, &options).unwrap();
        for c in &report.checks {
            assert!(c.reverify_mp(), "{name}: {}", c.check);
        }
    }
    for name in catalog::modular_names() {
        let md = catalog::modular_data(&name).unwrap();
        let report = full_report(&md, 1e-9);
        assert_eq!(report.aggregate, Status::Pass, "{name}");
        for c in &report.checks {
            assert!(c.reverify_mp(), "{name}: {}", c.check);
            if c.passed() && c.exactness == Exactness::Exact {
                assert!(
                    c.witnesses.is_empty() || c.check == "galois_orbits",
                    "{name}: {}",
                    c.check
                );
            }
        }
    }
}
