//! Library results against independent computations: closed-form
//! trigonometry, power iteration, brute-force group theory and integer
//! divisibility.

use std::collections::BTreeSet;
use std::f64::consts::PI;

use fusionkit::basedmodule::{fp_vector, BasedModule};
use fusionkit::catalog::{
    self, an_g_ring, cyclic, group, so3_dimension, symmetric3, verlinde_sl2_ring,
};
use fusionkit::fusionring::{
    adjoint_subring, central_element_z, characters, fpdims, subring_generated, tensor_product,
    universal_grading, FusionRing,
};
use fusionkit::modulardata::{fpdim_square_check, galois_orbit_check, gauss_sum_and_charge};
use fusionkit::numberfield::{char_poly, rat, CyclotomicNumber, IntPolynomial};
use fusionkit::obstructions::{
    an_g_test, integer_fpdim_consequences, prime_fpdim_test, prime_square_test,
    subring_divisibility,
};
use fusionkit::report::Status;

fn n_of(ring: &FusionRing) -> Vec<Vec<Vec<u64>>> {
    ring.nested()
}

/// Spectral radius of a nonnegative matrix by power iteration on `M + I`.
fn power_iteration(m: &[Vec<i64>]) -> f64 {
    let r = m.len();
    let mut v = vec![1.0; r];
    let mut lambda = 0.0;
    for _ in 0..5000 {
        let w: Vec<f64> = (0..r)
            .map(|i| v[i] + (0..r).map(|j| m[i][j] as f64 * v[j]).sum::<f64>())
            .collect();
        let norm = w.iter().cloned().fold(0.0, f64::max);
        lambda = norm;
        v = w.iter().map(|x| x / norm).collect();
    }
    lambda - 1.0
}

fn det3(m: &[Vec<i64>], x: i64) -> i64 {
    let a = |i: usize, j: usize| if i == j { x - m[i][j] } else { -m[i][j] };
    a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1))
        - a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0))
        + a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0))
}

#[test]
fn characteristic_polynomials_match_cofactor_expansion() {
    assert_eq!(
        char_poly(&vec![vec![0, 1], vec![1, 1]]),
        IntPolynomial::from_i64(&[-1, -1, 1])
    );
    let ising = catalog::ising_ring();
    for i in 0..3 {
        let m = ising.mult_matrix(i).unwrap();
        let p = char_poly(&m);
        for x in -5..=5 {
            assert_eq!(
                p.eval_int(&x.into()),
                det3(&m, x).into(),
                "b_{i} at x = {x}"
            );
        }
    }
}

#[test]
fn perron_roots_match_power_iteration() {
    for name in catalog::ring_names() {
        let ring = catalog::ring(&name).unwrap();
        let fp = fpdims(&ring).unwrap();
        for i in 0..ring.rank() {
            let want = power_iteration(&ring.mult_matrix(i).unwrap());
            assert!(
                (fp.dims[i].approx() - want).abs() < 1e-7,
                "{name}, {}: {} vs {want}",
                ring.label(i),
                fp.dims[i].approx()
            );
        }
    }
}

#[test]
fn multiplication_matrices_follow_the_column_convention() {
    let fib = catalog::fibonacci_ring();
    assert_eq!(fib.mult_matrix(1).unwrap(), vec![vec![0, 1], vec![1, 1]]);
    // (1, ε, σ) ordering
    let ising = catalog::ising_ring();
    let order = [0usize, 2, 1];
    let m = ising.mult_matrix(1).unwrap();
    let permuted: Vec<Vec<i64>> = order
        .iter()
        .map(|&a| order.iter().map(|&b| m[a][b]).collect())
        .collect();
    assert_eq!(permuted, vec![vec![0, 0, 1], vec![0, 0, 1], vec![1, 1, 0]]);
}

#[test]
fn fibonacci_and_ising_dimensions() {
    let fp = fpdims(&catalog::fibonacci_ring()).unwrap();
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    assert!((fp.dims[1].approx() - phi).abs() < 1e-12);
    assert!((fp.ring_dim.approx() - (1.0 + phi * phi)).abs() < 1e-12);

    let fp = fpdims(&catalog::ising_ring()).unwrap();
    assert!((fp.dims[1].approx() - 2f64.sqrt()).abs() < 1e-12);
    assert_eq!(fp.exact_ring_dim(), Some(&CyclotomicNumber::from_int(4)));
    let sigma = fp.dims[1].exact().unwrap();
    assert_eq!(sigma * sigma, CyclotomicNumber::from_int(2));
}

/// `z = Σ_{i,j} b_i b_j b_i*` expanded straight from the structure constants.
fn brute_force_z(ring: &FusionRing) -> Vec<u64> {
    let n = n_of(ring);
    let r = ring.rank();
    let mut z = vec![0u64; r];
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                for l in 0..r {
                    z[l] += n[i][j][k] * n[k][ring.dual(i)][l];
                }
            }
        }
    }
    z
}

#[test]
fn central_element_matches_expansion() {
    assert_eq!(
        central_element_z(&catalog::ring("vec-z2").unwrap()).unwrap(),
        vec![2, 2]
    );
    for name in catalog::ring_names() {
        let ring = catalog::ring(&name).unwrap();
        let z = central_element_z(&ring).unwrap();
        assert_eq!(z, brute_force_z(&ring), "{name}");
        assert!(z.iter().all(|&c| c > 0), "{name}");
    }
}

#[test]
fn characters_are_eigenvalues() {
    let fib = characters(&catalog::fibonacci_ring()).unwrap();
    let mut taus: Vec<f64> = fib.iter().map(|c| c.values[1].re).collect();
    taus.sort_by(f64::total_cmp);
    assert!(
        (taus[0] - (1.0 - 5f64.sqrt()) / 2.0).abs() < 1e-9
            && (taus[1] - (1.0 + 5f64.sqrt()) / 2.0).abs() < 1e-9
    );
    assert!(fib[0].frobenius_perron && !fib[1].frobenius_perron);

    let ising = characters(&catalog::ising_ring()).unwrap();
    let sigmas: BTreeSet<i64> = ising
        .iter()
        .map(|c| (c.values[1].re * 1e6).round() as i64)
        .collect();
    let r2 = (2f64.sqrt() * 1e6).round() as i64;
    assert_eq!(sigmas, BTreeSet::from([-r2, 0, r2]));
    assert!((ising[0].values[1].re - 2f64.sqrt()).abs() < 1e-9);
}

/// Closure of the seeds under multiplication, by repeated sweeps.
fn closure(ring: &FusionRing, seeds: &[usize]) -> BTreeSet<usize> {
    let mut set: BTreeSet<usize> = seeds.iter().copied().collect();
    set.insert(ring.unit());
    loop {
        let before = set.len();
        let items: Vec<usize> = set.iter().copied().collect();
        for &a in &items {
            for &b in &items {
                set.extend(ring.support(a, b));
            }
        }
        if set.len() == before {
            return set;
        }
    }
}

#[test]
fn subrings_and_gradings() {
    let ising = catalog::ising_ring();
    let (sigma, eps) = (
        ising.index_of("sigma").unwrap(),
        ising.index_of("eps").unwrap(),
    );
    assert_eq!(adjoint_subring(&ising).unwrap(), vec![0, eps]);
    assert_eq!(subring_generated(&ising, &[sigma]), vec![0, 1, 2]);
    let g = universal_grading(&ising).unwrap();
    assert_eq!(g.group_order, 2);
    assert!(g.components.contains(&vec![0, eps]) && g.components.contains(&vec![sigma]));

    let fib = catalog::fibonacci_ring();
    assert_eq!(adjoint_subring(&fib).unwrap(), vec![0, 1]);
    assert!(universal_grading(&fib).unwrap().is_trivial());

    for name in catalog::ring_names() {
        let ring = catalog::ring(&name).unwrap();
        let seeds: Vec<usize> = (0..ring.rank())
            .flat_map(|i| ring.support(i, ring.dual(i)).collect::<Vec<_>>())
            .collect();
        let want: Vec<usize> = closure(&ring, &seeds).into_iter().collect();
        assert_eq!(adjoint_subring(&ring).unwrap(), want, "{name}");
    }
}

#[test]
fn regular_module_vector_is_proportional_to_dimensions() {
    let fib = catalog::fibonacci_ring();
    let v = fp_vector(&BasedModule::regular(&fib)).unwrap();
    let ratio = v[1].approx() / v[0].approx();
    assert!((ratio - (1.0 + 5f64.sqrt()) / 2.0).abs() < 1e-9);
}

#[test]
fn so3_dimension_matches_trigonometry() {
    for h in 3..=30u64 {
        let d = so3_dimension(h).unwrap();
        let s = (PI / h as f64).sin();
        assert!(
            (d.to_f64() - h as f64 / (4.0 * s * s)).abs() < 1e-9,
            "h = {h}"
        );
        assert!(d.is_real(), "h = {h}");
    }
}

#[test]
fn sl2_modular_data_matches_trigonometry() {
    for l in 1..=8usize {
        let md = catalog::verlinde_sl2_modular(l).unwrap();
        let k = (l + 2) as f64;
        for i in 0..=l {
            for j in 0..=l {
                let want = (PI * ((i + 1) * (j + 1)) as f64 / k).sin() / (PI / k).sin();
                assert!(
                    (md.s(i, j).to_f64() - want).abs() < 1e-9,
                    "l = {l}, ({i},{j})"
                );
            }
        }
        let d_want = k / (2.0 * (PI / k).sin().powi(2));
        assert!((md.global_dim().to_f64() - d_want).abs() < 1e-9, "l = {l}");
        // Central charge of SU(2) at level l is 3l/(l+2).
        let c = gauss_sum_and_charge(&md).unwrap().c_mod_8;
        let want = (3.0 * l as f64 / k).rem_euclid(8.0);
        assert!((c - want).abs() < 1e-9, "l = {l}: c = {c}, want {want}");
    }
}

#[test]
fn yang_lee_galois_swap_and_ratio() {
    let yl = catalog::yang_lee_modular();
    let (check, action) = galois_orbit_check(&yl).unwrap();
    assert_eq!(check.status, Status::Pass);
    let swaps = action
        .elements
        .iter()
        .filter(|e| e.permutation == vec![1, 0])
        .count();
    assert!(swaps > 0, "{:?}", action.elements);

    // D / d_τ^2 with d_τ = (1-√5)/2, so d_τ^2 = (3-√5)/2.
    let d = yl.dim(1);
    let ratio = yl.global_dim().checked_div(&(d * d)).unwrap();
    let want = ((5.0 - 5f64.sqrt()) / 2.0) / ((3.0 - 5f64.sqrt()) / 2.0);
    assert!((ratio.to_f64() - want).abs() < 1e-12);
    let p = ratio.minimal_polynomial();
    assert_eq!(p.coeffs().last(), Some(&rat(1, 1)));
    assert!(p.coeffs().iter().all(|c| c.is_integer()));
}

/// Pass iff `λ_X^2 / m` is an algebraic integer, where
/// `λ_X = (n + √(n² + 4m)) / 2`, plus `m ≤ 2n²` for `n > 0`.
///
/// With `√(n²+4m)` irrational the conjugates are `λ^2/m` and `λ'^2/m`, with
/// product 1 and sum `(n² + 2m)/m`, so integrality is `m | n²`. Otherwise
/// `λ` is an integer and the test is `m | λ²`.
fn an_g_oracle(n: u64, m: u64) -> bool {
    let k = n * n + 4 * m;
    let s = (k as f64).sqrt().round() as u64;
    let integral = if s * s == k {
        let lam = (n + s) / 2;
        (lam * lam) % m == 0
    } else {
        (n * n) % m == 0
    };
    integral && (n == 0 || m <= 2 * n * n)
}

#[test]
fn an_g_test_matches_divisibility_oracle() {
    for n in 0..=8u64 {
        for m in 1..=150u64 {
            let c = an_g_test(n, m);
            assert_eq!(
                c.status == Status::Pass,
                an_g_oracle(n, m),
                "n = {n}, m = {m}: {:?}",
                c.values
            );
            let lam = (n as f64 + ((n * n + 4 * m) as f64).sqrt()) / 2.0;
            let v = c.values["value"].as_f64().unwrap();
            assert!((v - lam * lam / m as f64).abs() < 1e-9, "n = {n}, m = {m}");
        }
    }
    let c = an_g_test(1, 3);
    assert!((c.values["value"].as_f64().unwrap() - (7.0 + 13f64.sqrt()) / 6.0).abs() < 1e-12);
    assert_eq!(c.values["min_poly"], "3x^2 - 7x + 3");
}

#[test]
fn an_g_rings_have_expected_dimensions() {
    let a1 = an_g_ring(1, &cyclic(2));
    assert!((fpdims(&a1).unwrap().dims[2].approx() - 2.0).abs() < 1e-12);
    let ty3 = catalog::ring("ty-z3").unwrap();
    let fp = fpdims(&ty3).unwrap();
    assert!((fp.dims[3].approx() - 3f64.sqrt()).abs() < 1e-12);
    assert_eq!(fp.exact_ring_dim(), Some(&CyclotomicNumber::from_int(6)));
    assert!(catalog::ring("ty-z2")
        .unwrap()
        .isomorphism(&catalog::ising_ring())
        .is_some());
    assert!(a1.isomorphism(&catalog::ising_ring()).is_none());
}

#[test]
fn verlinde_small_levels() {
    assert!(verlinde_sl2_ring(1).same_structure(&catalog::group_ring(&cyclic(2))));
    assert!(verlinde_sl2_ring(2).same_structure(&catalog::ising_ring()));
    let p = catalog::ring("ty-z2")
        .unwrap()
        .isomorphism(&verlinde_sl2_ring(2))
        .unwrap();
    assert_eq!(p, vec![0, 2, 1]);
    let l3 = verlinde_sl2_ring(3);
    assert_eq!(l3.rank(), 4);
    assert_eq!(subring_generated(&l3, &[2]), vec![0, 2]);
    assert_eq!(l3.product(2, 2), &[1, 0, 1, 0]);
}

#[test]
fn obstruction_examples() {
    let fib = catalog::fibonacci_ring();
    assert_eq!(prime_fpdim_test(&fib, 5).status, Status::Inapplicable);
    assert_eq!(
        prime_square_test(&catalog::ring("ty-z3").unwrap(), 3).status,
        Status::Inapplicable
    );

    let ising = catalog::ising_ring();
    let c = subring_divisibility(&ising, &[0, 2]).unwrap();
    assert_eq!(c.status, Status::Pass);

    let ff = tensor_product(&fib, &fib).unwrap();
    let c = subring_divisibility(&ff, &[0, 1]).unwrap();
    assert_eq!(c.status, Status::Pass);
    assert_eq!(c.values["ratio_min_poly"], "x^2 - 5x + 5");

    let ty4 = catalog::ring("ty-z4").unwrap();
    let c = integer_fpdim_consequences(&ty4);
    assert_eq!(c.status, Status::Pass);
    assert_eq!(c.values["quasi_hopf"], true);
    assert!(c.values["integer_dims"].to_string().contains("X = 2"));

    let c = integer_fpdim_consequences(&ising);
    assert_eq!(c.values["quasi_hopf"], false);
}

#[test]
fn rep_rings_from_character_tables() {
    let s3 = catalog::ring("rep-s3").unwrap();
    assert_eq!(s3.rank(), 3);
    let v = s3.index_of("V").unwrap();
    let mut sq: Vec<&str> = s3.support(v, v).map(|k| s3.label(k)).collect();
    sq.sort();
    assert_eq!(sq, vec!["1", "V", "sgn"]);

    let q8 = catalog::ring("rep-q8").unwrap();
    let mut dims: Vec<f64> = fpdims(&q8).unwrap().approx_dims();
    dims.sort_by(f64::total_cmp);
    assert_eq!(
        dims.iter().map(|d| d.round() as i64).collect::<Vec<_>>(),
        vec![1, 1, 1, 1, 2]
    );

    let vec_s3 = catalog::ring("vec-s3").unwrap();
    assert_eq!(vec_s3.rank(), 6);
    assert!(!vec_s3.is_commutative());
    assert_eq!(group("s3").unwrap().order(), symmetric3().order());
}

/// Simple objects of the double `D(G)`: a conjugacy class `C` and an
/// irreducible of its centralizer, with `dim = |C| dim ρ`. Restricted to
/// `Rep(G)`, the unit appears once exactly when `ρ` is trivial.
/// Irreducible degrees come from `Σ d² = |Z|` with as many irreducibles as
/// classes of `Z`; both groups that occur here (`S3`, cyclic) are pinned
/// down by that.
fn double_oracle(g: &catalog::Group) -> Vec<(u64, u64)> {
    let n = g.order();
    let conj = |x: usize, y: usize| g.mul(g.mul(y, x), g.inverse(y));
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for x in 0..n {
        if seen.contains(&x) {
            continue;
        }
        let class: BTreeSet<usize> = (0..n).map(|y| conj(x, y)).collect();
        seen.extend(class.iter().copied());
        let z: Vec<usize> = (0..n).filter(|&y| g.mul(x, y) == g.mul(y, x)).collect();
        let z_classes: BTreeSet<BTreeSet<usize>> = z
            .iter()
            .map(|&a| {
                z.iter()
                    .map(|&y| g.mul(g.mul(y, a), g.inverse(y)))
                    .collect()
            })
            .collect();
        let degrees: Vec<u64> = if z_classes.len() == z.len() {
            vec![1; z.len()]
        } else {
            assert_eq!(
                (z.len(), z_classes.len()),
                (6, 3),
                "only S3 is nonabelian here"
            );
            vec![1, 1, 2]
        };
        for (k, d) in degrees.into_iter().enumerate() {
            out.push((class.len() as u64 * d, (k == 0) as u64));
        }
    }
    out.sort();
    out
}

fn datum_pairs(name: &str) -> Vec<(u64, u64)> {
    let cd = catalog::center_datum(name).unwrap();
    let mut v: Vec<(u64, u64)> = cd
        .objects
        .iter()
        .map(|o| {
            (
                o.dim
                    .as_rational()
                    .unwrap()
                    .to_integer()
                    .try_into()
                    .unwrap(),
                o.mult_unit,
            )
        })
        .collect();
    v.sort();
    v
}

#[test]
fn center_data_match_the_double_oracle() {
    assert_eq!(datum_pairs("rep_s3_double"), double_oracle(&symmetric3()));
    assert_eq!(datum_pairs("rep_z2_double"), double_oracle(&cyclic(2)));
    let vz2 = datum_pairs("vec_z2_double");
    assert_eq!(vz2, vec![(1, 0), (1, 0), (1, 1), (1, 1)]);

    let ising = catalog::center_datum("ising_double").unwrap();
    let c = fpdim_square_check(&ising.ring, &ising.dims());
    assert_eq!(c.status, Status::Pass);
    let total: f64 = ising.dims().iter().map(|d| d.to_f64().powi(2)).sum();
    assert!((total - 16.0).abs() < 1e-9);
}
