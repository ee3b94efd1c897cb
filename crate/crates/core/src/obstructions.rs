//! Necessary conditions for a fusion ring to be the Grothendieck ring of a
//! fusion category, runnable one at a time or as a deterministic suite.
//!
//! Integrality questions are settled exactly when the numbers involved have
//! cyclotomic lifts or certified minimal polynomials. When neither is
//! available a check reports `indeterminate` rather than guessing.

use std::cmp::Ordering;

use crate::fusionring::{
    adjoint_subring, fpdims, fpdims_unvalidated, is_closed, is_pointed, subring_generated,
    universal_grading, FPData, FusionRing,
};
use crate::numberfield::mp::Mp;
use crate::numberfield::{
    is_algebraic_integer, quadratic_conductor, sqrt_integer_in, AlgebraicReal, BigRational,
    CyclotomicNumber, IntPolynomial,
};
use crate::report::{
    aggregate_status, CheckResult, Evidence, EvidenceValue, Exactness, Report, Status,
};
use crate::{Error, Result, DEFAULT_TOLERANCE};
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

/// Report produced by [`run_suite`].
pub type ObstructionReport = Report;

/// Every check the suite registers, in report order.
pub const CHECK_NAMES: &[&str] = &[
    "validate",
    "fpdims",
    "universal_grading",
    "subring_divisibility",
    "an_g_test",
    "prime_fpdim_test",
    "prime_square_test",
    "integer_fpdim_consequences",
    "pseudo_unitarity_gap",
    "grading_divisibility",
];

/// Whether a real algebraic number is an algebraic integer, and how that
/// was decided.
struct Integrality {
    verdict: Option<bool>,
    approx: f64,
    poly: Option<IntPolynomial>,
    evidence: Vec<Evidence>,
}

impl Integrality {
    fn undecided(approx: f64) -> Self {
        Integrality {
            verdict: None,
            approx,
            poly: None,
            evidence: Vec::new(),
        }
    }

    fn of_cyclotomic(q: CyclotomicNumber) -> Self {
        let poly = q.minimal_polynomial().to_primitive_int();
        Integrality {
            verdict: Some(is_algebraic_integer(&q)),
            approx: q.to_f64(),
            evidence: vec![Evidence::Root {
                value: EvidenceValue::Cyclotomic(q),
                poly: poly.clone(),
            }],
            poly: Some(poly),
        }
    }
}

/// `p(kx)` with denominators cleared and content removed: the minimal
/// polynomial of `α/k` when `p` is that of `α`.
fn scale_argument(p: &IntPolynomial, k: &BigRational) -> IntPolynomial {
    let d = p.coeffs().len().saturating_sub(1);
    let (a, b) = (k.numer(), k.denom());
    let coeffs = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| c * a.pow(i as u32) * b.pow((d - i) as u32))
        .collect();
    IntPolynomial::new(coeffs).primitive_part()
}

/// Decides whether `num / den` is an algebraic integer.
fn ratio_integrality(num: &AlgebraicReal, den: &AlgebraicReal) -> Integrality {
    let approx = num.approx() / den.approx();
    if let (Some(a), Some(b)) = (num.exact(), den.exact()) {
        if let Ok(q) = a.checked_div(b) {
            return Integrality::of_cyclotomic(q);
        }
    }
    if let (Some(k), Some(p)) = (den.rational_value(), num.certified_min_poly()) {
        if !k.is_zero() {
            let poly = scale_argument(p, &k);
            let evidence = AlgebraicReal::isolate_near(&poly, approx, 1e-6)
                .map(|v| Evidence::Root {
                    value: EvidenceValue::Algebraic(v),
                    poly: poly.clone(),
                })
                .into_iter()
                .collect();
            return Integrality {
                verdict: Some(poly.leading().is_some_and(|l| l.is_one())),
                approx,
                poly: Some(poly),
                evidence,
            };
        }
    }
    if let Some(r) = rational_ratio(num, den, approx) {
        let poly = IntPolynomial::new(vec![-r.numer().clone(), r.denom().clone()]);
        let evidence = num
            .certified_min_poly()
            .map(|p| Evidence::Root {
                value: EvidenceValue::Algebraic(num.clone()),
                poly: p.clone(),
            })
            .into_iter()
            .collect();
        return Integrality {
            verdict: Some(r.is_integer()),
            approx,
            poly: Some(poly),
            evidence,
        };
    }
    Integrality::undecided(approx)
}

/// Rounds `num / den` to a rational with small denominator and proves the
/// guess: `num` and `r·den` must share a minimal polynomial and an isolated
/// root.
fn rational_ratio(num: &AlgebraicReal, den: &AlgebraicReal, approx: f64) -> Option<BigRational> {
    let (pn, pd) = (num.certified_min_poly()?, den.certified_min_poly()?);
    if pn.degree() != pd.degree() {
        return None;
    }
    for s in 1..=64i64 {
        let k = (approx * s as f64).round();
        if (approx * s as f64 - k).abs() > 1e-7 || k == 0.0 {
            continue;
        }
        let r = BigRational::new(BigInt::from(k as i64), BigInt::from(s));
        let scaled = scale_argument(pd, &r.recip());
        if &scaled != pn {
            continue;
        }
        let candidate =
            AlgebraicReal::isolate_near(&scaled, num.approx(), 1e-9)?.with_min_poly(scaled);
        if num.exact_eq(&candidate) == Some(true) {
            return Some(r);
        }
    }
    None
}

/// Sign of a real cyclotomic number. Zero is decided exactly; otherwise the
/// sign of a 320-bit evaluation is trusted once it clears `1e-40`.
fn real_sign(x: &CyclotomicNumber) -> Option<Ordering> {
    if x.is_zero() {
        return Some(Ordering::Equal);
    }
    let v = x.to_mp().re;
    if !v.abs().lt(&Mp::from_f64(1e-40)) {
        Some(if v.is_negative() {
            Ordering::Less
        } else {
            Ordering::Greater
        })
    } else {
        None
    }
}

fn status_of(verdict: Option<bool>) -> Status {
    match verdict {
        Some(true) => Status::Pass,
        Some(false) => Status::Fail,
        None => Status::Indeterminate,
    }
}

fn exactness_of(verdict: Option<bool>) -> Exactness {
    if verdict.is_some() {
        Exactness::Exact
    } else {
        Exactness::Numeric(DEFAULT_TOLERANCE)
    }
}

/// The rational value of `Δ`, when it is rational.
fn rational_ring_dim(fp: &FPData) -> Option<BigRational> {
    fp.ring_dim
        .rational_value()
        .or_else(|| fp.exact_ring_dim().and_then(|c| c.as_rational()))
}

/// `λ^2` when it is rational, decided from the exact lift or the minimal
/// polynomial. `None` means undecidable; `Some(None)` means irrational.
fn rational_square(d: &AlgebraicReal) -> Option<Option<BigRational>> {
    if let Some(e) = d.exact() {
        return Some((e * e).as_rational());
    }
    let p = d.certified_min_poly()?;
    let c = p.coeffs();
    Some(match c.len() {
        2 => {
            let q = BigRational::new(-c[0].clone(), c[1].clone());
            Some(&q * &q)
        }
        3 if c[1].is_zero() => Some(BigRational::new(-c[0].clone(), c[2].clone())),
        _ => None,
    })
}

fn restrict(ring: &FusionRing, set: &[usize]) -> FusionRing {
    let pos = |i: usize| set.iter().position(|&x| x == i).expect("closed set");
    FusionRing::from_fn(
        format!("{} restricted", ring.name()),
        set.iter().map(|&i| ring.label(i).to_string()).collect(),
        pos(ring.unit()),
        set.iter().map(|&i| pos(ring.dual(i))).collect(),
        set.len(),
        |a, b, c| ring.n(set[a], set[b], set[c]),
    )
    .expect("restriction of a closed sub-basis")
}

fn labels_of(ring: &FusionRing, set: &[usize]) -> String {
    let names: Vec<&str> = set.iter().map(|&i| ring.label(i)).collect();
    format!("{{{}}}", names.join(", "))
}

/// `FPdim(ring) / FPdim(sub)` is an algebraic integer for a fusion subring.
pub fn subring_divisibility(ring: &FusionRing, sub: &[usize]) -> Result<CheckResult> {
    let fp = fpdims(ring)?;
    subring_divisibility_with(ring, &fp, sub)
}

fn subring_divisibility_with(ring: &FusionRing, fp: &FPData, sub: &[usize]) -> Result<CheckResult> {
    let mut set: Vec<usize> = sub.to_vec();
    set.sort_unstable();
    set.dedup();
    if !is_closed(ring, &set) {
        return Err(Error::NotClosed(labels_of(ring, &set)));
    }
    let sub_fp = fpdims(&restrict(ring, &set))?;
    let q = ratio_integrality(&fp.ring_dim, &sub_fp.ring_dim);
    let mut c = CheckResult::new(
        "subring_divisibility",
        status_of(q.verdict),
        exactness_of(q.verdict),
    )
    .value("subring", labels_of(ring, &set))
    .value("ratio", q.approx);
    if let Some(p) = &q.poly {
        c = c.value("ratio_min_poly", p.to_string());
    }
    match q.verdict {
        Some(false) => {
            c = c.witness(format!(
                "FPdim ratio {:.12} is not an algebraic integer",
                q.approx
            ))
        }
        None => c = c.witness("no exact representation of the FPdim ratio"),
        Some(true) => {}
    }
    Ok(c.with_evidence(q.evidence))
}

/// The integrality test for `A_n(G)`: with `m = |G|`, the number
/// `(n + √(n^2+4m))^2 / 4m` must be an algebraic integer, and for `n != 0`
/// that forces `m ≤ 2n^2`.
pub fn an_g_test(n: u64, group_order: u64) -> CheckResult {
    let name = "an_g_test";
    if group_order == 0 {
        return CheckResult::new(name, Status::Fail, Exactness::Exact)
            .witness("group order must be positive");
    }
    let (nb, m) = (BigInt::from(n), BigInt::from(group_order));
    let k = &nb * &nb + BigInt::from(4) * &m;
    // value = a + b√k with a = (n^2 + k)/4m and b = n/2m
    let a = BigRational::new(&nb * &nb + &k, BigInt::from(4) * &m);
    let b = BigRational::new(nb.clone(), BigInt::from(2) * &m);
    let root = k.sqrt();
    let (poly, integral) = if &root * &root == k || b.is_zero() {
        let v = if &root * &root == k {
            let s = BigRational::from_integer(&nb + &root);
            &s * &s / BigRational::from_integer(BigInt::from(4) * &m)
        } else {
            a.clone()
        };
        let poly = IntPolynomial::new(vec![-v.numer().clone(), v.denom().clone()]);
        (poly, v.is_integer())
    } else {
        // x^2 - 2a x + (a^2 - b^2 k)
        let trace = &a + &a;
        let norm = &a * &a - &b * &b * BigRational::from_integer(k.clone());
        let lcm = num_integer::lcm(trace.denom().clone(), norm.denom().clone());
        let scale = BigRational::from_integer(lcm.clone());
        let poly = IntPolynomial::new(vec![
            (&norm * &scale).to_integer(),
            -(&trace * &scale).to_integer(),
            lcm,
        ])
        .primitive_part();
        (poly, trace.is_integer() && norm.is_integer())
    };
    let approx = {
        let s = n as f64 + ((n * n + 4 * group_order) as f64).sqrt();
        s * s / (4 * group_order) as f64
    };
    let bound_ok = n == 0 || group_order <= 2 * n * n;
    let status = if integral && bound_ok {
        Status::Pass
    } else {
        Status::Fail
    };
    let mut c = CheckResult::new(name, status, Exactness::Exact)
        .value("n", n)
        .value("group_order", group_order)
        .value("value", approx)
        .value("min_poly", poly.to_string())
        .value("order_bound_holds", bound_ok);
    if !integral {
        c = c.witness(format!(
            "(n + sqrt(n^2+4|G|))^2 / 4|G| has minimal polynomial {poly}, not monic over Z"
        ));
    }
    if !bound_ok {
        c = c.witness(format!("|G| = {group_order} exceeds 2n^2 = {}", 2 * n * n));
    }
    if status == Status::Pass {
        let value = {
            let kc = quadratic_conductor(&k);
            sqrt_integer_in(&k, kc).map(|s| {
                let v = &CyclotomicNumber::from_rational(a.clone()) + &s.scale(&b);
                EvidenceValue::Cyclotomic(v)
            })
        };
        if let Some(value) = value {
            c = c.with_evidence(vec![Evidence::Root { value, poly }]);
        }
    }
    c
}

/// Recognizes the `A_n(G)` shape: one non-invertible self-dual `X` absorbing
/// every invertible object, with `X^2 = nX + Σ_g g`. Returns `(n, |G|)`.
pub fn an_g_shape(ring: &FusionRing) -> Option<(u64, u64)> {
    let r = ring.rank();
    let unit = ring.basis_vector(ring.unit());
    let invertible: Vec<usize> = (0..r)
        .filter(|&i| ring.product(i, ring.dual(i)) == unit.as_slice())
        .collect();
    if invertible.len() + 1 != r {
        return None;
    }
    let x = (0..r).find(|i| !invertible.contains(i))?;
    if ring.dual(x) != x {
        return None;
    }
    let absorbs = invertible.iter().all(|&g| {
        ring.product(g, x) == ring.basis_vector(x).as_slice()
            && ring.product(x, g) == ring.basis_vector(x).as_slice()
    });
    let square = ring.product(x, x);
    if !absorbs || invertible.iter().any(|&g| square[g] != 1) {
        return None;
    }
    Some((square[x], invertible.len() as u64))
}

/// If `FPdim(ring) = p` for a prime `p`, the ring must be that of `Z/p`.
pub fn prime_fpdim_test(ring: &FusionRing, p: u64) -> CheckResult {
    let name = "prime_fpdim_test";
    let fp = match fpdims_unvalidated(ring) {
        Ok(fp) => fp,
        Err(e) => {
            return CheckResult::new(name, Status::Fail, Exactness::Exact).witness(e.to_string())
        }
    };
    prime_fpdim_with(ring, &fp, p)
}

fn prime_fpdim_with(ring: &FusionRing, fp: &FPData, p: u64) -> CheckResult {
    let name = "prime_fpdim_test";
    let delta = rational_ring_dim(fp);
    if delta != Some(BigRational::from_integer(p.into())) {
        return CheckResult::inapplicable(name, format!("FPdim is {}, not {p}", fp.ring_dim))
            .value("p", p);
    }
    let noninvertible: Vec<&str> = (0..ring.rank())
        .filter(|&i| ring.product(i, ring.dual(i)) != ring.basis_vector(ring.unit()).as_slice())
        .map(|i| ring.label(i))
        .collect();
    let mut c = CheckResult::new(name, Status::Pass, Exactness::Exact).value("p", p);
    if !noninvertible.is_empty() {
        c.status = Status::Fail;
        return c.witness(format!(
            "FPdim {p} is prime but {} are not invertible",
            noninvertible.join(", ")
        ));
    }
    if ring.rank() as u64 != p || !is_cyclic_pointed(ring) {
        c.status = Status::Fail;
        c = c.witness(format!("pointed ring of FPdim {p} is not Z/{p}"));
    }
    c.value("group", format!("Z/{p}"))
}

/// A pointed ring whose group is cyclic.
fn is_cyclic_pointed(ring: &FusionRing) -> bool {
    let r = ring.rank();
    let unit = ring.unit();
    let mul = |a: usize, b: usize| ring.support(a, b).next().unwrap_or(unit);
    (0..r).any(|g| {
        let mut x = g;
        let mut k = 1;
        while x != unit && k <= r {
            x = mul(x, g);
            k += 1;
        }
        k == r
    })
}

/// If `FPdim(ring) = p^2`: for odd `p` every simple is invertible; for
/// `p = 2` the ring is pointed of rank 4 or has the Ising pattern `1, 1, √2`.
pub fn prime_square_test(ring: &FusionRing, p: u64) -> CheckResult {
    let name = "prime_square_test";
    let fp = match fpdims_unvalidated(ring) {
        Ok(fp) => fp,
        Err(e) => {
            return CheckResult::new(name, Status::Fail, Exactness::Exact).witness(e.to_string())
        }
    };
    prime_square_with(ring, &fp, p)
}

fn prime_square_with(ring: &FusionRing, fp: &FPData, p: u64) -> CheckResult {
    let name = "prime_square_test";
    let delta = rational_ring_dim(fp);
    if delta != Some(BigRational::from_integer((p * p).into())) {
        return CheckResult::inapplicable(name, format!("FPdim is {}, not {}", fp.ring_dim, p * p))
            .value("p", p);
    }
    let c = CheckResult::new(name, Status::Pass, Exactness::Exact).value("p", p);
    if is_pointed(ring) {
        return c.value("branch", "pointed");
    }
    if p == 2 && ring.rank() == 3 {
        let squares: Vec<Option<Option<BigRational>>> =
            fp.dims.iter().map(rational_square).collect();
        let one = BigRational::one();
        let two = BigRational::from_integer(2.into());
        let ones = squares
            .iter()
            .filter(|s| **s == Some(Some(one.clone())))
            .count();
        let sigma = squares.iter().position(|s| *s == Some(Some(two.clone())));
        if let (2, Some(x)) = (ones, sigma) {
            let psi = (0..3)
                .find(|&i| i != x && i != ring.unit())
                .expect("rank 3");
            let mut expected = vec![0; 3];
            expected[ring.unit()] = 1;
            expected[psi] = 1;
            if ring.product(x, ring.dual(x)) == expected.as_slice() {
                return c
                    .value("branch", "Ising pattern 1, 1, sqrt(2)")
                    .witness(format!("{} has FPdim sqrt(2)", ring.label(x)));
            }
        }
    }
    let mut c = c.witness(if p == 2 {
        "FPdim 4 but neither pointed nor of Ising type".to_string()
    } else {
        format!("FPdim {} with odd p but not pointed", p * p)
    });
    c.status = Status::Fail;
    c
}

/// With `FPdim(ring)` a rational integer: every `λ_i^2` is an integer and
/// the adjoint subring has integer dimensions. Also reports whether all
/// dimensions are integers (the quasi-Hopf criterion).
pub fn integer_fpdim_consequences(ring: &FusionRing) -> CheckResult {
    let name = "integer_fpdim_consequences";
    match fpdims(ring) {
        Ok(fp) => integer_consequences_with(ring, &fp),
        Err(e) => CheckResult::new(name, Status::Fail, Exactness::Exact).witness(e.to_string()),
    }
}

fn integer_consequences_with(ring: &FusionRing, fp: &FPData) -> CheckResult {
    let name = "integer_fpdim_consequences";
    let Some(delta) = rational_ring_dim(fp).filter(|d| d.is_integer()) else {
        return CheckResult::inapplicable(
            name,
            format!("FPdim {} is not a rational integer", fp.ring_dim),
        );
    };
    let adjoint = match adjoint_subring(ring) {
        Ok(a) => a,
        Err(e) => {
            return CheckResult::new(name, Status::Fail, Exactness::Exact).witness(e.to_string())
        }
    };
    let mut failures = Vec::new();
    let mut undecided = Vec::new();
    let mut integer_dims = Vec::new();
    let mut sqrt_dims = Vec::new();
    let mut evidence = Vec::new();
    for (i, d) in fp.dims.iter().enumerate() {
        let label = ring.label(i);
        match rational_square(d) {
            None => undecided.push(format!("FPdim({label})^2 has no exact representation")),
            Some(None) => failures.push(format!("FPdim({label})^2 is irrational")),
            Some(Some(sq)) if !sq.is_integer() => {
                failures.push(format!("FPdim({label})^2 = {sq} is not an integer"))
            }
            Some(Some(sq)) => {
                let n = sq.to_integer();
                let root = n.sqrt();
                if &root * &root == n {
                    integer_dims.push(format!("{label} = {root}"));
                } else {
                    sqrt_dims.push(format!("{label} = sqrt({n})"));
                    if adjoint.contains(&i) {
                        failures.push(format!(
                            "{label} lies in the adjoint subring with FPdim sqrt({n})"
                        ));
                    }
                }
                evidence.push(Evidence::Root {
                    value: EvidenceValue::Algebraic(d.clone()),
                    poly: IntPolynomial::new(vec![-n, BigInt::zero(), BigInt::one()]),
                });
            }
        }
    }
    let status = if !failures.is_empty() {
        Status::Fail
    } else if !undecided.is_empty() {
        Status::Indeterminate
    } else {
        Status::Pass
    };
    let quasi_hopf = status == Status::Pass && sqrt_dims.is_empty();
    let mut c = CheckResult::new(name, status, Exactness::Exact)
        .value("fpdim", delta.to_string())
        .value("integer_dims", integer_dims)
        .value("sqrt_dims", sqrt_dims)
        .value("adjoint_subring", labels_of(ring, &adjoint))
        .value("quasi_hopf", quasi_hopf);
    c.witnesses = failures.into_iter().chain(undecided).collect();
    c.with_evidence(evidence)
}

/// Compares supplied squared norms `|V|^2` with `FPdim(V)^2`, and checks that
/// `D / FPdim` is an algebraic integer at most 1, with `D = Σ |V|^2`.
/// When `FPdim` is a rational integer, `D` must equal it.
pub fn pseudo_unitarity_gap(
    ring: &FusionRing,
    squared_norms: Option<&[CyclotomicNumber]>,
) -> CheckResult {
    let name = "pseudo_unitarity_gap";
    match fpdims(ring) {
        Ok(fp) => pseudo_unitarity_with(ring, &fp, squared_norms, DEFAULT_TOLERANCE),
        Err(e) => CheckResult::new(name, Status::Fail, Exactness::Exact).witness(e.to_string()),
    }
}

fn pseudo_unitarity_with(
    ring: &FusionRing,
    fp: &FPData,
    squared_norms: Option<&[CyclotomicNumber]>,
    tol: f64,
) -> CheckResult {
    let name = "pseudo_unitarity_gap";
    let Some(norms) = squared_norms else {
        return CheckResult::inapplicable(name, "no squared norms supplied");
    };
    if norms.len() != ring.rank() {
        return CheckResult::new(name, Status::Fail, Exactness::Exact).witness(format!(
            "{} squared norms for rank {}",
            norms.len(),
            ring.rank()
        ));
    }
    let mut failures = Vec::new();
    let mut undecided = Vec::new();
    let mut numeric = false;
    let mut flagged = Vec::new();
    for (i, (n, d)) in norms.iter().zip(&fp.dims).enumerate() {
        let label = ring.label(i);
        let ord = match d.exact() {
            Some(e) => real_sign(&(&(e * e) - n)),
            None => {
                numeric = true;
                let gap = d.approx().powi(2) - n.to_f64();
                Some(if gap < -tol {
                    Ordering::Less
                } else if gap > tol {
                    Ordering::Greater
                } else {
                    Ordering::Equal
                })
            }
        };
        match ord {
            Some(Ordering::Less) => {
                failures.push(format!("|{label}|^2 = {n} exceeds FPdim({label})^2"))
            }
            Some(Ordering::Greater) => flagged.push(format!(
                "{label}: |V|^2 = {n}, FPdim^2 = {}",
                d.exact()
                    .map(|e| (e * e).to_string())
                    .unwrap_or_else(|| format!("{:.12}", d.approx().powi(2)))
            )),
            Some(Ordering::Equal) => {}
            None => undecided.push(format!("cannot order |{label}|^2 and FPdim({label})^2")),
        }
    }
    let global = norms
        .iter()
        .fold(CyclotomicNumber::zero(1), |acc, n| &acc + n);
    let mut evidence = Vec::new();
    let mut values: Vec<(&str, serde_json::Value)> =
        vec![("global_dim", global.to_string().into())];
    match fp.exact_ring_dim() {
        Some(delta) => match global.checked_div(delta) {
            Ok(q) => {
                let integral = Integrality::of_cyclotomic(q.clone());
                values.push(("ratio", q.to_string().into()));
                values.push(("ratio_approx", integral.approx.into()));
                if let Some(p) = &integral.poly {
                    values.push(("ratio_min_poly", p.to_string().into()));
                }
                if integral.verdict == Some(false) {
                    failures.push(format!("D / FPdim = {q} is not an algebraic integer"));
                }
                match real_sign(&(&CyclotomicNumber::one() - &q)) {
                    Some(Ordering::Less) => failures.push(format!("D / FPdim = {q} exceeds 1")),
                    None => undecided.push("cannot compare D / FPdim with 1".into()),
                    _ => {}
                }
                evidence.extend(integral.evidence);
                if delta.as_rational().is_some() {
                    if &global != delta {
                        failures.push(format!("FPdim {delta} is an integer but D = {global}"));
                    } else {
                        evidence.push(Evidence::identity(&global, delta));
                    }
                }
            }
            Err(e) => failures.push(e.to_string()),
        },
        None => undecided.push("FPdim has no exact lift; D / FPdim not decided".into()),
    }
    let status = if !failures.is_empty() {
        Status::Fail
    } else if !undecided.is_empty() {
        Status::Indeterminate
    } else {
        Status::Pass
    };
    let exactness = if numeric {
        Exactness::Numeric(tol)
    } else {
        Exactness::Exact
    };
    let mut c = CheckResult::new(name, status, exactness).value("norm_below_fpdim", flagged);
    for (k, v) in values {
        c = c.value(k, v);
    }
    c.witnesses = failures.into_iter().chain(undecided).collect();
    c.with_evidence(evidence)
}

/// `|G|` divides `FPdim(ring)` for the universal grading group `G`, and all
/// graded components have the same dimension.
pub fn grading_divisibility(ring: &FusionRing) -> Result<CheckResult> {
    let fp = fpdims(ring)?;
    grading_divisibility_with(ring, &fp, DEFAULT_TOLERANCE)
}

fn grading_divisibility_with(ring: &FusionRing, fp: &FPData, tol: f64) -> Result<CheckResult> {
    let name = "grading_divisibility";
    let grading = universal_grading(ring)?;
    let order = grading.group_order as i64;
    let q = ratio_integrality(&fp.ring_dim, &AlgebraicReal::from_int(order));
    let mut failures = Vec::new();
    let mut evidence = q.evidence;
    let mut numeric = q.verdict.is_none();
    if q.verdict == Some(false) {
        failures.push(format!(
            "FPdim / |G| = {:.12} is not an algebraic integer",
            q.approx
        ));
    }
    let exact_dims = fp.exact_dims();
    let mut component_dims = Vec::new();
    for comp in &grading.components {
        match (&exact_dims, fp.exact_ring_dim()) {
            (Some(e), Some(delta)) => {
                let s = comp
                    .iter()
                    .fold(CyclotomicNumber::zero(1), |acc, &i| &acc + &(&e[i] * &e[i]));
                let want = delta.scale(&BigRational::new(1.into(), order.into()));
                if s != want {
                    failures.push(format!(
                        "component {} has dimension {s}, expected {want}",
                        labels_of(ring, comp)
                    ));
                } else {
                    evidence.push(Evidence::identity(&s, &want));
                }
                component_dims.push(s.to_f64());
            }
            _ => {
                numeric = true;
                let s: f64 = comp.iter().map(|&i| fp.dims[i].approx().powi(2)).sum();
                if (s - fp.ring_dim.approx() / order as f64).abs() > tol {
                    failures.push(format!(
                        "component {} has dimension {s:.12}",
                        labels_of(ring, comp)
                    ));
                }
                component_dims.push(s);
            }
        }
    }
    let status = if !failures.is_empty() {
        Status::Fail
    } else if q.verdict.is_none() {
        Status::Indeterminate
    } else {
        Status::Pass
    };
    let exactness = if numeric {
        Exactness::Numeric(tol)
    } else {
        Exactness::Exact
    };
    let mut c = CheckResult::new(name, status, exactness)
        .value("group_order", grading.group_order)
        .value("ratio", q.approx)
        .value("component_dims", component_dims);
    if let Some(p) = q.poly {
        c = c.value("ratio_min_poly", p.to_string());
    }
    c.witnesses = failures;
    Ok(c.with_evidence(evidence))
}

/// Options for [`run_suite`].
#[derive(Clone, Debug, Default)]
pub struct SuiteOptions {
    /// Primes for the prime tests. When empty, the suite uses `Δ` itself or
    /// its square root when `Δ` is a prime or the square of a prime.
    pub primes: Vec<u64>,
    /// Squared norms `|V_i|^2` for the pseudo-unitarity check.
    pub squared_norms: Option<Vec<CyclotomicNumber>>,
    /// Tolerance for numeric comparisons; defaults to `1e-9`.
    pub tolerance: Option<f64>,
    /// Restrict the report to these checks (all when empty).
    pub only: Vec<String>,
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn candidate_primes(fp: &FPData) -> Vec<u64> {
    let Some(n) = rational_ring_dim(fp)
        .filter(|d| d.is_integer())
        .and_then(|d| d.to_integer().to_u64())
    else {
        return Vec::new();
    };
    if is_prime(n) {
        return vec![n];
    }
    let r = (n as f64).sqrt().round() as u64;
    if r * r == n && is_prime(r) {
        vec![r]
    } else {
        Vec::new()
    }
}

/// Runs every registered check on a valid ring. Check order is fixed, so
/// the JSON report is byte-identical across runs.
pub fn run_suite(ring: &FusionRing, options: &SuiteOptions) -> Result<ObstructionReport> {
    if let Some(bad) = options
        .only
        .iter()
        .find(|c| !CHECK_NAMES.contains(&c.as_str()))
    {
        return Err(Error::Format(format!("unknown check `{bad}`")));
    }
    let report = ring.validate();
    if !report.is_valid() {
        return Err(Error::InvalidRing(report.to_string()));
    }
    let tol = options.tolerance.unwrap_or(DEFAULT_TOLERANCE);
    let fp = fpdims(ring)?;
    let mut checks = Vec::with_capacity(CHECK_NAMES.len());

    checks.push(
        CheckResult::new("validate", Status::Pass, Exactness::Exact).value("rank", ring.rank()),
    );

    let all_exact = fp.exact_dims().is_some() && fp.homomorphism.exact == Some(true);
    let hom_ok = fp.homomorphism.holds(tol);
    let mut c = CheckResult::new(
        "fpdims",
        if hom_ok { Status::Pass } else { Status::Fail },
        if all_exact {
            Exactness::Exact
        } else {
            Exactness::Numeric(tol)
        },
    )
    .value(
        "dims",
        fp.dims.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
    )
    .value("fpdim", fp.ring_dim.to_string())
    .value("homomorphism_residual", fp.homomorphism.max_residual);
    if let Some(e) = fp.exact_dims() {
        c = c.with_evidence(
            e.iter()
                .zip(&fp.dims)
                .filter_map(|(x, d)| {
                    d.certified_min_poly().map(|p| Evidence::Root {
                        value: EvidenceValue::Cyclotomic(x.clone()),
                        poly: p.clone(),
                    })
                })
                .collect(),
        );
    }
    if !hom_ok {
        c = c.witness(format!(
            "lambda_i lambda_j differs from sum_k N_ij^k lambda_k by {:e}",
            fp.homomorphism.max_residual
        ));
    }
    checks.push(c);

    checks.push(match universal_grading(ring) {
        Ok(g) => CheckResult::new("universal_grading", Status::Pass, Exactness::Exact)
            .value("group_order", g.group_order)
            .value("abelian", g.is_abelian())
            .value("cyclic", g.is_cyclic())
            .value(
                "components",
                g.components
                    .iter()
                    .map(|c| labels_of(ring, c))
                    .collect::<Vec<_>>(),
            ),
        Err(e) => CheckResult::new("universal_grading", Status::Fail, Exactness::Exact)
            .witness(e.to_string()),
    });

    checks.push(suite_subrings(ring, &fp)?);

    checks.push(match an_g_shape(ring) {
        Some((n, m)) => an_g_test(n, m),
        None => CheckResult::inapplicable("an_g_test", "ring is not of the form A_n(G)"),
    });

    let primes = if options.primes.is_empty() {
        candidate_primes(&fp)
    } else {
        options.primes.clone()
    };
    let delta = rational_ring_dim(&fp);
    let pick = |f: fn(u64) -> u64| {
        primes
            .iter()
            .copied()
            .find(|&p| delta == Some(BigRational::from_integer(f(p).into())))
    };
    checks.push(match pick(|p| p) {
        Some(p) => prime_fpdim_with(ring, &fp, p),
        None => CheckResult::inapplicable("prime_fpdim_test", "FPdim is not a supplied prime"),
    });
    checks.push(match pick(|p| p * p) {
        Some(p) => prime_square_with(ring, &fp, p),
        None => CheckResult::inapplicable(
            "prime_square_test",
            "FPdim is not the square of a supplied prime",
        ),
    });

    checks.push(integer_consequences_with(ring, &fp));
    checks.push(pseudo_unitarity_with(
        ring,
        &fp,
        options.squared_norms.as_deref(),
        tol,
    ));
    checks.push(match grading_divisibility_with(ring, &fp, tol) {
        Ok(c) => c,
        Err(e) => CheckResult::new("grading_divisibility", Status::Fail, Exactness::Exact)
            .witness(e.to_string()),
    });

    if !options.only.is_empty() {
        checks.retain(|c| options.only.contains(&c.check));
    }
    Ok(Report::new(ring.name(), checks))
}

/// Divisibility for every proper subring generated by one basis element and
/// for the adjoint subring, folded into one check.
fn suite_subrings(ring: &FusionRing, fp: &FPData) -> Result<CheckResult> {
    let name = "subring_divisibility";
    let mut subs: Vec<Vec<usize>> = Vec::new();
    let mut push = |s: Vec<usize>| {
        if s.len() < ring.rank() && !subs.contains(&s) {
            subs.push(s);
        }
    };
    push(adjoint_subring(ring)?);
    for i in 0..ring.rank() {
        push(subring_generated(ring, &[i]));
    }
    subs.sort();
    if subs.is_empty() {
        return Ok(CheckResult::inapplicable(name, "no proper subring"));
    }
    let results: Vec<CheckResult> = subs
        .iter()
        .map(|s| subring_divisibility_with(ring, fp, s))
        .collect::<Result<_>>()?;
    let status = aggregate_status(&results);
    let exact = results.iter().all(|r| r.exactness == Exactness::Exact);
    let mut c = CheckResult::new(
        name,
        status,
        if exact {
            Exactness::Exact
        } else {
            Exactness::Numeric(DEFAULT_TOLERANCE)
        },
    );
    let mut rows = Vec::new();
    for r in results {
        rows.push(serde_json::json!({
            "subring": r.values.get("subring"),
            "ratio": r.values.get("ratio"),
            "status": r.status,
        }));
        c.witnesses.extend(r.witnesses);
        c.evidence.extend(r.evidence);
    }
    Ok(c.value("subrings", rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn an_g_small_cases() {
        assert_eq!(an_g_test(1, 1).status, Status::Pass);
        assert_eq!(an_g_test(1, 2).status, Status::Pass);
        let c = an_g_test(1, 3);
        assert_eq!(c.status, Status::Fail);
        assert_eq!(c.values["min_poly"], "3x^2 - 7x + 3");
        assert_eq!(an_g_test(0, 4).status, Status::Pass);
    }

    #[test]
    fn scale_argument_divides_root() {
        // √5 / 2 has minimal polynomial 4x^2 - 5
        let p = IntPolynomial::from_i64(&[-5, 0, 1]);
        assert_eq!(
            scale_argument(&p, &BigRational::from_integer(2.into())),
            IntPolynomial::from_i64(&[-5, 0, 4])
        );
    }

    #[test]
    fn ising_prime_square() {
        let ising = catalog::ring("ising").unwrap();
        assert_eq!(prime_square_test(&ising, 2).status, Status::Pass);
        assert_eq!(prime_fpdim_test(&ising, 2).status, Status::Inapplicable);
    }

    #[test]
    fn hand_built_rank_two() {
        let r = FusionRing::new(
            "x",
            vec![],
            0,
            vec![0, 1],
            vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![2, 0]]],
        )
        .unwrap();
        let c = prime_fpdim_test(&r, 3);
        assert_eq!(c.status, Status::Fail, "{c:?}");
    }

    #[test]
    fn an_shape_detection() {
        let r = catalog::ring("an-z3@n=1").unwrap();
        assert_eq!(an_g_shape(&r), Some((1, 3)));
        assert_eq!(
            an_g_shape(&catalog::ring("fibonacci").unwrap()),
            Some((1, 1))
        );
        assert_eq!(an_g_shape(&catalog::ring("vec-z3").unwrap()), None);
    }
}
