use num_complex::Complex64;
use serde::Serialize;

use super::ModularData;
use crate::fusionring::FusionRing;
use crate::numberfield::{is_algebraic_integer, BigRational, CyclotomicNumber};
use crate::report::{CheckResult, Evidence, EvidenceValue, Exactness, Report, Status};
use crate::{Error, Result, DEFAULT_TOLERANCE};

/// An exact check that passes when `failures` is empty.
pub(crate) fn exact_check(
    name: &str,
    failures: Vec<String>,
    evidence: Vec<Evidence>,
) -> CheckResult {
    let status = if failures.is_empty() {
        Status::Pass
    } else {
        Status::Fail
    };
    let mut c = CheckResult::new(name, status, Exactness::Exact);
    c.witnesses = failures;
    if status == Status::Pass {
        c.evidence = evidence;
    }
    c
}

type Matrix = Vec<Vec<CyclotomicNumber>>;

fn matmul(a: &Matrix, b: &Matrix) -> Matrix {
    let r = a.len();
    (0..r)
        .map(|i| {
            (0..r)
                .map(|k| {
                    (0..r)
                        .filter(|&j| !a[i][j].is_zero() && !b[j][k].is_zero())
                        .fold(CyclotomicNumber::zero(1), |acc, j| {
                            &acc + &(&a[i][j] * &b[j][k])
                        })
                })
                .collect()
        })
        .collect()
}

/// The identities `Σ_j s̃_ij s̃_jk = D δ_{i,k*}`, `s̃_ij = s̃_ji`,
/// `s̃_{0 i*} = s̃_{0i} != 0` and `s̃_{i* j} = conj(s̃_ij)`, all exact.
pub fn verify_s_axioms(md: &ModularData) -> Report {
    let r = md.rank();
    let d = md.global_dim();
    let zero = CyclotomicNumber::zero(1);
    let square = matmul(&md.s_tilde().to_vec(), &md.s_tilde().to_vec());

    let mut failures = Vec::new();
    let mut evidence = Vec::new();
    for i in 0..r {
        for k in 0..r {
            let want = if i == md.dual(k) { d } else { &zero };
            if &square[i][k] != want {
                failures.push(format!(
                    "(i,k) = ({i},{k}): sum_j s_ij s_jk = {}, expected {want}",
                    square[i][k]
                ));
            } else {
                evidence.push(Evidence::identity(&square[i][k], want));
            }
        }
    }
    let orthogonality = exact_check("s_orthogonality", failures, evidence);

    let mut failures = Vec::new();
    for i in 0..r {
        for j in i + 1..r {
            if md.s(i, j) != md.s(j, i) {
                failures.push(format!(
                    "s_{i}{j} = {} but s_{j}{i} = {}",
                    md.s(i, j),
                    md.s(j, i)
                ));
            }
        }
    }
    let symmetry = exact_check("s_symmetry", failures, Vec::new());

    let mut failures = Vec::new();
    for i in 0..r {
        if md.s(0, i).is_zero() {
            failures.push(format!("s_0{i} = 0"));
        } else if md.s(0, md.dual(i)) != md.s(0, i) {
            failures.push(format!("s_0{} != s_0{i}", md.dual(i)));
        }
    }
    let unit_row = exact_check("s_unit_row", failures, Vec::new());

    let mut failures = Vec::new();
    for i in 0..r {
        for j in 0..r {
            if *md.s(md.dual(i), j) != md.s(i, j).conj() {
                failures.push(format!("s_{}{j} != conj(s_{i}{j})", md.dual(i)));
            }
        }
    }
    let conjugation = exact_check("s_conjugation", failures, Vec::new());

    Report::new(
        md.name(),
        vec![orthogonality, symmetry, unit_row, conjugation],
    )
}

/// Fusion coefficients `N_ij^k = Σ_m s̃_im s̃_jm s̃_{k*m} / (D d_m)`, computed
/// exactly. Fails unless every value is a nonnegative rational integer and
/// the result is a valid fusion ring.
pub fn verlinde_fusion(md: &ModularData) -> Result<FusionRing> {
    let r = md.rank();
    let d = md.global_dim();
    let weights: Vec<CyclotomicNumber> = (0..r)
        .map(|m| (d * md.dim(m)).inverse())
        .collect::<Result<_>>()?;
    // a[k][m] = s̃_{k*m} / (D d_m)
    let a: Vec<Vec<CyclotomicNumber>> = (0..r)
        .map(|k| (0..r).map(|m| md.s(md.dual(k), m) * &weights[m]).collect())
        .collect();
    let mut n = vec![vec![vec![0u64; r]; r]; r];
    for i in 0..r {
        for j in 0..r {
            let prod: Vec<CyclotomicNumber> = (0..r).map(|m| md.s(i, m) * md.s(j, m)).collect();
            for k in 0..r {
                let v = (0..r).fold(CyclotomicNumber::zero(1), |acc, m| {
                    &acc + &(&prod[m] * &a[k][m])
                });
                let value = v
                    .as_rational()
                    .filter(|q| q.is_integer() && *q >= BigRational::from_integer(0.into()));
                match value.and_then(|q| u64::try_from(q.to_integer()).ok()) {
                    Some(c) => n[i][j][k] = c,
                    None => {
                        return Err(Error::NonIntegralFusion {
                            i,
                            j,
                            k,
                            value: v.to_string(),
                        })
                    }
                }
            }
        }
    }
    let labels = (0..r).map(|i| format!("x{i}")).collect();
    let ring = FusionRing::new(
        format!("{} (Verlinde)", md.name()),
        labels,
        0,
        md.duals().to_vec(),
        n,
    )?;
    ring.ensure_valid()?;
    Ok(ring)
}

pub fn unitarity_check(md: &ModularData) -> CheckResult {
    unitarity_check_tol(md, DEFAULT_TOLERANCE)
}

/// Exact `S̃ conj(S̃)^T = D I`, together with the numeric residual of the
/// normalized `S = S̃ / √D`.
pub fn unitarity_check_tol(md: &ModularData, tol: f64) -> CheckResult {
    let r = md.rank();
    let d = md.global_dim();
    let zero = CyclotomicNumber::zero(1);
    let mut failures = Vec::new();
    let mut evidence = Vec::new();
    for i in 0..r {
        for k in 0..r {
            let v = (0..r).fold(CyclotomicNumber::zero(1), |acc, j| {
                &acc + &(md.s(i, j) * &md.s(k, j).conj())
            });
            let want = if i == k { d } else { &zero };
            if &v != want {
                failures.push(format!(
                    "(i,k) = ({i},{k}): (S S^H)_ik = {v}, expected {want}"
                ));
            } else {
                evidence.push(Evidence::identity(&v, want));
            }
        }
    }
    let sqrt_d = d.to_f64().abs().sqrt();
    let s: Vec<Vec<Complex64>> = (0..r)
        .map(|i| (0..r).map(|j| md.s(i, j).to_complex() / sqrt_d).collect())
        .collect();
    let mut residual = 0.0f64;
    for i in 0..r {
        for k in 0..r {
            let v: Complex64 = (0..r).map(|j| s[i][j] * s[k][j].conj()).sum();
            let want = if i == k { 1.0 } else { 0.0 };
            residual = residual.max((v - want).norm());
        }
    }
    let numeric_ok = residual < tol;
    let mut c = exact_check("unitarity", failures, evidence)
        .value("normalized_max_residual", residual)
        .value("normalized_within_tolerance", numeric_ok);
    if c.status == Status::Pass && !numeric_ok {
        c.status = Status::Fail;
        c.witnesses.push(format!(
            "exact identity holds but normalized residual {residual:e} exceeds {tol:e}"
        ));
    }
    c
}

/// The Gauss sum `Σ d_i^2 θ_i` and what it determines.
#[derive(Clone, Debug, Serialize)]
pub struct GaussSum {
    pub gauss: CyclotomicNumber,
    /// `gauss · conj(gauss) == D`, exactly.
    pub norm_is_global_dim: bool,
    /// `(S̃T)^3 == gauss · S̃^2`, exactly.
    pub st_relation: bool,
    /// Central charge modulo 8 in `[0, 8)`, from
    /// `sign(s_00) e^{πic/4} = gauss / √D`.
    pub c_mod_8: f64,
}

pub fn gauss_sum_and_charge(md: &ModularData) -> Result<GaussSum> {
    let r = md.rank();
    let thetas: Vec<CyclotomicNumber> = (0..r).map(|i| md.theta(i)).collect();
    let gauss = (0..r).fold(CyclotomicNumber::zero(1), |acc, i| {
        &acc + &(&(md.dim(i) * md.dim(i)) * &thetas[i])
    });
    if gauss.is_zero() {
        return Err(Error::DegenerateGauss);
    }
    let norm_is_global_dim = &(&gauss * &gauss.conj()) == md.global_dim();

    let st: Matrix = (0..r)
        .map(|i| (0..r).map(|j| md.s(i, j) * &thetas[j]).collect())
        .collect();
    let cube = matmul(&matmul(&st, &st), &st);
    let s2 = matmul(&md.s_tilde().to_vec(), &md.s_tilde().to_vec());
    let st_relation = (0..r).all(|i| (0..r).all(|j| cube[i][j] == &gauss * &s2[i][j]));

    let z = gauss.to_complex() * f64::from(md.sign_s00());
    let c = (4.0 * z.arg() / std::f64::consts::PI).rem_euclid(8.0);
    let c_mod_8 = if (c - 8.0).abs() < 1e-12 { 0.0 } else { c };
    Ok(GaussSum {
        gauss,
        norm_is_global_dim,
        st_relation,
        c_mod_8,
    })
}

/// [`gauss_sum_and_charge`] packaged as a check.
pub fn gauss_check(md: &ModularData) -> CheckResult {
    match gauss_sum_and_charge(md) {
        Err(e) => {
            CheckResult::new("gauss_sum", Status::Fail, Exactness::Exact).witness(e.to_string())
        }
        Ok(g) => {
            let mut failures = Vec::new();
            if !g.norm_is_global_dim {
                failures.push(format!("gauss * conj(gauss) != D for gauss = {}", g.gauss));
            }
            if !g.st_relation {
                failures.push("(S T)^3 != gauss * S^2".to_string());
            }
            let norm = &g.gauss * &g.gauss.conj();
            exact_check(
                "gauss_sum",
                failures,
                vec![Evidence::identity(&norm, md.global_dim())],
            )
            .value("gauss", g.gauss.to_string())
            .value("c_mod_8", g.c_mod_8)
        }
    }
}

pub fn dimension_bound_check(md: &ModularData) -> CheckResult {
    dimension_bound_check_tol(md, DEFAULT_TOLERANCE)
}

/// `sign(s_00) cos(πc/4) >= (3 - D)√D / 2`, numerically; equality is flagged.
pub fn dimension_bound_check_tol(md: &ModularData, tol: f64) -> CheckResult {
    let name = "dimension_bound";
    let g = match gauss_sum_and_charge(md) {
        Ok(g) => g,
        Err(e) => {
            return CheckResult::new(name, Status::Fail, Exactness::Numeric(tol))
                .witness(e.to_string())
        }
    };
    let d = md.global_dim().to_f64();
    let lhs = f64::from(md.sign_s00()) * (std::f64::consts::PI * g.c_mod_8 / 4.0).cos();
    let rhs = (3.0 - d) * d.sqrt() / 2.0;
    let equality = (lhs - rhs).abs() < tol;
    let status = if lhs >= rhs - tol {
        Status::Pass
    } else {
        Status::Fail
    };
    let mut c = CheckResult::new(name, status, Exactness::Numeric(tol))
        .value("lhs", lhs)
        .value("rhs", rhs)
        .value("global_dim", d)
        .value("equality", equality);
    if status == Status::Fail {
        c = c.witness(format!("sign*cos(pi c/4) = {lhs} < (3-D)sqrt(D)/2 = {rhs}"));
    }
    c
}

/// Each `d_i` divides `√D`. Since algebraic integers are integrally closed,
/// `√D / d_i` is integral exactly when its square `D / d_i^2` is, and the
/// latter lies in the cyclotomic field, so the test is exact.
pub fn moddivi_check(md: &ModularData) -> CheckResult {
    let mut failures = Vec::new();
    let mut evidence = Vec::new();
    for i in 0..md.rank() {
        let d2 = md.dim(i) * md.dim(i);
        match md.global_dim().checked_div(&d2) {
            Ok(q) if is_algebraic_integer(&q) => {
                evidence.push(Evidence::Root {
                    poly: q.minimal_polynomial().to_primitive_int(),
                    value: EvidenceValue::Cyclotomic(q),
                });
            }
            Ok(q) => failures.push(format!(
                "D/d_{i}^2 = {q} has minimal polynomial {} (not integral)",
                q.minimal_polynomial().to_primitive_int()
            )),
            Err(e) => failures.push(format!("d_{i}: {e}")),
        }
    }
    exact_check("moddivi", failures, evidence)
}
