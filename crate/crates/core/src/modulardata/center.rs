use serde::{Deserialize, Serialize};

use super::checks::exact_check;
use crate::fusionring::{fpdims, FusionRing};
use crate::numberfield::{is_algebraic_integer, BigRational, CyclotomicNumber};
use crate::report::{CheckResult, Evidence, EvidenceValue, Exactness, Status};
use crate::{Error, Result, DEFAULT_TOLERANCE};

/// A simple object of the center: its dimension and the multiplicity
/// `[X|_C : 1]` of the unit in its restriction.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CenterObject {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub dim: CyclotomicNumber,
    pub mult_unit: u64,
}

/// Dimensions and unit multiplicities of the simple objects of the center of
/// a category with Grothendieck ring `ring`.
#[derive(Clone, Debug, PartialEq)]
pub struct CenterDatum {
    pub name: String,
    pub ring: FusionRing,
    pub objects: Vec<CenterObject>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RingRef {
    Name(String),
    Inline(FusionRing),
}

#[derive(Serialize, Deserialize)]
struct CenterFile {
    name: String,
    ring: RingRef,
    objects: Vec<CenterObject>,
}

impl CenterDatum {
    pub fn new(
        name: impl Into<String>,
        ring: FusionRing,
        objects: Vec<CenterObject>,
    ) -> Result<Self> {
        if let Some(i) = objects.iter().position(|o| o.dim.is_zero()) {
            return Err(Error::Format(format!("center object {i} has dimension 0")));
        }
        if !objects.iter().any(|o| o.mult_unit > 0) {
            return Err(Error::Format("no center object contains the unit".into()));
        }
        Ok(CenterDatum {
            name: name.into(),
            ring,
            objects,
        })
    }

    /// Parses `{"name", "ring": name-or-inline, "objects": [{"dim", "mult_unit"}]}`,
    /// resolving ring names through `resolve`.
    pub fn from_json_with(s: &str, resolve: impl Fn(&str) -> Result<FusionRing>) -> Result<Self> {
        let f: CenterFile = serde_json::from_str(s)?;
        let ring = match f.ring {
            RingRef::Name(n) => resolve(&n)?,
            RingRef::Inline(r) => r,
        };
        Self::new(f.name, ring, f.objects)
    }

    /// Parses a center-datum file, resolving ring names against the catalog.
    pub fn from_json(s: &str) -> Result<Self> {
        Self::from_json_with(s, crate::catalog::ring)
    }

    pub fn to_json(&self) -> String {
        let f = CenterFile {
            name: self.name.clone(),
            ring: RingRef::Inline(self.ring.clone()),
            objects: self.objects.clone(),
        };
        serde_json::to_string_pretty(&f).expect("center datum serializes")
    }

    pub fn dims(&self) -> Vec<CyclotomicNumber> {
        self.objects.iter().map(|o| o.dim.clone()).collect()
    }
}

/// `Σ [X|_C : 1] dim X / dim C = 1` over center simples, with
/// `dim C = FPdim(C)` (the pseudo-unitary convention), plus integrality of
/// each `m_X = dim C / dim X` for the objects in the sum.
pub fn class_equation_check(cd: &CenterDatum) -> CheckResult {
    let name = "class_equation";
    let fp = match fpdims(&cd.ring) {
        Ok(fp) => fp,
        Err(e) => {
            return CheckResult::new(name, Status::Fail, Exactness::Exact).witness(e.to_string())
        }
    };
    let contributing: Vec<&CenterObject> = cd.objects.iter().filter(|o| o.mult_unit > 0).collect();
    let Some(dim_c) = fp.exact_ring_dim().cloned() else {
        let dc = fp.ring_dim.approx();
        let total: f64 = contributing
            .iter()
            .map(|o| o.mult_unit as f64 * o.dim.to_f64() / dc)
            .sum();
        let ok = (total - 1.0).abs() < DEFAULT_TOLERANCE;
        let status = if ok { Status::Pass } else { Status::Fail };
        return CheckResult::new(name, status, Exactness::Numeric(DEFAULT_TOLERANCE))
            .value("sum", total)
            .value("dim_convention", "FPdim (pseudo-unitary)")
            .witness("FPdim of the ring has no exact lift; m_X integrality not decided");
    };

    let mut failures = Vec::new();
    let mut evidence = Vec::new();
    let mut terms = Vec::new();
    let mut sum = CyclotomicNumber::zero(1);
    for o in &contributing {
        let term = match o.dim.checked_div(&dim_c) {
            Ok(t) => t.scale(&BigRational::from_integer(o.mult_unit.into())),
            Err(e) => {
                failures.push(e.to_string());
                continue;
            }
        };
        terms.push(term.to_string());
        sum = &sum + &term;
        match dim_c.checked_div(&o.dim) {
            Ok(m) if is_algebraic_integer(&m) => evidence.push(Evidence::Root {
                poly: m.minimal_polynomial().to_primitive_int(),
                value: EvidenceValue::Cyclotomic(m),
            }),
            Ok(m) => failures.push(format!(
                "m_X = dim C / {} = {m} is not an algebraic integer",
                o.label.as_deref().unwrap_or("X")
            )),
            Err(e) => failures.push(e.to_string()),
        }
    }
    if !sum.is_one() {
        failures.push(format!("sum of [X:1] dim X / dim C is {sum}, not 1"));
    } else {
        evidence.push(Evidence::identity(&sum, &CyclotomicNumber::one()));
    }
    exact_check(name, failures, evidence)
        .value("dim_C", dim_c.to_string())
        .value("terms", terms)
        .value("dim_convention", "FPdim (pseudo-unitary)")
}

/// `Σ [X|_C : 1]^2` equals the number of simple objects of `C`.
pub fn numobj_check(cd: &CenterDatum) -> CheckResult {
    let total: u64 = cd.objects.iter().map(|o| o.mult_unit * o.mult_unit).sum();
    let rank = cd.ring.rank() as u64;
    let failures = if total == rank {
        Vec::new()
    } else {
        vec![format!(
            "sum of squared multiplicities is {total}, rank is {rank}"
        )]
    };
    exact_check("numobj", failures, Vec::new())
        .value("sum_of_squares", total)
        .value("rank", rank)
}

/// `Σ dim(X)^2` over the center equals `FPdim(ring)^2`.
pub fn fpdim_square_check(ring: &FusionRing, center_dims: &[CyclotomicNumber]) -> CheckResult {
    let name = "fpdim_square";
    let fp = match fpdims(ring) {
        Ok(fp) => fp,
        Err(e) => {
            return CheckResult::new(name, Status::Fail, Exactness::Exact).witness(e.to_string())
        }
    };
    let total = center_dims
        .iter()
        .fold(CyclotomicNumber::zero(1), |acc, d| &acc + &(d * d));
    match fp.exact_ring_dim() {
        Some(delta) => {
            let square = delta * delta;
            let failures = if total == square {
                Vec::new()
            } else {
                vec![format!(
                    "sum of squared center dims {total} != FPdim^2 = {square}"
                )]
            };
            exact_check(name, failures, vec![Evidence::identity(&total, &square)])
                .value("center_dim", total.to_string())
                .value("fpdim_squared", square.to_string())
        }
        None => {
            let (t, s) = (total.to_f64(), fp.ring_dim.approx().powi(2));
            let status = if (t - s).abs() < DEFAULT_TOLERANCE {
                Status::Pass
            } else {
                Status::Fail
            };
            CheckResult::new(name, status, Exactness::Numeric(DEFAULT_TOLERANCE))
                .value("center_dim", t)
                .value("fpdim_squared", s)
        }
    }
}
