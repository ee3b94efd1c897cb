//! Check results and reports shared by the modular-data and obstruction
//! layers.
//!
//! Every [`CheckResult`] records whether its verdict is exact or numeric.
//! Exact verdicts carry [`Evidence`]: the identities and polynomial relations
//! they rest on, which [`CheckResult::reverify_mp`] can recompute in 320-bit
//! floating point as an independent sanity check.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::numberfield::mp::{Mp, MpComplex};
use crate::numberfield::{AlgebraicReal, CyclotomicNumber, IntPolynomial};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Inapplicable,
    Indeterminate,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Inapplicable => "inapplicable",
            Status::Indeterminate => "indeterminate",
            Status::Fail => "fail",
        })
    }
}

/// How a verdict was reached.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Exactness {
    Exact,
    Numeric(f64),
}

impl fmt::Display for Exactness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exactness::Exact => f.write_str("exact"),
            Exactness::Numeric(tol) => write!(f, "numeric@{tol:e}"),
        }
    }
}

impl Serialize for Exactness {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A value entering an exact claim.
#[derive(Clone, Debug)]
pub enum EvidenceValue {
    Cyclotomic(CyclotomicNumber),
    Algebraic(AlgebraicReal),
}

impl EvidenceValue {
    fn to_mp(&self) -> MpComplex {
        match self {
            EvidenceValue::Cyclotomic(c) => c.to_mp(),
            EvidenceValue::Algebraic(a) => MpComplex::from_real(a.to_mp()),
        }
    }
}

/// An exact fact a check relied on.
#[derive(Clone, Debug)]
pub enum Evidence {
    /// `lhs == rhs` in the cyclotomic field.
    Identity {
        lhs: CyclotomicNumber,
        rhs: CyclotomicNumber,
    },
    /// `value` is a root of `poly`.
    Root {
        value: EvidenceValue,
        poly: IntPolynomial,
    },
}

impl Evidence {
    pub fn identity(lhs: &CyclotomicNumber, rhs: &CyclotomicNumber) -> Self {
        Evidence::Identity {
            lhs: lhs.clone(),
            rhs: rhs.clone(),
        }
    }

    /// Recomputes the claim in multi-precision arithmetic; true when the
    /// residual is below `1e-30` relative to the magnitudes involved.
    pub fn reverify_mp(&self) -> bool {
        let tol = Mp::from_f64(1e-30);
        match self {
            Evidence::Identity { lhs, rhs } => {
                let (a, b) = (lhs.to_mp(), rhs.to_mp());
                let scale = Mp::from_i64(1).add(&a.abs()).add(&b.abs());
                a.sub(&b).abs().lt(&tol.mul(&scale))
            }
            Evidence::Root { value, poly } => {
                let x = value.to_mp();
                let mut acc = MpComplex::zero();
                let mut scale = Mp::zero();
                let xabs = Mp::from_i64(1).add(&x.abs());
                for c in poly.coeffs().iter().rev() {
                    let cm = Mp::from_bigint(c);
                    acc = acc.mul(&x).add(&MpComplex::from_real(cm.clone()));
                    scale = scale.mul(&xabs).add(&cm.abs());
                }
                acc.abs().lt(&tol.mul(&Mp::from_i64(1).add(&scale)))
            }
        }
    }
}

/// Outcome of one named check.
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub status: Status,
    pub exactness: Exactness,
    pub witnesses: Vec<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub values: BTreeMap<String, serde_json::Value>,
    #[serde(skip)]
    pub evidence: Vec<Evidence>,
}

impl CheckResult {
    pub fn new(check: impl Into<String>, status: Status, exactness: Exactness) -> Self {
        CheckResult {
            check: check.into(),
            status,
            exactness,
            witnesses: Vec::new(),
            values: BTreeMap::new(),
            evidence: Vec::new(),
        }
    }

    pub fn inapplicable(check: impl Into<String>, why: impl Into<String>) -> Self {
        Self::new(check, Status::Inapplicable, Exactness::Exact).witness(why)
    }

    pub fn witness(mut self, w: impl Into<String>) -> Self {
        self.witnesses.push(w.into());
        self
    }

    pub fn value(mut self, key: &str, v: impl Serialize) -> Self {
        self.values.insert(
            key.to_string(),
            serde_json::to_value(v).unwrap_or(serde_json::Value::Null),
        );
        self
    }

    pub fn with_evidence(mut self, e: Vec<Evidence>) -> Self {
        self.evidence.extend(e);
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// True unless this is an exact pass whose evidence fails to re-verify.
    pub fn reverify_mp(&self) -> bool {
        if !(self.status == Status::Pass && self.exactness == Exactness::Exact) {
            return true;
        }
        self.evidence.iter().all(Evidence::reverify_mp)
    }
}

/// A named collection of checks with an aggregate status.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub subject: String,
    pub aggregate: Status,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn new(subject: impl Into<String>, checks: Vec<CheckResult>) -> Self {
        let aggregate = aggregate_status(&checks);
        Report {
            schema: SCHEMA_VERSION,
            subject: subject.into(),
            aggregate,
            checks,
        }
    }

    pub fn get(&self, check: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.check == check)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}: {}\n", self.subject, self.aggregate);
        for c in &self.checks {
            out.push_str(&format!("  [{}] {} ({})\n", c.status, c.check, c.exactness));
            for (k, v) in &c.values {
                out.push_str(&format!("      {k} = {v}\n"));
            }
            for w in &c.witnesses {
                out.push_str(&format!("      - {w}\n"));
            }
        }
        out
    }
}

/// `fail` dominates `indeterminate`, which dominates everything else.
pub fn aggregate_status(checks: &[CheckResult]) -> Status {
    if checks.iter().any(|c| c.status == Status::Fail) {
        Status::Fail
    } else if checks.iter().any(|c| c.status == Status::Indeterminate) {
        Status::Indeterminate
    } else {
        Status::Pass
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aggregate_prefers_fail() {
        let a = CheckResult::new("a", Status::Pass, Exactness::Exact);
        let b = CheckResult::new("b", Status::Indeterminate, Exactness::Numeric(1e-9));
        let c = CheckResult::new("c", Status::Fail, Exactness::Exact);
        assert_eq!(
            aggregate_status(&[a.clone(), b.clone()]),
            Status::Indeterminate
        );
        assert_eq!(aggregate_status(&[a, b, c]), Status::Fail);
    }

    #[test]
    fn exactness_labels() {
        assert_eq!(Exactness::Exact.to_string(), "exact");
        assert_eq!(Exactness::Numeric(1e-9).to_string(), "numeric@1e-9");
    }

    #[test]
    fn bogus_identity_fails_reverification() {
        let one = CyclotomicNumber::one();
        let two = CyclotomicNumber::from_int(2);
        assert!(Evidence::identity(&one, &one).reverify_mp());
        assert!(!Evidence::identity(&one, &two).reverify_mp());
    }
}
