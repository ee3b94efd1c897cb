use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::cyclotomic::CyclotomicNumber;
use super::linalg::IntMatrix;
use super::mp::{Mp, MpComplex};
use super::poly::{root_bound, IntPolynomial, SturmChain};
use super::rational::{rational_to_strings, BigRational};
use super::{char_poly, roots};
use crate::{Error, Result};

/// Width below which Perron roots are isolated.
fn target_width() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10u64).pow(12))
}

/// A real algebraic number certified by an isolating interval.
///
/// `annihilator` is a squarefree primitive integer polynomial with exactly
/// one real root in the closed interval `[lo, hi]`; that root is the value.
#[derive(Clone, Debug)]
pub struct AlgebraicReal {
    annihilator: IntPolynomial,
    lo: BigRational,
    hi: BigRational,
    exact: Option<CyclotomicNumber>,
    min_poly: Option<IntPolynomial>,
}

impl AlgebraicReal {
    pub fn from_rational(q: BigRational) -> Self {
        let p = IntPolynomial::new(vec![-q.numer().clone(), q.denom().clone()]);
        AlgebraicReal {
            annihilator: p.clone(),
            lo: q.clone(),
            hi: q.clone(),
            exact: Some(CyclotomicNumber::from_rational(q)),
            min_poly: Some(p),
        }
    }

    pub fn from_int(k: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(k)))
    }

    /// The largest real root of `p`, or `None` if `p` has no real roots.
    pub fn largest_root(p: &IntPolynomial) -> Option<Self> {
        let ann = p.squarefree_part();
        if ann.degree().unwrap_or(0) == 0 {
            return None;
        }
        let sturm = SturmChain::new(&ann);
        let bound = root_bound(&ann);
        let mut lo = -bound.clone();
        let mut hi = bound;
        if sturm.count(&lo, &hi) == 0 {
            return None;
        }
        let two = BigRational::from_integer(BigInt::from(2));
        while sturm.count(&lo, &hi) > 1 {
            let mid = (&lo + &hi) / &two;
            if sturm.count(&mid, &hi) >= 1 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let mut out = AlgebraicReal {
            annihilator: ann,
            lo,
            hi,
            exact: None,
            min_poly: None,
        };
        out.refine(&target_width());
        Some(out)
    }

    /// The unique root of `p` within `radius` of `approx`, if exactly one
    /// real root of the squarefree part lies there.
    pub fn isolate_near(p: &IntPolynomial, approx: f64, radius: f64) -> Option<Self> {
        let ann = p.squarefree_part();
        let sturm = SturmChain::new(&ann);
        let lo = BigRational::from_float(approx - radius)?;
        let hi = BigRational::from_float(approx + radius)?;
        if sturm.count(&lo, &hi) != 1 {
            return None;
        }
        let mut out = AlgebraicReal {
            annihilator: ann,
            lo,
            hi,
            exact: None,
            min_poly: None,
        };
        out.refine(&target_width());
        Some(out)
    }

    pub(crate) fn with_min_poly(mut self, p: IntPolynomial) -> Self {
        self.min_poly = Some(p);
        self
    }

    pub(crate) fn set_exact(&mut self, c: CyclotomicNumber) {
        self.exact = Some(c);
    }

    /// The real number `c`, isolated against its own minimal polynomial.
    /// `None` if `c` is not real.
    pub fn from_cyclotomic(c: &CyclotomicNumber) -> Option<Self> {
        if !c.is_real() {
            return None;
        }
        if let Some(q) = c.as_rational() {
            return Some(Self::from_rational(q));
        }
        let m = c.minimal_polynomial().to_primitive_int();
        let x = c.to_f64();
        let gap = c
            .galois_orbit()
            .iter()
            .map(|g| (g.to_complex() - num_complex::Complex64::new(x, 0.0)).norm())
            .filter(|d| *d > 1e-12)
            .fold(f64::INFINITY, f64::min);
        let radius = if gap.is_finite() { gap / 3.0 } else { 1.0 };
        let mut out = Self::isolate_near(&m, x, radius)?.with_min_poly(m);
        out.set_exact(c.clone());
        Some(out)
    }

    /// Attaches the natural cyclotomic lift of a rational or quadratic value;
    /// returns the lift when one exists.
    pub fn attach_lift(&mut self) -> Option<&CyclotomicNumber> {
        if self.exact.is_none() {
            self.exact = super::lift::lift_natural(self);
        }
        self.exact.as_ref()
    }

    /// Attaches `c` as the exact value after checking, exactly, that it is
    /// real, annihilated by the annihilator, and (numerically) inside the
    /// interval.
    pub fn attach_exact(&mut self, c: CyclotomicNumber) -> bool {
        if !c.is_real() {
            return false;
        }
        let mut acc = CyclotomicNumber::zero(c.conductor());
        for k in self.annihilator.coeffs().iter().rev() {
            acc = &(&acc * &c)
                + &CyclotomicNumber::from_rational(BigRational::from_integer(k.clone()));
        }
        let v = c.to_f64();
        let (lo, hi) = (
            self.lo.to_f64().unwrap_or(f64::NAN),
            self.hi.to_f64().unwrap_or(f64::NAN),
        );
        if !acc.is_zero() || v < lo - 1e-9 || v > hi + 1e-9 {
            return false;
        }
        self.exact = Some(c);
        true
    }

    /// Bisects against the annihilator until the interval is at most `width` wide.
    pub fn refine(&mut self, width: &BigRational) {
        let two = BigRational::from_integer(BigInt::from(2));
        let p = &self.annihilator;
        if self.lo == self.hi {
            return;
        }
        let s_hi = p.sign_at(&self.hi);
        if s_hi == 0 {
            self.lo = self.hi.clone();
            return;
        }
        while &self.hi - &self.lo > *width || p.sign_at(&self.lo) == 0 {
            let mid = (&self.lo + &self.hi) / &two;
            let s = p.sign_at(&mid);
            if s == 0 {
                self.lo = mid.clone();
                self.hi = mid;
                return;
            }
            if s == s_hi {
                self.hi = mid;
            } else {
                self.lo = mid;
            }
        }
    }

    pub fn annihilator(&self) -> &IntPolynomial {
        &self.annihilator
    }

    pub fn interval(&self) -> (&BigRational, &BigRational) {
        (&self.lo, &self.hi)
    }

    pub fn exact(&self) -> Option<&CyclotomicNumber> {
        self.exact.as_ref()
    }

    pub fn certified_min_poly(&self) -> Option<&IntPolynomial> {
        self.min_poly.as_ref()
    }

    /// The exact lift evaluated in double precision when there is one,
    /// otherwise the midpoint of the isolating interval.
    pub fn approx(&self) -> f64 {
        if let Some(e) = &self.exact {
            return e.to_f64();
        }
        ((&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2)))
            .to_f64()
            .unwrap_or(f64::NAN)
    }

    /// The value, when it is rational.
    pub fn rational_value(&self) -> Option<BigRational> {
        if self.lo == self.hi {
            return Some(self.lo.clone());
        }
        let m = self.min_poly.as_ref()?;
        if m.degree() == Some(1) {
            let c = m.coeffs();
            Some(BigRational::new(-c[0].clone(), c[1].clone()))
        } else {
            None
        }
    }

    pub fn is_rational_integer(&self) -> Option<bool> {
        if let Some(q) = self.rational_value() {
            return Some(q.is_integer());
        }
        self.min_poly.as_ref().map(|_| false)
    }

    /// `Some(true)` iff the value is an algebraic integer, decided from the
    /// minimal polynomial.
    pub fn is_algebraic_integer(&self) -> Option<bool> {
        self.min_poly.as_ref().map(|m| m.is_monic())
    }

    /// Exact equality when decidable: via cyclotomic lifts, or via equal
    /// minimal polynomials with a common isolated root.
    pub fn exact_eq(&self, other: &Self) -> Option<bool> {
        if let (Some(a), Some(b)) = (&self.exact, &other.exact) {
            return Some(a == b);
        }
        let (ma, mb) = (self.min_poly.as_ref()?, other.min_poly.as_ref()?);
        if ma != mb {
            return Some(false);
        }
        let lo = if self.lo > other.lo {
            &self.lo
        } else {
            &other.lo
        };
        let hi = if self.hi < other.hi {
            &self.hi
        } else {
            &other.hi
        };
        if lo > hi {
            return Some(false);
        }
        if lo == hi {
            return Some(ma.sign_at(lo) == 0);
        }
        let sturm = SturmChain::new(ma);
        let inside = sturm.count(lo, hi) + usize::from(ma.sign_at(lo) == 0);
        Some(inside == 1)
    }

    /// Multi-precision value: the exact lift when present, otherwise Newton
    /// refinement of the annihilator from the interval midpoint.
    pub fn to_mp(&self) -> Mp {
        if let Some(e) = &self.exact {
            return e.to_mp().re;
        }
        if self.lo == self.hi {
            return Mp::from_rational(&self.lo);
        }
        let coeffs: Vec<Mp> = self
            .annihilator
            .coeffs()
            .iter()
            .map(Mp::from_bigint)
            .collect();
        let dcoeffs: Vec<Mp> = self
            .annihilator
            .derivative()
            .coeffs()
            .iter()
            .map(Mp::from_bigint)
            .collect();
        let eval = |c: &[Mp], x: &Mp| c.iter().rev().fold(Mp::zero(), |acc, a| acc.mul(x).add(a));
        let mut x = Mp::from_rational(
            &((&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))),
        );
        for _ in 0..12 {
            let step = eval(&coeffs, &x).div(&eval(&dcoeffs, &x));
            x = x.sub(&step);
        }
        x
    }

    /// Tries to identify the minimal polynomial by conjugate clustering; the
    /// result divides the annihilator exactly and vanishes on the interval.
    pub fn certify_min_poly(&mut self) -> Option<&IntPolynomial> {
        if self.min_poly.is_none() {
            self.min_poly = find_min_poly(&self.annihilator, &self.lo, &self.hi);
        }
        self.min_poly.as_ref()
    }
}

impl fmt::Display for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.rational_value() {
            return write!(f, "{q}");
        }
        write!(f, "{:.12}", self.approx())?;
        if let Some(m) = &self.min_poly {
            write!(f, " (root of {m})")?;
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct AlgebraicRealRepr {
    approx: f64,
    interval: [[String; 2]; 2],
    annihilator: IntPolynomial,
    #[serde(skip_serializing_if = "Option::is_none")]
    min_poly: Option<IntPolynomial>,
    #[serde(skip_serializing_if = "Option::is_none")]
    exact: Option<CyclotomicNumber>,
}

impl Serialize for AlgebraicReal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        AlgebraicRealRepr {
            approx: self.approx(),
            interval: [rational_to_strings(&self.lo), rational_to_strings(&self.hi)],
            annihilator: self.annihilator.clone(),
            min_poly: self.min_poly.clone(),
            exact: self.exact.clone(),
        }
        .serialize(s)
    }
}

/// The Frobenius–Perron eigenvalue of a nonnegative integer matrix: the
/// largest real root of its characteristic polynomial, isolated to width
/// `1e-12`, with the minimal polynomial attached when factoring succeeds.
pub fn perron_root(m: &IntMatrix) -> Result<AlgebraicReal> {
    if m.iter().flatten().any(|&v| v < 0) {
        return Err(Error::Format(
            "Perron root needs a nonnegative matrix".into(),
        ));
    }
    let p = char_poly(m);
    let n = m.len();
    if p.x_adic_valuation() == n {
        return Err(Error::NilpotentInput);
    }
    let mut root = AlgebraicReal::largest_root(&p).ok_or_else(|| {
        Error::InternalConsistency("nonnegative matrix without a real eigenvalue".into())
    })?;
    root.certify_min_poly();
    Ok(root)
}

/// Conjugate clustering: numerically locate every root of the (monic)
/// annihilator, then test candidate conjugate sets containing the target
/// root in order of size until one yields an integer factor that divides the
/// annihilator exactly.
fn find_min_poly(ann: &IntPolynomial, lo: &BigRational, hi: &BigRational) -> Option<IntPolynomial> {
    let deg = ann.degree()?;
    if deg == 1 {
        return Some(ann.clone());
    }
    if lo == hi {
        return Some(IntPolynomial::new(vec![
            -lo.numer().clone(),
            lo.denom().clone(),
        ]));
    }
    if !ann.is_monic() {
        return None;
    }
    let mid = (lo + hi) / BigRational::from_integer(BigInt::from(2));
    let k = mid.round().to_integer();
    let kq = BigRational::from_integer(k.clone());
    if &kq >= lo && &kq <= hi && ann.eval_int(&k).is_zero() {
        return Some(IntPolynomial::linear(&k));
    }
    let roots = roots::complex_roots(ann);
    let mid_f = mid.to_f64()?;
    let target = roots
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| {
            let da = (a.to_c64() - num_complex::Complex64::new(mid_f, 0.0)).norm();
            let db = (b.to_c64() - num_complex::Complex64::new(mid_f, 0.0)).norm();
            da.partial_cmp(&db).unwrap()
        })
        .map(|(i, _)| i)?;
    let classes = conjugation_classes(&roots, target);
    if classes.len() > 20 {
        return None;
    }
    let mut masks: Vec<u32> = (0..(1u32 << classes.len())).collect();
    let size = |mask: u32| -> usize {
        (0..classes.len())
            .filter(|&c| mask & (1 << c) != 0)
            .map(|c| classes[c].len())
            .sum()
    };
    masks.sort_by_key(|&m| (size(m), m));
    let target_re = roots[target].re.to_f64();
    for mask in masks {
        let members: Vec<usize> = (0..classes.len())
            .filter(|&c| mask & (1 << c) != 0)
            .flat_map(|c| classes[c].iter().copied())
            .collect();
        let trace: f64 = target_re + members.iter().map(|&i| roots[i].re.to_f64()).sum::<f64>();
        if (trace - trace.round()).abs() > 1e-6 {
            continue;
        }
        let mut chosen = vec![roots[target].clone()];
        chosen.extend(members.iter().map(|&i| roots[i].clone()));
        if let Some(cand) = round_product(&chosen) {
            if ann.exact_div(&cand).is_none() {
                continue;
            }
            let (slo, shi) = (cand.sign_at(lo), cand.sign_at(hi));
            if slo == 0 || shi == 0 || slo != shi {
                return Some(cand);
            }
        }
    }
    None
}

/// Groups root indices (other than `target`) into real singletons and
/// complex-conjugate pairs.
fn conjugation_classes(roots: &[MpComplex], target: usize) -> Vec<Vec<usize>> {
    let mut used = vec![false; roots.len()];
    used[target] = true;
    let mut classes = Vec::new();
    for i in 0..roots.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        let zi = roots[i].to_c64();
        if zi.im.abs() < 1e-9 * (1.0 + zi.norm()) {
            classes.push(vec![i]);
            continue;
        }
        let partner = (0..roots.len()).filter(|&j| !used[j]).min_by(|&a, &b| {
            let da = (roots[a].to_c64() - zi.conj()).norm();
            let db = (roots[b].to_c64() - zi.conj()).norm();
            da.partial_cmp(&db).unwrap()
        });
        match partner {
            Some(j) => {
                used[j] = true;
                classes.push(vec![i, j]);
            }
            None => classes.push(vec![i]),
        }
    }
    classes
}

/// `prod (x - r)` rounded to integers, if every coefficient is within
/// `1e-25` (relative) of an integer with negligible imaginary part.
fn round_product(roots: &[MpComplex]) -> Option<IntPolynomial> {
    let mut coeffs = vec![MpComplex::from_real(Mp::from_i64(1))];
    for r in roots {
        let mut next = vec![MpComplex::zero(); coeffs.len() + 1];
        for (k, c) in coeffs.iter().enumerate() {
            next[k + 1] = next[k + 1].add(c);
            next[k] = next[k].sub(&c.mul(r));
        }
        coeffs = next;
    }
    let tol = Mp::from_f64(1e-25);
    let mut out = Vec::with_capacity(coeffs.len());
    for c in coeffs {
        let scale = Mp::from_i64(1).add(&c.re.abs());
        if !c.im.abs().lt(&tol.mul(&scale)) {
            return None;
        }
        let r = c.re.round();
        let diff = c.re.sub(&Mp::from_bigint(&r)).abs();
        if !diff.lt(&tol.mul(&scale)) {
            return None;
        }
        out.push(r);
    }
    let p = IntPolynomial::new(out);
    (p.leading().is_some_and(|l| l.is_positive())).then_some(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_ratio_perron_root() {
        let r = perron_root(&vec![vec![0, 1], vec![1, 1]]).unwrap();
        assert_eq!(
            r.certified_min_poly(),
            Some(&IntPolynomial::from_i64(&[-1, -1, 1]))
        );
        let (lo, hi) = r.interval();
        assert!(hi - lo <= target_width());
        assert!((r.approx() - 1.618033988749895).abs() < 1e-12);
    }

    #[test]
    fn integer_perron_roots() {
        let r = perron_root(&vec![vec![2]]).unwrap();
        assert_eq!(
            r.rational_value(),
            Some(BigRational::from_integer(2.into()))
        );
        let ones = vec![vec![1; 3]; 3];
        let r = perron_root(&ones).unwrap();
        assert_eq!(
            r.rational_value(),
            Some(BigRational::from_integer(3.into()))
        );
        assert_eq!(
            r.certified_min_poly(),
            Some(&IntPolynomial::from_i64(&[-3, 1]))
        );
    }

    #[test]
    fn nilpotent_is_rejected() {
        assert!(matches!(
            perron_root(&vec![vec![0, 1], vec![0, 0]]),
            Err(Error::NilpotentInput)
        ));
    }

    #[test]
    fn min_poly_of_reducible_annihilator() {
        // (x^2 - 2)(x^2 - x - 1)(x - 3): largest root is 3, but check √2 too
        let p = IntPolynomial::from_i64(&[-2, 0, 1]).mul(&IntPolynomial::from_i64(&[-1, -1, 1]));
        let mut r = AlgebraicReal::isolate_near(&p, 1.414, 0.01).unwrap();
        assert_eq!(
            r.certify_min_poly(),
            Some(&IntPolynomial::from_i64(&[-2, 0, 1]))
        );
        let mut g = AlgebraicReal::isolate_near(&p, 1.618, 0.01).unwrap();
        assert_eq!(
            g.certify_min_poly(),
            Some(&IntPolynomial::from_i64(&[-1, -1, 1]))
        );
    }

    #[test]
    fn exact_equality_from_min_polys() {
        let p = IntPolynomial::from_i64(&[-2, 0, 1]);
        let q = p.mul(&IntPolynomial::from_i64(&[-5, 1]));
        let mut a = AlgebraicReal::isolate_near(&p, 1.41, 0.1).unwrap();
        let mut b = AlgebraicReal::isolate_near(&q, 1.41, 0.1).unwrap();
        a.certify_min_poly();
        b.certify_min_poly();
        assert_eq!(a.exact_eq(&b), Some(true));
        let mut c = AlgebraicReal::isolate_near(&p, -1.41, 0.1).unwrap();
        c.certify_min_poly();
        assert_eq!(a.exact_eq(&c), Some(false));
    }
}
