use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::mp::{Mp, MpComplex};
use super::poly::{IntPolynomial, RatPoly};
use super::rational::{parse_rational, rational_to_strings, BigRational};
use crate::{Error, Result};

pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

fn mobius(n: u64) -> i32 {
    let mut m = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    sign
}

fn poly_mul_i64(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division by a monic polynomial.
fn poly_div_monic_i64(a: &[i64], b: &[i64]) -> Vec<i64> {
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    let mut q = vec![0i64; a.len() - db];
    for k in (0..q.len()).rev() {
        let c = rem[k + db];
        q[k] = c;
        for (j, y) in b.iter().enumerate() {
            rem[k + j] -= c * y;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

fn cyclotomic_coeffs(n: u64) -> Vec<i64> {
    // Φ_n = Π_{d|n} (x^d - 1)^{μ(n/d)}
    let mut num = vec![1i64];
    let mut den = vec![1i64];
    for d in 1..=n {
        if n % d != 0 {
            continue;
        }
        let mut f = vec![0i64; d as usize + 1];
        f[0] = -1;
        f[d as usize] = 1;
        match mobius(n / d) {
            1 => num = poly_mul_i64(&num, &f),
            -1 => den = poly_mul_i64(&den, &f),
            _ => {}
        }
    }
    poly_div_monic_i64(&num, &den)
}

/// The `n`-th cyclotomic polynomial `Φ_n`.
pub fn cyclotomic_polynomial(n: u64) -> IntPolynomial {
    IntPolynomial::from_i64(&cyclotomic_coeffs(n))
}

/// Reduction table for `Q(ζ_n)`: row `e` holds the coordinates of `ζ_n^e`
/// in the power basis `1, ζ, ..., ζ^{φ(n)-1}`, for `0 <= e < n`.
struct PowerTable {
    n: u64,
    phi: usize,
    rows: Vec<Vec<i64>>,
}

impl PowerTable {
    fn new(n: u64) -> Self {
        let phi_poly = cyclotomic_coeffs(n);
        let phi = phi_poly.len() - 1;
        let mut rows = Vec::with_capacity(n as usize);
        let mut cur = vec![0i64; phi];
        cur[0] = 1;
        for _ in 0..n {
            rows.push(cur.clone());
            // multiply by x and reduce by the monic Φ_n
            let top = cur[phi - 1];
            let mut next = vec![0i64; phi];
            next[1..phi].copy_from_slice(&cur[..(phi - 1)]);
            if top != 0 {
                for (k, slot) in next.iter_mut().enumerate() {
                    *slot -= top * phi_poly[k];
                }
            }
            cur = next;
        }
        PowerTable { n, phi, rows }
    }

    /// Accumulates `sum_e c[e] ζ^e` (exponents taken mod n) into basis coordinates.
    fn reduce(&self, by_exponent: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.phi];
        for (e, c) in by_exponent.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &self.rows[e % self.n as usize];
            for (k, r) in row.iter().enumerate() {
                if *r != 0 {
                    out[k] += c * BigInt::from(*r);
                }
            }
        }
        out
    }
}

/// An exact element of the cyclotomic field `Q(ζ_n)`.
///
/// Stored in the power basis `{ζ_n^k : 0 <= k < φ(n)}` modulo `Φ_n`, as a
/// vector of integer numerators over one positive common denominator. The
/// representation is canonical at a fixed conductor.
#[derive(Clone, Debug)]
pub struct CyclotomicNumber {
    conductor: u64,
    num: Vec<BigInt>,
    den: BigInt,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CycloOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Binary arithmetic in the compositum `Q(ζ_lcm(n_a, n_b))`.
pub fn cyclo_arith(
    a: &CyclotomicNumber,
    b: &CyclotomicNumber,
    op: CycloOp,
) -> Result<CyclotomicNumber> {
    Ok(match op {
        CycloOp::Add => a + b,
        CycloOp::Sub => a - b,
        CycloOp::Mul => a * b,
        CycloOp::Div => a.checked_div(b)?,
    })
}

/// One conjugate per `m` in `(Z/n)^×`, in increasing order of `m`; the first
/// entry is `a` itself and the last (for `n > 2`) is the complex conjugate.
pub fn galois_conjugates(a: &CyclotomicNumber) -> Vec<CyclotomicNumber> {
    units_mod(a.conductor)
        .into_iter()
        .map(|m| a.galois(m))
        .collect()
}

/// Tests whether `a` is an algebraic integer, by expanding the product of
/// `x - g(a)` over its distinct conjugates and checking the coefficients.
pub fn is_algebraic_integer(a: &CyclotomicNumber) -> bool {
    a.minimal_polynomial()
        .coeffs()
        .iter()
        .all(|c| c.is_integer())
}

/// The units of `Z/n` (for `n = 1`, the single class `0`).
pub(crate) fn units_mod(n: u64) -> Vec<u64> {
    if n == 1 {
        return vec![1];
    }
    (1..n).filter(|m| m.gcd(&n) == 1).collect()
}

impl CyclotomicNumber {
    fn from_parts(conductor: u64, num: Vec<BigInt>, den: BigInt) -> Self {
        let mut out = CyclotomicNumber {
            conductor,
            num,
            den,
        };
        out.normalize();
        out
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -self.den.clone();
            for c in self.num.iter_mut() {
                *c = -c.clone();
            }
        }
        let g = self.num.iter().fold(self.den.clone(), |g, c| g.gcd(c));
        if self.num.iter().all(|c| c.is_zero()) {
            self.den = BigInt::one();
            return;
        }
        if !g.is_one() {
            for c in self.num.iter_mut() {
                *c = &*c / &g;
            }
            self.den = &self.den / &g;
        }
    }

    pub fn zero(conductor: u64) -> Self {
        let phi = euler_phi(conductor) as usize;
        CyclotomicNumber {
            conductor,
            num: vec![BigInt::zero(); phi],
            den: BigInt::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_int(k: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(k)))
    }

    pub fn from_rational(q: BigRational) -> Self {
        Self::from_parts(1, vec![q.numer().clone()], q.denom().clone())
    }

    /// `ζ_n^k` for any integer `k`.
    pub fn zeta_pow(n: u64, k: i64) -> Self {
        assert!(n >= 1, "conductor must be positive");
        let e = k.rem_euclid(n as i64) as usize;
        let table = PowerTable::new(n);
        let mut by_exp = vec![BigInt::zero(); n as usize];
        by_exp[e] = BigInt::one();
        Self::from_parts(n, table.reduce(&by_exp), BigInt::one())
    }

    pub fn zeta(n: u64) -> Self {
        Self::zeta_pow(n, 1)
    }

    /// Builds `sum_k coeffs[k] ζ_n^k` for arbitrary exponents (not necessarily reduced).
    pub fn from_exponent_coeffs(n: u64, coeffs: &[BigRational]) -> Self {
        let l = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut by_exp = vec![BigInt::zero(); n as usize];
        for (k, c) in coeffs.iter().enumerate() {
            by_exp[k % n as usize] += (c * BigRational::from_integer(l.clone())).to_integer();
        }
        let table = PowerTable::new(n);
        Self::from_parts(n, table.reduce(&by_exp), l)
    }

    /// Construct from basis coordinates; the length must be `φ(n)`.
    pub fn from_coeffs(conductor: u64, coeffs: Vec<BigRational>) -> Result<Self> {
        if conductor == 0 {
            return Err(Error::Format("conductor must be positive".into()));
        }
        let phi = euler_phi(conductor) as usize;
        if coeffs.len() != phi {
            return Err(Error::Format(format!(
                "conductor {conductor} needs {phi} coefficients, got {}",
                coeffs.len()
            )));
        }
        let l = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(l.clone())).to_integer())
            .collect();
        Ok(Self::from_parts(conductor, num, l))
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Basis coordinates as rationals.
    pub fn coeffs(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|q| q.is_one())
    }

    /// The rational value, when the element lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.num.iter().skip(1).all(|c| c.is_zero()) {
            Some(BigRational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    pub fn is_rational_integer(&self) -> bool {
        self.as_rational().is_some_and(|q| q.is_integer())
    }

    /// Re-express in `Q(ζ_target)`; `conductor` must divide `target`.
    pub fn embed(&self, target: u64) -> Self {
        assert!(
            target % self.conductor == 0,
            "cannot embed conductor {} into {}",
            self.conductor,
            target
        );
        if target == self.conductor {
            return self.clone();
        }
        let step = (target / self.conductor) as usize;
        let mut by_exp = vec![BigInt::zero(); target as usize];
        for (k, c) in self.num.iter().enumerate() {
            by_exp[(k * step) % target as usize] += c;
        }
        let table = PowerTable::new(target);
        Self::from_parts(target, table.reduce(&by_exp), self.den.clone())
    }

    fn lift_pair(a: &Self, b: &Self) -> (Self, Self) {
        let n = a.conductor.lcm(&b.conductor);
        (a.embed(n), b.embed(n))
    }

    /// The Galois automorphism `σ_m: ζ_n ↦ ζ_n^m`; `m` must be a unit mod `n`.
    pub fn galois(&self, m: u64) -> Self {
        let n = self.conductor;
        if n <= 2 {
            return self.clone();
        }
        debug_assert_eq!(m.gcd(&n), 1);
        let mut by_exp = vec![BigInt::zero(); n as usize];
        for (k, c) in self.num.iter().enumerate() {
            by_exp[((k as u64 * m) % n) as usize] += c;
        }
        let table = PowerTable::new(n);
        Self::from_parts(n, table.reduce(&by_exp), self.den.clone())
    }

    pub fn conj(&self) -> Self {
        if self.conductor <= 2 {
            self.clone()
        } else {
            self.galois(self.conductor - 1)
        }
    }

    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    /// Distinct Galois conjugates, in order of first appearance.
    pub fn galois_orbit(&self) -> Vec<Self> {
        let mut out: Vec<Self> = Vec::new();
        for c in galois_conjugates(self) {
            if !out.contains(&c) {
                out.push(c);
            }
        }
        out
    }

    /// Minimal polynomial over `Q`, monic, as the product of `x - g(a)` over
    /// the distinct conjugates.
    pub fn minimal_polynomial(&self) -> RatPoly {
        let orbit = self.galois_orbit();
        let n = self.conductor;
        // polynomial with cyclotomic coefficients, lowest degree first
        let mut poly: Vec<CyclotomicNumber> = vec![CyclotomicNumber::one().embed(n)];
        for root in &orbit {
            let mut next = vec![CyclotomicNumber::zero(n); poly.len() + 1];
            for (k, c) in poly.iter().enumerate() {
                next[k + 1] = &next[k + 1] + c;
                next[k] = &next[k] - &(c * root);
            }
            poly = next;
        }
        RatPoly::new(
            poly.iter()
                .map(|c| {
                    c.as_rational()
                        .expect("symmetric functions of a Galois orbit are rational")
                })
                .collect(),
        )
    }

    /// Field norm `N(a) = prod_m σ_m(a)` over `Q(ζ_n)/Q`.
    pub fn norm(&self) -> BigRational {
        let mut acc = CyclotomicNumber::one().embed(self.conductor);
        for m in units_mod(self.conductor) {
            acc = &acc * &self.galois(m);
        }
        acc.as_rational().expect("norm is rational")
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let units = units_mod(self.conductor);
        let mut cofactor = CyclotomicNumber::one().embed(self.conductor);
        for &m in units.iter().skip(1) {
            cofactor = &cofactor * &self.galois(m);
        }
        let norm = (self * &cofactor).as_rational().expect("norm is rational");
        Ok(cofactor.scale(&norm.recip()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inverse()?)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Self::from_parts(
            self.conductor,
            self.num.iter().map(|c| c * q.numer()).collect(),
            &self.den * q.denom(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = CyclotomicNumber::one().embed(self.conductor);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Smallest conductor `d | n` with the element in `Q(ζ_d)`, re-expressed there.
    pub fn minimize_conductor(&self) -> Self {
        let n = self.conductor;
        let units = units_mod(n);
        let mut divisors: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
        divisors.sort_unstable();
        for d in divisors {
            if d == n {
                break;
            }
            // fixed by Gal(Q(ζ_n)/Q(ζ_d)) = {m : m ≡ 1 mod d}
            let fixed = units
                .iter()
                .filter(|&&m| m % d == 1 % d)
                .all(|&m| self.galois(m) == *self);
            if !fixed {
                continue;
            }
            if let Some(x) = self.express_in(d) {
                return x;
            }
        }
        self.clone()
    }

    fn express_in(&self, d: u64) -> Option<Self> {
        let phi_d = euler_phi(d) as usize;
        let phi_n = self.num.len();
        // columns: ζ_d^k embedded in Q(ζ_n)
        let cols: Vec<Vec<BigRational>> = (0..phi_d)
            .map(|k| {
                CyclotomicNumber::zeta_pow(d, k as i64)
                    .embed(self.conductor)
                    .coeffs()
            })
            .collect();
        let matrix: Vec<Vec<BigRational>> = (0..phi_n)
            .map(|r| (0..phi_d).map(|c| cols[c][r].clone()).collect())
            .collect();
        let rhs = self.coeffs();
        let sol = super::linalg::solve_rational(&matrix, &rhs)?;
        let out = CyclotomicNumber::from_coeffs(d, sol).ok()?;
        (out.embed(self.conductor) == *self).then_some(out)
    }

    /// Numeric value under the embedding `ζ_n ↦ exp(2πi/n)`.
    pub fn to_complex(&self) -> Complex64 {
        let n = self.conductor as f64;
        let den = self.den.to_f64().unwrap_or(f64::NAN);
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let angle = 2.0 * std::f64::consts::PI * k as f64 / n;
            acc += Complex64::from_polar(1.0, angle) * c.to_f64().unwrap_or(f64::NAN);
        }
        acc / den
    }

    /// Real part of [`to_complex`](Self::to_complex).
    pub fn to_f64(&self) -> f64 {
        self.to_complex().re
    }

    /// Multi-precision value of the same embedding.
    pub fn to_mp(&self) -> MpComplex {
        let zeta = MpComplex::root_of_unity(self.conductor, 1);
        let mut power = MpComplex::from_real(Mp::from_i64(1));
        let mut acc = MpComplex::zero();
        for c in &self.num {
            if !c.is_zero() {
                acc = acc.add(&power.scale(&Mp::from_bigint(c)));
            }
            power = power.mul(&zeta);
        }
        acc.scale(&Mp::from_bigint(&self.den).recip())
    }
}

/// Equality of values: operands at different conductors are compared in
/// the compositum.
impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.den == other.den && self.num == other.num;
        }
        let n = self.conductor.lcm(&other.conductor);
        let (a, b) = (self.embed(n), other.embed(n));
        a.den == b.den && a.num == b.num
    }
}

impl Eq for CyclotomicNumber {}

impl Add for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn add(self, rhs: Self) -> CyclotomicNumber {
        let (a, b) = CyclotomicNumber::lift_pair(self, rhs);
        let num = a
            .num
            .iter()
            .zip(&b.num)
            .map(|(x, y)| x * &b.den + y * &a.den)
            .collect();
        CyclotomicNumber::from_parts(a.conductor, num, &a.den * &b.den)
    }
}

impl Sub for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn sub(self, rhs: Self) -> CyclotomicNumber {
        self + &(-rhs)
    }
}

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        CyclotomicNumber {
            conductor: self.conductor,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Mul for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn mul(self, rhs: Self) -> CyclotomicNumber {
        let (a, b) = CyclotomicNumber::lift_pair(self, rhs);
        let n = a.conductor as usize;
        let mut by_exp = vec![BigInt::zero(); n.max(1)];
        for (i, x) in a.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.num.iter().enumerate() {
                if !y.is_zero() {
                    by_exp[(i + j) % n] += x * y;
                }
            }
        }
        let table = PowerTable::new(a.conductor);
        CyclotomicNumber::from_parts(a.conductor, table.reduce(&by_exp), &a.den * &b.den)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $m(self, rhs: Self) -> CyclotomicNumber {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        -&self
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{q}");
        }
        let n = self.conductor;
        let mut first = true;
        for (k, c) in self.coeffs().into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let term = match k {
                0 => String::new(),
                1 => format!("z{n}"),
                _ => format!("z{n}^{k}"),
            };
            if k == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{term}")?;
            } else {
                write!(f, "{mag}*{term}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct CycloRepr {
    conductor: u64,
    coeffs: Vec<[String; 2]>,
}

impl Serialize for CyclotomicNumber {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CycloRepr {
            conductor: self.conductor,
            coeffs: self.coeffs().iter().map(rational_to_strings).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CyclotomicNumber {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = CycloRepr::deserialize(d)?;
        let coeffs = repr
            .coeffs
            .iter()
            .map(|[n, d]| parse_rational(n, d))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        CyclotomicNumber::from_coeffs(repr.conductor, coeffs).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numberfield::rat;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), IntPolynomial::from_i64(&[-1, 1]));
        assert_eq!(
            cyclotomic_polynomial(4),
            IntPolynomial::from_i64(&[1, 0, 1])
        );
        assert_eq!(
            cyclotomic_polynomial(5),
            IntPolynomial::from_i64(&[1, 1, 1, 1, 1])
        );
        assert_eq!(
            cyclotomic_polynomial(12),
            IntPolynomial::from_i64(&[1, 0, -1, 0, 1])
        );
        assert_eq!(euler_phi(40), 16);
    }

    #[test]
    fn i_squared() {
        let i = CyclotomicNumber::zeta(4);
        let sq = &i * &i;
        assert_eq!(sq.as_rational(), Some(rat(-1, 1)));
        assert_eq!(sq.conductor(), 4);
    }

    #[test]
    fn primitive_fifth_roots_sum() {
        let z = |k| CyclotomicNumber::zeta_pow(5, k);
        let a = &z(1) + &z(4);
        let b = &z(2) + &z(3);
        assert_eq!((&a + &b).as_rational(), Some(rat(-1, 1)));
    }

    #[test]
    fn self_division() {
        let a = &CyclotomicNumber::one() + &CyclotomicNumber::zeta(3);
        assert!(a.checked_div(&a).unwrap().is_one());
        assert!(matches!(
            a.checked_div(&CyclotomicNumber::zero(3)),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn conjugates_of_zeta3() {
        let c = galois_conjugates(&CyclotomicNumber::zeta(3));
        assert_eq!(
            c,
            vec![
                CyclotomicNumber::zeta_pow(3, 1),
                CyclotomicNumber::zeta_pow(3, 2)
            ]
        );
        assert_eq!(galois_conjugates(&CyclotomicNumber::from_int(7)).len(), 1);
    }

    #[test]
    fn golden_ratio_conjugate_orbit() {
        let z = |k| CyclotomicNumber::zeta_pow(5, k);
        let a = &z(1) + &z(4);
        let orbit = a.galois_orbit();
        assert_eq!(orbit.len(), 2);
        assert!(orbit.contains(&(&z(2) + &z(3))));
        let mut vals: Vec<f64> = orbit.iter().map(|x| x.to_f64()).collect();
        vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let s5 = 5f64.sqrt();
        assert!((vals[0] - (-1.0 - s5) / 2.0).abs() < 1e-12);
        assert!((vals[1] - (-1.0 + s5) / 2.0).abs() < 1e-12);
    }

    #[test]
    fn integrality() {
        let z = |k| CyclotomicNumber::zeta_pow(5, k);
        let phi = &(&CyclotomicNumber::one() + &z(1)) + &z(4);
        assert!((phi.to_f64() - 1.618033988749895).abs() < 1e-12);
        assert_eq!(
            phi.minimal_polynomial(),
            IntPolynomial::from_i64(&[-1, -1, 1]).to_rat()
        );
        assert!(is_algebraic_integer(&phi));
        assert!(!is_algebraic_integer(&CyclotomicNumber::from_rational(
            rat(1, 2)
        )));
        // (3 - √5)/2 = 1 - (ζ + ζ^4)
        let x = &CyclotomicNumber::one() - &(&z(1) + &z(4));
        assert_eq!(
            x.minimal_polynomial(),
            IntPolynomial::from_i64(&[1, -3, 1]).to_rat()
        );
        assert!(is_algebraic_integer(&x));
    }

    #[test]
    fn minimize_conductor_recovers_rational_and_sqrt() {
        let i = CyclotomicNumber::zeta(4).embed(12);
        let m = i.minimize_conductor();
        assert_eq!(m.conductor(), 4);
        assert_eq!(m, CyclotomicNumber::zeta(4));
        let r = CyclotomicNumber::from_int(3).embed(20);
        assert_eq!(r.minimize_conductor().conductor(), 1);
    }

    #[test]
    fn json_shape() {
        let z = CyclotomicNumber::zeta(4).scale(&rat(3, 2));
        let s = serde_json::to_string(&z).unwrap();
        assert_eq!(s, r#"{"conductor":4,"coeffs":[["0","1"],["3","2"]]}"#);
        let back: CyclotomicNumber = serde_json::from_str(&s).unwrap();
        assert_eq!(back, z);
        assert!(serde_json::from_str::<CyclotomicNumber>(
            r#"{"conductor":4,"coeffs":[["1","1"]]}"#
        )
        .is_err());
    }
}
