//! Multi-precision real and complex floats (320-bit mantissa) used for root
//! refinement and for re-checking exact results numerically.

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_bigint::BigInt;
use num_complex::Complex64;

use super::rational::BigRational;

/// Working precision in bits.
pub const PRECISION: usize = 320;
const RM: RoundingMode = RoundingMode::ToEven;

fn consts() -> Consts {
    Consts::new().expect("astro-float constant cache")
}

#[derive(Clone, Debug)]
pub struct Mp(BigFloat);

impl Mp {
    pub fn zero() -> Self {
        Mp(BigFloat::from_f64(0.0, PRECISION))
    }

    pub fn from_f64(x: f64) -> Self {
        Mp(BigFloat::from_f64(x, PRECISION))
    }

    pub fn from_i64(x: i64) -> Self {
        Mp(BigFloat::from_i64(x, PRECISION))
    }

    pub fn from_bigint(x: &BigInt) -> Self {
        if let Ok(small) = i64::try_from(x) {
            return Self::from_i64(small);
        }
        let mut cc = consts();
        Mp(BigFloat::parse(
            &x.to_string(),
            Radix::Dec,
            PRECISION,
            RM,
            &mut cc,
        ))
    }

    pub fn from_rational(q: &BigRational) -> Self {
        Self::from_bigint(q.numer()).div(&Self::from_bigint(q.denom()))
    }

    pub fn add(&self, o: &Self) -> Self {
        Mp(self.0.add(&o.0, PRECISION, RM))
    }

    pub fn sub(&self, o: &Self) -> Self {
        Mp(self.0.sub(&o.0, PRECISION, RM))
    }

    pub fn mul(&self, o: &Self) -> Self {
        Mp(self.0.mul(&o.0, PRECISION, RM))
    }

    pub fn div(&self, o: &Self) -> Self {
        Mp(self.0.div(&o.0, PRECISION, RM))
    }

    pub fn recip(&self) -> Self {
        Self::from_i64(1).div(self)
    }

    pub fn neg(&self) -> Self {
        Mp(self.0.neg())
    }

    pub fn abs(&self) -> Self {
        Mp(self.0.abs())
    }

    pub fn sqrt(&self) -> Self {
        Mp(self.0.sqrt(PRECISION, RM))
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// Strict comparison `self < o`.
    pub fn lt(&self, o: &Self) -> bool {
        self.0.cmp(&o.0).is_some_and(|c| c < 0)
    }

    /// Nearest integer (ties away from zero).
    pub fn round(&self) -> BigInt {
        let mut cc = consts();
        let shifted = if self.is_negative() {
            self.sub(&Self::from_f64(0.5))
        } else {
            self.add(&Self::from_f64(0.5))
        };
        let t = shifted.0.int();
        let s = t
            .format(Radix::Dec, RoundingMode::ToZero, &mut cc)
            .expect("formatting a finite float");
        parse_decimal_integer(&s)
    }

    pub fn to_f64(&self) -> f64 {
        let mut cc = consts();
        self.0
            .format(Radix::Dec, RM, &mut cc)
            .ok()
            .and_then(|s| s.parse::<f64>().ok())
            .unwrap_or(f64::NAN)
    }

    pub fn pi() -> Self {
        let mut cc = consts();
        Mp(cc.pi(PRECISION, RM))
    }

    pub fn cos(&self) -> Self {
        let mut cc = consts();
        Mp(self.0.cos(PRECISION, RM, &mut cc))
    }

    pub fn sin(&self) -> Self {
        let mut cc = consts();
        Mp(self.0.sin(PRECISION, RM, &mut cc))
    }
}

/// Parses astro-float's decimal output of an integral value, e.g. `1.23e+2`.
fn parse_decimal_integer(s: &str) -> BigInt {
    let (mantissa, exp) = match s.split_once('e') {
        Some((m, e)) => (m, e.parse::<i64>().unwrap_or(0)),
        None => (s, 0),
    };
    let negative = mantissa.starts_with('-');
    let mantissa = mantissa.trim_start_matches(['-', '+']);
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    let mut digits = format!("{int_part}{frac_part}");
    let shift = exp - frac_part.len() as i64;
    if shift >= 0 {
        digits.push_str(&"0".repeat(shift as usize));
    } else {
        let keep = digits.len() as i64 + shift;
        digits.truncate(keep.max(0) as usize);
    }
    if digits.is_empty() {
        digits.push('0');
    }
    let v: BigInt = digits.parse().unwrap_or_default();
    if negative {
        -v
    } else {
        v
    }
}

#[derive(Clone, Debug)]
pub struct MpComplex {
    pub re: Mp,
    pub im: Mp,
}

impl MpComplex {
    pub fn new(re: Mp, im: Mp) -> Self {
        MpComplex { re, im }
    }

    pub fn zero() -> Self {
        Self::new(Mp::zero(), Mp::zero())
    }

    pub fn from_real(re: Mp) -> Self {
        Self::new(re, Mp::zero())
    }

    pub fn from_c64(z: Complex64) -> Self {
        Self::new(Mp::from_f64(z.re), Mp::from_f64(z.im))
    }

    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    /// `exp(2πi k/n)`
    pub fn root_of_unity(n: u64, k: u64) -> Self {
        let k = k % n;
        if k == 0 {
            return Self::from_real(Mp::from_i64(1));
        }
        let angle = Mp::pi()
            .mul(&Mp::from_i64(2 * k as i64))
            .div(&Mp::from_i64(n as i64));
        Self::new(angle.cos(), angle.sin())
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(self.re.add(&o.re), self.im.add(&o.im))
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(self.re.sub(&o.re), self.im.sub(&o.im))
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(
            self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        )
    }

    pub fn scale(&self, s: &Mp) -> Self {
        Self::new(self.re.mul(s), self.im.mul(s))
    }

    pub fn norm_sqr(&self) -> Mp {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }

    pub fn abs(&self) -> Mp {
        self.norm_sqr().sqrt()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), self.im.neg())
    }

    pub fn div(&self, o: &Self) -> Self {
        let d = o.norm_sqr();
        let num = self.mul(&o.conj());
        Self::new(num.re.div(&d), num.im.div(&d))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_two_to_high_precision() {
        let s = Mp::from_i64(2).sqrt();
        let err = s.mul(&s).sub(&Mp::from_i64(2)).abs();
        assert!(err.lt(&Mp::from_f64(1e-90)));
    }

    #[test]
    fn rounding_large_values() {
        let big: BigInt = "123456789012345678901234567".parse().unwrap();
        let x = Mp::from_bigint(&big).add(&Mp::from_f64(0.25));
        assert_eq!(x.round(), big);
        assert_eq!(Mp::from_f64(-2.6).round(), BigInt::from(-3));
        assert_eq!(Mp::from_f64(0.4).round(), BigInt::from(0));
    }

    #[test]
    fn fifth_root_of_unity() {
        let z = MpComplex::root_of_unity(5, 1);
        let mut acc = MpComplex::from_real(Mp::from_i64(1));
        for _ in 0..5 {
            acc = acc.mul(&z);
        }
        let err = acc.sub(&MpComplex::from_real(Mp::from_i64(1))).abs();
        assert!(err.lt(&Mp::from_f64(1e-80)));
    }
}
