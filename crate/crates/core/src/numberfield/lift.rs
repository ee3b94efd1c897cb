//! Exact cyclotomic representations of rational and quadratic real numbers.
//!
//! `Q(√d)` for squarefree `d` sits inside `Q(ζ_f)` where `f = |d|` when
//! `d ≡ 1 (mod 4)` and `f = 4|d|` otherwise. Square roots are assembled from
//! quadratic Gauss sums `g_p = Σ (a/p) ζ_p^a` (with `g_p² = ±p`) and the
//! units `ζ_4`, `ζ_8 + ζ_8^{-1}`, `ζ_8 + ζ_8^3`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::algebraic::AlgebraicReal;
use super::cyclotomic::CyclotomicNumber;
use super::rational::BigRational;

/// Splits `k = s^2 d` with `d` squarefree; `None` if `|k|` is too large to
/// factor by trial division.
fn squarefree_decomposition(k: &BigInt) -> Option<(BigInt, i64, Vec<u64>)> {
    let sign = if k.is_negative() { -1 } else { 1 };
    let mut m = k.abs().to_u64()?;
    if m == 0 {
        return None;
    }
    let mut square = BigInt::one();
    let mut primes = Vec::new();
    let mut p = 2u64;
    while p * p <= m {
        let mut e = 0;
        while m % p == 0 {
            m /= p;
            e += 1;
        }
        for _ in 0..e / 2 {
            square *= p;
        }
        if e % 2 == 1 {
            primes.push(p);
        }
        p += 1;
    }
    if m > 1 {
        primes.push(m);
    }
    Some((square, sign, primes))
}

/// Conductor of `Q(√d)` for a squarefree integer `d`.
pub fn quadratic_conductor(d: &BigInt) -> u64 {
    let a = d.abs().to_u64().unwrap_or(0);
    if d.mod_floor(&BigInt::from(4)) == BigInt::one() {
        a
    } else {
        4 * a
    }
}

fn legendre(a: u64, p: u64) -> i64 {
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = (p - 1) / 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    if result == 1 {
        1
    } else if result == 0 {
        0
    } else {
        -1
    }
}

fn gauss_sum(p: u64) -> CyclotomicNumber {
    let coeffs: Vec<BigRational> = (0..p)
        .map(|a| BigRational::from_integer(BigInt::from(if a == 0 { 0 } else { legendre(a, p) })))
        .collect();
    CyclotomicNumber::from_exponent_coeffs(p, &coeffs)
}

/// A square root of the integer `k` inside `Q(ζ_n)`, if one exists there.
/// For `k > 0` the positive root is returned, for `k < 0` the one with
/// positive imaginary part.
pub fn sqrt_integer_in(k: &BigInt, n: u64) -> Option<CyclotomicNumber> {
    if k.is_zero() {
        return Some(CyclotomicNumber::zero(n));
    }
    let (square, sign, primes) = squarefree_decomposition(k)?;
    let d: BigInt = primes.iter().fold(BigInt::from(sign), |acc, &p| acc * p);
    let scale = BigRational::from_integer(square);
    if d.is_one() {
        return Some(CyclotomicNumber::from_rational(scale).embed(n));
    }
    let f = quadratic_conductor(&d);
    if n % f != 0 {
        return None;
    }
    let mut root = CyclotomicNumber::one();
    let mut g_square = BigInt::one();
    for &p in primes.iter().filter(|&&p| p != 2) {
        root = &root * &gauss_sum(p);
        g_square *= if p % 4 == 1 {
            BigInt::from(p)
        } else {
            -BigInt::from(p)
        };
    }
    // d / g_square is one of 1, -1, 2, -2
    let unit_sq = (&d / &g_square).to_i64()?;
    let unit = match unit_sq {
        1 => CyclotomicNumber::one(),
        -1 => CyclotomicNumber::zeta(4),
        2 => &CyclotomicNumber::zeta(8) + &CyclotomicNumber::zeta_pow(8, 7),
        -2 => &CyclotomicNumber::zeta(8) + &CyclotomicNumber::zeta_pow(8, 3),
        _ => return None,
    };
    root = &root * &unit;
    let z = root.to_complex();
    if (d.is_positive() && z.re < 0.0) || (d.is_negative() && z.im < 0.0) {
        root = -root;
    }
    let root = root.scale(&scale).embed(n);
    debug_assert_eq!(
        (&root * &root).as_rational(),
        Some(BigRational::from_integer(k.clone()))
    );
    Some(root)
}

/// Solves for `v` exactly inside `Q(ζ_n)` for each candidate conductor in
/// turn. Only values whose minimal polynomial has degree at most 2 are lifted.
pub fn cyclotomic_lift(v: &AlgebraicReal, conductors: &[u64]) -> Option<CyclotomicNumber> {
    let m = v.certified_min_poly()?;
    for &n in conductors {
        if let Some(c) = lift_into(v, m, n) {
            return Some(c);
        }
    }
    None
}

/// Lift at the smallest conductor that can hold the value.
pub fn lift_natural(v: &AlgebraicReal) -> Option<CyclotomicNumber> {
    let m = v.certified_min_poly()?;
    match m.degree()? {
        1 => lift_into(v, m, 1),
        2 => {
            let disc = discriminant(m);
            let (_, sign, primes) = squarefree_decomposition(&disc)?;
            let d: BigInt = primes.iter().fold(BigInt::from(sign), |acc, &p| acc * p);
            lift_into(v, m, quadratic_conductor(&d).max(1))
        }
        _ => None,
    }
}

fn discriminant(m: &super::poly::IntPolynomial) -> BigInt {
    let c = m.coeffs();
    &c[1] * &c[1] - BigInt::from(4) * &c[0] * &c[2]
}

fn lift_into(
    v: &AlgebraicReal,
    m: &super::poly::IntPolynomial,
    n: u64,
) -> Option<CyclotomicNumber> {
    match m.degree()? {
        1 => {
            let c = m.coeffs();
            let q = BigRational::new(-c[0].clone(), c[1].clone());
            Some(CyclotomicNumber::from_rational(q).embed(n))
        }
        2 => {
            let c = m.coeffs();
            let disc = discriminant(m);
            if !disc.is_positive() {
                return None;
            }
            let sqrt = sqrt_integer_in(&disc, n)?;
            let two_a = BigRational::from_integer(&c[2] * 2);
            let minus_b = CyclotomicNumber::from_rational(BigRational::from_integer(-c[1].clone()));
            let target = v.approx();
            let candidates = [&minus_b + &sqrt, &minus_b - &sqrt].map(|x| x.scale(&two_a.recip()));
            let best = candidates.into_iter().min_by(|a, b| {
                (a.to_f64() - target)
                    .abs()
                    .partial_cmp(&(b.to_f64() - target).abs())
                    .unwrap()
            })?;
            let (lo, hi) = v.interval();
            let slack = 1e-9;
            let val = best.to_f64();
            if val < lo.to_f64()? - slack || val > hi.to_f64()? + slack {
                return None;
            }
            // exact check that the chosen element is a root of m
            let mut acc = CyclotomicNumber::zero(n);
            for coeff in m.coeffs().iter().rev() {
                acc = &(&acc * &best)
                    + &CyclotomicNumber::from_rational(BigRational::from_integer(coeff.clone()));
            }
            acc.is_zero().then_some(best.embed(n))
        }
        _ => None,
    }
}
