use num_bigint::BigInt;
use num_traits::Zero;

use crate::{Error, Result};

pub use num_rational::BigRational;

/// Shorthand for the rational `num / den`.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rational_to_strings(q: &BigRational) -> [String; 2] {
    [q.numer().to_string(), q.denom().to_string()]
}

/// Parses a `["num", "den"]` pair of decimal integer strings.
pub fn parse_rational(num: &str, den: &str) -> Result<BigRational> {
    let n: BigInt = num
        .trim()
        .parse()
        .map_err(|_| Error::Format(format!("bad integer `{num}`")))?;
    let d: BigInt = den
        .trim()
        .parse()
        .map_err(|_| Error::Format(format!("bad integer `{den}`")))?;
    if d.is_zero() {
        return Err(Error::Format("zero denominator".into()));
    }
    Ok(BigRational::new(n, d))
}
