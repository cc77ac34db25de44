//! Exact rational values.
//!
//! `ExactRational` is `num_rational::BigRational`, which reduces by the gcd on
//! every construction and keeps the denominator positive, so equality is
//! structural.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type ExactRational = BigRational;

pub fn int(n: i64) -> ExactRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> ExactRational {
    assert!(den != 0, "zero denominator");
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `p/q`, a signed integer, or a finite decimal such as `-0.25` into an
/// exact fraction. Decimals are read exactly (`0.2` is `1/5`).
pub fn parse_rational(input: &str) -> Result<ExactRational> {
    let s = input.trim();
    let err = || Error::parse("rational", input);
    if s.is_empty() {
        return Err(err());
    }
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| err())?;
        let q: BigInt = q.trim().parse().map_err(|_| err())?;
        if q.is_zero() {
            return Err(err());
        }
        return Ok(BigRational::new(p, q));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(err());
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(err());
    }
    let digits = format!("{whole}{frac}");
    let num: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().map_err(|_| err())? };
    let den = num_traits::pow(BigInt::from(10), frac.len());
    let value = BigRational::new(num, den);
    Ok(if neg { -value } else { value })
}

pub fn to_f64(r: &ExactRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// `p/q` with the `/q` omitted for integers.
pub fn render(r: &ExactRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn abs_lt_one(r: &ExactRational) -> bool {
    r.abs() < ExactRational::one()
}

/// Lossless JSON form: numerator and denominator as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalJson {
    pub num: String,
    pub den: String,
}

impl From<&ExactRational> for RationalJson {
    fn from(r: &ExactRational) -> Self {
        RationalJson { num: r.numer().to_string(), den: r.denom().to_string() }
    }
}

impl TryFrom<&RationalJson> for ExactRational {
    type Error = Error;

    fn try_from(j: &RationalJson) -> Result<Self> {
        parse_rational(&format!("{}/{}", j.num, j.den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!(parse_rational("1/5").unwrap(), ratio(1, 5));
        assert_eq!(parse_rational("0.2").unwrap(), ratio(1, 5));
        assert_eq!(parse_rational("-6/4").unwrap(), ratio(-3, 2));
        assert_eq!(parse_rational("-.5").unwrap(), ratio(-1, 2));
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational(".").is_err());
        assert!(parse_rational("1e3").is_err());
    }

    #[test]
    fn normalization_is_eager() {
        let r = ratio(10, -4);
        assert_eq!(r.numer(), &BigInt::from(-5));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(ratio(0, 7), ExactRational::zero());
        assert_eq!(ratio(0, 7).denom(), &BigInt::from(1));
    }

    #[test]
    fn json_is_lossless() {
        let r = parse_rational("-123456789012345678901234567891/7").unwrap();
        let j = RationalJson::from(&r);
        assert_eq!(j.den, "7");
        assert_eq!(ExactRational::try_from(&j).unwrap(), r);
        assert_eq!(render(&r), "-123456789012345678901234567891/7");
        assert_eq!(render(&int(3)), "3");
    }
}
