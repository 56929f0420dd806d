//! Exact rationals and their canonical `"p/q"` text form.

use num::{BigInt, BigRational, One, Zero};
use serde::{Deserialize, Deserializer, Serializer};

use crate::error::{ForgeError, Result};

pub type Rational = BigRational;

/// `"p/q"` with `q > 0` and `gcd(p, q) = 1`; integers keep the `/1`.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"p/q"` or `"p"`, normalizing signs and common factors.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || ForgeError::Parse(format!("not a rational: {s:?}"));
    let (num, den) = match s.trim().split_once('/') {
        Some((n, d)) => (n.trim().parse::<BigInt>().map_err(|_| bad())?, d.trim().parse::<BigInt>().map_err(|_| bad())?),
        None => (s.trim().parse::<BigInt>().map_err(|_| bad())?, BigInt::one()),
    };
    if den.is_zero() {
        return Err(ForgeError::DivisionByZero(format!("rational {s:?} has zero denominator")));
    }
    Ok(Rational::new(num, den))
}

pub fn from_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Serde adapter writing rationals as `"p/q"` strings.
pub mod as_string {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        parse_rational(&String::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_text() {
        assert_eq!(format_rational(&parse_rational("-4/-6").unwrap()), "2/3");
        assert_eq!(format_rational(&parse_rational("4/-6").unwrap()), "-2/3");
        assert_eq!(format_rational(&from_int(5)), "5/1");
        assert_eq!(parse_rational("7").unwrap(), from_int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
