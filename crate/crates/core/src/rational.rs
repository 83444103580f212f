//! Exact rational scalars.
//!
//! Every scalar in the crate is a [`Rational`], an arbitrary-precision
//! fraction kept in lowest terms with a positive denominator. The textual
//! form is `p/q`, or just `p` when `q = 1`; that is the only encoding used
//! in model files and reports.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use num_rational::BigRational as Rational;

/// Error for strings that are not of the form `p` or `p/q`.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed rational {0:?} (expected \"p\" or \"p/q\" with integer p, q)")]
pub struct ParseRationalError(pub String);

/// Parses `p` or `p/q`. Decimal points, exponents, whitespace and zero
/// denominators are rejected.
pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    let err = || ParseRationalError(text.to_string());
    let valid_int = |s: &str| {
        let digits = s.strip_prefix('-').unwrap_or(s);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    if !valid_int(num) {
        return Err(err());
    }
    let numer = BigInt::from_str(num).map_err(|_| err())?;
    let denom = match den {
        Some(d) if d.bytes().all(|b| b.is_ascii_digit()) && !d.is_empty() => BigInt::from_str(d).map_err(|_| err())?,
        Some(_) => return Err(err()),
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(numer, denom))
}

/// Canonical string form: `p/q`, or `p` when the denominator is one.
pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}

/// Shorthand constructor for small fractions; panics on a zero denominator.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Exact square root when `value` is the square of a rational.
pub fn rational_sqrt(value: &Rational) -> Option<Rational> {
    if value.is_negative() {
        return None;
    }
    let n = value.numer().sqrt();
    let d = value.denom().sqrt();
    let root = Rational::new(n, d);
    (&root * &root == *value).then_some(root)
}

/// Serde adapter writing a [`Rational`] as its canonical string.
pub mod serde_string {
    use super::{format_rational, parse_rational, Rational};
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(value))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_canonical_forms() {
        assert_eq!(parse_rational("1/2").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-3").unwrap(), int(-3));
        assert_eq!(parse_rational("4/8").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("0/5").unwrap(), int(0));
    }

    #[test]
    fn rejects_non_rationals() {
        for bad in ["0.5", "1e3", "", "/2", "1/", "1/0", " 1", "1/-2", "--1", "abc", "+1"] {
            assert!(parse_rational(bad).is_err(), "{bad:?} accepted");
        }
    }

    #[test]
    fn canonical_strings() {
        assert_eq!(format_rational(&rat(2, 4)), "1/2");
        assert_eq!(format_rational(&rat(-6, 3)), "-2");
        assert_eq!(format_rational(&rat(3, -9)), "-1/3");
        assert_eq!(format_rational(&int(0)), "0");
    }

    #[test]
    fn square_roots() {
        assert_eq!(rational_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rational_sqrt(&rat(2, 1)), None);
        assert_eq!(rational_sqrt(&rat(-1, 4)), None);
        assert_eq!(rational_sqrt(&int(0)), Some(int(0)));
    }
}
