//! Exact rational scalars.
//!
//! Every structure constant, action matrix and differential in this crate has
//! rational entries, so `BigRational` (always reduced, positive denominator)
//! is the only scalar type used.

use alloc::string::String;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use num_rational::BigRational as Rational;

/// Shorthand for an integer-valued rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Canonical text form: `p` for integers, `p/q` otherwise, `-` for negatives.
pub fn to_canonical(r: &Rational) -> String {
    use alloc::string::ToString;
    r.to_string()
}

/// Error returned by [`parse_canonical`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RationalParseError {
    #[error("`{0}` is not an integer or a p/q fraction")]
    Malformed(String),
    #[error("`{0}` has a zero denominator")]
    ZeroDenominator(String),
    #[error("`{0}` is not in lowest terms with a positive denominator")]
    NotReduced(String),
}

/// Parses `p` or `p/q` where `q > 0` and `gcd(p, q) = 1`. A leading ASCII
/// `-` or U+2212 minus sign is accepted on the numerator.
pub fn parse_canonical(text: &str) -> Result<Rational, RationalParseError> {
    let owned = || String::from(text);
    let trimmed = text.trim();
    let normalized: String = match trimmed.strip_prefix('\u{2212}') {
        Some(rest) => alloc::format!("-{rest}"),
        None => String::from(trimmed),
    };
    let (num, den) = match normalized.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (normalized.as_str(), None),
    };
    let well_formed = |s: &str, signed: bool| {
        let digits = if signed { s.strip_prefix('-').unwrap_or(s) } else { s };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !well_formed(num, true) || den.is_some_and(|d| !well_formed(d, false)) {
        return Err(RationalParseError::Malformed(owned()));
    }
    let num = BigInt::from_str(num).map_err(|_| RationalParseError::Malformed(owned()))?;
    let Some(den) = den else {
        return Ok(Rational::from_integer(num));
    };
    let den = BigInt::from_str(den).map_err(|_| RationalParseError::Malformed(owned()))?;
    if den.is_zero() {
        return Err(RationalParseError::ZeroDenominator(owned()));
    }
    let value = Rational::new(num.clone(), den.clone());
    if value.numer() != &num || value.denom() != &den || den.is_negative() {
        return Err(RationalParseError::NotReduced(owned()));
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_round_trip() {
        for text in ["0", "7", "-3", "1/2", "-5/3"] {
            assert_eq!(to_canonical(&parse_canonical(text).unwrap()), text);
        }
        assert_eq!(parse_canonical("\u{2212}2/3").unwrap(), Rational::new(BigInt::from(-2), BigInt::from(3)));
    }

    #[test]
    fn rejects_non_canonical() {
        assert!(matches!(parse_canonical("2/4"), Err(RationalParseError::NotReduced(_))));
        assert!(matches!(parse_canonical("1/0"), Err(RationalParseError::ZeroDenominator(_))));
        assert!(matches!(parse_canonical("1/-2"), Err(RationalParseError::Malformed(_))));
        assert!(matches!(parse_canonical("x"), Err(RationalParseError::Malformed(_))));
        assert!(matches!(parse_canonical(""), Err(RationalParseError::Malformed(_))));
    }
}
