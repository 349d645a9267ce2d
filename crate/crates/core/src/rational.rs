//! Helpers for the serialized form of rational numbers.
//!
//! Throughout the crate, JSON carries rationals as reduced fraction strings
//! `"num/den"` with a positive denominator: `"0/1"`, `"-3/2"`, `"7/1"`.
//! `num::BigRational` keeps values reduced, so formatting is direct; parsing
//! accepts either `"a/b"` or a bare integer `"a"`.

use num::bigint::BigInt;
use num::BigRational;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid rational literal {literal:?}: {reason}")]
pub struct ParseRatioError {
    pub literal: String,
    pub reason: String,
}

/// Formats a rational as `num/den`, always including the denominator.
pub fn format_ratio(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"a/b"` or `"a"` into a reduced rational.
pub fn parse_ratio(s: &str) -> Result<BigRational, ParseRatioError> {
    let err = |reason: &str| ParseRatioError {
        literal: s.to_string(),
        reason: reason.to_string(),
    };
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let num: BigInt = num.parse().map_err(|_| err("bad numerator"))?;
    let den: BigInt = match den {
        Some(d) => d.parse().map_err(|_| err("bad denominator"))?,
        None => BigInt::from(1),
    };
    if den == BigInt::from(0) {
        return Err(err("zero denominator"));
    }
    Ok(BigRational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn formats_reduced_with_positive_denominator() {
        assert_eq!(format_ratio(&r(1, 2)), "1/2");
        assert_eq!(format_ratio(&r(2, 4)), "1/2");
        assert_eq!(format_ratio(&r(3, -2)), "-3/2");
        assert_eq!(format_ratio(&r(0, 5)), "0/1");
        assert_eq!(format_ratio(&r(7, 1)), "7/1");
    }

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(parse_ratio("1/2").unwrap(), r(1, 2));
        assert_eq!(parse_ratio("-3/2").unwrap(), r(-3, 2));
        assert_eq!(parse_ratio("3/-2").unwrap(), r(-3, 2));
        assert_eq!(parse_ratio("4/2").unwrap(), r(2, 1));
        assert_eq!(parse_ratio("5").unwrap(), r(5, 1));
        assert_eq!(parse_ratio("-0").unwrap(), r(0, 1));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_ratio("").is_err());
        assert!(parse_ratio("a/b").is_err());
        assert!(parse_ratio("1/0").is_err());
        assert!(parse_ratio("1/2/3").is_err());
        assert!(parse_ratio("1.5").is_err());
    }

    #[test]
    fn round_trips_bit_exactly() {
        for s in ["0/1", "1/2", "-3/2", "7/1", "-1/128", "2048/2049"] {
            let v = parse_ratio(s).unwrap();
            assert_eq!(format_ratio(&v), s);
        }
    }
}
