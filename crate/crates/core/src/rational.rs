//! Arbitrary-precision rationals and their text encoding.
//!
//! Rationals travel through files and reports as strings: `"p/q"` in lowest
//! terms, or `"p"` when the denominator is one.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::str::FromStr;

pub use num_rational::BigRational as Rational;

/// Shorthand for an integer-valued rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d` reduced to lowest terms. Panics on a zero denominator.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Parse `"p"`, `"p/q"` or `"-p/q"` (surrounding whitespace allowed).
pub fn parse(text: &str) -> Result<Rational, String> {
    let t = text.trim();
    if t.is_empty() {
        return Err("empty rational".to_string());
    }
    match t.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|e| format!("bad numerator in {t:?}: {e}"))?;
            let d = BigInt::from_str(d.trim()).map_err(|e| format!("bad denominator in {t:?}: {e}"))?;
            if d.is_zero() {
                return Err(format!("zero denominator in {t:?}"));
            }
            Ok(Rational::new(n, d))
        }
        None => BigInt::from_str(t)
            .map(Rational::from_integer)
            .map_err(|e| format!("bad rational {t:?}: {e}")),
    }
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn format_all(v: &[Rational]) -> Vec<String> {
    v.iter().map(format).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse("3").unwrap(), int(3));
        assert_eq!(parse("-6/4").unwrap(), frac(-3, 2));
        assert_eq!(format(&frac(6, -4)), "-3/2");
        assert_eq!(format(&int(0)), "0");
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
        assert!(parse("").is_err());
    }

    #[test]
    fn lowest_terms_and_positive_denominator() {
        let q = parse("10/-4").unwrap();
        assert_eq!(q.numer(), &BigInt::from(-5));
        assert_eq!(q.denom(), &BigInt::from(2));
    }
}
