//! Exact rationals. Everything in the crate is computed over `BigRational`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// `"p/q"` in lowest terms, or `"p"` for integers.
pub fn format(r: &Rational) -> String {
    r.to_string()
}

/// Accepts `"p"`, `"-p"`, `"p/q"` with an optional sign. Surrounding whitespace is ignored.
pub fn parse(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = |msg: &str| Error::parse(0, format!("{msg} in rational `{s}`"));
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad("bad numerator"))?;
    let den: BigInt = den.parse().map_err(|_| bad("bad denominator"))?;
    if den.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats_lowest_terms() {
        assert_eq!(format(&frac(6, 4)), "3/2");
        assert_eq!(format(&frac(-6, 3)), "-2");
        assert_eq!(format(&int(0)), "0");
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["3", "-1/2", "7/9", "0"] {
            assert_eq!(format(&parse(s).unwrap()), s);
        }
        assert_eq!(parse("4/6").unwrap(), frac(2, 3));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }
}
