//! Exact rationals.
//!
//! `Rat` is a plain alias for `num_rational::BigRational`, which keeps every
//! value reduced with a positive denominator.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

/// `n/d` as a reduced rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

pub fn zero() -> Rat {
    Rat::zero()
}

pub fn one() -> Rat {
    Rat::one()
}

/// Sign of a rational as -1, 0 or +1.
pub fn sign_of(r: &Rat) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Parses `"p/q"` or `"p"` (surrounding whitespace allowed).
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        None => s.parse::<BigInt>().map(BigRational::from_integer).map_err(|_| bad()),
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
    }
}

/// Canonical text: `"p"` for integers, `"p/q"` otherwise.
pub fn rat_text(r: &Rat) -> String {
    r.to_string()
}

/// `r` as an `i64` when it is an integer that fits.
pub fn to_i64(r: &Rat) -> Option<i64> {
    if r.is_integer() {
        i64::try_from(r.to_integer()).ok()
    } else {
        None
    }
}

/// Floating approximation, only used by oracles and reports.
pub fn to_f64(r: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        assert_eq!(parse_rat("6/4").unwrap(), rat(3, 2));
        assert_eq!(parse_rat(" -7 ").unwrap(), int(-7));
        assert_eq!(parse_rat("1/-2").unwrap(), rat(-1, 2));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
        assert_eq!(rat_text(&rat(-3, 6)), "-1/2");
        assert_eq!(rat_text(&int(5)), "5");
    }
}
