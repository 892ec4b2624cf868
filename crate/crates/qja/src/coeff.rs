//! Exact rational coefficients.
//!
//! All linear algebra in this crate is over the rationals with
//! arbitrary-precision integers, so ranks and nullspaces are exact. The
//! canonical form (reduced fraction, positive denominator, zero as `0`)
//! is maintained by `num_rational`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use num_rational::BigRational as Rational;

/// Rational from an integer.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `n/d`. Panics if `d == 0`.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Renders `p/q` with the denominator omitted when it is 1.
pub fn to_string(r: &Rational) -> String {
    r.to_string()
}

/// Parses `p` or `p/q` (optionally signed).
pub fn parse(s: &str) -> Result<Rational, String> {
    s.parse::<Rational>()
        .map_err(|e| format!("invalid rational {s:?}: {e}"))
}

/// `|r| == 1`.
pub fn is_unit(r: &Rational) -> bool {
    r.abs().is_one()
}

/// `r == 0`.
pub fn is_zero(r: &Rational) -> bool {
    r.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        assert_eq!(frac(2, 4), frac(1, 2));
        assert_eq!(frac(1, -2), frac(-1, 2));
        assert_eq!(to_string(&frac(-1, 2)), "-1/2");
        assert_eq!(to_string(&int(7)), "7");
        assert_eq!(to_string(&int(0)), "0");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "1", "-3", "5/7", "-22/7"] {
            let r = parse(s).unwrap();
            assert_eq!(to_string(&r), s);
        }
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }
}
