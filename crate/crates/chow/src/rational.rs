//! Exact rational scalars.
//!
//! Every coefficient in the engine is a `Rat`: an arbitrary-precision
//! rational kept in lowest terms with a positive denominator. `Ratio`
//! maintains both invariants on construction, so the alias is the whole
//! story; the helpers below exist for ergonomics and parsing.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

/// `n/d` as an exact rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn is_zero(r: &Rat) -> bool {
    r.is_zero()
}

/// Renders `3`, `-3`, `1/2`, `-5/4` (no spaces).
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `12`, `-12`, `3/4` (and `-3/4`).
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Rat::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(Rat::from_integer(n))
    }
}

pub fn abs(r: &Rat) -> Rat {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_positive_denominator() {
        let r = rat(2, -4);
        assert_eq!(r, rat(-1, 2));
        assert_eq!(fmt_rat(&r), "-1/2");
        assert!(r.denom() > &BigInt::from(0));
    }

    #[test]
    fn exact_addition_large_values() {
        // (a/b)+(c/d) reduces correctly for magnitudes past machine words.
        let big = "123456789012345678901234567890";
        let a = Rat::new(big.parse().unwrap(), BigInt::from(7));
        let b = Rat::new(BigInt::from(1), big.parse().unwrap());
        let s = &a + &b;
        assert_eq!(&s - &b, a);
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "7", "-7", "1/2", "-22/7"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(fmt_rat(&r), s);
        }
        assert!(parse_rat("1/0").is_none());
        assert!(parse_rat("x").is_none());
    }
}
