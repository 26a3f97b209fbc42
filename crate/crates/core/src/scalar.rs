//! The max-plus semiring `ℝ ∪ {−∞}` over exact rationals.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// An element of the max-plus semiring.
///
/// `Bottom` is the tropical zero (−∞); `Finite(q)` holds an exact rational,
/// with `Finite(0)` the tropical one. `BigRational` keeps values reduced with
/// a positive denominator, so derived equality is semantic equality, and the
/// derived order puts `Bottom` below every finite value.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TropScalar {
    #[default]
    Bottom,
    Finite(BigRational),
}

impl TropScalar {
    pub fn zero() -> Self {
        TropScalar::Bottom
    }

    pub fn one() -> Self {
        TropScalar::Finite(BigRational::zero())
    }

    pub fn int(value: i64) -> Self {
        TropScalar::Finite(BigRational::from_integer(BigInt::from(value)))
    }

    /// `numer / denom` as a finite scalar. Panics on a zero denominator.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        TropScalar::Finite(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn is_bottom(&self) -> bool {
        matches!(self, TropScalar::Bottom)
    }

    pub fn is_finite(&self) -> bool {
        !self.is_bottom()
    }

    pub fn finite(&self) -> Option<&BigRational> {
        match self {
            TropScalar::Bottom => None,
            TropScalar::Finite(q) => Some(q),
        }
    }

    /// Tropical addition: the maximum.
    pub fn plus(&self, other: &Self) -> Self {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// Tropical multiplication: the rational sum, with bottom absorbing.
    pub fn times(&self, other: &Self) -> Self {
        match (self, other) {
            (TropScalar::Finite(a), TropScalar::Finite(b)) => TropScalar::Finite(a + b),
            _ => TropScalar::Bottom,
        }
    }

    /// Multiplication by a finite rational (a shift).
    pub fn shift(&self, by: &BigRational) -> Self {
        match self {
            TropScalar::Bottom => TropScalar::Bottom,
            TropScalar::Finite(a) => TropScalar::Finite(a + by),
        }
    }

    /// The tropical inverse `⊖x = −x`; undefined at bottom.
    pub fn neg(&self) -> Result<Self> {
        match self {
            TropScalar::Bottom => Err(Error::Domain(
                "the inverse of the tropical zero (-inf) is undefined".into(),
            )),
            TropScalar::Finite(a) => Ok(TropScalar::Finite(-a)),
        }
    }
}


impl From<i64> for TropScalar {
    fn from(value: i64) -> Self {
        TropScalar::int(value)
    }
}

impl From<BigRational> for TropScalar {
    fn from(value: BigRational) -> Self {
        TropScalar::Finite(value)
    }
}

/// Formats a rational as `p` or `p/q`.
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `p`, `p/q` or a finite decimal such as `-0.5` into an exact rational.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let s = text.trim();
    let bad = || Error::Parse(format!("invalid rational literal {text:?}"));
    if let Some((p, q)) = s.split_once('/') {
        let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
        let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
        if q.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {text:?}")));
        }
        return Ok(BigRational::new(p, q));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int_part.starts_with('-');
        let int_digits = int_part.trim_start_matches(['-', '+']);
        let whole = if int_digits.is_empty() {
            BigInt::zero()
        } else {
            BigInt::from_str(int_digits).map_err(|_| bad())?
        };
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let frac = BigInt::from_str(frac_part).map_err(|_| bad())?;
        let magnitude = BigRational::new(whole * &scale + frac, scale);
        return Ok(if negative { -magnitude } else { magnitude });
    }
    BigInt::from_str(s)
        .map(BigRational::from_integer)
        .map_err(|_| bad())
}

impl FromStr for TropScalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "-inf" | "-∞" | "bottom" => Ok(TropScalar::Bottom),
            other => parse_rational(other).map(TropScalar::Finite),
        }
    }
}

impl fmt::Display for TropScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropScalar::Bottom => f.write_str("-inf"),
            TropScalar::Finite(q) => f.write_str(&format_rational(q)),
        }
    }
}

impl fmt::Debug for TropScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(text: &str) -> TropScalar {
        text.parse().unwrap()
    }

    #[test]
    fn plus_and_times_follow_max_and_sum() {
        assert_eq!(s("3").plus(&s("5")), s("5"));
        assert_eq!(s("3").times(&s("5")), s("8"));
        assert_eq!(TropScalar::Bottom.times(&s("7")), TropScalar::Bottom);
        assert_eq!(TropScalar::Bottom.plus(&s("-7")), s("-7"));
    }

    #[test]
    fn negation() {
        assert_eq!(s("-1/2").neg().unwrap(), s("1/2"));
        assert!(matches!(TropScalar::Bottom.neg(), Err(Error::Domain(_))));
    }

    #[test]
    fn literals() {
        assert_eq!(s("7/2"), TropScalar::ratio(7, 2));
        assert_eq!(s("3.5"), TropScalar::ratio(7, 2));
        assert_eq!(s("-0.5"), TropScalar::ratio(-1, 2));
        assert_eq!(s("4/8").to_string(), "1/2");
        assert_eq!(s("-6/3").to_string(), "-2");
        assert_eq!(s("-inf"), TropScalar::Bottom);
        assert!("1/0".parse::<TropScalar>().is_err());
        assert!("abc".parse::<TropScalar>().is_err());
        assert!("1.".parse::<TropScalar>().is_err());
    }

    #[test]
    fn bottom_is_least() {
        assert!(TropScalar::Bottom < s("-1000000"));
        assert!(s("-1/3") < s("-1/4"));
    }

    fn scalar() -> impl Strategy<Value = TropScalar> {
        prop_oneof![
            1 => Just(TropScalar::Bottom),
            6 => (-40i64..40, 1i64..7).prop_map(|(p, q)| TropScalar::ratio(p, q)),
        ]
    }

    proptest! {
        #[test]
        fn semiring_axioms(a in scalar(), b in scalar(), c in scalar()) {
            prop_assert_eq!(a.plus(&b), b.plus(&a));
            prop_assert_eq!(a.times(&b), b.times(&a));
            prop_assert_eq!(a.plus(&b).plus(&c), a.plus(&b.plus(&c)));
            prop_assert_eq!(a.times(&b).times(&c), a.times(&b.times(&c)));
            prop_assert_eq!(a.times(&b.plus(&c)), a.times(&b).plus(&a.times(&c)));
            prop_assert_eq!(a.plus(&TropScalar::zero()), a.clone());
            prop_assert_eq!(a.times(&TropScalar::one()), a.clone());
            prop_assert_eq!(a.times(&TropScalar::zero()), TropScalar::zero());
            prop_assert_eq!(a.plus(&a), a.clone());
        }

        #[test]
        fn neg_is_an_involution(p in -50i64..50, q in 1i64..9) {
            let x = TropScalar::ratio(p, q);
            prop_assert_eq!(x.neg().unwrap().neg().unwrap(), x.clone());
            prop_assert_eq!(x.times(&x.neg().unwrap()), TropScalar::one());
        }

        #[test]
        fn display_parse_round_trip(x in scalar()) {
            prop_assert_eq!(x.to_string().parse::<TropScalar>().unwrap(), x);
        }
    }
}
