//! Exact scalars, Laurent polynomials on the half-integer exponent lattice,
//! and reduced rational functions.

mod gcd;
mod laurent;
mod ratfn;

use std::fmt;
use std::str::FromStr;

pub use gcd::gcd;
pub(crate) use laurent::parse_rational;
pub use laurent::LaurentPoly;
pub use ratfn::RationalFn;

/// Arbitrary-precision rational, always kept in lowest terms.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// `n/d` as a [`Rational`]. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// A number of the form `k/2`, stored as the integer `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInteger(i64);

impl HalfInteger {
    pub const fn from_doubled(doubled: i64) -> Self {
        Self(doubled)
    }

    pub const fn from_integer(k: i64) -> Self {
        Self(2 * k)
    }

    pub const fn doubled(self) -> i64 {
        self.0
    }

    pub fn to_integer(self) -> Option<i64> {
        (self.0 % 2 == 0).then_some(self.0 / 2)
    }
}

/// `3`, `-2`, or `5/2`.
impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_integer() {
            Some(k) => write!(f, "{k}"),
            None => write!(f, "{}/2", self.0),
        }
    }
}

/// Accepts an integer, or `a/2` with `a` odd; anything else is an error so
/// that every half-integer has exactly one spelling.
impl FromStr for HalfInteger {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("invalid exponent {s:?}");
        match s.split_once('/') {
            None => s.parse::<i64>().map(Self::from_integer).map_err(|_| bad()),
            Some((a, "2")) => {
                let a: i64 = a.parse().map_err(|_| bad())?;
                if a % 2 == 0 {
                    Err(bad())
                } else {
                    Ok(Self(a))
                }
            }
            Some(_) => Err(bad()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_integer_spellings() {
        assert_eq!(
            "3".parse::<HalfInteger>().unwrap(),
            HalfInteger::from_integer(3)
        );
        assert_eq!(
            "-5/2".parse::<HalfInteger>().unwrap(),
            HalfInteger::from_doubled(-5)
        );
        assert!("4/2".parse::<HalfInteger>().is_err());
        assert!("1/3".parse::<HalfInteger>().is_err());
        assert!("".parse::<HalfInteger>().is_err());
        assert_eq!(HalfInteger::from_doubled(-3).to_string(), "-3/2");
        assert_eq!(HalfInteger::from_doubled(-4).to_string(), "-2");
    }
}
