use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::{gcd, LaurentPoly, Rational};
use crate::error::{Error, Result};

/// A quotient of two Laurent polynomials in `t^{1/2}`, kept fully reduced.
///
/// The denominator is normalized to lowest doubled exponent 0 and leading
/// coefficient 1, so two equal functions have equal fields.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFn {
    /// Reduces `num / den`. Fails only when `den` is zero.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            // g divides both exactly by construction
            (num.exact_div(&g)?, den.exact_div(&g)?)
        };
        let lo = den.min_doubled().unwrap();
        let inv_lc = den.leading().unwrap().1.recip();
        Ok(Self {
            num: num.shift(-lo).scale(&inv_lc),
            den: den.shift(-lo).scale(&inv_lc),
        })
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The Laurent polynomial this function equals, if it is one.
    pub fn to_polynomial(&self) -> Result<LaurentPoly> {
        if self.is_polynomial() {
            Ok(self.num.clone())
        } else {
            Err(Error::NotPolynomial)
        }
    }

    /// Value at `t = 1`; a pole surviving reduction is an error.
    pub fn eval_one(&self) -> Result<Rational> {
        let d = self.den.eval_one();
        if d.is_zero() {
            return Err(Error::Pole);
        }
        Ok(self.num.eval_one() / d)
    }

    pub fn derivative(&self) -> Self {
        let n = &self.num.derivative() * &self.den - &self.num * &self.den.derivative();
        let d = &self.den * &self.den;
        Self::new(n, d).expect("square of a nonzero denominator is nonzero")
    }

    pub fn substitute_power(&self, k: i64) -> Self {
        Self::new(self.num.substitute_power(k), self.den.substitute_power(k))
            .expect("substitution keeps the denominator nonzero")
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }
}

impl Add<&RationalFn> for &RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &RationalFn) -> RationalFn {
        if self.den == rhs.den {
            return RationalFn::new(&self.num + &rhs.num, self.den.clone()).unwrap();
        }
        let n = &self.num * &rhs.den + &rhs.num * &self.den;
        RationalFn::new(n, &self.den * &rhs.den).unwrap()
    }
}

impl Sub<&RationalFn> for &RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &RationalFn) -> RationalFn {
        self + &(-rhs)
    }
}

impl Mul<&RationalFn> for &RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &RationalFn) -> RationalFn {
        RationalFn::new(&self.num * &rhs.num, &self.den * &rhs.den).unwrap()
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<RationalFn> for RationalFn {
            type Output = RationalFn;
            fn $method(self, rhs: RationalFn) -> RationalFn {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&RationalFn> for RationalFn {
            type Output = RationalFn;
            fn $method(self, rhs: &RationalFn) -> RationalFn {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl From<LaurentPoly> for RationalFn {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFn({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn rf(n: &str, d: &str) -> RationalFn {
        RationalFn::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn normalize_cancels_common_factor() {
        let r = rf("t^2 - 1", "t - 1");
        assert_eq!(r.num(), &p("t + 1"));
        assert!(r.den().is_one());
        assert_eq!(rf("0", "t^3 + 2"), RationalFn::zero());
        assert!(RationalFn::new(p("t"), LaurentPoly::zero()).is_err());
    }

    #[test]
    fn normalized_denominator_shape() {
        let r = rf("1", "-2t^3 + 4t");
        assert_eq!(r.den(), &p("t^2 - 2"));
        assert_eq!(r.num(), &p("-1/2 t^-1"));
    }

    #[test]
    fn normalize_is_idempotent() {
        let r = rf("t^3 - t", "2t^2 + 2t^(1/2)");
        let again = RationalFn::new(r.num().clone(), r.den().clone()).unwrap();
        assert_eq!(r, again);
    }

    #[test]
    fn arithmetic_examples() {
        let a = rf("t + 3", "t^2 + 1");
        assert_eq!(&a * &RationalFn::one(), a);
        assert!((&a - &a).is_zero());
        let s = rf("1", "t - 1") + rf("1", "1 - t");
        assert_eq!(s, RationalFn::zero());
        assert!(s.den().is_one());
    }

    #[test]
    fn to_polynomial_examples() {
        assert_eq!(rf("t^2 - 1", "t - 1").to_polynomial().unwrap(), p("t + 1"));
        assert_eq!(rf("5", "1").to_polynomial().unwrap(), p("5"));
        // -(t^{3/2} - t^{-3/2}) / (t^{1/2} + t^{-1/2})
        let psi = RationalFn::new(
            -LaurentPoly::half_power_difference(3),
            LaurentPoly::half_power_sum(1),
        )
        .unwrap();
        assert_eq!(psi.to_polynomial(), Err(Error::NotPolynomial));
        // monomial denominators are units
        assert_eq!(
            rf("t^2 + t", "3t^4").to_polynomial().unwrap(),
            p("1/3 t^-2 + 1/3 t^-3")
        );
    }

    #[test]
    fn eval_one_and_poles() {
        assert_eq!(rf("t^2 - 1", "t - 1").eval_one().unwrap(), rat(2));
        assert_eq!(rf("1", "t - 1").eval_one(), Err(Error::Pole));
    }

    #[test]
    fn derivative_quotient_rule() {
        // d/dt 1/t = -1/t^2
        assert_eq!(rf("1", "t").derivative(), rf("-t^-2", "1"));
        // d/dt t/(t+1) = 1/(t+1)^2
        assert_eq!(rf("t", "t + 1").derivative(), rf("1", "t^2 + 2t + 1"));
    }
}
