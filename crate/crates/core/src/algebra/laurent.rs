use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{HalfInteger, Rational};
use crate::error::{Error, Result};

/// A Laurent polynomial in `t^{1/2}` with rational coefficients.
///
/// Terms are keyed by the *doubled* exponent: the key `e` stands for the
/// monomial `t^{e/2}`, so `t` has key 2 and `t^{1/2}` has key 1. Zero
/// coefficients are never stored, which makes the derived equality exact.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, c)
    }

    /// `c * t^{doubled/2}`.
    pub fn monomial(doubled: i64, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(doubled, c);
        }
        Self { terms }
    }

    /// `t^k` for an integer `k`.
    pub fn t_pow(k: i64) -> Self {
        Self::monomial(2 * k, Rational::one())
    }

    /// `t^{k/2} - t^{-k/2}`.
    pub fn half_power_difference(k: i64) -> Self {
        Self::monomial(k, Rational::one()) - Self::monomial(-k, Rational::one())
    }

    /// `t^{k/2} + t^{-k/2}`.
    pub fn half_power_sum(k: i64) -> Self {
        Self::monomial(k, Rational::one()) + Self::monomial(-k, Rational::one())
    }

    /// Builds a polynomial from `(doubled exponent, coefficient)` pairs,
    /// merging repeated exponents.
    pub fn from_terms<C: Into<Rational>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c.into());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending order of doubled exponent.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Rational)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, doubled: i64) -> Rational {
        self.terms
            .get(&doubled)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn min_doubled(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_doubled(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Highest exponent, as a half-integer.
    pub fn degree(&self) -> Option<HalfInteger> {
        self.max_doubled().map(HalfInteger::from_doubled)
    }

    pub fn leading(&self) -> Option<(i64, &Rational)> {
        self.terms.iter().next_back().map(|(&e, c)| (e, c))
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn has_integer_exponents(&self) -> bool {
        self.terms.keys().all(|e| e % 2 == 0)
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub(crate) fn add_term(&mut self, doubled: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(doubled) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, x)| (e, x * c)).collect(),
        }
    }

    /// Multiplies by `t^{doubled/2}`.
    pub fn shift(&self, doubled: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e + doubled, c.clone()))
                .collect(),
        }
    }

    /// `f(t^k)`. Panics if `k == 0`.
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k != 0, "substitute_power needs a nonzero exponent");
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e * k, c.clone()))
                .collect(),
        }
    }

    /// `f(t^{-1})`.
    pub fn mirror(&self) -> Self {
        self.substitute_power(-1)
    }

    /// Formal derivative in `t`.
    pub fn derivative(&self) -> Self {
        let mut out = Self::zero();
        for (&e, c) in &self.terms {
            out.add_term(e - 2, c * Rational::new(BigInt::from(e), BigInt::from(2)));
        }
        out
    }

    /// Value at `t = 1`.
    pub fn eval_one(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }

    /// True iff `f(t) = f(t^{-1})`.
    pub fn is_symmetric(&self) -> bool {
        self.terms
            .iter()
            .all(|(&e, c)| self.terms.get(&-e) == Some(c))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Exact quotient `self / divisor`, by long division from the top.
    ///
    /// Fails with [`Error::NotDivisible`] when a remainder survives. Panics
    /// on a zero divisor.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        let (d_hi, d_lc) = divisor.leading().expect("division by the zero polynomial");
        let d_lo = divisor.min_doubled().unwrap();
        let inv_lc = d_lc.recip();
        let Some(lo) = self.min_doubled() else {
            return Ok(Self::zero());
        };
        // every quotient exponent lies in [lo - d_lo, hi - d_hi]
        let q_floor = lo - d_lo;

        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((hi, c)) = rem.leading() {
            let q_exp = hi - d_hi;
            if q_exp < q_floor {
                return Err(not_divisible(hi, c));
            }
            let q_c = c * &inv_lc;
            for (e, dc) in divisor.terms() {
                rem.add_term(q_exp + e, -(dc * &q_c));
            }
            quot.add_term(q_exp, q_c);
        }
        Ok(quot)
    }
}

fn not_divisible(doubled: i64, c: &Rational) -> Error {
    Error::NotDivisible {
        remainder: format!("{} t^{}", c, HalfInteger::from_doubled(doubled)),
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&a, x) in &self.terms {
            for (&b, y) in &rhs.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, x| acc + x)
    }
}

impl From<Rational> for LaurentPoly {
    fn from(c: Rational) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(super::rat(c))
    }
}

/// Human-readable form: descending powers, e.g. `3t^5 + 5t^3 + 6t + 6t^-1`.
///
/// Integer exponents print bare (`t^-3`), half-integer ones in parentheses
/// (`t^(3/2)`). Non-integer coefficients print as `a/b` followed by a space
/// (`1/2 t^2`) so the fraction bar is not mistaken for the exponent's.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if e == 0 {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                if abs.is_integer() {
                    write!(f, "{abs}")?;
                } else {
                    write!(f, "{abs} ")?;
                }
            }
            f.write_str("t")?;
            match e {
                2 => {}
                _ if e % 2 == 0 => write!(f, "^{}", e / 2)?,
                _ => write!(f, "^({e}/2)")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// Parses the [`Display`](fmt::Display) syntax back. Also accepts `*`
/// between coefficient and `t`, and arbitrary whitespace.
impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |msg: &str| Error::Syntax {
            line: 1,
            column: 1,
            message: format!("{msg} in polynomial {s:?}"),
        };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty input"));
        }
        // split into signed terms; a sign right after '^' or '(' belongs to the exponent
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut current = String::new();
        let mut negative = false;
        let mut prev: Option<char> = None;
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && !matches!(prev, Some('^') | Some('(')) {
                if !current.is_empty() {
                    terms.push((negative, std::mem::take(&mut current)));
                } else if prev.is_some() {
                    return Err(err("dangling sign"));
                }
                negative = ch == '-';
            } else {
                current.push(ch);
            }
            prev = Some(ch);
        }
        if current.is_empty() {
            return Err(err("trailing sign"));
        }
        terms.push((negative, current));

        let mut out = LaurentPoly::zero();
        for (negative, body) in terms {
            let (coeff_str, exp) = match body.find('t') {
                None => (body.as_str(), 0),
                Some(pos) => {
                    let rest = &body[pos + 1..];
                    let exp = if rest.is_empty() {
                        2
                    } else {
                        let raw = rest.strip_prefix('^').ok_or_else(|| err("expected '^'"))?;
                        let raw = raw
                            .strip_prefix('(')
                            .and_then(|r| r.strip_suffix(')'))
                            .unwrap_or(raw);
                        let h: HalfInteger = raw.parse().map_err(|_| err("bad exponent"))?;
                        h.doubled()
                    };
                    (body[..pos].trim_end_matches('*'), exp)
                }
            };
            let coeff = if coeff_str.is_empty() {
                if exp == 0 {
                    return Err(err("empty term"));
                }
                Rational::one()
            } else {
                parse_rational(coeff_str).ok_or_else(|| err("bad coefficient"))?
            };
            out.add_term(exp, if negative { -coeff } else { coeff });
        }
        Ok(out)
    }
}

/// Parses `z` or `z/w` (no reduction requirement).
pub(crate) fn parse_rational(s: &str) -> Option<Rational> {
    match s.split_once('/') {
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
        Some((n, d)) => {
            let n: BigInt = n.parse().ok()?;
            let d: BigInt = d.parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
    }
}
