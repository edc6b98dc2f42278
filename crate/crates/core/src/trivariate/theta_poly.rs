use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::group::{apply_key_map, GroupElement};
use crate::algebra::{HalfInteger, LaurentPoly, Rational};
use crate::error::{Error, Result};

/// Doubled exponent pair `(n, m)` standing for `t1^{n/2} t2^{m/2}`.
pub type Key = (i64, i64);

/// One of the three variables `t1`, `t2`, `t3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Slot {
    T1,
    T2,
    T3,
}

impl Slot {
    pub const ALL: [Slot; 3] = [Slot::T1, Slot::T2, Slot::T3];

    pub fn index(self) -> usize {
        match self {
            Slot::T1 => 0,
            Slot::T2 => 1,
            Slot::T3 => 2,
        }
    }
}

/// The variable, or monomial, a univariate divisor is a polynomial in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    T1,
    T2,
    /// The monomial `t1 t2 = t3^{-1}`.
    T1T2,
}

/// An element of `Q[t1^{±1/2}, t2^{±1/2}, t3^{±1/2}] / (t1 t2 t3 = 1)`.
///
/// Stored in canonical form with `t3 = (t1 t2)^{-1}` eliminated, keyed by
/// doubled exponent pairs, so two elements are equal iff their term maps
/// are.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ThetaPoly {
    terms: BTreeMap<Key, Rational>,
}

impl ThetaPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial((0, 0), c)
    }

    pub fn monomial(key: Key, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(key, c);
        }
        Self { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Key, Rational)>) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    /// Reads `f` as a polynomial in the given variable.
    pub fn embed(f: &LaurentPoly, slot: Slot) -> Self {
        let key = |e: i64| match slot {
            Slot::T1 => (e, 0),
            Slot::T2 => (0, e),
            Slot::T3 => (-e, -e),
        };
        Self {
            terms: f.terms().map(|(e, c)| (key(e), c.clone())).collect(),
        }
    }

    /// Reads `f` as a polynomial in `t1 t2`.
    pub fn embed_direction(f: &LaurentPoly, direction: Direction) -> Self {
        match direction {
            Direction::T1 => Self::embed(f, Slot::T1),
            Direction::T2 => Self::embed(f, Slot::T2),
            Direction::T1T2 => Self::embed(&f.mirror(), Slot::T3),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Key, &Rational)> + '_ {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn coeff(&self, key: Key) -> Rational {
        self.terms.get(&key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn has_integer_exponents(&self) -> bool {
        self.terms.keys().all(|&(n, m)| n % 2 == 0 && m % 2 == 0)
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub(crate) fn add_term(&mut self, key: Key, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
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

    fn add_term_ref(&mut self, key: Key, c: &Rational) {
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
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
            terms: self.terms.iter().map(|(&k, x)| (k, x * c)).collect(),
        }
    }

    fn map_keys(&self, f: impl Fn(Key) -> Key) -> Self {
        Self {
            terms: self.terms.iter().map(|(&k, c)| (f(k), c.clone())).collect(),
        }
    }

    /// `a(t1^p, t2^p, t3^p)`. Panics if `p == 0`.
    pub fn substitute_power(&self, p: i64) -> Self {
        assert!(p != 0, "substitute_power needs a nonzero exponent");
        self.map_keys(|(n, m)| (n * p, m * p))
    }

    pub fn act(&self, g: &GroupElement) -> Self {
        let map = g.key_map();
        self.map_keys(|k| apply_key_map(&map, k))
    }

    /// Sum of the images under all 12 group elements.
    pub fn symmetrize(&self) -> Self {
        let mut out = Self::zero();
        for g in GroupElement::all() {
            let map = g.key_map();
            for (&k, c) in &self.terms {
                out.add_term_ref(apply_key_map(&map, k), c);
            }
        }
        out
    }

    pub fn is_invariant_under(&self, g: &GroupElement) -> bool {
        let map = g.key_map();
        self.terms
            .iter()
            .all(|(&k, c)| self.terms.get(&apply_key_map(&map, k)) == Some(c))
    }

    /// Invariant under the whole group (checked on generators).
    pub fn is_symmetric(&self) -> bool {
        [
            GroupElement::EPSILON,
            GroupElement::TRANSPOSITION,
            GroupElement::THREE_CYCLE,
        ]
        .iter()
        .all(|g| self.is_invariant_under(g))
    }

    /// `a(1, 1, 1)`.
    pub fn eval_one(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }

    /// `a(t, t^{-1}, 1)`.
    pub fn specialize(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms.iter().map(|(&(n, m), c)| (n - m, c.clone())))
    }

    /// `a(t, t^{-1}, 1) / (t^{1/2} - t^{-1/2})^2`.
    pub fn reduce_theta_hat(&self) -> Result<LaurentPoly> {
        let x1 = LaurentPoly::half_power_difference(1);
        self.specialize().exact_div(&(&x1 * &x1))
    }

    /// Highest power of `t1` in the canonical form.
    pub fn degree_t1(&self) -> Result<HalfInteger> {
        self.terms
            .keys()
            .map(|&(n, _)| n)
            .max()
            .map(HalfInteger::from_doubled)
            .ok_or(Error::ZeroPolynomial)
    }

    /// Coefficients of `t1^n t2^m` with `0 <= 2m <= n`, sorted by `(n, m)`,
    /// with true (not doubled) integer exponents.
    pub fn fundamental_domain(&self) -> Result<Vec<(i64, i64, Rational)>> {
        if let Some((&(n, m), _)) = self
            .terms
            .iter()
            .find(|((n, m), _)| n % 2 != 0 || m % 2 != 0)
        {
            return Err(Error::HalfIntegerExponent(format!(
                "t1^{} t2^{}",
                HalfInteger::from_doubled(n),
                HalfInteger::from_doubled(m)
            )));
        }
        let mut out: Vec<_> = self
            .terms
            .iter()
            .map(|(&(n, m), c)| (n / 2, m / 2, c.clone()))
            .filter(|&(n, m, _)| 0 <= 2 * m && 2 * m <= n)
            .collect();
        out.sort_by_key(|&(n, m, _)| (n, m));
        Ok(out)
    }

    /// Exact quotient by `g` read as a polynomial in `direction`.
    pub fn exact_div_factor(&self, g: &LaurentPoly, direction: Direction) -> Result<ThetaPoly> {
        match direction {
            Direction::T1 => self.exact_div_first(g),
            Direction::T2 => Ok(self
                .map_keys(|(n, m)| (m, n))
                .exact_div_first(g)?
                .map_keys(|(n, m)| (m, n))),
            // (n, m) -> (n, m - n) turns (t1 t2)^k into a pure power of the
            // first variable; the inverse is (n, m) -> (n, m + n)
            Direction::T1T2 => Ok(self.map_keys(shear).exact_div_first(g)?.map_keys(unshear)),
        }
    }

    /// Exact quotient by `g(t_slot)`.
    pub fn exact_div_slot(&self, g: &LaurentPoly, slot: Slot) -> Result<ThetaPoly> {
        match slot {
            Slot::T1 => self.exact_div_factor(g, Direction::T1),
            Slot::T2 => self.exact_div_factor(g, Direction::T2),
            Slot::T3 => self.exact_div_factor(&g.mirror(), Direction::T1T2),
        }
    }

    /// Long division in the first variable; coefficients are Laurent
    /// polynomials in the second.
    fn exact_div_first(&self, g: &LaurentPoly) -> Result<ThetaPoly> {
        let (g_hi, g_lc) = g.leading().expect("division by the zero polynomial");
        let g_lo = g.min_doubled().unwrap();
        let inv_lc = g_lc.recip();
        let g_terms: Vec<(i64, Rational)> = g.terms().map(|(e, c)| (e, c * &inv_lc)).collect();

        let mut columns: BTreeMap<i64, BTreeMap<i64, Rational>> = BTreeMap::new();
        for (&(n, m), c) in &self.terms {
            columns.entry(n).or_default().insert(m, c.clone());
        }
        let Some(&lo) = columns.keys().next() else {
            return Ok(Self::zero());
        };
        let q_floor = lo - g_lo;

        let mut quotient = ThetaPoly::zero();
        while let Some((hi, column)) = columns.pop_last() {
            let q_n = hi - g_hi;
            if q_n < q_floor {
                let (m, c) = column.into_iter().next().unwrap();
                return Err(Error::NotDivisible {
                    remainder: format!(
                        "{} t1^{} t2^{}",
                        c,
                        HalfInteger::from_doubled(hi),
                        HalfInteger::from_doubled(m)
                    ),
                });
            }
            // the top term of g cancels `column` exactly; only lower ones remain
            for (e, gc) in &g_terms[..g_terms.len() - 1] {
                let target = columns.entry(q_n + e).or_default();
                for (&m, c) in &column {
                    let delta = c * gc;
                    match target.entry(m) {
                        Entry::Vacant(v) => {
                            v.insert(-delta);
                        }
                        Entry::Occupied(mut o) => {
                            *o.get_mut() -= delta;
                            if o.get().is_zero() {
                                o.remove();
                            }
                        }
                    }
                }
                if target.is_empty() {
                    columns.remove(&(q_n + e));
                }
            }
            for (m, c) in column {
                quotient.terms.insert((q_n, m), c * &inv_lc);
            }
        }
        Ok(quotient)
    }
}

fn shear((n, m): Key) -> Key {
    (n, m - n)
}

fn unshear((n, m): Key) -> Key {
    (n, m + n)
}

impl Add<&ThetaPoly> for &ThetaPoly {
    type Output = ThetaPoly;
    fn add(self, rhs: &ThetaPoly) -> ThetaPoly {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term_ref(k, c);
        }
        out
    }
}

impl Sub<&ThetaPoly> for &ThetaPoly {
    type Output = ThetaPoly;
    fn sub(self, rhs: &ThetaPoly) -> ThetaPoly {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, -c.clone());
        }
        out
    }
}

/// Coefficients as `i128` when all are integers of at most 62 bits.
fn small_integer_terms(a: &ThetaPoly) -> Option<Vec<(Key, i128)>> {
    const LIMIT: i128 = 1 << 62;
    a.terms
        .iter()
        .map(|(&k, c)| {
            if !c.is_integer() {
                return None;
            }
            let v = c.numer().to_i128()?;
            (v.abs() < LIMIT).then_some((k, v))
        })
        .collect()
}

/// Convolution in machine integers; `None` on overflow.
fn mul_small(a: &[(Key, i128)], b: &[(Key, i128)]) -> Option<ThetaPoly> {
    let mut acc: HashMap<Key, i128> = HashMap::with_capacity(a.len().max(b.len()) * 4);
    for &((n1, m1), x) in a {
        for &((n2, m2), y) in b {
            let slot = acc.entry((n1 + n2, m1 + m2)).or_insert(0);
            *slot = slot.checked_add(x * y)?;
        }
    }
    Some(ThetaPoly {
        terms: acc
            .into_iter()
            .filter(|&(_, v)| v != 0)
            .map(|(k, v)| (k, Rational::from_integer(BigInt::from(v))))
            .collect(),
    })
}

impl Mul<&ThetaPoly> for &ThetaPoly {
    type Output = ThetaPoly;
    fn mul(self, rhs: &ThetaPoly) -> ThetaPoly {
        if let (Some(a), Some(b)) = (small_integer_terms(self), small_integer_terms(rhs)) {
            if let Some(out) = mul_small(&a, &b) {
                return out;
            }
        }
        let mut out = ThetaPoly::zero();
        for (&(a, b), x) in &self.terms {
            for (&(c, d), y) in &rhs.terms {
                out.add_term((a + c, b + d), x * y);
            }
        }
        out
    }
}

impl Neg for &ThetaPoly {
    type Output = ThetaPoly;
    fn neg(self) -> ThetaPoly {
        ThetaPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<ThetaPoly> for ThetaPoly {
            type Output = ThetaPoly;
            fn $method(self, rhs: ThetaPoly) -> ThetaPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&ThetaPoly> for ThetaPoly {
            type Output = ThetaPoly;
            fn $method(self, rhs: &ThetaPoly) -> ThetaPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl fmt::Debug for ThetaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("ThetaPoly{")?;
        for (i, ((n, m), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({n},{m}):{c}")?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn embed_examples() {
        let a = ThetaPoly::embed(&p("t - 1 + t^-1"), Slot::T1);
        assert_eq!(
            a,
            ThetaPoly::from_terms([((2, 0), rat(1)), ((0, 0), rat(-1)), ((-2, 0), rat(1))])
        );
        assert_eq!(
            ThetaPoly::embed(&p("t"), Slot::T3),
            ThetaPoly::monomial((-2, -2), rat(1))
        );
        for slot in Slot::ALL {
            assert_eq!(
                ThetaPoly::embed(&LaurentPoly::one(), slot),
                ThetaPoly::one()
            );
        }
    }

    #[test]
    fn quotient_relation() {
        let t = p("t");
        let prod = ThetaPoly::embed(&t, Slot::T1)
            * ThetaPoly::embed(&t, Slot::T2)
            * ThetaPoly::embed(&t, Slot::T3);
        assert_eq!(prod, ThetaPoly::one());
        let a = ThetaPoly::embed(&p("t^2 - 3"), Slot::T2);
        assert_eq!(&a * &ThetaPoly::one(), a);
        assert_eq!(
            ThetaPoly::embed(&t, Slot::T1) * ThetaPoly::embed(&p("t^-1"), Slot::T1),
            ThetaPoly::one()
        );
    }

    #[test]
    fn symmetrize_examples() {
        assert_eq!(
            ThetaPoly::constant(rat(5)).symmetrize(),
            ThetaPoly::constant(rat(60))
        );
        let s = ThetaPoly::monomial((2, 0), rat(1)).symmetrize();
        let mut expected = ThetaPoly::zero();
        for slot in Slot::ALL {
            expected = expected + ThetaPoly::embed(&p("2t + 2t^-1"), slot);
        }
        assert_eq!(s, expected);
        assert!(s.is_symmetric());
        for g in GroupElement::all() {
            assert_eq!(s.act(g), s);
        }
    }

    #[test]
    fn specialize_constant() {
        assert_eq!(ThetaPoly::constant(rat(3)).specialize(), p("3"));
    }

    #[test]
    fn reduce_zero() {
        assert!(ThetaPoly::zero().reduce_theta_hat().unwrap().is_zero());
    }

    #[test]
    fn division_by_constructed_products() {
        let b = ThetaPoly::from_terms([((2, 1), rat(3)), ((0, -4), rat(-1)), ((1, 1), rat(2))]);
        let g = p("t - 2 + t^-1");
        let a = ThetaPoly::embed(&g, Slot::T1) * &b;
        assert_eq!(a.exact_div_factor(&g, Direction::T1).unwrap(), b);

        let h = p("t + t^-1");
        let a = ThetaPoly::embed(&h, Slot::T3) * &b;
        assert_eq!(a.exact_div_factor(&h, Direction::T1T2).unwrap(), b);
        assert_eq!(a.exact_div_slot(&h, Slot::T3).unwrap(), b);

        let a = ThetaPoly::embed(&g, Slot::T2) * &b;
        assert_eq!(a.exact_div_factor(&g, Direction::T2).unwrap(), b);
    }

    #[test]
    fn division_failure_reports_remainder() {
        let err = ThetaPoly::embed(&p("t - 1"), Slot::T1)
            .exact_div_factor(&p("t + 1"), Direction::T1)
            .unwrap_err();
        assert!(matches!(err, Error::NotDivisible { .. }));
    }

    #[test]
    fn fundamental_domain_edge_cases() {
        assert!(ThetaPoly::zero().fundamental_domain().unwrap().is_empty());
        let half = ThetaPoly::monomial((1, 0), rat(1));
        assert!(matches!(
            half.fundamental_domain(),
            Err(Error::HalfIntegerExponent(_))
        ));
    }

    #[test]
    fn degree_t1_examples() {
        assert_eq!(
            ThetaPoly::one().degree_t1().unwrap(),
            HalfInteger::from_integer(0)
        );
        assert_eq!(ThetaPoly::zero().degree_t1(), Err(Error::ZeroPolynomial));
        let a = ThetaPoly::from_terms([((3, 0), rat(1)), ((-8, 2), rat(1))]);
        assert_eq!(a.degree_t1().unwrap(), HalfInteger::from_doubled(3));
    }
}
