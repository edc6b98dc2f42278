//! Strategies shared by the property suites.
#![allow(dead_code)]

use proptest::prelude::*;
use two_loop::algebra::{rat, ratio, LaurentPoly, Rational, RationalFn};
use two_loop::torus::TorusParams;
use two_loop::trivariate::{Direction, GroupElement, Key, ThetaPoly};

pub fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| ratio(n, d))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (prop_oneof![-9i64..=-1, 1i64..=9], 1i64..=4).prop_map(|(n, d)| ratio(n, d))
}

/// Up to `len` terms on the half-integer lattice with doubled exponents in
/// `-span..=span`.
pub fn laurent(span: i64, len: usize) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-span..=span, rational()), 0..=len).prop_map(LaurentPoly::from_terms)
}

pub fn integer_laurent(span: i64, len: usize) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-span..=span, -5i64..=5), 0..=len)
        .prop_map(|terms| LaurentPoly::from_terms(terms.into_iter().map(|(e, c)| (2 * e, rat(c)))))
}

pub fn nonzero_laurent(span: i64, len: usize) -> impl Strategy<Value = LaurentPoly> {
    (laurent(span, len), -span..=span, nonzero_rational())
        .prop_map(|(f, e, c)| f + LaurentPoly::monomial(e, c))
        .prop_filter("nonzero", |f| !f.is_zero())
}

pub fn ratfn() -> impl Strategy<Value = RationalFn> {
    (laurent(6, 4), nonzero_laurent(6, 3)).prop_map(|(n, d)| RationalFn::new(n, d).unwrap())
}

pub fn key(span: i64) -> impl Strategy<Value = Key> {
    (-span..=span, -span..=span)
}

/// A valid record invariant pair: symmetric `Δ` with `Δ(1) = 1`, and a
/// group-invariant `Θ` vanishing at `(1, 1, 1)`.
pub fn record_parts() -> impl Strategy<Value = (LaurentPoly, ThetaPoly)> {
    (integer_laurent(4, 4), theta(4, 4)).prop_map(|(g, t)| {
        let sym = &g + &g.mirror();
        let delta = &sym + &LaurentPoly::constant(rat(1) - sym.eval_one());
        let t = t.symmetrize();
        let t = &t - &ThetaPoly::constant(t.eval_one());
        (delta, t)
    })
}

pub fn theta(span: i64, len: usize) -> impl Strategy<Value = ThetaPoly> {
    prop::collection::vec((key(span), rational()), 0..=len).prop_map(ThetaPoly::from_terms)
}

pub fn group_element() -> impl Strategy<Value = GroupElement> {
    (0usize..12).prop_map(|i| GroupElement::all()[i])
}

pub fn direction() -> impl Strategy<Value = Direction> {
    prop_oneof![
        Just(Direction::T1),
        Just(Direction::T2),
        Just(Direction::T1T2)
    ]
}

/// Coprime `(p, q)` with `1 <= p, q <= max`.
pub fn coprime_pair(max: i64) -> impl Strategy<Value = TorusParams> {
    (1..=max, 1..=max).prop_filter_map("coprime", |(p, q)| TorusParams::new(p, q).ok())
}
