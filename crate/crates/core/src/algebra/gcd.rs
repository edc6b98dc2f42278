use num_traits::{One, Zero};

use super::{LaurentPoly, Rational};

/// Dense ordinary polynomial in `s = t^{1/2}`, lowest coefficient first.
type Dense = Vec<Rational>;

fn to_dense(f: &LaurentPoly) -> Dense {
    let lo = f.min_doubled().unwrap_or(0);
    let hi = f.max_doubled().unwrap_or(-1);
    let mut out = vec![Rational::zero(); (hi - lo + 1).max(0) as usize];
    for (e, c) in f.terms() {
        out[(e - lo) as usize] = c.clone();
    }
    out
}

fn from_dense(d: &[Rational]) -> LaurentPoly {
    LaurentPoly::from_terms(d.iter().enumerate().map(|(i, c)| (i as i64, c.clone())))
}

fn trim(d: &mut Dense) {
    while d.last().is_some_and(|c| c.is_zero()) {
        d.pop();
    }
}

fn make_monic(d: &mut Dense) {
    if let Some(lc) = d.last().cloned() {
        if !lc.is_one() {
            for c in d.iter_mut() {
                *c /= &lc;
            }
        }
    }
}

/// Remainder of `a` modulo monic `b`.
fn rem_monic(mut a: Dense, b: &[Rational]) -> Dense {
    let db = b.len() - 1;
    while a.len() > db {
        let lead = a.pop().unwrap();
        if lead.is_zero() {
            continue;
        }
        let shift = a.len() - db;
        for (i, bc) in b[..db].iter().enumerate() {
            a[shift + i] -= &lead * bc;
        }
    }
    trim(&mut a);
    a
}

/// Canonical gcd of two Laurent polynomials in `t^{1/2}`.
///
/// Laurent units are the nonzero monomials, so the gcd is only defined up to
/// one; the representative returned has lowest doubled exponent 0 and
/// leading coefficient 1. `gcd(0, 0) = 0`.
pub fn gcd(f: &LaurentPoly, g: &LaurentPoly) -> LaurentPoly {
    let mut a = to_dense(f);
    let mut b = to_dense(g);
    trim(&mut a);
    trim(&mut b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    if b.is_empty() {
        make_monic(&mut a);
        return from_dense(&a);
    }
    make_monic(&mut b);
    loop {
        let mut r = rem_monic(a, &b);
        if r.is_empty() {
            return from_dense(&b);
        }
        make_monic(&mut r);
        a = b;
        b = r;
    }
}
