//! The degree 2 and degree 3 Vassiliev invariants.
//!
//! `v2 = -1/2 Δ''(1)` and `v3 = 1/2 Θ̂(1)`.

use crate::algebra::{rat, ratio, Rational};
use crate::cabling::KnotRecord;
use crate::error::{Error, Result};
use crate::torus::TorusParams;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VassilievValues {
    pub v2: Rational,
    pub v3: Rational,
}

impl VassilievValues {
    pub fn of(k: &KnotRecord) -> Result<Self> {
        Ok(Self {
            v2: v2(k),
            v3: v3(k)?,
        })
    }
}

/// `Δ''_K(1)`, by differentiating twice.
pub fn alexander_second_derivative_at_one(k: &KnotRecord) -> Rational {
    k.alexander().derivative().derivative().eval_one()
}

pub fn v2(k: &KnotRecord) -> Rational {
    -alexander_second_derivative_at_one(k) * ratio(1, 2)
}

pub fn v3(k: &KnotRecord) -> Result<Rational> {
    Ok(k.theta_hat()?.eval_one() * ratio(1, 2))
}

/// `p(p^2 - 1) q(q^2 - 1) / 144`.
pub fn v3_torus_closed(p: i64, q: i64) -> Result<Rational> {
    TorusParams::new(p, q)?;
    Ok(cubic(p) * cubic(q) * ratio(1, 144))
}

/// `p^2 v3(K) + 1/12 p(p^2 - 1) q Δ''_K(1) + 1/144 p(p^2 - 1) q(q^2 - 1)`.
pub fn v3_cable_closed(v3_k: &Rational, d2_k: &Rational, p: i64, q: i64) -> Result<Rational> {
    TorusParams::new(p, q)?;
    let middle = cubic(p) * rat(q) * d2_k * ratio(1, 12);
    Ok(rat(p) * rat(p) * v3_k + middle + v3_torus_closed(p, q)?)
}

fn cubic(n: i64) -> Rational {
    rat(n) * (rat(n) * rat(n) - rat(1))
}

/// Fails with [`Error::Validation`] unless both values are integers.
pub fn check_integral(values: &VassilievValues) -> Result<()> {
    for (label, v) in [("v2", &values.v2), ("v3", &values.v3)] {
        if !v.is_integer() {
            return Err(Error::Validation(format!(
                "{label} = {v} is not an integer"
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cabling::cable_record;

    fn torus(p: i64, q: i64) -> KnotRecord {
        KnotRecord::torus(TorusParams::new(p, q).unwrap()).unwrap()
    }

    #[test]
    fn v2_examples() {
        assert_eq!(v2(&KnotRecord::unknot()), rat(0));
        assert_eq!(v2(&torus(3, 2)), rat(-1));
        assert_eq!(v2(&torus(5, 2)), rat(-3));
    }

    #[test]
    fn v3_examples() {
        assert_eq!(v3(&KnotRecord::unknot()).unwrap(), rat(0));
        assert_eq!(v3(&torus(3, 2)).unwrap(), rat(1));
        assert_eq!(v3(&torus(7, 2)).unwrap(), rat(14));
    }

    #[test]
    fn closed_forms() {
        assert_eq!(v3_torus_closed(3, 2).unwrap(), rat(1));
        assert_eq!(v3_torus_closed(5, 2).unwrap(), rat(5));
        assert_eq!(v3_torus_closed(9, 1).unwrap(), rat(0));
        assert!(v3_torus_closed(4, 2).is_err());
        assert_eq!(
            v3_cable_closed(&rat(0), &rat(0), 5, 3).unwrap(),
            v3_torus_closed(5, 3).unwrap()
        );
        assert_eq!(v3_cable_closed(&rat(1), &rat(2), 2, 3).unwrap(), rat(8));
        assert_eq!(
            v3_cable_closed(&ratio(7, 3), &rat(5), 1, 4).unwrap(),
            ratio(7, 3)
        );
        assert!(v3_cable_closed(&rat(0), &rat(0), 3, 6).is_err());
    }

    #[test]
    fn cabled_trefoil_matches_closed_form() {
        let k = torus(3, 2);
        let d2 = alexander_second_derivative_at_one(&k);
        for (p, q) in [(2, 3), (2, 13), (3, 4)] {
            let cable = cable_record(&k, p, q).unwrap();
            let expected = v3_cable_closed(&v3(&k).unwrap(), &d2, p, q).unwrap();
            assert_eq!(v3(&cable).unwrap(), expected, "({p},{q})");
            check_integral(&VassilievValues::of(&cable).unwrap()).unwrap();
        }
    }
}
