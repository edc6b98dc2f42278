//! Closed formulas for torus knots `T(p, q)`.
//!
//! Throughout, `X_k = t^{k/2} - t^{-k/2}` and `Y_k = t^{k/2} + t^{-k/2}`.

use std::fmt;

use num_integer::Integer;
use num_traits::Zero;

use crate::algebra::{rat, ratio, LaurentPoly, RationalFn};
use crate::error::{Error, Result};
use crate::trivariate::{Slot, ThetaPoly};

/// Largest `p * q` accepted; keeps every exponent comfortably inside `i64`.
pub const MAX_PRODUCT: i64 = 1 << 20;

/// Coprime positive parameters of a torus knot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusParams {
    p: i64,
    q: i64,
}

impl TorusParams {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p < 1 || q < 1 {
            return Err(Error::InvalidParams(format!(
                "torus parameters must be positive, got ({p},{q})"
            )));
        }
        if p.gcd(&q) != 1 {
            return Err(Error::InvalidParams(format!(
                "torus parameters must be coprime, got ({p},{q})"
            )));
        }
        if p.checked_mul(q).is_none_or(|pq| pq > MAX_PRODUCT) {
            return Err(Error::InvalidParams(format!(
                "p*q must not exceed {MAX_PRODUCT}, got ({p},{q})"
            )));
        }
        Ok(Self { p, q })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// `(q, p)`; `T(q, p)` is isotopic to `T(p, q)`.
    pub fn swapped(&self) -> Self {
        Self {
            p: self.q,
            q: self.p,
        }
    }

    /// True when one parameter is 1, i.e. the knot is trivial.
    pub fn is_unknot(&self) -> bool {
        self.p == 1 || self.q == 1
    }
}

impl fmt::Display for TorusParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// All coprime pairs `2 <= p <= pmax`, `2 <= q <= qmax`, in lexicographic order.
pub fn coprime_pairs(pmax: i64, qmax: i64) -> Vec<TorusParams> {
    let mut out = Vec::new();
    for p in 2..=pmax {
        for q in 2..=qmax {
            if let Ok(params) = TorusParams::new(p, q) {
                out.push(params);
            }
        }
    }
    out
}

fn x(k: i64) -> LaurentPoly {
    LaurentPoly::half_power_difference(k)
}

fn y(k: i64) -> LaurentPoly {
    LaurentPoly::half_power_sum(k)
}

fn frac(num: LaurentPoly, den: LaurentPoly) -> RationalFn {
    RationalFn::new(num, den).expect("denominators here are nonzero")
}

/// Alexander polynomial `Δ_{T(p,q)} = X_{pq} X_1 / (X_p X_q)`.
pub fn alexander(params: TorusParams) -> Result<LaurentPoly> {
    let (p, q) = (params.p, params.q);
    let num = x(p * q) * x(1);
    let den = x(p) * x(q);
    let delta = num
        .exact_div(&den)
        .map_err(|e| Error::internal("Alexander polynomial of a torus knot", e))?;
    if !delta.is_symmetric() || !delta.has_integer_exponents() || delta.eval_one() != rat(1) {
        return Err(Error::Internal(format!(
            "Alexander polynomial of T{params} is not normalized: {delta}"
        )));
    }
    Ok(delta)
}

/// `φ_{p,q} = Y_p / X_p - q · Y_{pq} / X_{pq}`, reduced. Regular at `t = 1`
/// with value 0 there.
pub fn phi(params: TorusParams) -> RationalFn {
    let (p, q) = (params.p, params.q);
    frac(y(p), x(p)) - frac(y(p * q), x(p * q)).scale(&rat(q))
}

/// `ψ_{p,q} = Δ_{T(p,q)} · φ_{p,q}`.
pub fn psi(params: TorusParams) -> Result<RationalFn> {
    Ok(RationalFn::from_poly(alexander(params)?) * phi(params))
}

/// The expanded form
/// `ψ_{p,q} = X_1 / (X_p X_q) · (Y_p · X_{pq} / X_p - q Y_{pq})`,
/// computed without going through the Alexander polynomial.
pub fn psi_expanded(params: TorusParams) -> RationalFn {
    let (p, q) = (params.p, params.q);
    let inner = RationalFn::from_poly(y(p)) * frac(x(p * q), x(p))
        - RationalFn::from_poly(y(p * q).scale(&rat(q)));
    frac(x(1), x(p) * x(q)) * inner
}

/// The 2-loop polynomial
/// `Θ_{T(p,q)} = -1/4 Σ ψ_{p,q}(t_i) ψ_{q,p}(t_j) Δ_{T(p,q)}(t_k)`,
/// summed over the six orderings `(i, j, k)` of `(1, 2, 3)`.
///
/// The two ψ factors are put over a common denominator `L`, the six products
/// are summed, and `L(t1) L(t2) L(t3)` is divided out exactly.
pub fn theta(params: TorusParams) -> Result<ThetaPoly> {
    let psi_pq = psi(params)?;
    let psi_qp = psi(params.swapped())?;
    if psi_pq.is_zero() || psi_qp.is_zero() {
        return Ok(ThetaPoly::zero());
    }
    let delta = alexander(params)?;

    let g = crate::algebra::gcd(psi_pq.den(), psi_qp.den());
    let common = (psi_pq.den() * psi_qp.den())
        .exact_div(&g)
        .map_err(|e| Error::internal("lcm of ψ denominators", e))?;
    let widen =
        |f: &RationalFn| -> Result<LaurentPoly> { Ok(f.num() * &common.exact_div(f.den())?) };
    let a = widen(&psi_pq).map_err(|e| Error::internal("ψ_{p,q} numerator", e))?;
    let c = widen(&psi_qp).map_err(|e| Error::internal("ψ_{q,p} numerator", e))?;
    let b = &delta * &common;

    let ea: Vec<_> = Slot::ALL.iter().map(|&s| ThetaPoly::embed(&a, s)).collect();
    let ec: Vec<_> = Slot::ALL.iter().map(|&s| ThetaPoly::embed(&c, s)).collect();
    let eb: Vec<_> = Slot::ALL.iter().map(|&s| ThetaPoly::embed(&b, s)).collect();

    let mut numerator = ThetaPoly::zero();
    for (i, j, k) in ORDERINGS {
        numerator = numerator + &(&ea[i] * &ec[j]) * &eb[k];
    }

    let mut theta = numerator;
    for slot in Slot::ALL {
        theta = theta
            .exact_div_slot(&common, slot)
            .map_err(|e| Error::internal("clearing denominators of Θ_T", e))?;
    }
    let theta = theta.scale(&ratio(-1, 4));

    if !theta.has_integer_exponents() || !theta.has_integer_coefficients() {
        return Err(Error::Internal(format!(
            "Θ_T{params} is not an integral polynomial"
        )));
    }
    if !theta.is_symmetric() {
        return Err(Error::Internal(format!(
            "Θ_T{params} is not group invariant"
        )));
    }
    if !theta.eval_one().is_zero() {
        return Err(Error::Internal(format!("Θ_T{params}(1,1,1) != 0")));
    }
    Ok(theta)
}

/// The six orderings `(i, j, k)` of the three slots.
pub(crate) const ORDERINGS: [(usize, usize, usize); 6] = [
    (0, 1, 2),
    (0, 2, 1),
    (1, 0, 2),
    (1, 2, 0),
    (2, 0, 1),
    (2, 1, 0),
];

/// Reduced 2-loop polynomial `ψ_{p,q} ψ_{q,p} / (2 X_1^2)`.
pub fn theta_hat(params: TorusParams) -> Result<LaurentPoly> {
    let product = psi(params)? * psi(params.swapped())?;
    let x1 = x(1);
    let hat = (product * frac(LaurentPoly::one(), (&x1 * &x1).scale(&rat(2))))
        .to_polynomial()
        .map_err(|e| Error::internal("reduced 2-loop polynomial of a torus knot", e))?;
    if !hat.is_symmetric() || !hat.has_integer_exponents() {
        return Err(Error::Internal(format!(
            "Θ̂_T{params} is not symmetric: {hat}"
        )));
    }
    Ok(hat)
}

/// Closed expressions for `Θ̂_{T(p,2)}` and `Θ̂_{T(p,3)}`, evaluated
/// independently of [`theta_hat`]:
///
/// * `q = 2`: `t^2/(t^2-1)^2 · ((p-1)/2 · (t^p + t^-p) - X_{2(p-1)} / X_2)`
/// * `q = 3`: `t^3 Y_p/(t^3-1)^2 · ((p-1) Y_{3p} - 2 X_{3(p-1)} / X_3)`
pub fn theta_hat_closed_form(params: TorusParams) -> Result<LaurentPoly> {
    let p = params.p;
    let value = match params.q {
        2 => {
            let inner = RationalFn::from_poly(y(2 * p).scale(&ratio(p - 1, 2)))
                - frac(x(2 * (p - 1)), x(2));
            let t2m1 = LaurentPoly::t_pow(2) - LaurentPoly::one();
            frac(LaurentPoly::t_pow(2), &t2m1 * &t2m1) * inner
        }
        3 => {
            let inner = RationalFn::from_poly(y(3 * p).scale(&rat(p - 1)))
                - frac(x(3 * (p - 1)).scale(&rat(2)), x(3));
            let t3m1 = LaurentPoly::t_pow(3) - LaurentPoly::one();
            frac(LaurentPoly::t_pow(3) * y(p), &t3m1 * &t3m1) * inner
        }
        q => {
            return Err(Error::InvalidParams(format!(
                "closed form exists only for q = 2 or 3, got q = {q}"
            )))
        }
    };
    value
        .to_polynomial()
        .map_err(|e| Error::internal("closed-form reduced 2-loop polynomial", e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tp(p: i64, q: i64) -> TorusParams {
        TorusParams::new(p, q).unwrap()
    }

    fn poly(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn params_validation() {
        assert!(TorusParams::new(4, 2).is_err());
        assert!(TorusParams::new(3, -2).is_err());
        assert!(TorusParams::new(0, 1).is_err());
        assert!(TorusParams::new(5, 1).is_ok());
        assert!(TorusParams::new(1 << 20, 3).is_err());
        assert!(tp(3, 1).is_unknot());
    }

    #[test]
    fn coprime_pair_enumeration() {
        assert!(coprime_pairs(2, 2).is_empty());
        let pairs: Vec<_> = coprime_pairs(4, 3).iter().map(|t| (t.p(), t.q())).collect();
        assert_eq!(pairs, [(2, 3), (3, 2), (4, 3)]);
    }

    #[test]
    fn alexander_examples() {
        assert_eq!(alexander(tp(3, 2)).unwrap(), poly("t - 1 + t^-1"));
        assert_eq!(alexander(tp(7, 1)).unwrap(), LaurentPoly::one());
        assert_eq!(
            alexander(tp(5, 2)).unwrap(),
            poly("t^2 - t + 1 - t^-1 + t^-2")
        );
    }

    #[test]
    fn phi_degenerate_and_regular() {
        assert!(phi(tp(5, 1)).is_zero());
        assert_eq!(phi(tp(2, 3)).eval_one().unwrap(), rat(0));
    }

    #[test]
    fn psi_for_q_two() {
        for p in [1, 3, 5, 7, 9] {
            let expected = frac(-x(p), y(1));
            assert_eq!(psi(tp(p, 2)).unwrap(), expected, "p = {p}");
        }
        assert!(psi(tp(4, 1)).unwrap().is_zero());
    }

    #[test]
    fn psi_two_forms_agree_5_3() {
        assert_eq!(psi(tp(5, 3)).unwrap(), psi_expanded(tp(5, 3)));
    }

    #[test]
    fn theta_trefoil() {
        let th = theta(tp(3, 2)).unwrap();
        let dom = th.fundamental_domain().unwrap();
        assert_eq!(dom, vec![(2, 0, rat(1)), (2, 1, rat(-1))]);
        assert_eq!(th.specialize(), poly("t^2 - 2t + 2 - 2t^-1 + t^-2"));
        assert!(th.specialize().is_symmetric());
        assert_eq!(th.reduce_theta_hat().unwrap(), poly("t + t^-1"));
    }

    #[test]
    fn theta_degenerate() {
        assert!(theta(tp(5, 1)).unwrap().is_zero());
        assert!(theta(tp(1, 4)).unwrap().is_zero());
        assert!(theta_hat(tp(3, 1)).unwrap().is_zero());
    }

    #[test]
    fn theta_hat_examples() {
        assert_eq!(theta_hat(tp(3, 2)).unwrap(), poly("t + t^-1"));
        assert_eq!(
            theta_hat(tp(7, 3)).unwrap(),
            poly("6t^11 + 10t^8 + 12t^5 + 6t^4 + 12t^2 + 10t + 10t^-1 + 12t^-2 + 6t^-4 + 12t^-5 + 10t^-8 + 6t^-11")
        );
        assert_eq!(
            theta(tp(5, 2)).unwrap().reduce_theta_hat().unwrap(),
            poly("2t^3 + 3t + 3t^-1 + 2t^-3")
        );
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(
            theta_hat_closed_form(tp(7, 2)).unwrap(),
            poly("3t^5 + 5t^3 + 6t + 6t^-1 + 5t^-3 + 3t^-5")
        );
        assert_eq!(
            theta_hat_closed_form(tp(4, 3)).unwrap(),
            poly("3t^5 + 4t^2 + 3t + 3t^-1 + 4t^-2 + 3t^-5")
        );
        assert_eq!(theta_hat_closed_form(tp(3, 2)).unwrap(), poly("t + t^-1"));
        assert!(theta_hat_closed_form(tp(1, 2)).unwrap().is_zero());
        assert!(matches!(
            theta_hat_closed_form(tp(3, 4)),
            Err(Error::InvalidParams(_))
        ));
    }

    #[test]
    fn phi_derivative_at_one() {
        // d/dt φ_{q,p} at 1 equals q(1 - p^2)/6
        for (p, q) in [(2, 3), (3, 2), (5, 2), (3, 7)] {
            let d = phi(tp(q, p)).derivative().eval_one().unwrap();
            assert_eq!(d, ratio(q * (1 - p * p), 6), "({p},{q})");
        }
    }
}
