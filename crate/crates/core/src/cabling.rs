//! Cabling formulas for the Alexander polynomial, the 2-loop polynomial and
//! the reduced 2-loop polynomial, and the [`KnotRecord`] they operate on.

use num_traits::Zero;

use crate::algebra::{rat, ratio, LaurentPoly, RationalFn};
use crate::error::{Error, Result};
use crate::torus::{self, TorusParams};
use crate::trivariate::{GroupElement, Slot, ThetaPoly};

/// A knot known through its Alexander polynomial and 2-loop polynomial.
///
/// `theta` is stored at 12 times the usual normalization. Both invariants
/// are checked on construction, so every record in circulation is valid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotRecord {
    name: String,
    alexander: LaurentPoly,
    theta: ThetaPoly,
    provenance: String,
}

impl KnotRecord {
    /// Validates the invariants and builds the record. The error message
    /// names the first violated invariant.
    pub fn new(
        name: impl Into<String>,
        alexander: LaurentPoly,
        theta: ThetaPoly,
        provenance: impl Into<String>,
    ) -> Result<Self> {
        check_alexander(&alexander).map_err(Error::Validation)?;
        check_theta(&theta).map_err(Error::Validation)?;
        Ok(Self {
            name: name.into(),
            alexander,
            theta,
            provenance: provenance.into(),
        })
    }

    pub fn unknot() -> Self {
        Self {
            name: "unknot".into(),
            alexander: LaurentPoly::one(),
            theta: ThetaPoly::zero(),
            provenance: "unknot".into(),
        }
    }

    /// The torus knot `T(p, q)`, named `T(p,q)`.
    pub fn torus(params: TorusParams) -> Result<Self> {
        let record = Self {
            name: format!("T({},{})", params.p(), params.q()),
            alexander: torus::alexander(params)?,
            theta: torus::theta(params)?,
            provenance: format!("torus:{}:{}", params.p(), params.q()),
        };
        Ok(record)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn alexander(&self) -> &LaurentPoly {
        &self.alexander
    }

    pub fn theta(&self) -> &ThetaPoly {
        &self.theta
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn with_provenance(mut self, provenance: impl Into<String>) -> Self {
        self.provenance = provenance.into();
        self
    }

    /// Same invariants, ignoring name and provenance.
    pub fn same_invariants(&self, other: &KnotRecord) -> bool {
        self.alexander == other.alexander && self.theta == other.theta
    }

    /// `Θ̂(t) = Θ(t, t^{-1}, 1) / (t^{1/2} - t^{-1/2})^2`.
    pub fn theta_hat(&self) -> Result<LaurentPoly> {
        self.theta.reduce_theta_hat()
    }

    fn is_unknot(&self) -> bool {
        self.alexander.is_one() && self.theta.is_zero()
    }
}

fn check_alexander(delta: &LaurentPoly) -> Result<(), String> {
    if !delta.has_integer_exponents() {
        return Err("alexander has half-integer exponents".into());
    }
    if !delta.is_symmetric() {
        return Err("alexander not symmetric".into());
    }
    if delta.eval_one() != rat(1) {
        return Err("alexander(1) != 1".into());
    }
    Ok(())
}

fn check_theta(theta: &ThetaPoly) -> Result<(), String> {
    for (g, label) in [
        (GroupElement::EPSILON, "epsilon"),
        (GroupElement::TRANSPOSITION, "transposition t1<->t2"),
        (GroupElement::THREE_CYCLE, "3-cycle t1->t2->t3"),
    ] {
        if !theta.is_invariant_under(&g) {
            return Err(format!("theta not invariant under {label}"));
        }
    }
    if !theta.eval_one().is_zero() {
        return Err("theta(1,1,1) != 0".into());
    }
    Ok(())
}

fn cable_params(p: i64, q: i64) -> Result<TorusParams> {
    TorusParams::new(p, q).map_err(|e| match e {
        Error::InvalidParams(msg) => Error::InvalidParams(format!("cable {msg}")),
        other => other,
    })
}

/// `Δ_{K^{(p,q)}}(t) = Δ_{T(p,q)}(t) · Δ_K(t^p)`.
pub fn alexander_cable(k: &KnotRecord, p: i64, q: i64) -> Result<LaurentPoly> {
    let params = cable_params(p, q)?;
    Ok(torus::alexander(params)? * k.alexander.substitute_power(p))
}

/// The 2-loop polynomial of the `(p, q)` cable of `k`:
///
/// `Θ_T(t1,t2,t3) + Θ_K(t1^p,t2^p,t3^p)
///   + 1/2 Δ_T(t1)Δ_T(t2)Δ_T(t3) Σ Δ'_K(t_i^p) t_i^p φ_{q,p}(t_j) Δ_K(t_j^p) Δ_K(t_k^p)`
///
/// with `T = T(p, q)` and the sum over orderings `(i, j, k)` of `(1, 2, 3)`.
/// Each summand is regrouped around `ψ_{q,p} = Δ_T φ_{q,p}` so its only
/// denominator lives in `t_j`; summands sharing `j` are divided out together.
pub fn theta_cable(k: &KnotRecord, p: i64, q: i64) -> Result<ThetaPoly> {
    let params = cable_params(p, q)?;
    let mut theta = torus::theta(params)? + k.theta.substitute_power(p);

    let delta_k = &k.alexander;
    if !delta_k.is_one() {
        let psi_qp = torus::psi(params.swapped())?;
        let delta_t = torus::alexander(params)?;
        // Δ'_K(t^p) · t^p
        let euler = delta_k.derivative().substitute_power(p).shift(2 * p);
        let delta_kp = delta_k.substitute_power(p);

        let emb = |f: &LaurentPoly| -> Vec<ThetaPoly> {
            Slot::ALL.iter().map(|&s| ThetaPoly::embed(f, s)).collect()
        };
        // slot i carries the derivative, slot k the plain Alexander factor
        let deriv_side = emb(&(&delta_t * &euler));
        let plain_side = emb(&(&delta_t * &delta_kp));
        let psi_side = emb(&(psi_qp.num() * &delta_kp));

        for (j, psi_j) in psi_side.iter().enumerate() {
            let (i, kk) = match j {
                0 => (1, 2),
                1 => (0, 2),
                _ => (0, 1),
            };
            let pair = &deriv_side[i] * &plain_side[kk] + &deriv_side[kk] * &plain_side[i];
            let summand = (psi_j * &pair)
                .exact_div_slot(psi_qp.den(), Slot::ALL[j])
                .map_err(|e| {
                    Error::internal("clearing the φ denominator in the cabling formula", e)
                })?;
            theta = theta + summand.scale(&ratio(1, 2));
        }
    }

    check_theta(&theta)
        .map_err(|msg| Error::Internal(format!("cabled 2-loop polynomial: {msg}")))?;
    Ok(theta)
}

/// The reduced 2-loop polynomial of the `(p, q)` cable of `k`:
///
/// `Θ̂_T(t) + (X_p / X_1)^2 Θ̂_K(t^p) - t^p / X_1^2 · Δ_T(t) Δ_K(t^p) Δ'_K(t^p) ψ_{q,p}(t)`
///
/// with `X_k = t^{k/2} - t^{-k/2}`.
pub fn theta_hat_cable(k: &KnotRecord, p: i64, q: i64) -> Result<LaurentPoly> {
    let params = cable_params(p, q)?;
    let x1 = LaurentPoly::half_power_difference(1);
    let x1_sq = &x1 * &x1;
    let xp = LaurentPoly::half_power_difference(p);

    let ratio_sq = (&xp * &xp)
        .exact_div(&x1_sq)
        .map_err(|e| Error::internal("(X_p / X_1)^2", e))?;
    let hat_k = k.theta_hat()?;
    let mut hat = torus::theta_hat(params)? + ratio_sq * hat_k.substitute_power(p);

    if !k.alexander.is_one() {
        let psi_qp = torus::psi(params.swapped())?;
        let num = LaurentPoly::t_pow(p)
            * torus::alexander(params)?
            * k.alexander.substitute_power(p)
            * k.alexander.derivative().substitute_power(p);
        let correction = RationalFn::new(num, x1_sq)? * psi_qp;
        let correction = correction
            .to_polynomial()
            .map_err(|e| Error::internal("cabling correction of Θ̂", e))?;
        hat = hat - correction;
    }
    if !hat.is_symmetric() {
        return Err(Error::Internal(format!("cabled Θ̂ is not symmetric: {hat}")));
    }
    Ok(hat)
}

/// The record of the `(p, q)` cable of `k`.
///
/// Cabling the unknot gives the torus knot record `T(p,q)` itself, name and
/// provenance included; other records are named `name^(p,q)` with the
/// operation appended to the provenance.
pub fn cable_record(k: &KnotRecord, p: i64, q: i64) -> Result<KnotRecord> {
    let params = cable_params(p, q)?;
    let alexander = alexander_cable(k, p, q)?;
    let theta = theta_cable(k, p, q)?;
    check_alexander(&alexander)
        .map_err(|msg| Error::Internal(format!("cabled Alexander polynomial: {msg}")))?;
    let (name, provenance) = if k.is_unknot() {
        (
            format!("T({},{})", params.p(), params.q()),
            format!("torus:{}:{}", params.p(), params.q()),
        )
    } else {
        (
            format!("{}^({p},{q})", k.name),
            format!("{}; cable:{p}:{q}", k.provenance),
        )
    };
    Ok(KnotRecord {
        name,
        alexander,
        theta,
        provenance,
    })
}
