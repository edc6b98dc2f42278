//! Self-check harness: re-derives the golden tables and every cross-identity
//! between the modules over a range of torus knots.
//!
//! Checks run in parallel but the [`Report`] lists them in a fixed order:
//! golden tables first, then per pair in `(p, q)` lexicographic order.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use rayon::prelude::*;

use crate::algebra::{rat, ratio, LaurentPoly, Rational};
use crate::cabling::{self, KnotRecord};
use crate::error::{Error, Result};
use crate::tables;
use crate::torus::{self, TorusParams};
use crate::trivariate::ThetaPoly;
use crate::vassiliev;

/// Cabling checks only run on pairs with both parameters at most this.
pub const CABLING_LIMIT: i64 = 5;

/// Source of torus-knot 2-loop polynomials under test.
pub type ThetaProvider = dyn Fn(TorusParams) -> Result<ThetaPoly> + Send + Sync;

type PairCheck = fn(TorusParams, &ThetaPoly) -> std::result::Result<(), String>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    /// Empty iff the check passed.
    pub failure: Option<String>,
}

impl Check {
    fn new(name: impl Into<String>, outcome: Result<(), String>) -> Self {
        Self {
            name: name.into(),
            failure: outcome.err(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub pmax: i64,
    pub qmax: i64,
    pub pairs: Vec<TorusParams>,
    pub checks: Vec<Check>,
    /// Observations that are reported but not asserted.
    pub notes: Vec<String>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} pairs with 2 <= p <= {}, 2 <= q <= {}",
            self.pairs.len(),
            self.pmax,
            self.qmax
        )?;
        for check in &self.checks {
            match &check.failure {
                None => writeln!(f, "PASS {}", check.name)?,
                Some(why) => writeln!(f, "FAIL {}: {why}", check.name)?,
            }
        }
        for note in &self.notes {
            writeln!(f, "NOTE {note}")?;
        }
        let failed = self.failures().count();
        writeln!(f, "{} passed, {failed} failed", self.checks.len() - failed)
    }
}

pub struct Verifier {
    pmax: i64,
    qmax: i64,
    provider: Box<ThetaProvider>,
}

impl Verifier {
    pub fn new(pmax: i64, qmax: i64) -> Result<Self> {
        if pmax < 2 || qmax < 2 {
            return Err(Error::InvalidParams(format!(
                "pmax and qmax must be at least 2, got {pmax} and {qmax}"
            )));
        }
        Ok(Self {
            pmax,
            qmax,
            provider: Box::new(torus::theta),
        })
    }

    /// Replaces the computation of `Θ_{T(p,q)}` that the checks compare
    /// against everything else.
    pub fn with_theta_provider(
        mut self,
        provider: impl Fn(TorusParams) -> Result<ThetaPoly> + Send + Sync + 'static,
    ) -> Self {
        self.provider = Box::new(provider);
        self
    }

    pub fn run(&self) -> Report {
        let pairs = torus::coprime_pairs(self.pmax, self.qmax);
        let in_range = |t: &TorusParams| t.p() <= self.pmax && t.q() <= self.qmax;

        let mut wanted: Vec<TorusParams> = pairs.iter().flat_map(|t| [*t, t.swapped()]).collect();
        wanted.sort();
        wanted.dedup();
        let thetas: BTreeMap<TorusParams, Result<ThetaPoly, String>> = wanted
            .into_par_iter()
            .map(|t| (t, (self.provider)(t).map_err(|e| e.to_string())))
            .collect();
        let theta = |t: &TorusParams| thetas[t].clone();

        let mut jobs: Vec<Box<dyn Fn() -> Check + Send + Sync + '_>> = Vec::new();
        if let Some(t) = pairs.iter().copied().find(|t| (t.p(), t.q()) == (7, 2)) {
            jobs.push(Box::new(move || {
                Check::new(
                    "golden grid (7,2)",
                    theta(&t).and_then(|th| check_grid(&th)),
                )
            }));
        }
        for (t, golden) in tables::golden_domain_blocks() {
            if in_range(&t) {
                jobs.push(Box::new(move || {
                    let outcome = theta(&t).and_then(|th| check_domain(t, &th, &golden));
                    Check::new(format!("golden domain {t}"), outcome)
                }));
            }
        }
        for (t, golden) in tables::golden_theta_hat_rows() {
            if in_range(&t) {
                jobs.push(Box::new(move || {
                    let outcome = theta(&t).and_then(|th| check_theta_hat_row(&th, &golden));
                    Check::new(format!("golden theta-hat {t}"), outcome)
                }));
            }
        }
        for t in &pairs {
            let t = *t;
            let per_pair: [(&str, PairCheck); 6] = [
                ("theta-hat", check_theta_hat),
                ("degree-genus", check_degree),
                ("v3-closed", check_v3_closed),
                ("collapse", check_collapse),
                ("psi-forms", |t, _| check_psi_forms(t)),
                ("phi-derivative", |t, _| check_phi_derivative(t)),
            ];
            for (name, f) in per_pair {
                jobs.push(Box::new(move || {
                    Check::new(format!("{t} {name}"), theta(&t).and_then(|th| f(t, &th)))
                }));
            }
            jobs.push(Box::new(move || {
                let outcome = theta(&t).and_then(|a| {
                    let b = theta(&t.swapped())?;
                    first_difference(&a, &b).map_or(Ok(()), |d| {
                        Err(format!("T{t} and T{} differ at {d}", t.swapped()))
                    })
                });
                Check::new(format!("{t} symmetry"), outcome)
            }));
            if [2, 3].contains(&t.q()) || [2, 3].contains(&t.p()) {
                jobs.push(Box::new(move || {
                    Check::new(format!("{t} closed-form"), check_closed_form(t))
                }));
            }
            if t.p() <= CABLING_LIMIT && t.q() <= CABLING_LIMIT {
                jobs.push(Box::new(move || {
                    Check::new(format!("{t} specialization"), check_specialization(t))
                }));
                jobs.push(Box::new(move || {
                    Check::new(format!("{t} v3-cable"), check_v3_cable(t))
                }));
            }
        }

        let checks = jobs.par_iter().map(|job| job()).collect();
        let notes = pairs
            .par_iter()
            .filter(|t| t.p() <= CABLING_LIMIT && t.q() <= CABLING_LIMIT)
            .filter_map(|&t| integrality_note(t))
            .collect();
        Report {
            pmax: self.pmax,
            qmax: self.qmax,
            pairs,
            checks,
            notes,
        }
    }
}

fn show<T>(r: Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn cell_text(c: &Rational) -> String {
    if c.is_zero() {
        "0".into()
    } else {
        c.to_string()
    }
}

/// First cell where `actual` disagrees with `expected`, zeros included.
fn compare_cells(expected: &tables::Cells, actual: &tables::Cells) -> Result<(), String> {
    let zero = Rational::zero();
    let mut keys: Vec<_> = expected.keys().chain(actual.keys()).collect();
    keys.sort_by_key(|&&(n, m)| (std::cmp::Reverse(m), n));
    keys.dedup();
    for &(n, m) in keys {
        let e = expected.get(&(n, m)).unwrap_or(&zero);
        let a = actual.get(&(n, m)).unwrap_or(&zero);
        if e != a {
            return Err(format!(
                "cell n={n} m={m}: expected {}, got {}",
                cell_text(e),
                cell_text(a)
            ));
        }
    }
    Ok(())
}

fn check_grid(theta: &ThetaPoly) -> Result<(), String> {
    let expected = tables::parse_grid(tables::GOLDEN_GRID_7_2).ok_or("unreadable golden grid")?;
    compare_cells(&expected, &show(tables::integer_cells(theta))?)?;
    let rendered = show(tables::render_grid(theta))?;
    if rendered != tables::GOLDEN_GRID_7_2 {
        return Err("rendered grid differs from the golden text".into());
    }
    Ok(())
}

fn check_domain(params: TorusParams, theta: &ThetaPoly, golden: &str) -> Result<(), String> {
    let rows: Vec<&str> = golden.lines().skip(1).collect();
    let expected = tables::parse_domain_rows(&rows).ok_or("unreadable golden block")?;
    let actual: tables::Cells = show(theta.fundamental_domain())?
        .into_iter()
        .map(|(n, m, c)| ((n, m), c))
        .collect();
    compare_cells(&expected, &actual)?;
    if show(tables::render_domain(params, theta))? != golden {
        return Err("rendered block differs from the golden text".into());
    }
    Ok(())
}

fn check_theta_hat_row(theta: &ThetaPoly, golden: &str) -> Result<(), String> {
    let expected: LaurentPoly = show(golden.parse())?;
    let hat = show(theta.reduce_theta_hat())?;
    if !hat.is_symmetric() {
        return Err(format!("Θ̂ is not symmetric: {hat}"));
    }
    let nonnegative = LaurentPoly::from_terms(
        hat.terms()
            .filter(|&(e, _)| e >= 0)
            .map(|(e, c)| (e, c.clone())),
    );
    compare_univariate(&expected, &nonnegative)
}

fn compare_univariate(expected: &LaurentPoly, actual: &LaurentPoly) -> Result<(), String> {
    let mut keys: Vec<i64> = expected
        .terms()
        .chain(actual.terms())
        .map(|(e, _)| e)
        .collect();
    keys.sort_unstable_by(|a, b| b.cmp(a));
    keys.dedup();
    for e in keys {
        let (x, y) = (expected.coeff(e), actual.coeff(e));
        if x != y {
            let power = crate::algebra::HalfInteger::from_doubled(e);
            return Err(format!(
                "coefficient of t^{power}: expected {}, got {}",
                cell_text(&x),
                cell_text(&y)
            ));
        }
    }
    Ok(())
}

/// First key where two theta polynomials differ, described in true exponents.
pub fn first_difference(a: &ThetaPoly, b: &ThetaPoly) -> Option<String> {
    let mut keys: Vec<_> = a.terms().chain(b.terms()).map(|(k, _)| k).collect();
    keys.sort_unstable();
    keys.dedup();
    keys.into_iter()
        .find(|&k| a.coeff(k) != b.coeff(k))
        .map(|(n, m)| {
            let (n, m) = (
                crate::algebra::HalfInteger::from_doubled(n),
                crate::algebra::HalfInteger::from_doubled(m),
            );
            let (x, y) = (
                a.coeff((n.doubled(), m.doubled())),
                b.coeff((n.doubled(), m.doubled())),
            );
            format!("t1^{n} t2^{m} ({} vs {})", cell_text(&x), cell_text(&y))
        })
}

fn check_theta_hat(params: TorusParams, theta: &ThetaPoly) -> Result<(), String> {
    let reduced = show(theta.reduce_theta_hat())?;
    let direct = show(torus::theta_hat(params))?;
    if !reduced.is_symmetric() {
        return Err(format!("reduction is not symmetric: {reduced}"));
    }
    compare_univariate(&direct, &reduced)
}

fn check_degree(params: TorusParams, theta: &ThetaPoly) -> Result<(), String> {
    let degree = show(theta.degree_t1())?;
    let genus2 = (params.p() - 1) * (params.q() - 1);
    if degree.to_integer() != Some(genus2) {
        return Err(format!("degree in t1 is {degree}, expected {genus2}"));
    }
    Ok(())
}

fn check_v3_closed(params: TorusParams, theta: &ThetaPoly) -> Result<(), String> {
    let v3 = show(theta.reduce_theta_hat())?.eval_one() * ratio(1, 2);
    let closed = show(vassiliev::v3_torus_closed(params.p(), params.q()))?;
    if v3 != closed || !v3.is_integer() {
        return Err(format!("v3 = {v3}, closed form gives {closed}"));
    }
    Ok(())
}

fn check_collapse(params: TorusParams, theta: &ThetaPoly) -> Result<(), String> {
    let cabled = show(cabling::theta_cable(
        &KnotRecord::unknot(),
        params.p(),
        params.q(),
    ))?;
    match first_difference(&cabled, theta) {
        Some(d) => Err(format!("cable of the unknot differs at {d}")),
        None => Ok(()),
    }
}

fn check_psi_forms(params: TorusParams) -> Result<(), String> {
    let direct = show(torus::psi(params))?;
    let expanded = torus::psi_expanded(params);
    if direct != expanded {
        return Err(format!("ψ = {direct}, expanded form gives {expanded}"));
    }
    Ok(())
}

fn check_phi_derivative(params: TorusParams) -> Result<(), String> {
    let (p, q) = (params.p(), params.q());
    let value = show(torus::phi(params.swapped()).derivative().eval_one())?;
    let expected = rat(q) * (rat(1) - rat(p) * rat(p)) * ratio(1, 6);
    if value != expected {
        return Err(format!("φ'_{{q,p}}(1) = {value}, expected {expected}"));
    }
    Ok(())
}

fn check_closed_form(params: TorusParams) -> Result<(), String> {
    let oriented = if [2, 3].contains(&params.q()) {
        params
    } else {
        params.swapped()
    };
    let closed = show(torus::theta_hat_closed_form(oriented))?;
    let general = show(torus::theta_hat(params))?;
    compare_univariate(&closed, &general)
}

fn bases() -> Result<Vec<KnotRecord>> {
    Ok(vec![
        KnotRecord::unknot(),
        KnotRecord::torus(TorusParams::new(3, 2)?)?,
        KnotRecord::torus(TorusParams::new(5, 2)?)?,
    ])
}

fn check_specialization(params: TorusParams) -> Result<(), String> {
    for k in show(bases())? {
        let (p, q) = (params.p(), params.q());
        let reduced = show(show(cabling::theta_cable(&k, p, q))?.reduce_theta_hat())?;
        let direct = show(cabling::theta_hat_cable(&k, p, q))?;
        compare_univariate(&direct, &reduced).map_err(|e| format!("base {}: {e}", k.name()))?;
    }
    Ok(())
}

fn check_v3_cable(params: TorusParams) -> Result<(), String> {
    let k = show(KnotRecord::torus(
        TorusParams::new(3, 2).map_err(|e| e.to_string())?,
    ))?;
    let cable = show(cabling::cable_record(&k, params.p(), params.q()))?;
    let values = show(vassiliev::VassilievValues::of(&cable))?;
    show(vassiliev::check_integral(&values))?;
    let d2 = vassiliev::alexander_second_derivative_at_one(&k);
    let v3k = show(vassiliev::v3(&k))?;
    let closed = show(vassiliev::v3_cable_closed(
        &v3k,
        &d2,
        params.p(),
        params.q(),
    ))?;
    if values.v3 != closed {
        return Err(format!(
            "v3 of the cable is {}, closed form gives {closed}",
            values.v3
        ));
    }
    Ok(())
}

/// Whether the 2-loop polynomial of the `(p, q)` cable of the trefoil has
/// integer coefficients.
fn integrality_note(params: TorusParams) -> Option<String> {
    let k = KnotRecord::torus(TorusParams::new(3, 2).ok()?).ok()?;
    let cable = cabling::cable_record(&k, params.p(), params.q()).ok()?;
    let integral = cable.theta().has_integer_coefficients();
    Some(format!(
        "{} theta coefficients {}",
        cable.name(),
        if integral {
            "integral"
        } else {
            "not all integral"
        }
    ))
}
