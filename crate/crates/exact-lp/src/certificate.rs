//! Independent verification of solver outcomes.
//!
//! [`check_certificate`] re-derives every claim in an [`LpOutcome`] from the
//! instance alone, using only exact arithmetic. It shares no state with the
//! solver, so a bug there surfaces as `Ok(false)` here rather than being
//! silently believed.
//!
//! Conventions checked:
//!
//! * **Optimal** — the primal assignment names every variable exactly once,
//!   satisfies all constraints and bounds, and evaluates to the claimed
//!   value. Dual multipliers (one per constraint, stated for the
//!   `>=`-normalized row) must be nonnegative on inequality rows. Reduced
//!   costs determine bound multipliers complementarily, and the resulting
//!   dual objective must equal the primal value exactly — strong duality,
//!   checked, not assumed.
//! * **Infeasible** — the Farkas weights have admissible signs, the weighted
//!   combination of rows and bounds cancels every variable exactly, and the
//!   combined right-hand side is strictly positive: a proof that no
//!   assignment exists.
//! * **Unbounded** — the point is feasible and the ray is a recession
//!   direction (consistent with every row and bound) along which the
//!   objective strictly decreases.

use std::collections::BTreeMap;

use crate::instance::{LpInstance, Relation};
use crate::rational::Rational;
use crate::solver::{FarkasCertificate, LpOutcome};

/// A certificate that cannot be evaluated against the instance at all, as
/// opposed to one that evaluates to an invalid proof (`Ok(false)`).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CertificateError {
    #[error("certificate shape does not match instance: {0}")]
    ShapeMismatch(String),
}

type Result<T> = std::result::Result<T, CertificateError>;

fn mismatch(msg: impl Into<String>) -> CertificateError {
    CertificateError::ShapeMismatch(msg.into())
}

/// Checks `out` against `ins`.
///
/// `Ok(true)` means the certificate proves its claim; `Ok(false)` means it
/// does not (wrong value, violated sign condition, infeasible point, …);
/// `Err` means it does not even line up with the instance (unknown variable
/// names, wrong number of multipliers).
pub fn check_certificate(ins: &LpInstance, out: &LpOutcome) -> Result<bool> {
    match out {
        LpOutcome::Optimal {
            value,
            primal,
            duals,
        } => check_optimal(ins, value, primal, duals),
        LpOutcome::Infeasible { farkas } => check_infeasible(ins, farkas),
        LpOutcome::Unbounded { point, ray } => check_unbounded(ins, point, ray),
    }
}

fn check_full_assignment(ins: &LpInstance, map: &BTreeMap<String, Rational>) -> Result<()> {
    for name in map.keys() {
        if ins.variable_index(name).is_none() {
            return Err(mismatch(format!("unknown variable '{name}'")));
        }
    }
    if map.len() != ins.num_variables() {
        return Err(mismatch(format!(
            "assignment names {} of {} variables",
            map.len(),
            ins.num_variables()
        )));
    }
    Ok(())
}

/// Per-constraint coefficient of `var` and rhs, oriented as `>=`
/// (a `<=` row contributes negated values; equalities keep their sign and
/// are handled by the callers' sign rules).
fn normalized_coeff(relation: Relation, v: &Rational) -> Rational {
    match relation {
        Relation::Le => -v,
        Relation::Ge | Relation::Eq => v.clone(),
    }
}

fn check_optimal(
    ins: &LpInstance,
    value: &Rational,
    primal: &BTreeMap<String, Rational>,
    duals: &Vec<Rational>,
) -> Result<bool> {
    check_full_assignment(ins, primal)?;
    if duals.len() != ins.constraints().len() {
        return Err(mismatch(format!(
            "{} dual multipliers for {} constraints",
            duals.len(),
            ins.constraints().len()
        )));
    }
    if !ins.point_feasible(primal) {
        return Ok(false);
    }
    if ins.evaluate_objective(primal) != *value {
        return Ok(false);
    }
    // Inequality multipliers must be nonnegative in the >=-orientation.
    for (con, d) in ins.constraints().iter().zip(duals) {
        if con.relation != Relation::Eq && d.is_negative() {
            return Ok(false);
        }
    }
    // Reduced cost of each variable; its sign dictates which bound must
    // absorb it for the dual to be feasible.
    let mut dual_value = ins.objective_constant().clone();
    for (con, d) in ins.constraints().iter().zip(duals) {
        if !d.is_zero() {
            let t = d * &normalized_coeff(con.relation, &con.rhs);
            dual_value += &t;
        }
    }
    for name in ins.variables() {
        let mut r = ins.objective_coeff(name).clone();
        for (con, d) in ins.constraints().iter().zip(duals) {
            if d.is_zero() {
                continue;
            }
            if let Some(c) = con.coeffs.get(name) {
                let t = d * &normalized_coeff(con.relation, c);
                r -= &t;
            }
        }
        if r.is_positive() {
            // Needs a lower-bound multiplier of exactly r.
            match &ins.bounds(name).expect("known variable").lower {
                Some(l) => {
                    let t = &r * l;
                    dual_value += &t;
                }
                None => return Ok(false),
            }
        } else if r.is_negative() {
            // Needs an upper-bound multiplier of exactly -r.
            match &ins.bounds(name).expect("known variable").upper {
                Some(u) => {
                    let t = &r * u;
                    dual_value += &t;
                }
                None => return Ok(false),
            }
        }
    }
    Ok(dual_value == *value)
}

fn check_infeasible(ins: &LpInstance, farkas: &FarkasCertificate) -> Result<bool> {
    if farkas.constraints.len() != ins.constraints().len() {
        return Err(mismatch(format!(
            "{} constraint weights for {} constraints",
            farkas.constraints.len(),
            ins.constraints().len()
        )));
    }
    for (name, w) in farkas.lower.iter() {
        let bounds = ins
            .bounds(name)
            .map_err(|_| mismatch(format!("unknown variable '{name}' in lower weights")))?;
        if bounds.lower.is_none() || w.is_negative() {
            return Ok(false);
        }
    }
    for (name, w) in farkas.upper.iter() {
        let bounds = ins
            .bounds(name)
            .map_err(|_| mismatch(format!("unknown variable '{name}' in upper weights")))?;
        if bounds.upper.is_none() || w.is_negative() {
            return Ok(false);
        }
    }
    for (con, w) in ins.constraints().iter().zip(&farkas.constraints) {
        if con.relation != Relation::Eq && w.is_negative() {
            return Ok(false);
        }
    }
    // The weighted combination must cancel every variable...
    for name in ins.variables() {
        let mut total = Rational::zero();
        for (con, w) in ins.constraints().iter().zip(&farkas.constraints) {
            if w.is_zero() {
                continue;
            }
            if let Some(c) = con.coeffs.get(name) {
                let t = w * &normalized_coeff(con.relation, c);
                total += &t;
            }
        }
        if let Some(w) = farkas.lower.get(name) {
            total += w;
        }
        if let Some(w) = farkas.upper.get(name) {
            total -= w;
        }
        if !total.is_zero() {
            return Ok(false);
        }
    }
    // ...while the combined right-hand sides stay strictly positive,
    // yielding the contradiction 0 >= (something positive).
    let mut rhs = Rational::zero();
    for (con, w) in ins.constraints().iter().zip(&farkas.constraints) {
        if !w.is_zero() {
            let t = w * &normalized_coeff(con.relation, &con.rhs);
            rhs += &t;
        }
    }
    for (name, w) in farkas.lower.iter() {
        let l = ins.bounds(name).expect("checked above").lower.clone().expect("checked above");
        let t = w * &l;
        rhs += &t;
    }
    for (name, w) in farkas.upper.iter() {
        let u = ins.bounds(name).expect("checked above").upper.clone().expect("checked above");
        let t = w * &u;
        rhs -= &t;
    }
    Ok(rhs.is_positive())
}

fn check_unbounded(
    ins: &LpInstance,
    point: &BTreeMap<String, Rational>,
    ray: &BTreeMap<String, Rational>,
) -> Result<bool> {
    check_full_assignment(ins, point)?;
    check_full_assignment(ins, ray)?;
    if !ins.point_feasible(point) {
        return Ok(false);
    }
    // The ray must keep every row and bound satisfied as it is followed.
    for con in ins.constraints() {
        let drift: Rational = con
            .coeffs
            .iter()
            .map(|(name, c)| c * &ray[name])
            .sum();
        let ok = match con.relation {
            Relation::Ge => !drift.is_negative(),
            Relation::Le => !drift.is_positive(),
            Relation::Eq => drift.is_zero(),
        };
        if !ok {
            return Ok(false);
        }
    }
    for name in ins.variables() {
        let b = ins.bounds(name).expect("known variable");
        let d = &ray[name];
        if b.lower.is_some() && d.is_negative() {
            return Ok(false);
        }
        if b.upper.is_some() && d.is_positive() {
            return Ok(false);
        }
    }
    // And the objective must strictly improve along it.
    let slope: Rational = ins
        .objective_coeffs()
        .iter()
        .map(|(name, c)| c * &ray[name])
        .sum();
    Ok(slope.is_negative())
}
