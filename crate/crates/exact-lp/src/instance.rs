//! The linear-program model shared by the solver, the certificate checker and
//! the file formats.
//!
//! An [`LpInstance`] is always a *minimization* problem: a linear objective
//! (coefficients plus a constant term), a list of named linear constraints
//! with relation `<=`, `=` or `>=`, and optional per-variable bounds.
//! Variables are **free by default** — a variable with no recorded bounds may
//! take any rational value. Instances are built through the mutating methods
//! below, which validate as they go, so a constructed instance is always
//! well-formed: every coefficient references a declared variable, and names
//! are unique identifiers.

use std::collections::{BTreeMap, BTreeSet};

use crate::rational::Rational;

/// Direction of a linear constraint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

impl Relation {
    /// Does `lhs relation rhs` hold?
    pub fn holds(self, lhs: &Rational, rhs: &Rational) -> bool {
        match self {
            Relation::Le => lhs <= rhs,
            Relation::Eq => lhs == rhs,
            Relation::Ge => lhs >= rhs,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Eq => "=",
            Relation::Ge => ">=",
        }
    }
}

/// One linear constraint `sum(coeffs) relation rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub name: String,
    pub coeffs: BTreeMap<String, Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

impl Constraint {
    /// Value of the left-hand side at `point` (absent variables count as 0).
    pub fn lhs_at(&self, point: &BTreeMap<String, Rational>) -> Rational {
        self.coeffs
            .iter()
            .map(|(v, c)| match point.get(v) {
                Some(x) => c * x,
                None => Rational::zero(),
            })
            .sum()
    }

    pub fn satisfied_by(&self, point: &BTreeMap<String, Rational>) -> bool {
        self.relation.holds(&self.lhs_at(point), &self.rhs)
    }
}

/// Optional lower/upper bound pair for a variable; `None` means unbounded on
/// that side.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VarBounds {
    pub lower: Option<Rational>,
    pub upper: Option<Rational>,
}

impl VarBounds {
    pub fn contains(&self, x: &Rational) -> bool {
        self.lower.as_ref().is_none_or(|l| x >= l) && self.upper.as_ref().is_none_or(|u| x <= u)
    }
}

/// Error raised while building an instance.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InstanceError {
    #[error("variable `{0}` is not declared")]
    UndeclaredVariable(String),
    #[error("variable `{0}` is already declared")]
    DuplicateVariable(String),
    #[error("constraint name `{0}` is already in use")]
    DuplicateConstraintName(String),
    #[error("`{0}` is not a valid identifier")]
    InvalidName(String),
}

/// A minimization problem over named rational variables.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LpInstance {
    name: Option<String>,
    variables: Vec<String>,
    bounds: Vec<VarBounds>,
    objective_coeffs: BTreeMap<String, Rational>,
    objective_constant: Rational,
    constraints: Vec<Constraint>,
}

/// Identifiers: ASCII letters, digits and underscore, not starting with a
/// digit. This is the set the LP/MPS writers can round-trip.
pub(crate) fn valid_identifier(s: &str) -> bool {
    let mut bytes = s.bytes();
    match bytes.next() {
        Some(b) if b.is_ascii_alphabetic() || b == b'_' => {}
        _ => return false,
    }
    bytes.all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

impl LpInstance {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_name(name: &str) -> Self {
        LpInstance {
            name: Some(name.to_string()),
            ..Self::default()
        }
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn set_name(&mut self, name: Option<String>) {
        self.name = name;
    }

    // ---- variables -------------------------------------------------------

    pub fn add_variable(&mut self, name: &str) -> Result<usize, InstanceError> {
        if !valid_identifier(name) {
            return Err(InstanceError::InvalidName(name.to_string()));
        }
        if self.variables.iter().any(|v| v == name) {
            return Err(InstanceError::DuplicateVariable(name.to_string()));
        }
        self.variables.push(name.to_string());
        self.bounds.push(VarBounds::default());
        Ok(self.variables.len() - 1)
    }

    /// Index of `name` if declared.
    pub fn variable_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    pub fn num_variables(&self) -> usize {
        self.variables.len()
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn bounds(&self, name: &str) -> Result<&VarBounds, InstanceError> {
        let i = self
            .variable_index(name)
            .ok_or_else(|| InstanceError::UndeclaredVariable(name.to_string()))?;
        Ok(&self.bounds[i])
    }

    pub fn bounds_at(&self, index: usize) -> &VarBounds {
        &self.bounds[index]
    }

    pub fn set_lower(&mut self, name: &str, lower: Option<Rational>) -> Result<(), InstanceError> {
        let i = self
            .variable_index(name)
            .ok_or_else(|| InstanceError::UndeclaredVariable(name.to_string()))?;
        self.bounds[i].lower = lower;
        Ok(())
    }

    pub fn set_upper(&mut self, name: &str, upper: Option<Rational>) -> Result<(), InstanceError> {
        let i = self
            .variable_index(name)
            .ok_or_else(|| InstanceError::UndeclaredVariable(name.to_string()))?;
        self.bounds[i].upper = upper;
        Ok(())
    }

    // ---- objective -------------------------------------------------------

    /// Adds `coeff * name` to the objective (terms accumulate).
    pub fn add_objective_term(&mut self, name: &str, coeff: Rational) -> Result<(), InstanceError> {
        if self.variable_index(name).is_none() {
            return Err(InstanceError::UndeclaredVariable(name.to_string()));
        }
        let entry = self
            .objective_coeffs
            .entry(name.to_string())
            .or_insert_with(Rational::zero);
        *entry += coeff;
        Ok(())
    }

    pub fn add_objective_constant(&mut self, value: Rational) {
        self.objective_constant += value;
    }

    pub fn objective_coeff(&self, name: &str) -> Rational {
        self.objective_coeffs
            .get(name)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn objective_coeffs(&self) -> &BTreeMap<String, Rational> {
        &self.objective_coeffs
    }

    pub fn objective_constant(&self) -> &Rational {
        &self.objective_constant
    }

    /// Objective value at a (complete or partial) assignment; absent
    /// variables count as 0.
    pub fn evaluate_objective(&self, point: &BTreeMap<String, Rational>) -> Rational {
        let terms: Rational = self
            .objective_coeffs
            .iter()
            .map(|(v, c)| match point.get(v) {
                Some(x) => c * x,
                None => Rational::zero(),
            })
            .sum();
        terms + &self.objective_constant
    }

    /// Negates every objective coefficient and the constant (used to fold a
    /// maximization source into the canonical minimization form).
    pub fn negate_objective(&mut self) {
        for c in self.objective_coeffs.values_mut() {
            *c = -c.clone();
        }
        self.objective_constant = -self.objective_constant.clone();
    }

    // ---- constraints -----------------------------------------------------

    /// Appends a constraint. `name: None` auto-names it `c<k>`.
    pub fn add_constraint(
        &mut self,
        name: Option<&str>,
        coeffs: BTreeMap<String, Rational>,
        relation: Relation,
        rhs: Rational,
    ) -> Result<usize, InstanceError> {
        for var in coeffs.keys() {
            if self.variable_index(var).is_none() {
                return Err(InstanceError::UndeclaredVariable(var.clone()));
            }
        }
        let name = match name {
            Some(n) => {
                if !valid_identifier(n) {
                    return Err(InstanceError::InvalidName(n.to_string()));
                }
                if self.constraints.iter().any(|c| c.name == n) {
                    return Err(InstanceError::DuplicateConstraintName(n.to_string()));
                }
                n.to_string()
            }
            None => {
                let mut k = self.constraints.len() + 1;
                loop {
                    let candidate = format!("c{k}");
                    if !self.constraints.iter().any(|c| c.name == candidate) {
                        break candidate;
                    }
                    k += 1;
                }
            }
        };
        self.constraints.push(Constraint {
            name,
            coeffs,
            relation,
            rhs,
        });
        Ok(self.constraints.len() - 1)
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    // ---- evaluation ------------------------------------------------------

    /// Does `point` satisfy every constraint and every bound?
    pub fn point_feasible(&self, point: &BTreeMap<String, Rational>) -> bool {
        self.constraints.iter().all(|c| c.satisfied_by(point))
            && self.variables.iter().enumerate().all(|(i, v)| {
                let x = point.get(v).cloned().unwrap_or_else(Rational::zero);
                self.bounds[i].contains(&x)
            })
    }

    // ---- comparison ------------------------------------------------------

    /// Semantic equality: same variables with the same bounds and objective,
    /// and the same multiset of constraints (zero coefficients dropped,
    /// constraint names and variable order ignored).
    pub fn semantically_equal(&self, other: &LpInstance) -> bool {
        let vars = |ins: &LpInstance| -> BTreeMap<String, VarBounds> {
            ins.variables
                .iter()
                .cloned()
                .zip(ins.bounds.iter().cloned())
                .collect()
        };
        if vars(self) != vars(other) {
            return false;
        }
        let obj = |ins: &LpInstance| -> BTreeMap<String, Rational> {
            ins.objective_coeffs
                .iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(v, c)| (v.clone(), c.clone()))
                .collect()
        };
        if obj(self) != obj(other) || self.objective_constant != other.objective_constant {
            return false;
        }
        let canon = |ins: &LpInstance| -> BTreeSet<(Vec<(String, Rational)>, Relation, Rational)> {
            ins.constraints
                .iter()
                .map(|c| {
                    let coeffs: Vec<_> = c
                        .coeffs
                        .iter()
                        .filter(|(_, x)| !x.is_zero())
                        .map(|(v, x)| (v.clone(), x.clone()))
                        .collect();
                    (coeffs, c.relation, c.rhs.clone())
                })
                .collect()
        };
        canon(self) == canon(other)
    }
}
