//! Two-phase primal simplex over exact rationals.
//!
//! The solver never touches floating point: every tableau entry is a
//! [`Rational`]. Bland's smallest-index rule drives both the entering and the
//! leaving choice, which rules out cycling and makes the whole run — and
//! therefore the reported certificate — deterministic for a given instance.
//!
//! Internally the instance is rewritten in standard form: every variable is
//! split as a difference of two nonnegative columns, finite bounds become
//! explicit rows, inequality rows get a slack column, and each row receives
//! an artificial column that doubles as a unit column of the running basis
//! inverse (which is how the dual values are read off at the end).
//!
//! Every outcome carries a certificate that [`crate::check_certificate`] can
//! verify without trusting the solver:
//!
//! * `Optimal` — primal assignment plus one dual multiplier per constraint.
//!   Multipliers are stated for the `>=`-normalized row, so they are
//!   nonnegative on inequality rows and sign-free on equality rows.
//! * `Infeasible` — a Farkas certificate: nonnegative combination weights
//!   over the normalized constraints and the finite bounds whose combination
//!   reads `0 >= positive`.
//! * `Unbounded` — a feasible point and a ray along which the objective
//!   strictly decreases.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::instance::{LpInstance, Relation};
use crate::rational::Rational;

/// Weights proving a constraint system inconsistent.
///
/// `constraints[i]` scales constraint `i` oriented as `>=` (a `<=` row is
/// negated first); `lower[v]` scales the bound `v >= l`, `upper[v]` the bound
/// `v <= u`. All weights are nonnegative except on equality rows, where the
/// sign is free. The combined inequality has zero coefficients and a strictly
/// positive right-hand side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FarkasCertificate {
    pub constraints: Vec<Rational>,
    pub lower: BTreeMap<String, Rational>,
    pub upper: BTreeMap<String, Rational>,
}

/// Result of [`solve`], with its certificate data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum LpOutcome {
    Optimal {
        value: Rational,
        primal: BTreeMap<String, Rational>,
        duals: Vec<Rational>,
    },
    Infeasible {
        farkas: FarkasCertificate,
    },
    Unbounded {
        point: BTreeMap<String, Rational>,
        ray: BTreeMap<String, Rational>,
    },
}

#[derive(Clone, Copy)]
enum RowKind {
    Con(usize),
    Lower(usize),
    Upper(usize),
}

struct RowSpec {
    kind: RowKind,
    coeffs: Vec<(usize, Rational)>,
    relation: Relation,
    rhs: Rational,
}

enum End {
    Optimal,
    Unbounded { entering: usize },
}

struct Tableau {
    a: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    art_start: usize,
    ncols: usize,
}

impl Tableau {
    fn pivot(&mut self, row: usize, col: usize) {
        let p = self.a[row][col].clone();
        debug_assert!(!p.is_zero());
        for v in self.a[row].iter_mut() {
            if !v.is_zero() {
                *v = &*v / &p;
            }
        }
        self.rhs[row] = &self.rhs[row] / &p;
        for k in 0..self.a.len() {
            if k == row || self.a[k][col].is_zero() {
                continue;
            }
            let factor = self.a[k][col].clone();
            for j in 0..self.ncols {
                if !self.a[row][j].is_zero() {
                    let delta = &factor * &self.a[row][j];
                    self.a[k][j] -= &delta;
                }
            }
            let delta = &factor * &self.rhs[row];
            self.rhs[k] -= &delta;
        }
        self.basis[row] = col;
    }

    /// Bland's rule; artificial columns never enter.
    fn run(&mut self, cost: &[Rational]) -> End {
        let m = self.a.len();
        let mut guard = 0usize;
        loop {
            guard += 1;
            assert!(
                guard <= 200_000,
                "simplex iteration guard tripped; anti-cycling rule violated"
            );
            let cb: Vec<Rational> = self.basis.iter().map(|&b| cost[b].clone()).collect();
            let mut entering = None;
            for j in 0..self.art_start {
                let mut r = cost[j].clone();
                for i in 0..m {
                    if !self.a[i][j].is_zero() && !cb[i].is_zero() {
                        let d = &cb[i] * &self.a[i][j];
                        r -= &d;
                    }
                }
                if r.is_negative() {
                    entering = Some(j);
                    break;
                }
            }
            let Some(j) = entering else {
                return End::Optimal;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..m {
                if self.a[i][j].is_positive() {
                    let ratio = &self.rhs[i] / &self.a[i][j];
                    let better = match &leave {
                        None => true,
                        Some((best_row, best)) => {
                            ratio < *best
                                || (ratio == *best && self.basis[i] < self.basis[*best_row])
                        }
                    };
                    if better {
                        leave = Some((i, ratio));
                    }
                }
            }
            let Some((row, _)) = leave else {
                return End::Unbounded { entering: j };
            };
            self.pivot(row, j);
        }
    }

    fn objective_value(&self, cost: &[Rational]) -> Rational {
        self.basis
            .iter()
            .zip(&self.rhs)
            .map(|(&b, r)| &cost[b] * r)
            .sum()
    }

    /// Row duals `y = c_B B^-1`, read off the artificial unit columns.
    fn row_duals(&self, cost: &[Rational]) -> Vec<Rational> {
        let m = self.a.len();
        (0..m)
            .map(|i| {
                self.basis
                    .iter()
                    .zip(self.a.iter())
                    .map(|(&b, row)| &cost[b] * &row[self.art_start + i])
                    .sum()
            })
            .collect()
    }

    fn column_value(&self, col: usize) -> Rational {
        match self.basis.iter().position(|&b| b == col) {
            Some(i) => self.rhs[i].clone(),
            None => Rational::zero(),
        }
    }
}

fn build_rows(ins: &LpInstance) -> Vec<RowSpec> {
    let mut rows = Vec::new();
    for (ci, con) in ins.constraints().iter().enumerate() {
        let coeffs = con
            .coeffs
            .iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|(name, v)| (ins.variable_index(name).expect("validated"), v.clone()))
            .collect();
        rows.push(RowSpec {
            kind: RowKind::Con(ci),
            coeffs,
            relation: con.relation,
            rhs: con.rhs.clone(),
        });
    }
    for (vi, _) in ins.variables().iter().enumerate() {
        let b = ins.bounds_at(vi);
        if let Some(l) = &b.lower {
            rows.push(RowSpec {
                kind: RowKind::Lower(vi),
                coeffs: vec![(vi, Rational::one())],
                relation: Relation::Ge,
                rhs: l.clone(),
            });
        }
        if let Some(u) = &b.upper {
            rows.push(RowSpec {
                kind: RowKind::Upper(vi),
                coeffs: vec![(vi, Rational::one())],
                relation: Relation::Le,
                rhs: u.clone(),
            });
        }
    }
    rows
}

/// Solves `ins` exactly. Always terminates with a certified outcome.
pub fn solve(ins: &LpInstance) -> LpOutcome {
    let n = ins.num_variables();
    let rows = build_rows(ins);
    let m = rows.len();
    let nslack = rows.iter().filter(|r| r.relation != Relation::Eq).count();
    let art_start = 2 * n + nslack;
    let ncols = art_start + m;

    let mut a = vec![vec![Rational::zero(); ncols]; m];
    let mut rhs = vec![Rational::zero(); m];
    let mut flipped = vec![false; m];
    let mut slack_col = 2 * n;
    for (i, row) in rows.iter().enumerate() {
        for (j, v) in &row.coeffs {
            a[i][2 * j] = v.clone();
            a[i][2 * j + 1] = -v;
        }
        match row.relation {
            Relation::Le => {
                a[i][slack_col] = Rational::one();
                slack_col += 1;
            }
            Relation::Ge => {
                a[i][slack_col] = -Rational::one();
                slack_col += 1;
            }
            Relation::Eq => {}
        }
        rhs[i] = row.rhs.clone();
        if rhs[i].is_negative() {
            for v in a[i].iter_mut() {
                if !v.is_zero() {
                    *v = -&*v;
                }
            }
            rhs[i] = -&rhs[i];
            flipped[i] = true;
        }
        a[i][art_start + i] = Rational::one();
    }

    let mut t = Tableau {
        a,
        rhs,
        basis: (0..m).map(|i| art_start + i).collect(),
        art_start,
        ncols,
    };

    // Phase 1: minimize the sum of the artificials.
    let mut cost1 = vec![Rational::zero(); ncols];
    for c in cost1.iter_mut().skip(art_start) {
        *c = Rational::one();
    }
    match t.run(&cost1) {
        End::Optimal => {}
        End::Unbounded { .. } => unreachable!("phase-1 objective is bounded below by zero"),
    }
    if t.objective_value(&cost1).is_positive() {
        let y = t.row_duals(&cost1);
        return LpOutcome::Infeasible {
            farkas: map_infeasibility(ins, &rows, &y, &flipped),
        };
    }

    // Drive leftover artificials out of the basis; rows where that is
    // impossible are redundant and sit inert (all-zero over real columns).
    for r in 0..m {
        if t.basis[r] >= art_start {
            if let Some(col) = (0..art_start).find(|&c| !t.a[r][c].is_zero()) {
                t.pivot(r, col);
            }
        }
    }

    // Phase 2: the real objective over the split columns.
    let mut cost2 = vec![Rational::zero(); ncols];
    for (j, name) in ins.variables().iter().enumerate() {
        let c = ins.objective_coeff(name);
        if !c.is_zero() {
            cost2[2 * j] = c.clone();
            cost2[2 * j + 1] = -c;
        }
    }
    match t.run(&cost2) {
        End::Optimal => {
            let primal = extract_point(ins, &t);
            let value = ins.evaluate_objective(&primal);
            let y = t.row_duals(&cost2);
            let duals = map_duals(ins, &rows, &y, &flipped);
            LpOutcome::Optimal {
                value,
                primal,
                duals,
            }
        }
        End::Unbounded { entering } => {
            let point = extract_point(ins, &t);
            let mut direction = vec![Rational::zero(); t.ncols];
            direction[entering] = Rational::one();
            for (i, &b) in t.basis.iter().enumerate() {
                if !t.a[i][entering].is_zero() {
                    direction[b] = -&t.a[i][entering];
                }
            }
            let ray = ins
                .variables()
                .iter()
                .enumerate()
                .map(|(j, name)| {
                    (name.clone(), &direction[2 * j] - &direction[2 * j + 1])
                })
                .collect();
            LpOutcome::Unbounded { point, ray }
        }
    }
}

fn extract_point(ins: &LpInstance, t: &Tableau) -> BTreeMap<String, Rational> {
    ins.variables()
        .iter()
        .enumerate()
        .map(|(j, name)| {
            let x = t.column_value(2 * j) - t.column_value(2 * j + 1);
            (name.clone(), x)
        })
        .collect()
}

/// Per-row multiplier in the orientation of the *original* row, from the
/// equality-form dual `y` and the sign flips applied during setup.
fn original_multiplier(y: &Rational, flipped: bool) -> Rational {
    if flipped {
        -y
    } else {
        y.clone()
    }
}

fn map_duals(
    ins: &LpInstance,
    rows: &[RowSpec],
    y: &[Rational],
    flipped: &[bool],
) -> Vec<Rational> {
    let mut duals = vec![Rational::zero(); ins.constraints().len()];
    for (i, row) in rows.iter().enumerate() {
        if let RowKind::Con(ci) = row.kind {
            let w = original_multiplier(&y[i], flipped[i]);
            duals[ci] = match row.relation {
                Relation::Le => -w,
                Relation::Ge | Relation::Eq => w,
            };
        }
    }
    duals
}

fn map_infeasibility(
    ins: &LpInstance,
    rows: &[RowSpec],
    y: &[Rational],
    flipped: &[bool],
) -> FarkasCertificate {
    let mut constraints = vec![Rational::zero(); ins.constraints().len()];
    let mut lower = BTreeMap::new();
    let mut upper = BTreeMap::new();
    for (i, row) in rows.iter().enumerate() {
        let w = original_multiplier(&y[i], flipped[i]);
        match row.kind {
            RowKind::Con(ci) => {
                constraints[ci] = match row.relation {
                    Relation::Le => -w,
                    Relation::Ge | Relation::Eq => w,
                };
            }
            RowKind::Lower(vi) => {
                if !w.is_zero() {
                    lower.insert(ins.variables()[vi].clone(), w);
                }
            }
            RowKind::Upper(vi) => {
                if !w.is_zero() {
                    upper.insert(ins.variables()[vi].clone(), -w);
                }
            }
        }
    }
    FarkasCertificate {
        constraints,
        lower,
        upper,
    }
}
