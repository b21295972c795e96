//! Vertex-enumeration optimum oracle for tiny instances, independent of the
//! simplex implementation: collect every constraint and finite-bound
//! hyperplane, solve each n-subset exactly, keep the feasible intersection
//! points, and minimize the objective over them.
//!
//! Sound for pointed feasible regions (here guaranteed by giving every
//! variable a finite lower bound): a nonempty pointed polyhedron has a
//! vertex, and a finite minimum is attained at one.  `None` therefore means
//! infeasible, and `Some(v)` is the true minimum whenever the instance is
//! bounded below.

use std::collections::BTreeMap;

use exact_lp::{LpInstance, Rational};

type Row = (Vec<Rational>, Rational);

pub fn vertex_optimum(lp: &LpInstance) -> Option<Rational> {
    let vars: Vec<String> = lp.variables().to_vec();
    let n = vars.len();
    assert!((1..=3).contains(&n), "oracle is for 1-3 variables");
    let mut rows: Vec<Row> = Vec::new();
    for c in lp.constraints() {
        let coeffs = vars
            .iter()
            .map(|v| c.coeffs.get(v).cloned().unwrap_or_else(Rational::zero))
            .collect();
        rows.push((coeffs, c.rhs.clone()));
    }
    for (i, v) in vars.iter().enumerate() {
        let b = lp.bounds(v).expect("listed variable");
        for value in [b.lower.clone(), b.upper.clone()].into_iter().flatten() {
            let mut coeffs = vec![Rational::zero(); n];
            coeffs[i] = Rational::one();
            rows.push((coeffs, value));
        }
    }

    let mut best: Option<Rational> = None;
    for subset in subsets(rows.len(), n) {
        let Some(x) = solve_square(&rows, &subset) else {
            continue;
        };
        let point: BTreeMap<String, Rational> = vars.iter().cloned().zip(x).collect();
        if !lp.point_feasible(&point) {
            continue;
        }
        let value = lp.evaluate_objective(&point);
        best = match best.take() {
            Some(b) if b <= value => Some(b),
            _ => Some(value),
        };
    }
    best
}

fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, m: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..m {
            current.push(i);
            rec(i + 1, m, k, current, out);
            current.pop();
        }
    }
    rec(0, m, k, &mut current, &mut out);
    out
}

/// Exact solution of the square system picked out by `subset`, or `None`
/// if it is singular.
fn solve_square(rows: &[Row], subset: &[usize]) -> Option<Vec<Rational>> {
    let n = subset.len();
    let mut a: Vec<Vec<Rational>> = subset
        .iter()
        .map(|&r| {
            let mut row = rows[r].0.clone();
            row.push(rows[r].1.clone());
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let p = a[col][col].clone();
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone() / p.clone();
            for c in col..=n {
                let delta = factor.clone() * a[col][c].clone();
                a[r][c] = a[r][c].clone() - delta;
            }
        }
    }
    Some(
        (0..n)
            .map(|i| a[i][n].clone() / a[i][i].clone())
            .collect(),
    )
}
