//! Property tests for the solver: whatever the outcome, its certificate must
//! check out against the instance, and repeated runs must agree exactly.

use std::collections::BTreeMap;

use exact_lp::{check_certificate, solve, LpInstance, LpOutcome, Rational, Relation};
use proptest::prelude::*;

const VAR_POOL: [&str; 4] = ["w", "x", "y", "z"];

fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| Rational::new(n, d))
}

fn relation() -> impl Strategy<Value = Relation> {
    prop_oneof![
        Just(Relation::Le),
        Just(Relation::Eq),
        Just(Relation::Ge),
    ]
}

#[derive(Debug, Clone)]
struct Spec {
    nvars: usize,
    objective: Vec<Option<Rational>>,
    bounds: Vec<(Option<Rational>, Option<Rational>)>,
    constraints: Vec<(Vec<Option<Rational>>, Relation, Rational)>,
}

fn coeff_vec(nvars: usize) -> impl Strategy<Value = Vec<Option<Rational>>> {
    prop::collection::vec(prop::option::of(rational()), nvars)
}

fn spec() -> impl Strategy<Value = Spec> {
    (1usize..=VAR_POOL.len()).prop_flat_map(|nvars| {
        (
            Just(nvars),
            coeff_vec(nvars),
            prop::collection::vec(
                (prop::option::of(rational()), prop::option::of(rational())),
                nvars,
            ),
            prop::collection::vec((coeff_vec(nvars), relation(), rational()), 0..=6),
        )
            .prop_map(|(nvars, objective, bounds, constraints)| Spec {
                nvars,
                objective,
                bounds,
                constraints,
            })
    })
}

fn build(spec: &Spec) -> LpInstance {
    let mut ins = LpInstance::new();
    for v in &VAR_POOL[..spec.nvars] {
        ins.add_variable(v).unwrap();
    }
    for (i, c) in spec.objective.iter().enumerate() {
        if let Some(c) = c {
            ins.add_objective_term(VAR_POOL[i], c.clone()).unwrap();
        }
    }
    for (i, (lo, up)) in spec.bounds.iter().enumerate() {
        ins.set_lower(VAR_POOL[i], lo.clone()).unwrap();
        ins.set_upper(VAR_POOL[i], up.clone()).unwrap();
    }
    for (coeffs, rel, rhs) in &spec.constraints {
        let map: BTreeMap<String, Rational> = coeffs
            .iter()
            .enumerate()
            .filter_map(|(i, c)| c.clone().map(|c| (VAR_POOL[i].to_string(), c)))
            .collect();
        ins.add_constraint(None, map, *rel, rhs.clone()).unwrap();
    }
    ins
}

proptest! {
    #[test]
    fn every_outcome_certifies(spec in spec()) {
        let ins = build(&spec);
        let out = solve(&ins);
        prop_assert_eq!(
            check_certificate(&ins, &out),
            Ok(true),
            "uncertified outcome {:?}",
            out
        );
    }

    #[test]
    fn solving_is_deterministic(spec in spec()) {
        let ins = build(&spec);
        prop_assert_eq!(solve(&ins), solve(&ins));
    }
}

/// Degenerate ties exercise Bland's rule: many rows active at the optimum.
#[test]
fn degenerate_vertex_terminates_and_certifies() {
    let mut ins = LpInstance::new();
    for v in ["x", "y", "z"] {
        ins.add_variable(v).unwrap();
        ins.set_lower(v, Some(Rational::zero())).unwrap();
    }
    // Classic cycling-prone shape: several constraints meet at the origin.
    let rows: [(&[(&str, (i64, i64))], Relation, (i64, i64)); 4] = [
        (&[("x", (1, 4)), ("y", (-8, 1)), ("z", (-1, 1))], Relation::Le, (0, 1)),
        (&[("x", (1, 2)), ("y", (-12, 1)), ("z", (-1, 2))], Relation::Le, (0, 1)),
        (&[("z", (1, 1))], Relation::Le, (1, 1)),
        (&[("x", (1, 1)), ("y", (1, 1)), ("z", (1, 1))], Relation::Ge, (0, 1)),
    ];
    for (coeffs, rel, rhs) in rows {
        let map: BTreeMap<String, Rational> = coeffs
            .iter()
            .map(|(v, (n, d))| (v.to_string(), Rational::new(*n, *d)))
            .collect();
        ins.add_constraint(None, map, rel, Rational::new(rhs.0, rhs.1))
            .unwrap();
    }
    ins.add_objective_term("x", Rational::new(-3, 4)).unwrap();
    ins.add_objective_term("y", Rational::from_int(150)).unwrap();
    ins.add_objective_term("z", Rational::new(-1, 50)).unwrap();
    let out = solve(&ins);
    assert_eq!(check_certificate(&ins, &out), Ok(true), "{out:?}");
}

/// Redundant equalities leave artificials basic after phase 1; the drive-out
/// pass and the inert redundant rows must not disturb the optimum.
#[test]
fn redundant_equalities_are_harmless() {
    let mut ins = LpInstance::new();
    ins.add_variable("x").unwrap();
    ins.add_variable("y").unwrap();
    for k in 1..=3 {
        // x + y = 2, stated three times (scaled).
        let map: BTreeMap<String, Rational> = [
            ("x".to_string(), Rational::from_int(k)),
            ("y".to_string(), Rational::from_int(k)),
        ]
        .into_iter()
        .collect();
        ins.add_constraint(None, map, Relation::Eq, Rational::from_int(2 * k))
            .unwrap();
    }
    ins.add_objective_term("x", Rational::one()).unwrap();
    ins.set_lower("y", Some(Rational::zero())).unwrap();
    ins.set_upper("y", Some(Rational::from_int(5))).unwrap();
    let out = solve(&ins);
    match &out {
        LpOutcome::Optimal { value, primal, .. } => {
            assert_eq!(*value, Rational::from_int(-3));
            assert_eq!(primal["y"], Rational::from_int(5));
        }
        other => panic!("expected optimal, got {other:?}"),
    }
    assert_eq!(check_certificate(&ins, &out), Ok(true));
}
