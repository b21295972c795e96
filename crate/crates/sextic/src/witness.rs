//! Numeric construction plans certifying that a tuple is realizable.
//!
//! Realizable degree-6 tuples come in two families, each with its own
//! pipeline.  Tuples in `P3` factor through a trigonal curve: the plan
//! records the splitting-locus dimension count showing a generic line bundle
//! on the base produces the tuple.  Tuples in `Q` factor through a
//! hyperelliptic curve: the plan records the divisor bookkeeping (degrees
//! `D_1`, `D_2`, their reductions, and the branch data `Δ`) that makes the
//! triple cover exist.  Plans certify degree-level feasibility only; they do
//! not exhibit equations.

use crate::scrollar::{OrientedPartition, Sextic};
use crate::splitting::{
    delta, enumerate_bad_types, semireduced_degree, target_dim, target_type, HyperellipticSplit,
    SplittingType, TrigonalBase,
};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WitnessError {
    #[error("tuple {0:?} lies outside P3; the double-over-triple pipeline does not apply")]
    NotInP3([i64; 5]),
    #[error("tuple {0:?} lies outside Q; the triple-over-double pipeline does not apply")]
    NotInQ([i64; 5]),
    #[error("partition {partition} is not admissible for {invariants:?}")]
    NotAdmissible {
        invariants: [i64; 5],
        partition: OrientedPartition,
    },
    #[error("tuple {0:?} lies outside Q ∪ P3 and is not realizable")]
    Unrealizable([i64; 5]),
    /// An invariant that provably holds for every legal input failed.
    /// This is a bug signal, never a legal outcome.
    #[error("internal contradiction: {0}")]
    InternalContradiction(String),
}

/// A competing splitting type together with its locus dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BadLocus {
    pub split: SplittingType,
    pub dim: i64,
}

/// Plan for tuples in `P3`: a double cover of a trigonal curve.
///
/// The base has invariants `(e_1, e_2)`; the bundle pushed down from the
/// double cover must have splitting type `(−e_5, −e_4, −e_3)`.  The plan
/// certifies that the target locus is nonempty and strictly larger than
/// every competing locus, so a generic bundle works.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DoubleOverTriplePlan {
    pub base: TrigonalBase,
    pub base_genus: i64,
    pub delta: i64,
    pub target: SplittingType,
    pub target_dim: i64,
    pub bad_loci: Vec<BadLocus>,
    pub total_genus: i64,
}

/// Plan for tuples in `Q`: a triple cover of a hyperelliptic curve.
///
/// An admissible partition `{i,j} ⊔ {k,l}` fixes two rank-2 splitting types
/// over the genus-`e_1 − 1` base.  The plan tracks the semireduced divisor
/// degrees `deg D_1`, `deg D_2`, moves `m` hyperelliptic pairs from `D_2`
/// into `D_1`'s line bundle, and certifies that the leftover branch data
/// `Δ` has nonnegative degree and that the bundle carrying the defining
/// section is positive enough (`deg ≥ base genus + 1`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TripleOverDoublePlan {
    pub base_genus: i64,
    pub partition: OrientedPartition,
    pub light_split: HyperellipticSplit,
    pub heavy_split: HyperellipticSplit,
    pub deg_l1: i64,
    pub deg_l2: i64,
    pub deg_d1: i64,
    pub deg_d2: i64,
    pub m: i64,
    pub deg_d1_prime: i64,
    pub deg_d2_prime: i64,
    pub delta_coeff: i64,
    pub deg_delta: i64,
    pub deg_section_bundle: i64,
    pub total_genus: i64,
}

/// Either kind of plan, tagged for serialization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WitnessPlan {
    DoubleOverTriple(DoubleOverTriplePlan),
    TripleOverDouble(TripleOverDoublePlan),
}

fn contradiction(e: &Sextic, what: &str) -> WitnessError {
    WitnessError::InternalContradiction(format!("{e}: {what}"))
}

/// Build the double-over-triple plan for a tuple in `P3`.
pub fn plan_double_over_triple(e: &Sextic) -> Result<DoubleOverTriplePlan, WitnessError> {
    if !e.in_p3() {
        return Err(WitnessError::NotInP3(e.invariants()));
    }
    let base = TrigonalBase::new(e.e(1), e.e(2))
        .map_err(|err| contradiction(e, &format!("P3 pair rejected as base: {err}")))?;
    let target = target_type(e);
    let target_dim =
        target_dim(e).map_err(|err| contradiction(e, &format!("target locus empty: {err}")))?;
    let bad = enumerate_bad_types(e)
        .map_err(|err| contradiction(e, &format!("bad-type enumeration failed: {err}")))?;
    let mut bad_loci = Vec::with_capacity(bad.len());
    for split in bad {
        let dim = base
            .dim_splitting_locus(&split)
            .map_err(|err| contradiction(e, &format!("bad type {split} empty: {err}")))?;
        if dim >= target_dim {
            return Err(contradiction(
                e,
                &format!("bad type {split} has dim {dim} >= target dim {target_dim}"),
            ));
        }
        bad_loci.push(BadLocus { split, dim });
    }
    Ok(DoubleOverTriplePlan {
        base,
        base_genus: base.genus(),
        delta: delta(e),
        target,
        target_dim,
        bad_loci,
        total_genus: e.genus(),
    })
}

/// Build the triple-over-double plan for a tuple in `Q`.
///
/// Uses the supplied partition (which must be admissible) or, by default,
/// the lexicographically first admissible one.
pub fn plan_triple_over_double(
    e: &Sextic,
    partition: Option<OrientedPartition>,
) -> Result<TripleOverDoublePlan, WitnessError> {
    if !e.in_q() {
        return Err(WitnessError::NotInQ(e.invariants()));
    }
    let partition = match partition {
        Some(p) => {
            // in_q implies membership in P2, so admissibility is defined.
            if !e.is_admissible(&p).expect("in P2") {
                return Err(WitnessError::NotAdmissible {
                    invariants: e.invariants(),
                    partition: p,
                });
            }
            p
        }
        None => e
            .admissible_partitions()
            .expect("in P2")
            .into_iter()
            .next()
            .expect("in_q guarantees one"),
    };

    let base_genus = e.e(1) - 1;
    let ev = |idx: u8| e.e(idx as usize);
    let (i, j) = partition.light();
    let (k, l) = partition.heavy();
    let light_split = HyperellipticSplit::new([-ev(j), -ev(i)]).expect("indices sorted");
    let heavy_split = HyperellipticSplit::new([-ev(l), -ev(k)]).expect("indices sorted");

    // deg L = e1 − (sum of the invariants in the pair), two ways: directly,
    // and through the rank-2 pushforward relation deg L = split sum + g + 1.
    let deg_l1 = e.e(1) - ev(i) - ev(j);
    let deg_l2 = e.e(1) - ev(k) - ev(l);
    if deg_l1 != -ev(i) - ev(j) + base_genus + 1 || deg_l2 != -ev(k) - ev(l) + base_genus + 1 {
        return Err(contradiction(e, "pushforward degree mismatch"));
    }

    let deg_d1 = semireduced_degree(base_genus, &light_split)
        .map_err(|err| contradiction(e, &format!("light split too wide: {err}")))?;
    let deg_d2 = semireduced_degree(base_genus, &heavy_split)
        .map_err(|err| contradiction(e, &format!("heavy split too wide: {err}")))?;

    let m = deg_d1.min(deg_d2.div_euclid(2));
    let deg_d1_prime = deg_d1 - m;
    let deg_d2_prime = deg_d2 - 2 * m;
    if deg_d1_prime < 0 || deg_d2_prime < 0 {
        return Err(contradiction(e, "reduction left a negative degree"));
    }
    if deg_d1_prime == 0 {
        if 2 * ev(i) - ev(k) < 0 {
            return Err(contradiction(e, "2e_i - e_k negative in the exhausted branch"));
        }
    } else if deg_d2_prime > 1 {
        return Err(contradiction(e, "deg D2' exceeds 1 with D1' remaining"));
    }

    let delta_coeff = 2 * ev(i) - ev(k) - deg_d1_prime;
    let deg_delta = 2 * delta_coeff + deg_d2_prime;
    if deg_delta < 0 {
        return Err(contradiction(e, "branch divisor has negative degree"));
    }

    let deg_section_bundle = deg_l1 - 2 * deg_l2;
    if deg_section_bundle != 2 * (ev(k) + ev(l)) - (ev(i) + ev(j)) - e.e(1) {
        return Err(contradiction(e, "section bundle degree mismatch"));
    }
    if deg_section_bundle < base_genus + 1 {
        return Err(contradiction(e, "section bundle not positive enough"));
    }

    Ok(TripleOverDoublePlan {
        base_genus,
        partition,
        light_split,
        heavy_split,
        deg_l1,
        deg_l2,
        deg_d1,
        deg_d2,
        m,
        deg_d1_prime,
        deg_d2_prime,
        delta_coeff,
        deg_delta,
        deg_section_bundle,
        total_genus: e.genus(),
    })
}

/// Produce whichever plan applies: double-over-triple on `P3`, otherwise
/// triple-over-double on `Q`.  Errors with `Unrealizable` outside both.
pub fn realization_witness(e: &Sextic) -> Result<WitnessPlan, WitnessError> {
    if e.in_p3() {
        plan_double_over_triple(e).map(WitnessPlan::DoubleOverTriple)
    } else if e.in_q() {
        plan_triple_over_double(e, None).map(WitnessPlan::TripleOverDouble)
    } else {
        Err(WitnessError::Unrealizable(e.invariants()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sextic(e: [i64; 5]) -> Sextic {
        Sextic::new(e).unwrap()
    }

    fn pair_partition() -> OrientedPartition {
        OrientedPartition::new((2, 3), (4, 5)).unwrap()
    }

    #[test]
    fn double_over_triple_examples() {
        let plan = plan_double_over_triple(&sextic([3, 4, 4, 4, 4])).unwrap();
        assert_eq!(plan.base.invariants(), (3, 4));
        assert_eq!(plan.base_genus, 5);
        assert_eq!(plan.target_dim, 5);
        let dims: Vec<i64> = plan.bad_loci.iter().map(|b| b.dim).collect();
        assert_eq!(dims, vec![0, 1]);
        assert_eq!(plan.total_genus, 14);

        let trivial = plan_double_over_triple(&sextic([1, 1, 1, 1, 1])).unwrap();
        assert_eq!(trivial.base.invariants(), (1, 1));
        assert_eq!(trivial.target_dim, 0);
        assert!(trivial.bad_loci.is_empty());

        assert_eq!(
            plan_double_over_triple(&sextic([1, 3, 3, 3, 3])),
            Err(WitnessError::NotInP3([1, 3, 3, 3, 3]))
        );
    }

    #[test]
    fn triple_over_double_examples() {
        let plan = plan_triple_over_double(&sextic([1, 3, 3, 3, 3]), Some(pair_partition()))
            .unwrap();
        assert_eq!(plan.base_genus, 0);
        assert_eq!(plan.deg_d1, 1);
        assert_eq!(plan.deg_d2, 1);
        assert_eq!(plan.m, 0);
        assert_eq!(plan.deg_d1_prime, 1);
        assert_eq!(plan.deg_d2_prime, 1);
        assert_eq!(plan.delta_coeff, 2);
        assert_eq!(plan.deg_delta, 5);
        assert_eq!(plan.deg_section_bundle, 5);
        assert_eq!(plan.total_genus, 8);

        let plan = plan_triple_over_double(&sextic([2, 5, 5, 6, 6]), Some(pair_partition()))
            .unwrap();
        assert_eq!(plan.base_genus, 1);
        assert_eq!(plan.deg_d1, 2);
        assert_eq!(plan.deg_d2, 2);
        assert_eq!(plan.m, 1);
        assert_eq!(plan.deg_d1_prime, 1);
        assert_eq!(plan.deg_d2_prime, 0);
        assert_eq!(plan.delta_coeff, 3);
        assert_eq!(plan.deg_delta, 6);

        assert_eq!(
            plan_triple_over_double(&sextic([1, 2, 3, 4, 5]), None),
            Err(WitnessError::NotInQ([1, 2, 3, 4, 5]))
        );
    }

    #[test]
    fn default_partition_is_lexicographically_first() {
        let e = sextic([1, 3, 3, 3, 3]);
        let plan = plan_triple_over_double(&e, None).unwrap();
        assert_eq!(plan.partition, e.admissible_partitions().unwrap()[0]);
    }

    #[test]
    fn inadmissible_partition_rejected() {
        // (2,5,5,6,6) is in Q but not every oriented candidate is admissible:
        // {4,5}|{2,3} puts the heavy weight on the light side.
        let e = sextic([2, 5, 5, 6, 6]);
        let p = OrientedPartition::new((4, 5), (2, 3)).unwrap();
        assert!(matches!(
            plan_triple_over_double(&e, Some(p)),
            Err(WitnessError::NotAdmissible { .. })
        ));
    }

    #[test]
    fn witness_dispatch() {
        assert!(matches!(
            realization_witness(&sextic([1, 2, 3, 4, 5])),
            Ok(WitnessPlan::DoubleOverTriple(_))
        ));
        assert!(matches!(
            realization_witness(&sextic([1, 3, 3, 3, 3])),
            Ok(WitnessPlan::TripleOverDouble(_))
        ));
        assert_eq!(
            realization_witness(&sextic([1, 3, 3, 6, 6])),
            Err(WitnessError::Unrealizable([1, 3, 3, 6, 6]))
        );
    }

    #[test]
    fn plan_genus_matches_tuple_genus() {
        for e1 in 1..=3i64 {
            for e2 in e1..=8 {
                for e3 in e2..=8 {
                    for e4 in e3..=8 {
                        for e5 in e4..=8 {
                            let s = sextic([e1, e2, e3, e4, e5]);
                            if !s.realizable() {
                                continue;
                            }
                            let genus = match realization_witness(&s).unwrap() {
                                WitnessPlan::DoubleOverTriple(p) => p.total_genus,
                                WitnessPlan::TripleOverDouble(p) => p.total_genus,
                            };
                            assert_eq!(genus, s.genus(), "{s}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn triple_over_double_branch_logic() {
        // Every admissible partition of every Q-tuple in range yields a
        // consistent plan, whichever pair absorbs the reduction.
        for e1 in 1..=3i64 {
            for e2 in e1..=8 {
                for e3 in e2..=8 {
                    for e4 in e3..=8 {
                        for e5 in e4..=8 {
                            let s = sextic([e1, e2, e3, e4, e5]);
                            if !s.in_q() {
                                continue;
                            }
                            for p in s.admissible_partitions().unwrap() {
                                let plan = plan_triple_over_double(&s, Some(p)).unwrap();
                                assert_eq!(plan.deg_delta, 2 * plan.delta_coeff + plan.deg_d2_prime);
                                if plan.deg_d1_prime != 0 {
                                    assert!(plan.deg_d2_prime <= 1);
                                }
                                assert!(plan.deg_section_bundle >= plan.base_genus + 1);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn witness_serialization_is_tagged() {
        let plan = realization_witness(&sextic([1, 3, 3, 3, 3])).unwrap();
        let value = serde_json::to_value(&plan).unwrap();
        assert_eq!(value["kind"], "triple_over_double");
        assert_eq!(value["deg_delta"], 5);
        assert_eq!(value["partition"]["light"], serde_json::json!([2, 3]));
        let plan = realization_witness(&sextic([1, 1, 1, 1, 1])).unwrap();
        let value = serde_json::to_value(&plan).unwrap();
        assert_eq!(value["kind"], "double_over_triple");
        assert_eq!(value["target"], serde_json::json!([-1, -1, -1]));
    }
}
