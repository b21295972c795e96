//! Acceptance gate: one test per shipping criterion, each printing a single
//! `criterion NN (...): PASS/FAIL` line.  These are deliberately
//! independent re-checks — where a criterion concerns a computed result,
//! the expected side is recomputed here from scratch rather than trusted.

mod lp_oracle;

use std::collections::BTreeMap;
use std::time::Instant;

use exact_lp::{check_certificate, parse_lp, parse_mps, solve, LpInstance, LpOutcome, Rational, Relation};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use sextic::scrollar::{OrientedPartition, ScrollarTuple, Sextic};
use sextic::verifier::{
    brute_force_check, build_case_lp, run_verification, run_verification_with, CaseLpOptions,
    CaseSpec, Verdict,
};
use sextic::witness::{realization_witness, WitnessPlan};

fn criterion(num: u32, desc: &str, pass: bool) {
    println!(
        "criterion {num:02} ({desc}): {}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {num:02} ({desc}) failed");
}

fn tuples(max_e5: i64) -> Vec<Sextic> {
    let mut out = Vec::new();
    for e1 in 1..=max_e5 {
        for e2 in e1..=max_e5 {
            for e3 in e2..=max_e5 {
                for e4 in e3..=max_e5 {
                    for e5 in e4..=max_e5 {
                        out.push(Sextic::new([e1, e2, e3, e4, e5]).unwrap());
                    }
                }
            }
        }
    }
    out
}

#[test]
fn criterion_01_case_sweep_passes() {
    let start = Instant::now();
    let report = run_verification().unwrap();
    let elapsed = start.elapsed();
    // Re-check every certificate here, independently of the sweep's own
    // internal re-check.
    let rechecked = report.cases.iter().all(|record| {
        let lp = build_case_lp(&record.case);
        matches!(check_certificate(&lp, &record.outcome), Ok(true))
    });
    criterion(
        1,
        "case sweep passes with checked certificates in under 10s",
        report.verdict == Verdict::Pass
            && report.cases.len() == 100
            && rechecked
            && elapsed.as_secs() < 10,
    );
}

#[test]
fn criterion_02_brute_force_agrees() {
    let start = Instant::now();
    let report = brute_force_check(8);
    let elapsed = start.elapsed();
    criterion(
        2,
        "direct enumeration to e5 = 8 finds no dimension-gap violation in under 60s",
        report.violations.is_empty() && report.comparisons > 0 && elapsed.as_secs() < 60,
    );
}

#[test]
fn criterion_03_mutation_detected() {
    let report = run_verification_with(&CaseLpOptions {
        require_negative_leading: false,
    })
    .unwrap();
    let zero_witness = report.cases.iter().any(|record| match &record.outcome {
        LpOutcome::Optimal { value, .. } => *value == 0,
        _ => false,
    });
    criterion(
        3,
        "dropping the negative-leading-entry constraint flips the verdict",
        report.verdict == Verdict::Fail && zero_witness,
    );
}

#[test]
fn criterion_04_degree_three_realizability() {
    let mut ok = true;
    for e1 in 1..=40i64 {
        for e2 in e1..=40 {
            let t = ScrollarTuple::new(&[e1, e2]).unwrap();
            ok &= t.realizable() == (e2 <= 2 * e1);
        }
    }
    let gap = ScrollarTuple::new(&[1, 3]).unwrap();
    criterion(
        4,
        "degree-3 tuples are realizable exactly when e2 <= 2 e1",
        ok && !gap.realizable(),
    );
}

/// Region classification rebuilt from the raw inequalities, independent of
/// the library's representation.
fn region_by_hand(e: [i64; 5]) -> &'static str {
    let p2 = e[4] <= e[0] + e[3] && e[4] <= e[1] + e[2] && e[2] <= e[0] + e[1] && e[3] <= 2 * e[1];
    let p3 = e[4] <= e[0] + e[3] && e[4] <= e[1] + e[2] && e[1] <= 2 * e[0] && e[3] <= e[0] + e[2];
    let g = |i: usize| e[i - 1];
    let admissible = |i: usize, j: usize, k: usize, l: usize| {
        g(i) + g(j) <= g(k) + g(l)
            && g(j) <= g(i) + g(1)
            && g(l) <= g(k) + g(1)
            && g(k) + g(l) + g(1) <= 2 * (g(i) + g(j))
    };
    let some_admissible = [
        (2, 3, 4, 5),
        (2, 4, 3, 5),
        (2, 5, 3, 4),
        (3, 4, 2, 5),
        (3, 5, 2, 4),
        (4, 5, 2, 3),
    ]
    .iter()
    .any(|&(i, j, k, l)| admissible(i, j, k, l));
    match (p2, p3) {
        (false, false) => "Outside",
        (false, true) => "P3Only",
        (true, true) => "Both",
        (true, false) => {
            if some_admissible {
                "QOnly"
            } else {
                "P2NotQ"
            }
        }
    }
}

#[test]
fn criterion_05_region_classification_cross_check() {
    let mut ok = true;
    for s in tuples(12) {
        ok &= s.classify_region().as_str() == region_by_hand(s.invariants());
    }
    criterion(
        5,
        "region labels match an independent classifier up to e5 = 12",
        ok,
    );
}

#[test]
fn criterion_06_low_tuples_use_leading_partition() {
    let partition = OrientedPartition::new((2, 3), (4, 5)).unwrap();
    let mut ok = true;
    let mut seen = 0u32;
    for s in tuples(12) {
        let e = s.invariants();
        if !s.in_p2() || s.in_p3() || e[4] > e[0] + e[1] {
            continue;
        }
        seen += 1;
        ok &= s.is_admissible(&partition).unwrap() && s.in_q();
    }
    criterion(
        6,
        "P2-not-P3 tuples with e5 <= e1 + e2 admit the {2,3}|{4,5} split",
        ok && seen > 0,
    );
}

#[test]
fn criterion_07_witness_totality() {
    let mut ok = true;
    let mut seen = 0u32;
    for s in tuples(10) {
        if !s.realizable() {
            continue;
        }
        seen += 1;
        match realization_witness(&s) {
            Ok(plan) => {
                let genus = match &plan {
                    WitnessPlan::DoubleOverTriple(p) => p.total_genus,
                    WitnessPlan::TripleOverDouble(p) => p.total_genus,
                };
                ok &= genus == s.genus();
            }
            Err(_) => ok = false,
        }
    }
    criterion(
        7,
        "every realizable tuple up to e5 = 10 yields a witness with matching genus",
        ok && seen > 0,
    );
}

#[test]
fn criterion_08_p6_inside_intersection() {
    let mut ok = true;
    for s in tuples(12) {
        if s.in_p6() {
            ok &= s.in_p2() && s.in_p3();
        }
    }
    criterion(8, "P6 lies inside both P2 and P3 up to e5 = 12", ok);
}

fn small(rng: &mut StdRng) -> Rational {
    Rational::new(rng.gen_range(-4..=4), rng.gen_range(1..=3))
}

fn random_instance(rng: &mut StdRng) -> LpInstance {
    let n_vars = rng.gen_range(1..=6usize);
    let names: Vec<String> = (0..n_vars).map(|i| format!("x{i}")).collect();
    let mut lp = LpInstance::new();
    for name in &names {
        lp.add_variable(name).unwrap();
        // A finite lower bound everywhere keeps the region pointed, so
        // feasibility is decided by vertex enumeration.
        let lower = Rational::from_int(rng.gen_range(-5..=2));
        lp.set_lower(name, Some(lower.clone())).unwrap();
        if rng.gen_bool(0.5) {
            let span = Rational::from_int(rng.gen_range(0..=7));
            lp.set_upper(name, Some(lower + span)).unwrap();
        }
    }
    for name in &names {
        if rng.gen_bool(0.8) {
            lp.add_objective_term(name, small(rng)).unwrap();
        }
    }
    if rng.gen_bool(0.3) {
        lp.add_objective_constant(small(rng));
    }
    for _ in 0..rng.gen_range(0..=10) {
        let mut coeffs = BTreeMap::new();
        for name in &names {
            if rng.gen_bool(0.6) {
                coeffs.insert(name.clone(), small(rng));
            }
        }
        if coeffs.is_empty() {
            coeffs.insert(names[rng.gen_range(0..n_vars)].clone(), small(rng));
        }
        let relation = match rng.gen_range(0..5) {
            0 | 1 => Relation::Le,
            2 | 3 => Relation::Ge,
            _ => Relation::Eq,
        };
        lp.add_constraint(None, coeffs, relation, small(rng)).unwrap();
    }
    lp
}

#[test]
fn criterion_09_solver_certificates_and_oracle() {
    let mut rng = StdRng::seed_from_u64(0x5EC71C);
    let mut ok = true;
    let mut compared = 0u32;
    for _ in 0..1000 {
        let lp = random_instance(&mut rng);
        let outcome = solve(&lp);
        if !matches!(check_certificate(&lp, &outcome), Ok(true)) {
            ok = false;
            break;
        }
        if lp.variables().len() <= 3 {
            compared += 1;
            let oracle = lp_oracle::vertex_optimum(&lp);
            let consistent = match (&outcome, &oracle) {
                (LpOutcome::Optimal { value, .. }, Some(best)) => value == best,
                (LpOutcome::Infeasible { .. }, None) => true,
                // A pointed nonempty region has a vertex even when the
                // objective is unbounded below.
                (LpOutcome::Unbounded { .. }, Some(_)) => true,
                _ => false,
            };
            ok &= consistent;
        }
    }
    criterion(
        9,
        "1000 random instances certify, matching vertex enumeration on small ones",
        ok && compared > 100,
    );
}

/// Hand-built LP/MPS pairs that must parse to the same instance.
fn format_pairs() -> Vec<(&'static str, &'static str)> {
    vec![
        (
            "Minimize\n obj: 2 x + y\nSubject To\n c1: x + y >= 1\n c2: x - y <= 4\nEnd\n",
            "NAME pair1\nROWS\n N obj\n L c2\n G c1\nCOLUMNS\n x obj 2 c1 1\n x c2 1\n y obj 1 c1 1\n y c2 -1\nRHS\n rhs c1 1 c2 4\nENDATA\n",
        ),
        (
            "Maximize\n profit: x - y + 3\nSubject To\n cap: x + y <= 10\nEnd\n",
            "NAME pair2\nOBJSENSE\n MAX\nROWS\n N profit\n L cap\nCOLUMNS\n x profit 1 cap 1\n y profit -1 cap 1\nRHS\n rhs cap 10 profit -3\nENDATA\n",
        ),
        (
            "Minimize\n obj: 1/2 x + 0.25 y\nSubject To\n c1: x + y >= 2\nBounds\n x >= -1\n y <= 3/2\nEnd\n",
            "NAME pair3\nROWS\n N obj\n G c1\nCOLUMNS\n x obj 1/2 c1 1\n y obj 0.25 c1 1\nRHS\n rhs c1 2\nBOUNDS\n LO bnd x -1\n UP bnd y 1.5\nENDATA\n",
        ),
        (
            "Minimize\n obj: x + y + z\nSubject To\n fix: x - y = 0\n band: x + z >= 1\n band_rng: x + z <= 3\nEnd\n",
            "NAME pair4\nROWS\n N obj\n E fix\n G band\nCOLUMNS\n x obj 1 fix 1\n x band 1\n y obj 1 fix -1\n z obj 1 band 1\nRHS\n rhs band 1\nRANGES\n rng band 2\nENDATA\n",
        ),
        (
            "Minimize\n obj: v + w + x + y + z\nSubject To\n c1: v + w + x + y + z >= 0\nBounds\n v = 5\n w free\n x <= -2\n 1 <= y <= 4\nEnd\n",
            "NAME pair5\nROWS\n N obj\n G c1\nCOLUMNS\n v obj 1 c1 1\n w obj 1 c1 1\n x obj 1 c1 1\n y obj 1 c1 1\n z obj 1 c1 1\nBOUNDS\n FX bnd v 5\n FR bnd w\n UP bnd x -2\n LO bnd y 1\n UP bnd y 4\n PL bnd z\nENDATA\n",
        ),
    ]
}

#[test]
fn criterion_10_format_roundtrips() {
    let dir = tempfile::tempdir().unwrap();
    let names = sextic::export_cases(dir.path()).unwrap();
    let mut ok = names.len() == 100;
    for (case, name) in CaseSpec::all().iter().zip(&names) {
        let text = std::fs::read_to_string(dir.path().join(name)).unwrap();
        ok &= parse_lp(&text).unwrap().semantically_equal(&build_case_lp(case));
    }
    for (i, (lp_text, mps_text)) in format_pairs().into_iter().enumerate() {
        let from_lp = parse_lp(lp_text).unwrap_or_else(|e| panic!("pair {i}: LP parse: {e}"));
        let from_mps = parse_mps(mps_text).unwrap_or_else(|e| panic!("pair {i}: MPS parse: {e}"));
        ok &= from_lp.semantically_equal(&from_mps);
    }
    criterion(
        10,
        "exported cases and hand-built LP/MPS pairs round-trip",
        ok,
    );
}
