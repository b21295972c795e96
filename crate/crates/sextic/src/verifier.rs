//! Exact LP re-verification of the dimension-gap claim behind the
//! double-over-triple pipeline.
//!
//! The claim: for every tuple in `P3` and every competing splitting type,
//! the target locus dimension strictly exceeds the competing one.  Both
//! dimensions are piecewise-linear in the tuple and the type, so the claim
//! splits into finitely many *cases*, one per combination of linear branches.
//! Each case becomes one rational LP — minimize (target dim − competing dim)
//! over the relaxed case region — and the claim holds if every case is
//! infeasible or has strictly positive minimum.  All strict inequalities are
//! integer-tightened (`<` becomes `≤ −1` against integers) before
//! relaxation, so a positive relaxation minimum is conclusive.
//!
//! Every solver outcome carries a certificate and is re-checked here;
//! [`brute_force_check`] cross-checks the verdict against direct enumeration.

use crate::scrollar::Sextic;
use crate::splitting::SplittingType;
use exact_lp::{
    check_certificate, solve, write_lp, LpInstance, LpOutcome, Rational, Relation,
};
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

#[derive(Debug, thiserror::Error)]
pub enum VerifierError {
    /// The solver returned an outcome whose certificate does not check.
    #[error("solver failure on {case}: {reason}")]
    SolverFailure { case: String, reason: String },
    #[error("case export failed: {0}")]
    Io(#[from] std::io::Error),
}

/// Branch choice for one entry-pair gap inside a narrow-spread case:
/// the gap is exactly zero, or at least one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairGap {
    Zero,
    Gap,
}

impl PairGap {
    fn letter(self) -> char {
        match self {
            PairGap::Zero => 'z',
            PairGap::Gap => 'g',
        }
    }
}

/// Which linear branch of the dimension formula a splitting type falls in,
/// measured by its spread `a_3 − a_1` against the base pair `(e_1, e_2)`.
///
/// `Narrow` (spread ≤ `e_1`) uses dimension `g − μ` and needs a branch
/// choice per pair gap to linearize `μ`; `Middle` (strictly between) uses
/// `e_2 −` spread; `Full` (spread = `e_2`) pins dimension 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpreadCase {
    Narrow([PairGap; 3]),
    Middle,
    Full,
}

impl SpreadCase {
    /// The ten variants: eight narrow branch patterns (last pair fastest),
    /// then middle, then full.
    pub fn all() -> Vec<SpreadCase> {
        let mut out = Vec::with_capacity(10);
        for bits in 0..8u8 {
            let pick = |bit: u8| {
                if bits & (1 << bit) == 0 {
                    PairGap::Zero
                } else {
                    PairGap::Gap
                }
            };
            out.push(SpreadCase::Narrow([pick(2), pick(1), pick(0)]));
        }
        out.push(SpreadCase::Middle);
        out.push(SpreadCase::Full);
        out
    }

    fn code(&self) -> String {
        match self {
            SpreadCase::Narrow(branches) => {
                let mut s = String::from("1_");
                for b in branches {
                    s.push(b.letter());
                }
                s
            }
            SpreadCase::Middle => "2".to_string(),
            SpreadCase::Full => "3".to_string(),
        }
    }

    fn matches_gaps(&self, d12: i64, d23: i64, e1: i64, e2: i64) -> bool {
        let d13 = d12 + d23;
        match self {
            SpreadCase::Narrow(branches) => {
                let gap_ok = |branch: PairGap, d: i64| match branch {
                    PairGap::Zero => d == 0,
                    PairGap::Gap => d >= 1,
                };
                d13 <= e1
                    && gap_ok(branches[0], d12)
                    && gap_ok(branches[1], d13)
                    && gap_ok(branches[2], d23)
            }
            SpreadCase::Middle => e1 < d13 && d13 < e2,
            SpreadCase::Full => d13 == e2,
        }
    }
}

/// One case of the piecewise-linear split: a spread branch for the target
/// type and one for the competing type.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CaseSpec {
    pub target: SpreadCase,
    pub bad: SpreadCase,
}

impl CaseSpec {
    /// All 100 cases in deterministic order (target branch major).
    pub fn all() -> Vec<CaseSpec> {
        let sides = SpreadCase::all();
        let mut out = Vec::with_capacity(100);
        for &target in &sides {
            for &bad in &sides {
                out.push(CaseSpec { target, bad });
            }
        }
        out
    }

    /// Stable label, also used as the export file stem, e.g.
    /// `case_T1_zgz_B3`.
    pub fn label(&self) -> String {
        format!("case_T{}_B{}", self.target.code(), self.bad.code())
    }

    /// Whether an integer point lies in this case's region: the target gaps
    /// of `e` fall in the target branch and the gaps of `bad` fall in the
    /// competing branch.
    pub fn matches(&self, e: &Sextic, bad: &SplittingType) -> bool {
        let (e1, e2) = (e.e(1), e.e(2));
        let [a1, a2, a3] = bad.entries();
        self.target
            .matches_gaps(e.e(5) - e.e(4), e.e(4) - e.e(3), e1, e2)
            && self.bad.matches_gaps(a2 - a1, a3 - a2, e1, e2)
    }
}

impl fmt::Display for CaseSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl Serialize for CaseSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.label())
    }
}

/// Knobs for [`build_case_lp_with`]; the default builds the faithful LP.
#[derive(Debug, Clone)]
pub struct CaseLpOptions {
    /// Keep the `a_1 ≤ −1` constraint.  Disabling it is a deliberate
    /// mutation used to show the verification has teeth: the competing side
    /// may then shadow the target type itself.
    pub require_negative_leading: bool,
}

impl Default for CaseLpOptions {
    fn default() -> Self {
        CaseLpOptions {
            require_negative_leading: true,
        }
    }
}

// Gap expressions per side: each is a short var/coeff list.
type Expr = &'static [(&'static str, i64)];

struct SideVars {
    prefix: &'static str,
    d12: Expr,
    d13: Expr,
    d23: Expr,
}

const TARGET_SIDE: SideVars = SideVars {
    prefix: "t",
    d12: &[("e5", 1), ("e4", -1)],
    d13: &[("e5", 1), ("e3", -1)],
    d23: &[("e4", 1), ("e3", -1)],
};

const BAD_SIDE: SideVars = SideVars {
    prefix: "b",
    d12: &[("a2", 1), ("a1", -1)],
    d13: &[("a3", 1), ("a1", -1)],
    d23: &[("a3", 1), ("a2", -1)],
};

fn coeff_map(terms: &[(&str, i64)]) -> BTreeMap<String, Rational> {
    terms
        .iter()
        .map(|&(name, c)| (name.to_string(), Rational::from_int(c)))
        .collect()
}

fn extend(expr: Expr, extra: &[(&str, i64)]) -> BTreeMap<String, Rational> {
    let mut map = coeff_map(expr);
    for &(name, c) in extra {
        map.insert(name.to_string(), Rational::from_int(c));
    }
    map
}

struct Objective {
    coeffs: BTreeMap<&'static str, i64>,
    constant: i64,
}

impl Objective {
    fn new() -> Self {
        Objective {
            coeffs: BTreeMap::new(),
            constant: 0,
        }
    }

    fn add(&mut self, var: &'static str, c: i64) {
        *self.coeffs.entry(var).or_insert(0) += c;
    }

    fn add_expr(&mut self, expr: Expr, scale: i64) {
        for &(name, c) in expr {
            self.add(name, scale * c);
        }
    }
}

fn add_side(lp: &mut LpInstance, side: &SideVars, case: SpreadCase, sign: i64, obj: &mut Objective) {
    let con = |lp: &mut LpInstance, name: String, coeffs, relation, rhs: i64| {
        lp.add_constraint(Some(&name), coeffs, relation, Rational::from_int(rhs))
            .expect("constraint names are unique and variables declared");
    };
    match case {
        SpreadCase::Narrow(branches) => {
            // Spread within e1; dimension g − μ with μ linearized per branch.
            con(
                lp,
                format!("{}_spread", side.prefix),
                extend(side.d13, &[("e1", -1)]),
                Relation::Le,
                0,
            );
            obj.add("e1", sign);
            obj.add("e2", sign);
            obj.constant += -2 * sign;
            let pairs = [("12", side.d12), ("13", side.d13), ("23", side.d23)];
            for ((pair, d), branch) in pairs.into_iter().zip(branches) {
                match branch {
                    PairGap::Zero => con(
                        lp,
                        format!("{}_pair_{}", side.prefix, pair),
                        coeff_map(d),
                        Relation::Eq,
                        0,
                    ),
                    PairGap::Gap => {
                        con(
                            lp,
                            format!("{}_pair_{}", side.prefix, pair),
                            coeff_map(d),
                            Relation::Ge,
                            1,
                        );
                        // μ gains (gap − 1); the dimension loses it.
                        obj.add_expr(d, -sign);
                        obj.constant += sign;
                    }
                }
            }
        }
        SpreadCase::Middle => {
            con(
                lp,
                format!("{}_spread_lo", side.prefix),
                extend(side.d13, &[("e1", -1)]),
                Relation::Ge,
                1,
            );
            con(
                lp,
                format!("{}_spread_hi", side.prefix),
                extend(side.d13, &[("e2", -1)]),
                Relation::Le,
                -1,
            );
            // Dimension e2 − spread.
            obj.add("e2", sign);
            obj.add_expr(side.d13, -sign);
        }
        SpreadCase::Full => {
            con(
                lp,
                format!("{}_spread", side.prefix),
                extend(side.d13, &[("e2", -1)]),
                Relation::Eq,
                0,
            );
            // Dimension 0: no objective contribution.
        }
    }
}

/// Build the case LP with the faithful constraint set.
pub fn build_case_lp(case: &CaseSpec) -> LpInstance {
    build_case_lp_with(case, &CaseLpOptions::default())
}

/// Build the case LP; see [`CaseLpOptions`] for the mutation knob.
///
/// Variables `e1..e5, a1..a3` are free; every relation is an explicit named
/// constraint.  The objective is (target dimension) − (competing dimension)
/// in the case's linear branches; minimizing it over the case region asks
/// how small the gap can get.
pub fn build_case_lp_with(case: &CaseSpec, options: &CaseLpOptions) -> LpInstance {
    let mut lp = LpInstance::with_name(&case.label());
    for v in ["e1", "e2", "e3", "e4", "e5", "a1", "a2", "a3"] {
        lp.add_variable(v).expect("fresh variable");
    }
    let con = |lp: &mut LpInstance, name: &str, coeffs, relation, rhs: i64| {
        lp.add_constraint(Some(name), coeffs, relation, Rational::from_int(rhs))
            .expect("constraint names are unique and variables declared");
    };

    con(&mut lp, "e1_ge_1", coeff_map(&[("e1", 1)]), Relation::Ge, 1);
    for (name, lo, hi) in [
        ("e_order_12", "e1", "e2"),
        ("e_order_23", "e2", "e3"),
        ("e_order_34", "e3", "e4"),
        ("e_order_45", "e4", "e5"),
    ] {
        con(
            &mut lp,
            name,
            coeff_map(&[(hi, 1), (lo, -1)]),
            Relation::Ge,
            0,
        );
    }
    // The four P3 walls.
    con(
        &mut lp,
        "p3_e2_2e1",
        coeff_map(&[("e2", 1), ("e1", -2)]),
        Relation::Le,
        0,
    );
    con(
        &mut lp,
        "p3_e4_e1e3",
        coeff_map(&[("e4", 1), ("e1", -1), ("e3", -1)]),
        Relation::Le,
        0,
    );
    con(
        &mut lp,
        "p3_e5_e1e4",
        coeff_map(&[("e5", 1), ("e1", -1), ("e4", -1)]),
        Relation::Le,
        0,
    );
    con(
        &mut lp,
        "p3_e5_e2e3",
        coeff_map(&[("e5", 1), ("e2", -1), ("e3", -1)]),
        Relation::Le,
        0,
    );
    // The competing type: ordered, nonempty locus, leading entry negative,
    // entry sum fixed by the tuple.
    con(
        &mut lp,
        "a_order_12",
        coeff_map(&[("a2", 1), ("a1", -1)]),
        Relation::Ge,
        0,
    );
    con(
        &mut lp,
        "a_order_23",
        coeff_map(&[("a3", 1), ("a2", -1)]),
        Relation::Ge,
        0,
    );
    con(
        &mut lp,
        "ne_12",
        coeff_map(&[("a2", 1), ("a1", -1), ("e1", -1)]),
        Relation::Le,
        0,
    );
    con(
        &mut lp,
        "ne_23",
        coeff_map(&[("a3", 1), ("a2", -1), ("e1", -1)]),
        Relation::Le,
        0,
    );
    con(
        &mut lp,
        "ne_13",
        coeff_map(&[("a3", 1), ("a1", -1), ("e2", -1)]),
        Relation::Le,
        0,
    );
    if options.require_negative_leading {
        con(
            &mut lp,
            "a1_le_m1",
            coeff_map(&[("a1", 1)]),
            Relation::Le,
            -1,
        );
    }
    con(
        &mut lp,
        "sum_bad",
        coeff_map(&[
            ("a1", 1),
            ("a2", 1),
            ("a3", 1),
            ("e1", 3),
            ("e2", 3),
            ("e3", -2),
            ("e4", -2),
            ("e5", -2),
        ]),
        Relation::Eq,
        0,
    );

    let mut obj = Objective::new();
    add_side(&mut lp, &TARGET_SIDE, case.target, 1, &mut obj);
    add_side(&mut lp, &BAD_SIDE, case.bad, -1, &mut obj);
    for (var, c) in obj.coeffs {
        if c != 0 {
            lp.add_objective_term(var, Rational::from_int(c))
                .expect("variable declared");
        }
    }
    lp.add_objective_constant(Rational::from_int(obj.constant));
    lp
}

/// Overall outcome of the case sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "INCONCLUSIVE")]
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Inconclusive => "INCONCLUSIVE",
        })
    }
}

/// One case together with its solved, certificate-checked outcome.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseRecord {
    pub case: CaseSpec,
    pub outcome: LpOutcome,
}

/// The full sweep: every case, the verdict, and which cases broke it.
///
/// `PASS` means every case is infeasible or has minimum ≥ 1; a case with
/// minimum ≤ 0 (or unbounded below) lands in `failures` and forces `FAIL`;
/// a fractional minimum in (0, 1) lands in `inconclusive` and — absent
/// failures — forces `INCONCLUSIVE` rather than a silent pass.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub verdict: Verdict,
    pub cases: Vec<CaseRecord>,
    pub failures: Vec<String>,
    pub inconclusive: Vec<String>,
}

/// Run the faithful sweep.
pub fn run_verification() -> Result<VerificationReport, VerifierError> {
    run_verification_with(&CaseLpOptions::default())
}

/// Run the sweep with explicit options (used by the mutation check).
pub fn run_verification_with(options: &CaseLpOptions) -> Result<VerificationReport, VerifierError> {
    let mut cases = Vec::with_capacity(100);
    let mut failures = Vec::new();
    let mut inconclusive = Vec::new();
    for case in CaseSpec::all() {
        let lp = build_case_lp_with(&case, options);
        let outcome = solve(&lp);
        match check_certificate(&lp, &outcome) {
            Ok(true) => {}
            Ok(false) => {
                return Err(VerifierError::SolverFailure {
                    case: case.label(),
                    reason: "certificate rejected".to_string(),
                })
            }
            Err(err) => {
                return Err(VerifierError::SolverFailure {
                    case: case.label(),
                    reason: err.to_string(),
                })
            }
        }
        match &outcome {
            LpOutcome::Infeasible { .. } => {}
            LpOutcome::Unbounded { .. } => failures.push(case.label()),
            LpOutcome::Optimal { value, .. } => {
                if *value <= 0 {
                    failures.push(case.label());
                } else if *value < 1 {
                    inconclusive.push(case.label());
                }
            }
        }
        cases.push(CaseRecord { case, outcome });
    }
    let verdict = if !failures.is_empty() {
        Verdict::Fail
    } else if !inconclusive.is_empty() {
        Verdict::Inconclusive
    } else {
        Verdict::Pass
    };
    Ok(VerificationReport {
        verdict,
        cases,
        failures,
        inconclusive,
    })
}

/// A strict-inequality violation found by direct enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionViolation {
    pub invariants: Sextic,
    pub bad: SplittingType,
    pub target_dim: i64,
    pub bad_dim: i64,
}

/// Tally of the direct enumeration in [`brute_force_check`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BruteForceReport {
    pub max_e5: i64,
    pub tuples: u64,
    pub comparisons: u64,
    pub violations: Vec<DimensionViolation>,
}

/// Check the dimension gap directly on every tuple in `P3` with
/// `e_5 ≤ max_e5`: compute the target dimension and every competing
/// dimension by formula and record any pair where the gap fails.
pub fn brute_force_check(max_e5: i64) -> BruteForceReport {
    use crate::splitting::{enumerate_bad_types, target_dim, TrigonalBase};
    let mut report = BruteForceReport {
        max_e5,
        tuples: 0,
        comparisons: 0,
        violations: Vec::new(),
    };
    for e1 in 1..=max_e5 {
        for e2 in e1..=max_e5 {
            for e3 in e2..=max_e5 {
                for e4 in e3..=max_e5 {
                    for e5 in e4..=max_e5 {
                        let s = Sextic::new([e1, e2, e3, e4, e5]).expect("ordered by loops");
                        if !s.in_p3() {
                            continue;
                        }
                        report.tuples += 1;
                        let target = target_dim(&s).expect("in P3");
                        let base = TrigonalBase::new(e1, e2).expect("in P3");
                        for bad in enumerate_bad_types(&s).expect("in P3") {
                            report.comparisons += 1;
                            let dim = base.dim_splitting_locus(&bad).expect("enumerated nonempty");
                            if dim >= target {
                                report.violations.push(DimensionViolation {
                                    invariants: s,
                                    bad,
                                    target_dim: target,
                                    bad_dim: dim,
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    report
}

/// Write one `.lp` file per case into `dir` (which must exist) and return
/// the file names in case order.
pub fn export_cases(dir: &Path) -> Result<Vec<String>, VerifierError> {
    let mut names = Vec::with_capacity(100);
    for case in CaseSpec::all() {
        let name = format!("{}.lp", case.label());
        std::fs::write(dir.join(&name), write_lp(&build_case_lp(&case)))?;
        names.push(name);
    }
    Ok(names)
}
