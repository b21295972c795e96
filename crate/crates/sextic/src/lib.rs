//! Scrollar invariants of degree-6 covers of the line: realizability,
//! geography, construction witnesses, and an exactly-verified dimension
//! bound.
//!
//! The objects here are short nondecreasing integer tuples — scrollar
//! invariants of a cover of the projective line — and the questions are
//! discrete: which tuples actually occur, how the answer is organized into
//! polyhedral regions, and what construction realizes a given tuple.
//!
//! - [`scrollar`]: the tuples, the regions `P2`/`P3`/`P6` and `Q`, and the
//!   realizability decision for degrees 2, 3, and 6.
//! - [`splitting`]: splitting loci over a trigonal base — dimension
//!   formulas, the target type of a tuple, and its competitors.
//! - [`geography`]: genus-by-genus enumeration with region labels and
//!   CSV/JSON emission.
//! - [`witness`]: numeric construction plans for the two realization
//!   pipelines (double-over-triple and triple-over-double).
//! - [`verifier`]: the case-split LP re-verification of the dimension gap
//!   that powers the double-over-triple pipeline, run on an exact rational
//!   solver.

pub mod geography;
pub mod scrollar;
pub mod splitting;
pub mod verifier;
pub mod witness;

pub use geography::{enumerate_by_genus, region_counts, EmitFormat, GenusSlice, GeographyError, GeographyRow};
pub use scrollar::{
    semistable_gap_bound, OrientedPartition, RegionLabel, ScrollarError, ScrollarTuple, Sextic,
};
pub use splitting::{
    delta, enumerate_bad_types, semireduced_degree, target_dim, target_type, HyperellipticSplit,
    SplittingError, SplittingType, TrigonalBase,
};
pub use verifier::{
    brute_force_check, build_case_lp, build_case_lp_with, export_cases, run_verification,
    run_verification_with, BruteForceReport, CaseLpOptions, CaseRecord, CaseSpec, DimensionViolation,
    PairGap, SpreadCase, VerificationReport, Verdict, VerifierError,
};
pub use witness::{
    plan_double_over_triple, plan_triple_over_double, realization_witness, BadLocus,
    DoubleOverTriplePlan, TripleOverDoublePlan, WitnessError, WitnessPlan,
};
