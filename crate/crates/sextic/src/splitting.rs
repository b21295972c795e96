//! Splitting loci of line bundles over low-genus covers of the line.
//!
//! Pushing a line bundle on a trigonal curve down to the line yields a rank-3
//! bundle `O(a_1) ⊕ O(a_2) ⊕ O(a_3)`; the locus of bundles with a fixed
//! splitting type `(a_1, a_2, a_3)` is a subvariety of the Picard variety
//! whose dimension this module computes.  The degree-6 pipeline consumes
//! this through [`target_dim`] (the splitting type the construction aims
//! for) and [`enumerate_bad_types`] (the competing types it must avoid).
//! A hyperelliptic analogue, [`semireduced_degree`], backs the other
//! realization pipeline.

use crate::scrollar::Sextic;
use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SplittingError {
    /// A trigonal base needs `1 ≤ e_1 ≤ e_2 ≤ 2e_1`.
    #[error("({e1},{e2}) is not a trigonal invariant pair")]
    BadBase { e1: i64, e2: i64 },
    /// Splitting type entries must be nondecreasing.
    #[error("entries {0:?} are not nondecreasing")]
    Unsorted3([i64; 3]),
    /// Hyperelliptic split entries must be nondecreasing.
    #[error("entries {0:?} are not nondecreasing")]
    Unsorted2([i64; 2]),
    /// The locus of this type over this base is empty; it has no dimension.
    #[error("type {ty:?} has empty locus over base ({e1},{e2})")]
    EmptyLocus { e1: i64, e2: i64, ty: [i64; 3] },
    /// Target and bad-type computations require membership in `P3`.
    #[error("tuple {0:?} lies outside P3")]
    NotInP3([i64; 5]),
    /// A split wider than `g + 1` has empty locus on a genus-`g` base.
    #[error("split {ty:?} is wider than genus {genus} allows")]
    GapTooLarge { genus: i64, ty: [i64; 2] },
}

/// Invariants `(e_1, e_2)` of a trigonal cover, validated so that
/// `1 ≤ e_1 ≤ e_2 ≤ 2e_1`.  The cover's genus is `e_1 + e_2 − 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct TrigonalBase {
    e1: i64,
    e2: i64,
}

impl TrigonalBase {
    pub fn new(e1: i64, e2: i64) -> Result<Self, SplittingError> {
        if e1 < 1 || e2 < e1 || e2 > 2 * e1 {
            return Err(SplittingError::BadBase { e1, e2 });
        }
        Ok(TrigonalBase { e1, e2 })
    }

    pub fn invariants(&self) -> (i64, i64) {
        (self.e1, self.e2)
    }

    pub fn genus(&self) -> i64 {
        self.e1 + self.e2 - 2
    }

    /// Whether the splitting locus of `ty` is nonempty over this base:
    /// `a_2 ≤ a_1 + e_1`, `a_3 ≤ a_2 + e_1`, and `a_3 ≤ a_1 + e_2`.
    pub fn is_nonempty(&self, ty: &SplittingType) -> bool {
        let [a1, a2, a3] = ty.entries();
        a2 <= a1 + self.e1 && a3 <= a2 + self.e1 && a3 <= a1 + self.e2
    }

    /// Dimension of the splitting locus of `ty` inside the Picard variety.
    ///
    /// Empty loci are an error, not a dimension.  For nonempty loci the
    /// dimension depends on the spread `a_3 − a_1`: up to `e_1` it is
    /// `g − μ(ty)`, strictly between `e_1` and `e_2` it is
    /// `e_2 − (a_3 − a_1)`, and at `e_2` it is 0.  The branches are tried
    /// in that order.
    pub fn dim_splitting_locus(&self, ty: &SplittingType) -> Result<i64, SplittingError> {
        if !self.is_nonempty(ty) {
            return Err(SplittingError::EmptyLocus {
                e1: self.e1,
                e2: self.e2,
                ty: ty.entries(),
            });
        }
        let [a1, _, a3] = ty.entries();
        let spread = a3 - a1;
        if spread <= self.e1 {
            Ok(self.genus() - ty.mu())
        } else if spread < self.e2 {
            Ok(self.e2 - spread)
        } else {
            // Nonemptiness caps the spread at e2.
            Ok(0)
        }
    }
}

impl fmt::Display for TrigonalBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.e1, self.e2)
    }
}

/// A nondecreasing rank-3 splitting type `(a_1, a_2, a_3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct SplittingType([i64; 3]);

impl SplittingType {
    pub fn new(entries: [i64; 3]) -> Result<Self, SplittingError> {
        if entries[0] > entries[1] || entries[1] > entries[2] {
            return Err(SplittingError::Unsorted3(entries));
        }
        Ok(SplittingType(entries))
    }

    pub fn entries(&self) -> [i64; 3] {
        self.0
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Expected codimension `μ = Σ_{i<j} max(0, a_j − a_i − 1)`.
    pub fn mu(&self) -> i64 {
        let [a1, a2, a3] = self.0;
        (a2 - a1 - 1).max(0) + (a3 - a1 - 1).max(0) + (a3 - a2 - 1).max(0)
    }
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a1, a2, a3] = self.0;
        write!(f, "({a1},{a2},{a3})")
    }
}

/// A nondecreasing rank-2 splitting type `(a, b)` over a hyperelliptic base.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct HyperellipticSplit([i64; 2]);

impl HyperellipticSplit {
    pub fn new(entries: [i64; 2]) -> Result<Self, SplittingError> {
        if entries[0] > entries[1] {
            return Err(SplittingError::Unsorted2(entries));
        }
        Ok(HyperellipticSplit(entries))
    }

    pub fn entries(&self) -> [i64; 2] {
        self.0
    }

    pub fn gap(&self) -> i64 {
        self.0[1] - self.0[0]
    }
}

impl fmt::Display for HyperellipticSplit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0[0], self.0[1])
    }
}

/// Degree of the semireduced divisor attached to a rank-2 split over a
/// genus-`g` hyperelliptic base: `g + 1 − (b − a)`.  Splits wider than
/// `g + 1` have empty locus and are rejected.
pub fn semireduced_degree(
    base_genus: i64,
    split: &HyperellipticSplit,
) -> Result<i64, SplittingError> {
    debug_assert!(base_genus >= 0);
    if split.gap() > base_genus + 1 {
        return Err(SplittingError::GapTooLarge {
            genus: base_genus,
            ty: split.entries(),
        });
    }
    Ok(base_genus + 1 - split.gap())
}

/// Degree surplus `e_1 + e_2 − e_3 − e_4 − e_5` of the line bundle the
/// double-over-triple pipeline must produce.
pub fn delta(e: &Sextic) -> i64 {
    e.e(1) + e.e(2) - e.e(3) - e.e(4) - e.e(5)
}

/// The splitting type `(−e_5, −e_4, −e_3)` the pipeline aims for.
pub fn target_type(e: &Sextic) -> SplittingType {
    SplittingType([-e.e(5), -e.e(4), -e.e(3)])
}

fn base_of(e: &Sextic) -> Result<TrigonalBase, SplittingError> {
    if !e.in_p3() {
        return Err(SplittingError::NotInP3(e.invariants()));
    }
    // P3 contains e2 ≤ 2e1, so the pair is a valid trigonal base.
    TrigonalBase::new(e.e(1), e.e(2))
}

/// Dimension of the target splitting locus over the base `(e_1, e_2)`.
/// Requires membership in `P3`, which also guarantees the locus is
/// nonempty.
pub fn target_dim(e: &Sextic) -> Result<i64, SplittingError> {
    base_of(e)?.dim_splitting_locus(&target_type(e))
}

/// All splitting types the construction must avoid: nondecreasing triples
/// with nonempty locus, entry sum `2(e_3+e_4+e_5) − 3(e_1+e_2)`, and
/// `a_1 ≤ −1`, in lexicographic order.  Requires membership in `P3`.
pub fn enumerate_bad_types(e: &Sextic) -> Result<Vec<SplittingType>, SplittingError> {
    let base = base_of(e)?;
    let (e1, e2) = base.invariants();
    let sum = 2 * (e.e(3) + e.e(4) + e.e(5)) - 3 * (e1 + e2);
    // Same quantity via the degree surplus; guards the arithmetic above.
    assert_eq!(sum, -2 * delta(e) - base.genus() - 2);

    let mut found = Vec::new();
    // Nonemptiness forces 3a1 ≥ sum − e1 − e2.
    let lo = (sum - e1 - e2).div_euclid(3);
    for a1 in lo..=-1 {
        for a2 in a1..=a1 + e1 {
            let a3 = sum - a1 - a2;
            if a3 < a2 || a3 > a2 + e1 || a3 > a1 + e2 {
                continue;
            }
            found.push(SplittingType([a1, a2, a3]));
        }
    }
    found.sort();
    Ok(found)
}
