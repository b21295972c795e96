//! Invariant tuples of branched covers of the line and their realizability.
//!
//! A degree-`d` cover contributes a nondecreasing tuple `(e_1, …, e_{d-1})`
//! with `e_1 ≥ 1`; its genus is `Σe_i − d + 1`.  This module decides which
//! tuples actually occur.  Degrees 2 and 3 have one-line answers; degree 6 is
//! governed by two polyhedral cones `P2` and `P3` together with a
//! combinatorial condition (an *admissible partition*) on the region
//! `P2 ∖ P3`.  Tuples are validated at construction, so every value that
//! escapes this module is already well-formed.

use exact_lp::Rational;
use serde::Serialize;
use std::fmt;

/// Ways an invariant tuple or a related query can be malformed.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScrollarError {
    /// Only degrees 2, 3, and 6 are classified.
    #[error("degree {0} is not supported (expected 2, 3, or 6)")]
    UnsupportedDegree(usize),
    /// The first invariant must be at least 1.
    #[error("first invariant is {0}, but must be at least 1")]
    FirstBelowOne(i64),
    /// Invariants must be nondecreasing.
    #[error("invariants decrease at position {0} (1-based)")]
    Unsorted(usize),
    /// Partition-dependent queries require membership in `P2`.
    #[error("tuple {0:?} lies outside P2, where admissibility is undefined")]
    NotInP2([i64; 5]),
    /// The two index pairs must partition {2, 3, 4, 5}.
    #[error("index pairs {0:?} and {1:?} do not partition {{2, 3, 4, 5}}")]
    BadPartition((u8, u8), (u8, u8)),
    /// The semistability bound needs degree ≥ 2 and genus ≥ 0.
    #[error("bound undefined for degree {degree}, genus {genus}")]
    BadParameters { degree: i64, genus: i64 },
}

fn check_shape(invariants: &[i64]) -> Result<(), ScrollarError> {
    if invariants[0] < 1 {
        return Err(ScrollarError::FirstBelowOne(invariants[0]));
    }
    for (i, w) in invariants.windows(2).enumerate() {
        if w[1] < w[0] {
            return Err(ScrollarError::Unsorted(i + 2));
        }
    }
    Ok(())
}

/// A validated invariant tuple of a degree-2, 3, or 6 cover.
///
/// The degree is the tuple length plus one.  Degrees 4 and 5 are rejected at
/// construction: the classification implemented here does not cover them.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ScrollarTuple {
    invariants: Vec<i64>,
}

impl ScrollarTuple {
    pub fn new(invariants: &[i64]) -> Result<Self, ScrollarError> {
        let degree = invariants.len() + 1;
        if !matches!(degree, 2 | 3 | 6) {
            return Err(ScrollarError::UnsupportedDegree(degree));
        }
        check_shape(invariants)?;
        Ok(ScrollarTuple {
            invariants: invariants.to_vec(),
        })
    }

    pub fn degree(&self) -> usize {
        self.invariants.len() + 1
    }

    pub fn invariants(&self) -> &[i64] {
        &self.invariants
    }

    /// Genus of a cover with these invariants: `Σe_i − d + 1`.
    pub fn genus(&self) -> i64 {
        let sum: i64 = self.invariants.iter().sum();
        sum - self.degree() as i64 + 1
    }

    /// Whether some cover realizes this tuple.
    ///
    /// Degree 2: always.  Degree 3: iff `e_2 ≤ 2e_1`.  Degree 6: iff the
    /// tuple lies in `Q ∪ P3`.
    pub fn realizable(&self) -> bool {
        match self.degree() {
            2 => true,
            3 => self.invariants[1] <= 2 * self.invariants[0],
            6 => {
                let s = self.as_sextic().expect("degree checked");
                s.in_q() || s.in_p3()
            }
            _ => unreachable!("degree validated at construction"),
        }
    }

    /// The degree-6 view, if this tuple has five entries.
    pub fn as_sextic(&self) -> Option<Sextic> {
        if self.invariants.len() == 5 {
            let mut e = [0i64; 5];
            e.copy_from_slice(&self.invariants);
            Some(Sextic(e))
        } else {
            None
        }
    }
}

impl fmt::Display for ScrollarTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.invariants.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// A validated invariant tuple of a degree-6 cover.
///
/// Wraps `[e_1, …, e_5]` with `1 ≤ e_1 ≤ … ≤ e_5`.  All the degree-6
/// machinery (regions, partitions, witnesses, loci) operates on this type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Sextic([i64; 5]);

/// An ordered split of the index set {2, 3, 4, 5} into a *light* pair
/// `(i, j)` and a *heavy* pair `(k, l)`, each listed increasingly.
///
/// Orientation matters: `{2,3}⊔{4,5}` and `{4,5}⊔{2,3}` are different
/// candidates, because the admissibility conditions treat the two pairs
/// asymmetrically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct OrientedPartition {
    light: (u8, u8),
    heavy: (u8, u8),
}

impl OrientedPartition {
    pub fn new(light: (u8, u8), heavy: (u8, u8)) -> Result<Self, ScrollarError> {
        let mut seen = [light.0, light.1, heavy.0, heavy.1];
        seen.sort_unstable();
        if seen != [2, 3, 4, 5] || light.0 > light.1 || heavy.0 > heavy.1 {
            return Err(ScrollarError::BadPartition(light, heavy));
        }
        Ok(OrientedPartition { light, heavy })
    }

    /// All six oriented candidates, in lexicographic order of the light pair.
    pub fn all() -> [OrientedPartition; 6] {
        const P: [((u8, u8), (u8, u8)); 6] = [
            ((2, 3), (4, 5)),
            ((2, 4), (3, 5)),
            ((2, 5), (3, 4)),
            ((3, 4), (2, 5)),
            ((3, 5), (2, 4)),
            ((4, 5), (2, 3)),
        ];
        P.map(|(light, heavy)| OrientedPartition { light, heavy })
    }

    pub fn light(&self) -> (u8, u8) {
        self.light
    }

    pub fn heavy(&self) -> (u8, u8) {
        self.heavy
    }
}

impl fmt::Display for OrientedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{{{},{}}}|{{{},{}}}",
            self.light.0, self.light.1, self.heavy.0, self.heavy.1
        )
    }
}

/// Where a degree-6 tuple sits relative to the regions `P2`, `P3`, and `Q`.
///
/// `Q ⊆ P2 ∖ P3` is the subregion admitting an admissible partition, so the
/// five labels are mutually exclusive and cover every tuple.  Realizable
/// tuples are exactly those labeled `P3Only`, `Both`, or `QOnly`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum RegionLabel {
    /// In neither `P2` nor `P3`.
    Outside,
    /// In `P3` but not `P2`.
    P3Only,
    /// In `P2 ∩ P3`.
    Both,
    /// In `P2 ∖ P3` and in `Q`.
    QOnly,
    /// In `P2 ∖ P3` but not in `Q`; these tuples are unrealizable.
    P2NotQ,
}

impl RegionLabel {
    pub fn all() -> [RegionLabel; 5] {
        [
            RegionLabel::Outside,
            RegionLabel::P3Only,
            RegionLabel::Both,
            RegionLabel::QOnly,
            RegionLabel::P2NotQ,
        ]
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            RegionLabel::Outside => "Outside",
            RegionLabel::P3Only => "P3Only",
            RegionLabel::Both => "Both",
            RegionLabel::QOnly => "QOnly",
            RegionLabel::P2NotQ => "P2NotQ",
        }
    }
}

impl fmt::Display for RegionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Sextic {
    pub fn new(invariants: [i64; 5]) -> Result<Self, ScrollarError> {
        check_shape(&invariants)?;
        Ok(Sextic(invariants))
    }

    pub fn invariants(&self) -> [i64; 5] {
        self.0
    }

    /// The `i`-th invariant, 1-based.
    pub fn e(&self, i: usize) -> i64 {
        self.0[i - 1]
    }

    pub fn genus(&self) -> i64 {
        self.0.iter().sum::<i64>() - 5
    }

    /// Membership in the cone `P2`.
    pub fn in_p2(&self) -> bool {
        let [e1, e2, e3, e4, e5] = self.0;
        e5 <= e1 + e4 && e5 <= e2 + e3 && e3 <= e1 + e2 && e4 <= 2 * e2
    }

    /// Membership in the cone `P3`.
    pub fn in_p3(&self) -> bool {
        let [e1, e2, e3, e4, e5] = self.0;
        e5 <= e1 + e4 && e5 <= e2 + e3 && e2 <= 2 * e1 && e4 <= e1 + e3
    }

    /// Membership in the cone `P6`, which is contained in `P2 ∩ P3`.
    pub fn in_p6(&self) -> bool {
        let [e1, e2, e3, e4, e5] = self.0;
        e2 <= 2 * e1
            && e3 <= e1 + e2
            && e4 <= e1 + e3
            && e4 <= 2 * e2
            && e5 <= e1 + e4
            && e5 <= e2 + e3
    }

    /// Whether the partition satisfies the four admissibility conditions.
    ///
    /// Requires membership in `P2`; writing `(i,j)` for the light pair and
    /// `(k,l)` for the heavy pair, the conditions are
    /// `e_i + e_j ≤ e_k + e_l`, `e_j ≤ e_i + e_1`, `e_l ≤ e_k + e_1`, and
    /// `e_k + e_l + e_1 ≤ 2(e_i + e_j)`.
    pub fn is_admissible(&self, p: &OrientedPartition) -> Result<bool, ScrollarError> {
        if !self.in_p2() {
            return Err(ScrollarError::NotInP2(self.0));
        }
        let e = |i: u8| self.0[i as usize - 1];
        let (i, j) = p.light;
        let (k, l) = p.heavy;
        Ok(e(i) + e(j) <= e(k) + e(l)
            && e(j) <= e(i) + e(1)
            && e(l) <= e(k) + e(1)
            && e(k) + e(l) + e(1) <= 2 * (e(i) + e(j)))
    }

    /// All admissible oriented partitions, in the order of
    /// [`OrientedPartition::all`].  Requires membership in `P2`.
    pub fn admissible_partitions(&self) -> Result<Vec<OrientedPartition>, ScrollarError> {
        if !self.in_p2() {
            return Err(ScrollarError::NotInP2(self.0));
        }
        Ok(OrientedPartition::all()
            .into_iter()
            .filter(|p| self.is_admissible(p).expect("in P2"))
            .collect())
    }

    /// Membership in `Q`: inside `P2`, outside `P3`, and admitting at least
    /// one admissible partition.  Total — tuples outside `P2` are simply not
    /// in `Q`.
    pub fn in_q(&self) -> bool {
        self.in_p2()
            && !self.in_p3()
            && OrientedPartition::all()
                .iter()
                .any(|p| self.is_admissible(p).expect("in P2"))
    }

    /// Whether some degree-6 cover realizes this tuple: membership in
    /// `Q ∪ P3`.
    pub fn realizable(&self) -> bool {
        self.in_q() || self.in_p3()
    }

    /// The region label; see [`RegionLabel`] for the case split.
    pub fn classify_region(&self) -> RegionLabel {
        match (self.in_p2(), self.in_p3()) {
            (false, false) => RegionLabel::Outside,
            (false, true) => RegionLabel::P3Only,
            (true, true) => RegionLabel::Both,
            (true, false) => {
                if self.in_q() {
                    RegionLabel::QOnly
                } else {
                    RegionLabel::P2NotQ
                }
            }
        }
    }

    /// Expected codimension of the tuple's stratum:
    /// `Σ_{i<j} max(0, e_j − e_i − 1)`.
    pub fn expected_codim(&self) -> i64 {
        let mut total = 0;
        for i in 0..5 {
            for j in i + 1..5 {
                total += (self.0[j] - self.0[i] - 1).max(0);
            }
        }
        total
    }
}

impl From<Sextic> for ScrollarTuple {
    fn from(s: Sextic) -> ScrollarTuple {
        ScrollarTuple {
            invariants: s.0.to_vec(),
        }
    }
}

impl fmt::Display for Sextic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [e1, e2, e3, e4, e5] = self.0;
        write!(f, "({e1},{e2},{e3},{e4},{e5})")
    }
}

/// Largest gap `2(g + d − 1)/d` allowed between consecutive invariants of a
/// semistable degree-`d`, genus-`g` cover.
pub fn semistable_gap_bound(degree: i64, genus: i64) -> Result<Rational, ScrollarError> {
    if degree < 2 || genus < 0 {
        return Err(ScrollarError::BadParameters { degree, genus });
    }
    Ok(Rational::new(2 * (genus + degree - 1), degree))
}
