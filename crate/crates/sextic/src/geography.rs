//! Genus-by-genus enumeration of degree-6 invariant tuples.
//!
//! For a fixed genus `g`, the tuples are exactly the nondecreasing 5-part
//! partitions of `g + 5` with every part at least 1.  Each row carries its
//! region label, realizability flag, and expected codimension, in
//! lexicographic order, ready for CSV or JSON export.

use crate::scrollar::{RegionLabel, Sextic};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeographyError {
    #[error("genus {0} is negative")]
    NegativeGenus(i64),
}

/// One labeled tuple in a genus slice.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeographyRow {
    pub invariants: Sextic,
    pub region: RegionLabel,
    pub realizable: bool,
    pub expected_codim: i64,
}

/// All degree-6 tuples of one genus, labeled and lexicographically sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenusSlice {
    pub genus: i64,
    pub rows: Vec<GeographyRow>,
}

/// Output encodings for [`emit`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmitFormat {
    Csv,
    Json,
}

/// Enumerate and label every tuple of the given genus.
pub fn enumerate_by_genus(genus: i64) -> Result<GenusSlice, GeographyError> {
    if genus < 0 {
        return Err(GeographyError::NegativeGenus(genus));
    }
    let total = genus + 5;
    let mut rows = Vec::new();
    // Lexicographic by construction: each loop runs increasingly.
    for e1 in 1..=total / 5 {
        for e2 in e1..=(total - e1) / 4 {
            for e3 in e2..=(total - e1 - e2) / 3 {
                for e4 in e3..=(total - e1 - e2 - e3) / 2 {
                    let e5 = total - e1 - e2 - e3 - e4;
                    if e5 < e4 {
                        continue;
                    }
                    let s = Sextic::new([e1, e2, e3, e4, e5]).expect("shape by construction");
                    rows.push(GeographyRow {
                        invariants: s,
                        region: s.classify_region(),
                        realizable: s.realizable(),
                        expected_codim: s.expected_codim(),
                    });
                }
            }
        }
    }
    Ok(GenusSlice { genus, rows })
}

/// How many tuples of the given genus fall under each label.  All five
/// labels appear in the map, zeroes included.
pub fn region_counts(genus: i64) -> Result<BTreeMap<RegionLabel, u64>, GeographyError> {
    let slice = enumerate_by_genus(genus)?;
    let mut counts: BTreeMap<RegionLabel, u64> =
        RegionLabel::all().iter().map(|&l| (l, 0)).collect();
    for row in &slice.rows {
        *counts.get_mut(&row.region).expect("all labels present") += 1;
    }
    Ok(counts)
}

/// Render a slice as CSV (header `e1,e2,e3,e4,e5,region,realizable,
/// expected_codim`, LF line endings) or as a JSON array of row objects.
pub fn emit(slice: &GenusSlice, format: EmitFormat) -> String {
    match format {
        EmitFormat::Csv => {
            let mut out = String::from("e1,e2,e3,e4,e5,region,realizable,expected_codim\n");
            for row in &slice.rows {
                let [e1, e2, e3, e4, e5] = row.invariants.invariants();
                writeln!(
                    out,
                    "{e1},{e2},{e3},{e4},{e5},{},{},{}",
                    row.region, row.realizable, row.expected_codim
                )
                .expect("string writes are infallible");
            }
            out
        }
        EmitFormat::Json => {
            let mut out =
                serde_json::to_string_pretty(&slice.rows).expect("rows always serialize");
            out.push('\n');
            out
        }
    }
}
