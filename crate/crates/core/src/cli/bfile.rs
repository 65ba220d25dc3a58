//! OEIS b-file parsing and sequence comparison.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::series::CoeffSequence;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BFileRecord {
    pub index: i64,
    pub value: BigInt,
}

/// Parses `index value` lines, skipping blank lines and `#` comments.
pub fn parse_bfile(text: &str) -> Result<Vec<BFileRecord>> {
    let mut records: Vec<BFileRecord> = Vec::new();
    for (pos, line) in text.lines().enumerate() {
        let line_no = pos + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let (Some(a), Some(b), None) = (tokens.next(), tokens.next(), tokens.next()) else {
            return Err(Error::BFileSyntax {
                line: line_no,
                message: "expected two integer tokens".into(),
            });
        };
        let index: i64 = a.parse().map_err(|_| Error::BFileSyntax {
            line: line_no,
            message: format!("bad index {a:?}"),
        })?;
        let value: BigInt = b.parse().map_err(|_| Error::BFileSyntax {
            line: line_no,
            message: format!("bad value {b:?}"),
        })?;
        if records.last().is_some_and(|r| r.index >= index) {
            return Err(Error::NonIncreasingIndex { line: line_no });
        }
        records.push(BFileRecord { index, value });
    }
    Ok(records)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub index: i64,
    pub expected: BigInt,
    pub actual: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparisonReport {
    pub matched_prefix_length: usize,
    pub overlap_length: usize,
    pub first_mismatch: Option<Mismatch>,
    pub offset_applied: i64,
}

impl ComparisonReport {
    pub fn is_full_match(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

impl fmt::Display for ComparisonReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "offset {}", self.offset_applied)?;
        writeln!(f, "overlap {}", self.overlap_length)?;
        writeln!(f, "matched_prefix {}", self.matched_prefix_length)?;
        match &self.first_mismatch {
            None => writeln!(f, "result match"),
            Some(m) => {
                writeln!(f, "result mismatch")?;
                writeln!(f, "index {}", m.index)?;
                writeln!(f, "expected {}", m.expected)?;
                writeln!(f, "actual {}", m.actual)
            }
        }
    }
}

/// Compares `computed[n]` with the reference record at index `n + offset`.
pub fn compare_sequence(
    computed: &CoeffSequence,
    reference: &[BFileRecord],
    offset: i64,
) -> Result<ComparisonReport> {
    let overlap: Vec<(&BFileRecord, &BigInt)> = reference
        .iter()
        .filter_map(|r| {
            let n = usize::try_from(r.index - offset).ok()?;
            computed.values.get(n).map(|v| (r, v))
        })
        .collect();
    if overlap.is_empty() {
        return Err(Error::EmptyOverlap);
    }
    let matched = overlap.iter().take_while(|(r, v)| &r.value == *v).count();
    let first_mismatch = overlap.get(matched).map(|(r, v)| Mismatch {
        index: r.index,
        expected: r.value.clone(),
        actual: (*v).clone(),
    });
    Ok(ComparisonReport {
        matched_prefix_length: matched,
        overlap_length: overlap.len(),
        first_mismatch,
        offset_applied: offset,
    })
}
