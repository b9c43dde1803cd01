//! Minimal-edit repair of the printed `H(13;9)`.
//!
//! The display holds an `H(13;5)` base with two cycle masks `H` and `K`.
//! As printed, rows 2 and 3 repeat the magnitudes 10 and 27 and row 3 has
//! six cells, and the two masks share the cell `(13,1)` while `K` is one
//! cell short. Both parts are repaired by exhaustive search over the
//! smallest number of cell edits, and every tie is reported.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::array::{Position, SparseSquareArray};
use crate::cycles::{classify_cycles, CellSet};
use crate::fixtures::{get_fixture, FixtureError};
use crate::verifier::{verify_heffter, VerificationReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepairError {
    #[error("no repair with at most {max_edits} edits")]
    NoRepair { max_edits: usize },
    #[error("mask {0} is missing from the fixture")]
    MissingMask(String),
    #[error(transparent)]
    Fixture(#[from] FixtureError),
}

/// One change to a numeric cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CellEdit {
    Drop { row: usize, col: usize, old: i64 },
    Replace { row: usize, col: usize, old: i64, new: i64 },
}

impl fmt::Display for CellEdit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CellEdit::Drop { row, col, old } => write!(f, "drop {old} at ({row},{col})"),
            CellEdit::Replace { row, col, old, new } => write!(f, "({row},{col}): {old} -> {new}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowRepair {
    pub array: SparseSquareArray,
    pub edits: Vec<CellEdit>,
    /// Every minimal edit list, the chosen one first.
    pub solutions: Vec<Vec<CellEdit>>,
}

/// Rows whose fill differs from `k` or that hold a repeated magnitude.
pub fn suspect_rows(a: &SparseSquareArray, k: usize) -> BTreeSet<usize> {
    let mut seen = std::collections::BTreeMap::<u64, usize>::new();
    for (_, v) in a.iter() {
        *seen.entry(v.unsigned_abs()).or_default() += 1;
    }
    let counts = a.row_counts();
    a.iter()
        .filter(|(_, v)| seen[&v.unsigned_abs()] > 1)
        .map(|(p, _)| p.row)
        .chain((1..=a.order()).filter(|&r| counts[r - 1] != k))
        .collect()
}

/// Smallest set of drops and replacements, confined to [`suspect_rows`],
/// that turns `a` into a valid `H(n;k)`. Replacement values are the
/// magnitudes that are missing or repeated, with either sign.
pub fn repair_rows(a: &SparseSquareArray, k: usize, max_edits: usize) -> Result<RowRepair, RepairError> {
    let rows = suspect_rows(a, k);
    let cells: Vec<(Position, i64)> = a.iter().filter(|(p, _)| rows.contains(&p.row)).collect();
    let report = verify_heffter(a, k);
    let magnitudes: BTreeSet<u64> = report.missing.iter().chain(&report.duplicated).copied().collect();

    for e in 1..=max_edits {
        let mut solutions = Vec::new();
        for chosen in cells.iter().combinations(e) {
            let options: Vec<Vec<CellEdit>> = chosen
                .iter()
                .map(|&&(p, old)| {
                    let mut v = vec![CellEdit::Drop { row: p.row, col: p.col, old }];
                    for &m in &magnitudes {
                        for new in [m as i64, -(m as i64)] {
                            if new != old {
                                v.push(CellEdit::Replace { row: p.row, col: p.col, old, new });
                            }
                        }
                    }
                    v
                })
                .collect();
            for edits in options.into_iter().multi_cartesian_product() {
                let candidate = apply_edits(a, &edits);
                if verify_heffter(&candidate, k).is_valid() {
                    solutions.push(edits);
                }
            }
        }
        if !solutions.is_empty() {
            solutions.sort();
            return Ok(RowRepair {
                array: apply_edits(a, &solutions[0]),
                edits: solutions[0].clone(),
                solutions,
            });
        }
    }
    Err(RepairError::NoRepair { max_edits })
}

pub fn apply_edits(a: &SparseSquareArray, edits: &[CellEdit]) -> SparseSquareArray {
    let mut out = a.clone();
    for e in edits {
        match *e {
            CellEdit::Drop { row, col, .. } => {
                out.remove(Position::new(row, col));
            }
            CellEdit::Replace { row, col, new, .. } => {
                out.replace(Position::new(row, col), new).expect("nonzero replacement");
            }
        }
    }
    out
}

/// Cells removed from and added to a mask.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MaskEdit {
    pub removed: Vec<(usize, usize)>,
    pub added: Vec<(usize, usize)>,
}

impl MaskEdit {
    pub fn len(&self) -> usize {
        self.removed.len() + self.added.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaskRepair {
    pub mask: CellSet,
    pub edit: MaskEdit,
    /// Every minimal edit, the chosen one first.
    pub solutions: Vec<MaskEdit>,
}

fn is_hamilton(s: &CellSet) -> bool {
    s.len() == 2 * s.order() && classify_cycles(s).is_ok_and(|f| f.is_hamilton())
}

/// Smallest edit turning `mask` into a Hamilton cycle that avoids `forbidden`.
///
/// Cells of `mask` inside `forbidden` are always removed. On top of those,
/// `r = 0, 1, ...` further cells are removed; the lines left short of two
/// cells determine which cells may be added. Each extra removal forces one
/// extra addition, so the first `r` with a solution gives the minimum.
pub fn repair_hamilton_mask(mask: &CellSet, forbidden: &CellSet, max_extra: usize) -> Result<MaskRepair, RepairError> {
    let n = mask.order();
    let mandatory: Vec<Position> = mask.iter().filter(|&p| forbidden.contains(p)).collect();
    let kept = mask.difference(forbidden);
    let others: Vec<Position> = kept.iter().collect();
    for r in 0..=max_extra.min(others.len()) {
        let mut solutions = Vec::new();
        for extra in others.iter().combinations(r) {
            let mut s = kept.clone();
            for &&p in &extra {
                s.remove(p);
            }
            let mut row_count = vec![0usize; n + 1];
            let mut col_count = vec![0usize; n + 1];
            for p in s.iter() {
                row_count[p.row] += 1;
                col_count[p.col] += 1;
            }
            if row_count.iter().chain(&col_count).any(|&c| c > 2) {
                continue;
            }
            let rows: Vec<usize> = (1..=n).flat_map(|i| std::iter::repeat_n(i, 2 - row_count[i])).collect();
            let cols: Vec<usize> = (1..=n).flat_map(|i| std::iter::repeat_n(i, 2 - col_count[i])).collect();
            if rows.len() != cols.len() {
                continue;
            }
            let orders: BTreeSet<Vec<usize>> = cols.iter().copied().permutations(cols.len()).collect();
            for perm in orders {
                let added: BTreeSet<Position> = rows.iter().zip(&perm).map(|(&r, &c)| Position::new(r, c)).collect();
                if added.len() != rows.len() || added.iter().any(|&p| forbidden.contains(p) || s.contains(p)) {
                    continue;
                }
                let mut t = s.clone();
                for &p in &added {
                    t.insert(p);
                }
                if is_hamilton(&t) {
                    let removed = mandatory.iter().chain(extra.iter().copied()).map(|p| (p.row, p.col)).sorted().collect();
                    let added = added.iter().map(|p| (p.row, p.col)).collect();
                    solutions.push(MaskEdit { removed, added });
                }
            }
        }
        if !solutions.is_empty() {
            solutions.sort();
            solutions.dedup();
            let edit = solutions[0].clone();
            let mut out = kept.clone();
            for &(r, c) in &edit.removed {
                out.remove(Position::new(r, c));
            }
            for &(r, c) in &edit.added {
                out.insert(Position::new(r, c));
            }
            return Ok(MaskRepair { mask: out, edit, solutions });
        }
    }
    Err(RepairError::NoRepair {
        max_edits: mandatory.len() + 2 * max_extra,
    })
}

/// Repairs two masks in turn, the second avoiding the repaired first.
/// Both orders are tried; the one with fewer total edits wins, and on a
/// tie the order `(first, second)` as passed.
pub fn repair_mask_pair(
    first: &CellSet,
    second: &CellSet,
    filled: &CellSet,
    max_extra: usize,
) -> Result<(MaskRepair, MaskRepair), RepairError> {
    let run = |a: &CellSet, b: &CellSet| -> Result<(MaskRepair, MaskRepair), RepairError> {
        let ra = repair_hamilton_mask(a, filled, max_extra)?;
        let rb = repair_hamilton_mask(b, &filled.union(&ra.mask), max_extra)?;
        Ok((ra, rb))
    };
    let total = |p: &(MaskRepair, MaskRepair)| p.0.edit.len() + p.1.edit.len();
    match (run(first, second), run(second, first).map(|(b, a)| (a, b))) {
        (Ok(x), Ok(y)) => Ok(if total(&y) < total(&x) { y } else { x }),
        (Ok(x), Err(_)) | (Err(_), Ok(x)) => Ok(x),
        (Err(e), Err(_)) => Err(e),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepairedH13_9 {
    /// The numeric cells exactly as printed, checked as an `H(13;9)`.
    pub printed_report: VerificationReport,
    pub printed: SparseSquareArray,
    pub base: SparseSquareArray,
    pub base_repair: RowRepair,
    pub h: CellSet,
    pub k: CellSet,
    pub h_repair: MaskRepair,
    pub k_repair: MaskRepair,
}

/// Repairs the printed `H(13;9)`: the base as an `H(13;5)`, then the masks
/// `K` and `H` as disjoint Hamilton cycles avoiding it.
pub fn repair_h13_9() -> Result<RepairedH13_9, RepairError> {
    let f = get_fixture("H(13;9)", None)?;
    let mask = |name: &str| f.masks.get(name).cloned().ok_or_else(|| RepairError::MissingMask(name.into()));
    let (h, k) = (mask("H")?, mask("K")?);
    let printed_report = verify_heffter(&f.array, 9);
    let base_repair = repair_rows(&f.array, 5, 3)?;
    let filled = CellSet::from_positions(13, base_repair.array.positions());
    let (k_repair, h_repair) = repair_mask_pair(&k, &h, &filled, 3)?;
    Ok(RepairedH13_9 {
        printed_report,
        printed: f.array,
        base: base_repair.array.clone(),
        base_repair,
        h: h_repair.mask.clone(),
        k: k_repair.mask.clone(),
        h_repair,
        k_repair,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::base_case_d;

    #[test]
    fn printed_array_is_invalid() {
        let r = repair_h13_9().unwrap();
        assert!(!r.printed_report.is_valid());
        assert!(r.printed_report.duplicated.contains(&10));
        assert!(r.printed_report.duplicated.contains(&27));
        assert_eq!(suspect_rows(&r.printed, 5), BTreeSet::from([2, 3]));
    }

    #[test]
    fn base_repair_is_two_edits_and_matches_formula() {
        let r = repair_h13_9().unwrap();
        assert_eq!(
            r.base_repair.edits,
            vec![
                CellEdit::Replace { row: 3, col: 6, old: 10, new: 11 },
                CellEdit::Drop { row: 3, col: 8, old: 27 },
            ]
        );
        assert_eq!(r.base_repair.solutions.len(), 1);
        assert_eq!(r.base, base_case_d(3).unwrap());
        assert!(verify_heffter(&r.base, 5).is_valid());
    }

    #[test]
    fn masks_become_disjoint_hamilton_cycles() {
        let r = repair_h13_9().unwrap();
        assert!(is_hamilton(&r.h) && is_hamilton(&r.k));
        assert!(r.h.is_disjoint(&r.k));
        let filled = CellSet::from_positions(13, r.base.positions());
        assert!(r.h.is_disjoint(&filled) && r.k.is_disjoint(&filled));
        assert_eq!(r.k_repair.edit, MaskEdit { removed: vec![], added: vec![(13, 1)] });
        assert_eq!(r.h_repair.edit.len(), 4);
        assert_eq!(r.h_repair.solutions.len(), 2);
        assert_eq!(
            r.h_repair.edit,
            MaskEdit {
                removed: vec![(4, 6), (13, 1)],
                added: vec![(4, 1), (13, 6)],
            }
        );
    }

    #[test]
    fn valid_mask_needs_no_edit() {
        let h = CellSet::diagonals(7, &[0, 1]);
        let r = repair_hamilton_mask(&h, &CellSet::new(7), 1).unwrap();
        assert!(r.edit.is_empty());
        assert_eq!(r.mask, h);
    }
}
