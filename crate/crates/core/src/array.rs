//! Partial square arrays of signed nonzero integers.
//!
//! Rows and columns are 1-based throughout. Index arithmetic done modulo the
//! order goes through [`wrap`], which maps residue 0 to `n`.
//!
//! Entries are `i64`. Every array built here has entries bounded in magnitude
//! by `n * k <= n^2`, so 64 bits cover any order that fits in memory.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

/// Reduces `x` modulo `n` into `1..=n` (a residue of 0 becomes `n`).
pub fn wrap(n: usize, x: i64) -> usize {
    debug_assert!(n > 0);
    ((x - 1).rem_euclid(n as i64) + 1) as usize
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArrayError {
    #[error("cell ({row},{col}) is filled in both operands")]
    CellCollision { row: usize, col: usize },
    #[error("cell ({row},{col}) lies outside an array of order {n}")]
    OutOfRange { row: usize, col: usize, n: usize },
    #[error("cell ({row},{col}) would hold 0")]
    ZeroEntry { row: usize, col: usize },
    #[error("arrays have different orders ({left} and {right})")]
    OrderMismatch { left: usize, right: usize },
}

/// A 1-based cell coordinate. Ordering is row-major.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Position {
    pub row: usize,
    pub col: usize,
}

impl Position {
    pub const fn new(row: usize, col: usize) -> Self {
        Self { row, col }
    }

    /// Builds a position from unreduced coordinates, reducing both modulo `n`.
    pub fn wrapped(n: usize, row: i64, col: i64) -> Self {
        Self::new(wrap(n, row), wrap(n, col))
    }

    /// The diagonal index `d` with this cell in `D_d` for order `n`.
    pub fn diagonal(self, n: usize) -> usize {
        (self.row as i64 - self.col as i64).rem_euclid(n as i64) as usize
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Absolute values of the entries of an array.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SupportSet(BTreeSet<u64>);

impl SupportSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// `{lo, lo+1, ..., hi}`; empty when `lo > hi`.
    pub fn range(lo: u64, hi: u64) -> Self {
        Self((lo..=hi).collect())
    }

    pub fn insert(&mut self, value: u64) -> bool {
        self.0.insert(value)
    }

    pub fn contains(&self, value: u64) -> bool {
        self.0.contains(&value)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().copied()
    }

    pub fn shifted(&self, z: u64) -> Self {
        Self(self.0.iter().map(|v| v + z).collect())
    }

    pub fn union(&self, other: &Self) -> Self {
        Self(self.0.union(&other.0).copied().collect())
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.0.is_disjoint(&other.0)
    }

    /// Elements of `self` missing from `other`.
    pub fn difference(&self, other: &Self) -> Self {
        Self(self.0.difference(&other.0).copied().collect())
    }

    pub fn min(&self) -> Option<u64> {
        self.0.first().copied()
    }

    pub fn max(&self) -> Option<u64> {
        self.0.last().copied()
    }
}

impl FromIterator<u64> for SupportSet {
    fn from_iter<I: IntoIterator<Item = u64>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

/// An `n x n` partial array whose filled cells hold nonzero integers.
///
/// An empty cell is simply absent from the map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseSquareArray {
    n: usize,
    cells: BTreeMap<Position, i64>,
}

impl SparseSquareArray {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            cells: BTreeMap::new(),
        }
    }

    pub fn from_cells<I>(n: usize, cells: I) -> Result<Self, ArrayError>
    where
        I: IntoIterator<Item = (Position, i64)>,
    {
        let mut a = Self::new(n);
        for (pos, v) in cells {
            a.insert(pos, v)?;
        }
        Ok(a)
    }

    /// Fills one cell. Fails on an out-of-range position, a zero value, or
    /// an already filled cell.
    pub fn insert(&mut self, pos: Position, value: i64) -> Result<(), ArrayError> {
        self.check_position(pos)?;
        if value == 0 {
            return Err(ArrayError::ZeroEntry {
                row: pos.row,
                col: pos.col,
            });
        }
        if self.cells.contains_key(&pos) {
            return Err(ArrayError::CellCollision {
                row: pos.row,
                col: pos.col,
            });
        }
        self.cells.insert(pos, value);
        Ok(())
    }

    /// Fills the cell at unreduced coordinates `(row, col)` taken modulo `n`.
    pub fn insert_wrapped(&mut self, row: i64, col: i64, value: i64) -> Result<(), ArrayError> {
        self.insert(Position::wrapped(self.n, row, col), value)
    }

    pub fn remove(&mut self, pos: Position) -> Option<i64> {
        self.cells.remove(&pos)
    }

    /// Overwrites a filled cell, returning the previous value.
    pub fn replace(&mut self, pos: Position, value: i64) -> Result<Option<i64>, ArrayError> {
        self.check_position(pos)?;
        if value == 0 {
            return Err(ArrayError::ZeroEntry {
                row: pos.row,
                col: pos.col,
            });
        }
        Ok(self.cells.insert(pos, value))
    }

    fn check_position(&self, pos: Position) -> Result<(), ArrayError> {
        if pos.row == 0 || pos.col == 0 || pos.row > self.n || pos.col > self.n {
            return Err(ArrayError::OutOfRange {
                row: pos.row,
                col: pos.col,
                n: self.n,
            });
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, pos: Position) -> Option<i64> {
        self.cells.get(&pos).copied()
    }

    pub fn contains(&self, pos: Position) -> bool {
        self.cells.contains_key(&pos)
    }

    /// Number of filled cells.
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Filled cells in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (Position, i64)> + '_ {
        self.cells.iter().map(|(p, v)| (*p, *v))
    }

    pub fn positions(&self) -> impl Iterator<Item = Position> + '_ {
        self.cells.keys().copied()
    }

    pub fn row_sums(&self) -> Vec<i64> {
        let mut sums = vec![0; self.n];
        for (p, v) in self.iter() {
            sums[p.row - 1] += v;
        }
        sums
    }

    pub fn col_sums(&self) -> Vec<i64> {
        let mut sums = vec![0; self.n];
        for (p, v) in self.iter() {
            sums[p.col - 1] += v;
        }
        sums
    }

    pub fn row_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.n];
        for p in self.positions() {
            counts[p.row - 1] += 1;
        }
        counts
    }

    pub fn col_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.n];
        for p in self.positions() {
            counts[p.col - 1] += 1;
        }
        counts
    }

    /// `Some(k)` when every row and column holds exactly `k` filled cells.
    pub fn uniform_fill(&self) -> Option<usize> {
        let rows = self.row_counts();
        let k = *rows.first()?;
        let uniform = rows.iter().chain(self.col_counts().iter()).all(|&c| c == k);
        uniform.then_some(k)
    }

    pub fn support(&self) -> SupportSet {
        self.cells.values().map(|v| v.unsigned_abs()).collect()
    }

    /// Sorted diagonal indices `d` such that some filled cell lies in `D_d`.
    pub fn occupied_diagonals(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = self.positions().map(|p| p.diagonal(self.n)).collect();
        set.into_iter().collect()
    }

    /// The sign-aware shift `A ± z`: positive entries grow by `z`, negative
    /// entries shrink by `z`.
    pub fn shift(&self, z: u64) -> Self {
        let z = z as i64;
        Self {
            n: self.n,
            cells: self
                .cells
                .iter()
                .map(|(p, &v)| (*p, if v > 0 { v + z } else { v - z }))
                .collect(),
        }
    }

    pub fn negate(&self) -> Self {
        Self {
            n: self.n,
            cells: self.cells.iter().map(|(p, &v)| (*p, -v)).collect(),
        }
    }

    /// Union of two arrays of the same order with disjoint filled cells.
    pub fn superimpose(&self, other: &Self) -> Result<Self, ArrayError> {
        if self.n != other.n {
            return Err(ArrayError::OrderMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut out = self.clone();
        for (p, v) in other.iter() {
            out.insert(p, v)?;
        }
        Ok(out)
    }

    /// Places this array inside an empty array of order `target_order`,
    /// moving cell `(r, c)` to `(r + row_offset, c + col_offset)`.
    pub fn embed_block(
        &self,
        target_order: usize,
        row_offset: usize,
        col_offset: usize,
    ) -> Result<Self, ArrayError> {
        let mut out = Self::new(target_order);
        for (p, v) in self.iter() {
            out.insert(Position::new(p.row + row_offset, p.col + col_offset), v)?;
        }
        Ok(out)
    }

    /// Relabels rows and columns: cell `(r, c)` moves to `(row_map(r), col_map(c))`.
    pub fn permuted<R, C>(&self, row_map: R, col_map: C) -> Result<Self, ArrayError>
    where
        R: Fn(usize) -> usize,
        C: Fn(usize) -> usize,
    {
        let mut out = Self::new(self.n);
        for (p, v) in self.iter() {
            out.insert(Position::new(row_map(p.row), col_map(p.col)), v)?;
        }
        Ok(out)
    }

    /// Renders the array as an aligned grid, `.` for empty cells.
    pub fn render(&self) -> String {
        let width = self
            .cells
            .values()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        for r in 1..=self.n {
            let line: Vec<String> = (1..=self.n)
                .map(|c| match self.get(Position::new(r, c)) {
                    Some(v) => format!("{v:>width$}"),
                    None => format!("{:>width$}", "."),
                })
                .collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arr(n: usize, cells: &[((usize, usize), i64)]) -> SparseSquareArray {
        SparseSquareArray::from_cells(n, cells.iter().map(|&((r, c), v)| (Position::new(r, c), v)))
            .unwrap()
    }

    #[test]
    fn wrap_replaces_zero_by_n() {
        assert_eq!(wrap(9, 9), 9);
        assert_eq!(wrap(9, 0), 9);
        assert_eq!(wrap(9, 10), 1);
        assert_eq!(wrap(9, -1), 8);
        assert_eq!(wrap(5, 1), 1);
    }

    #[test]
    fn shift_is_sign_aware() {
        let a = arr(2, &[((1, 1), 3), ((1, 2), -5)]);
        let b = a.shift(2);
        assert_eq!(b, arr(2, &[((1, 1), 5), ((1, 2), -7)]));
        assert_eq!(a.shift(0), a);
        assert_eq!(b.support(), a.support().shifted(2));
    }

    #[test]
    fn negate_is_an_involution() {
        let a = arr(1, &[((1, 1), 3)]);
        assert_eq!(a.negate(), arr(1, &[((1, 1), -3)]));
        assert_eq!(a.negate().negate(), a);
        assert_eq!(a.negate().support(), a.support());
    }

    #[test]
    fn superimpose_unions_and_detects_collisions() {
        let a = arr(2, &[((1, 1), 1)]);
        let b = arr(2, &[((2, 2), -4)]);
        let ab = a.superimpose(&b).unwrap();
        assert_eq!(ab.len(), 2);
        assert_eq!(ab, b.superimpose(&a).unwrap());
        assert_eq!(ab.row_sums(), vec![1, -4]);
        let err = a.superimpose(&a).unwrap_err();
        assert_eq!(err, ArrayError::CellCollision { row: 1, col: 1 });
        assert!(matches!(
            a.superimpose(&SparseSquareArray::new(3)),
            Err(ArrayError::OrderMismatch { .. })
        ));
    }

    #[test]
    fn embed_block_offsets_cells() {
        let c = arr(3, &[((1, 1), 5), ((2, 2), 6), ((3, 3), 7)]);
        let big = c.embed_block(19, 16, 16).unwrap();
        assert_eq!(big.order(), 19);
        let rows: BTreeSet<usize> = big.positions().map(|p| p.row).collect();
        assert_eq!(rows, [17, 18, 19].into_iter().collect());
        assert_eq!(c.embed_block(3, 0, 0).unwrap(), c);
        assert!(matches!(
            c.embed_block(4, 2, 0),
            Err(ArrayError::OutOfRange { .. })
        ));
    }

    #[test]
    fn rejects_zero_and_out_of_range() {
        let mut a = SparseSquareArray::new(3);
        assert!(matches!(
            a.insert(Position::new(1, 1), 0),
            Err(ArrayError::ZeroEntry { .. })
        ));
        assert!(matches!(
            a.insert(Position::new(0, 1), 2),
            Err(ArrayError::OutOfRange { .. })
        ));
        assert!(matches!(
            a.insert(Position::new(1, 4), 2),
            Err(ArrayError::OutOfRange { .. })
        ));
        a.insert_wrapped(4, 0, 9).unwrap();
        assert_eq!(a.get(Position::new(1, 3)), Some(9));
    }

    #[test]
    fn uniform_fill_detects_k() {
        let a = arr(2, &[((1, 1), 1), ((2, 2), 2)]);
        assert_eq!(a.uniform_fill(), Some(1));
        let b = arr(2, &[((1, 1), 1), ((1, 2), 2)]);
        assert_eq!(b.uniform_fill(), None);
    }
}
