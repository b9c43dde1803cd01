//! Cell sets of the square grid viewed as edges of the complete bipartite
//! graph on rows and columns: diagonals, 2-factors, Hamilton cycles, and
//! the alternating traversals the fillers walk along.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::array::{wrap, Position};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Line {
    Row(usize),
    Column(usize),
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Line::Row(r) => write!(f, "row {r}"),
            Line::Column(c) => write!(f, "column {c}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycleError {
    #[error("{line} meets the cell set {count} times instead of twice")]
    NotTwoFactor { line: Line, count: usize },
    #[error("cell set is not a single closed alternating cycle through the start cell")]
    NotSingleCycle,
    #[error("the two traversals have no row in common")]
    NoSharedRow,
}

/// A set of cells of the order-`n` grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellSet {
    n: usize,
    cells: BTreeSet<Position>,
}

impl CellSet {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            cells: BTreeSet::new(),
        }
    }

    /// Collects positions, panicking on out-of-range cells.
    pub fn from_positions<I: IntoIterator<Item = Position>>(n: usize, cells: I) -> Self {
        let mut s = Self::new(n);
        for p in cells {
            s.insert(p);
        }
        s
    }

    /// Cells `(r, c)` given with unreduced coordinates, reduced modulo `n`.
    pub fn from_wrapped<I: IntoIterator<Item = (i64, i64)>>(n: usize, cells: I) -> Self {
        Self::from_positions(n, cells.into_iter().map(|(r, c)| Position::wrapped(n, r, c)))
    }

    /// `D_d = {(r + d, r) : 1 <= r <= n}`.
    pub fn diagonal(n: usize, d: usize) -> Self {
        Self::from_positions(
            n,
            (1..=n).map(|r| Position::new(wrap(n, (r + d) as i64), r)),
        )
    }

    /// Union of the listed diagonals.
    pub fn diagonals(n: usize, ds: &[usize]) -> Self {
        let mut s = Self::new(n);
        for &d in ds {
            s.extend(&Self::diagonal(n, d));
        }
        s
    }

    pub fn insert(&mut self, p: Position) -> bool {
        assert!(
            (1..=self.n).contains(&p.row) && (1..=self.n).contains(&p.col),
            "cell {p} outside order {}",
            self.n
        );
        self.cells.insert(p)
    }

    pub fn remove(&mut self, p: Position) -> bool {
        self.cells.remove(&p)
    }

    pub fn extend(&mut self, other: &CellSet) {
        for p in other.iter() {
            self.insert(p);
        }
    }

    pub fn union(&self, other: &CellSet) -> CellSet {
        let mut out = self.clone();
        out.extend(other);
        out
    }

    pub fn difference(&self, other: &CellSet) -> CellSet {
        Self {
            n: self.n,
            cells: self.cells.difference(&other.cells).copied().collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, p: Position) -> bool {
        self.cells.contains(&p)
    }

    pub fn iter(&self) -> impl Iterator<Item = Position> + '_ {
        self.cells.iter().copied()
    }

    pub fn is_disjoint(&self, other: &CellSet) -> bool {
        self.cells.is_disjoint(&other.cells)
    }

    /// Moves the set into an order-`target` grid, shifting every cell by the offsets.
    pub fn translated(&self, target: usize, row_offset: usize, col_offset: usize) -> CellSet {
        Self::from_positions(
            target,
            self.iter()
                .map(|p| Position::new(p.row + row_offset, p.col + col_offset)),
        )
    }

    pub fn rows(&self) -> BTreeSet<usize> {
        self.iter().map(|p| p.row).collect()
    }

    pub fn cols(&self) -> BTreeSet<usize> {
        self.iter().map(|p| p.col).collect()
    }

    fn in_row(&self, r: usize) -> impl Iterator<Item = Position> + '_ {
        self.cells
            .range(Position::new(r, 1)..=Position::new(r, self.n))
            .copied()
    }

    fn in_col(&self, c: usize) -> impl Iterator<Item = Position> + '_ {
        self.iter().filter(move |p| p.col == c)
    }

    /// Other cell of `p`'s row (or column) within the set, if exactly one exists.
    fn partner(&self, p: Position, mv: Move) -> Option<Position> {
        let mut others: Vec<Position> = match mv {
            Move::Row => self.in_row(p.row).filter(|&q| q != p).collect(),
            Move::Column => self.in_col(p.col).filter(|&q| q != p).collect(),
        };
        if others.len() == 1 {
            others.pop()
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Move {
    Row,
    Column,
}

impl Move {
    fn flip(self) -> Self {
        match self {
            Move::Row => Move::Column,
            Move::Column => Move::Row,
        }
    }
}

/// A closed alternating cycle listed as `e_1, ..., e_{2L}`.
///
/// With `first_move == Row`, `e_i` and `e_{i+1}` share a row for odd `i`
/// and a column for even `i`; `e_{2L}` and `e_1` share a column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleTraversal {
    n: usize,
    cells: Vec<Position>,
    first_move: Move,
}

impl CycleTraversal {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &[Position] {
        &self.cells
    }

    pub fn first_move(&self) -> Move {
        self.first_move
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// `e_i` with 1-based `i`.
    pub fn e(&self, i: usize) -> Position {
        self.cells[i - 1]
    }

    pub fn cell_set(&self) -> CellSet {
        CellSet::from_positions(self.n, self.cells.iter().copied())
    }

    /// Checks distinctness, even length and the alternation rule at every
    /// step including the wrap from the last cell back to the first.
    pub fn is_alternating(&self) -> bool {
        let len = self.cells.len();
        if len < 4 || !len.is_multiple_of(2) {
            return false;
        }
        let distinct: BTreeSet<_> = self.cells.iter().collect();
        if distinct.len() != len {
            return false;
        }
        let mut mv = self.first_move;
        for i in 0..len {
            let (a, b) = (self.cells[i], self.cells[(i + 1) % len]);
            let ok = match mv {
                Move::Row => a.row == b.row && a.col != b.col,
                Move::Column => a.col == b.col && a.row != b.row,
            };
            if !ok {
                return false;
            }
            mv = mv.flip();
        }
        true
    }

    /// The same cycle listed row-first from `start`.
    pub fn restarted_at(&self, start: Position) -> Result<CycleTraversal, CycleError> {
        traverse(&self.cell_set(), start, Move::Row)
    }

    pub fn is_hamilton(&self) -> bool {
        self.cells.len() == 2 * self.n
    }
}

/// A cell set meeting every row and column exactly twice, split into its cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoFactor {
    n: usize,
    cycles: Vec<CycleTraversal>,
}

impl TwoFactor {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn cycles(&self) -> &[CycleTraversal] {
        &self.cycles
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        self.cycles.iter().map(|c| c.len()).collect()
    }

    pub fn is_hamilton(&self) -> bool {
        self.cycles.len() == 1
    }

    pub fn cell_count(&self) -> usize {
        self.cycles.iter().map(|c| c.len()).sum()
    }

    pub fn cell_set(&self) -> CellSet {
        let mut s = CellSet::new(self.n);
        for c in &self.cycles {
            s.extend(&c.cell_set());
        }
        s
    }
}

/// Splits a 2-factor into canonical cycle traversals: each starts at its
/// lowest cell with a row move, and cycles are listed by starting cell.
pub fn classify_cycles(s: &CellSet) -> Result<TwoFactor, CycleError> {
    let n = s.order();
    let mut rows = vec![0usize; n];
    let mut cols = vec![0usize; n];
    for p in s.iter() {
        rows[p.row - 1] += 1;
        cols[p.col - 1] += 1;
    }
    for (i, &count) in rows.iter().enumerate() {
        if count != 2 {
            return Err(CycleError::NotTwoFactor {
                line: Line::Row(i + 1),
                count,
            });
        }
    }
    for (i, &count) in cols.iter().enumerate() {
        if count != 2 {
            return Err(CycleError::NotTwoFactor {
                line: Line::Column(i + 1),
                count,
            });
        }
    }
    Ok(TwoFactor {
        n,
        cycles: split_into_cycles(s),
    })
}

/// Like [`classify_cycles`] but only requires the lines the set touches to
/// be met twice. Used for cycles confined to a sub-grid.
pub fn classify_partial_cycles(s: &CellSet) -> Result<Vec<CycleTraversal>, CycleError> {
    let n = s.order();
    let mut rows = vec![0usize; n];
    let mut cols = vec![0usize; n];
    for p in s.iter() {
        rows[p.row - 1] += 1;
        cols[p.col - 1] += 1;
    }
    if let Some(i) = rows.iter().position(|&c| c != 0 && c != 2) {
        return Err(CycleError::NotTwoFactor {
            line: Line::Row(i + 1),
            count: rows[i],
        });
    }
    if let Some(i) = cols.iter().position(|&c| c != 0 && c != 2) {
        return Err(CycleError::NotTwoFactor {
            line: Line::Column(i + 1),
            count: cols[i],
        });
    }
    Ok(split_into_cycles(s))
}

fn split_into_cycles(s: &CellSet) -> Vec<CycleTraversal> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for p in s.iter() {
        if seen.contains(&p) {
            continue;
        }
        let t = traverse_unchecked(s, p, Move::Row).expect("every line met twice");
        seen.extend(t.cells.iter().copied());
        out.push(t);
    }
    out
}

fn traverse_unchecked(
    s: &CellSet,
    start: Position,
    first_move: Move,
) -> Result<CycleTraversal, CycleError> {
    let mut cells = vec![start];
    let mut cur = start;
    let mut mv = first_move;
    loop {
        let next = s.partner(cur, mv).ok_or(CycleError::NotSingleCycle)?;
        mv = mv.flip();
        if next == start {
            break;
        }
        if cells.len() > s.len() {
            return Err(CycleError::NotSingleCycle);
        }
        cells.push(next);
        cur = next;
    }
    Ok(CycleTraversal {
        n: s.order(),
        cells,
        first_move,
    })
}

/// Walks the single cycle `s` from `start`, moving first along the row
/// (or column) of `start`.
pub fn traverse(s: &CellSet, start: Position, first_move: Move) -> Result<CycleTraversal, CycleError> {
    if !s.contains(start) {
        return Err(CycleError::NotSingleCycle);
    }
    let t = traverse_unchecked(s, start, first_move)?;
    if t.len() != s.len() || !t.is_alternating() {
        return Err(CycleError::NotSingleCycle);
    }
    Ok(t)
}

/// Re-labels two traversals so that `e_1` and `f_1` lie in the lowest row the
/// two cycles share, each at its lowest column there. Both results move
/// along the row first.
pub fn align_traversals(
    t1: &CycleTraversal,
    t2: &CycleTraversal,
) -> Result<(CycleTraversal, CycleTraversal), CycleError> {
    let s1 = t1.cell_set();
    let s2 = t2.cell_set();
    let row = s1
        .rows()
        .intersection(&s2.rows())
        .next()
        .copied()
        .ok_or(CycleError::NoSharedRow)?;
    let first_in = |s: &CellSet| s.in_row(row).next().expect("row is shared");
    Ok((
        traverse(&s1, first_in(&s1), Move::Row)?,
        traverse(&s2, first_in(&s2), Move::Row)?,
    ))
}

/// Greatest common divisor, used to predict the cycle structure of `D_i ∪ D_j`.
pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(r: usize, c: usize) -> Position {
        Position::new(r, c)
    }

    #[test]
    fn diagonal_matches_definition() {
        let d0 = CellSet::diagonal(5, 0);
        assert_eq!(d0.iter().collect::<Vec<_>>(), (1..=5).map(|i| p(i, i)).collect::<Vec<_>>());
        let d2 = CellSet::diagonal(5, 2);
        let want: BTreeSet<_> = [p(3, 1), p(4, 2), p(5, 3), p(1, 4), p(2, 5)].into_iter().collect();
        assert_eq!(d2.iter().collect::<BTreeSet<_>>(), want);
        let d8 = CellSet::diagonal(9, 8);
        assert!(d8.contains(p(9, 1)));
        assert!(d8.contains(p(1, 2)));
        assert!(d8.iter().all(|q| q.diagonal(9) == 8));
    }

    #[test]
    fn union_of_diagonals_in_order_six() {
        let h = classify_cycles(&CellSet::diagonals(6, &[0, 1])).unwrap();
        assert_eq!(h.cycle_lengths(), vec![12]);
        assert!(h.is_hamilton());
        let two = classify_cycles(&CellSet::diagonals(6, &[0, 2])).unwrap();
        assert_eq!(two.cycle_lengths(), vec![6, 6]);
        let three = classify_cycles(&CellSet::diagonals(6, &[0, 3])).unwrap();
        assert_eq!(three.cycle_lengths(), vec![4, 4, 4]);
    }

    #[test]
    fn not_two_factor_names_a_line() {
        let err = classify_cycles(&CellSet::diagonal(4, 0)).unwrap_err();
        assert_eq!(
            err,
            CycleError::NotTwoFactor {
                line: Line::Row(1),
                count: 1
            }
        );
    }

    #[test]
    fn traverse_alternates() {
        let s = CellSet::diagonals(3, &[0, 1]);
        let t = traverse(&s, p(1, 1), Move::Row).unwrap();
        assert_eq!(t.len(), 6);
        assert!(t.is_alternating());
        assert_eq!(t.e(1), p(1, 1));
        assert_eq!(t.e(2).row, 1);
        let back = traverse(&s, p(1, 1), Move::Column).unwrap();
        assert!(back.is_alternating());
        assert_eq!(back.e(2).col, 1);
    }

    #[test]
    fn traverse_rejects_bad_inputs() {
        let s = CellSet::diagonals(3, &[0, 1]);
        assert_eq!(traverse(&s, p(1, 2), Move::Row), Err(CycleError::NotSingleCycle));
        let split = CellSet::diagonals(6, &[0, 2]);
        assert_eq!(traverse(&split, p(1, 1), Move::Row), Err(CycleError::NotSingleCycle));
    }

    #[test]
    fn align_uses_lowest_shared_row() {
        let t1 = classify_cycles(&CellSet::diagonals(5, &[0, 1])).unwrap().cycles()[0].clone();
        let t2 = classify_cycles(&CellSet::diagonals(5, &[2, 3])).unwrap().cycles()[0].clone();
        let (a, b) = align_traversals(&t1, &t2).unwrap();
        assert_eq!(a.e(1).row, 1);
        assert_eq!(b.e(1).row, 1);
        assert!(a.is_alternating() && b.is_alternating());
    }

    #[test]
    fn align_fails_without_shared_row() {
        let top = CellSet::from_positions(4, [p(1, 1), p(1, 2), p(2, 1), p(2, 2)]);
        let bottom = CellSet::from_positions(4, [p(3, 3), p(3, 4), p(4, 3), p(4, 4)]);
        let t1 = traverse(&top, p(1, 1), Move::Row).unwrap();
        let t2 = traverse(&bottom, p(3, 3), Move::Row).unwrap();
        assert_eq!(align_traversals(&t1, &t2), Err(CycleError::NoSharedRow));
    }
}
