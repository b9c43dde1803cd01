//! Procedures that fill two disjoint cycles (or 2-factors) so that every
//! row and column gains four entries with a prescribed sum.

use thiserror::Error;

use crate::array::{ArrayError, SparseSquareArray};
use crate::cycles::{align_traversals, classify_cycles, CellSet, CycleError, CycleTraversal, Line, Move, TwoFactor};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FillError {
    #[error("cell set {which} is not a Hamilton cycle: {reason}")]
    NotHamilton { which: &'static str, reason: String },
    #[error("the two cell sets overlap")]
    NotDisjoint,
    #[error(transparent)]
    Cycle(#[from] CycleError),
    #[error("first cells of the traversals are not in a common row")]
    NoSharedRow,
    #[error("run values violate the spacing requirement: {0}")]
    BadRunSpacing(String),
    #[error("cell set is not a 2-factor made of two {n}-cycles")]
    NotTwoFactorOfTwoNCycles { n: usize },
    #[error("no pairing of the 2-factor cycles puts paired cycles in a common row")]
    AlignmentImpossible,
    #[error("{line} sums to {sum}, expected {expected}")]
    BadLineSum { line: Line, sum: i64, expected: i64 },
    #[error("filled block breaks its own line-sum contract at {line}")]
    ContractViolated { line: Line },
    #[error(transparent)]
    Array(#[from] ArrayError),
}

/// Starting values of the two runs `{s+1..s+2n}` and `{t+1..t+2n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunPair {
    pub s: u64,
    pub t: u64,
}

/// Starting values of four runs of length `n` each.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunQuad {
    pub s: u64,
    pub t: u64,
    pub u: u64,
    pub v: u64,
}

fn hamilton_traversal(n: usize, s: &CellSet, which: &'static str) -> Result<CycleTraversal, FillError> {
    let not_hamilton = |reason: String| FillError::NotHamilton { which, reason };
    if s.order() != n {
        return Err(not_hamilton(format!("order {} differs from {n}", s.order())));
    }
    let tf = classify_cycles(s).map_err(|e| not_hamilton(e.to_string()))?;
    if !tf.is_hamilton() {
        return Err(not_hamilton(format!("splits into cycles of lengths {:?}", tf.cycle_lengths())));
    }
    Ok(tf.cycles()[0].clone())
}

fn aligned_hamilton_pair(
    n: usize,
    s1: &CellSet,
    s2: &CellSet,
) -> Result<(CycleTraversal, CycleTraversal), FillError> {
    let t1 = hamilton_traversal(n, s1, "S1")?;
    let t2 = hamilton_traversal(n, s2, "S2")?;
    if !s1.is_disjoint(s2) {
        return Err(FillError::NotDisjoint);
    }
    Ok(align_traversals(&t1, &t2)?)
}

fn check_traversal_pair(e: &CycleTraversal, f: &CycleTraversal, len: usize) -> Result<(), FillError> {
    for t in [e, f] {
        if t.len() != len || t.first_move() != Move::Row || !t.is_alternating() {
            return Err(FillError::Cycle(CycleError::NotSingleCycle));
        }
    }
    if !e.cell_set().is_disjoint(&f.cell_set()) {
        return Err(FillError::NotDisjoint);
    }
    if e.e(1).row != f.e(1).row {
        return Err(FillError::NoSharedRow);
    }
    Ok(())
}

/// Asserts that every row and column of `a` touched by a filled cell sums to `target`.
fn assert_line_sums(a: &SparseSquareArray, target: i64) -> Result<(), FillError> {
    let rc = a.row_counts();
    let cc = a.col_counts();
    for (i, (&s, &c)) in a.row_sums().iter().zip(&rc).enumerate() {
        if c > 0 && s != target {
            return Err(FillError::ContractViolated { line: Line::Row(i + 1) });
        }
    }
    for (i, (&s, &c)) in a.col_sums().iter().zip(&cc).enumerate() {
        if c > 0 && s != target {
            return Err(FillError::ContractViolated { line: Line::Column(i + 1) });
        }
    }
    Ok(())
}

/// Fills two disjoint Hamilton cycles with `1..=4n` so that every line sums to `8n+2`.
pub fn fill_bacon(n: usize, s1: &CellSet, s2: &CellSet) -> Result<SparseSquareArray, FillError> {
    let (e, f) = aligned_hamilton_pair(n, s1, s2)?;
    fill_bacon_traversals(&e, &f)
}

/// [`fill_bacon`] on explicitly labelled cycles `e` and `f`.
pub fn fill_bacon_traversals(e: &CycleTraversal, f: &CycleTraversal) -> Result<SparseSquareArray, FillError> {
    let n = e.order();
    check_traversal_pair(e, f, 2 * n)?;
    let n64 = n as i64;
    let mut a = SparseSquareArray::new(n);
    a.insert(e.e(1), 1)?;
    a.insert(f.e(1), 4 * n64)?;
    for i in 1..n {
        let i64_ = i as i64;
        a.insert(e.e(2 * i + 1), 2 * n64 - 2 * i64_ + 1)?;
        a.insert(f.e(2 * i + 1), 2 * n64 + 2 * i64_)?;
    }
    for i in 1..=n {
        let i64_ = i as i64;
        a.insert(e.e(2 * i), 2 * n64 + 2 * i64_ - 1)?;
        a.insert(f.e(2 * i), 2 * n64 - 2 * i64_ + 2)?;
    }
    assert_line_sums(&a, 8 * n64 + 2)?;
    Ok(a)
}

/// Grows a Heffter array whose lines all sum to exactly `2nk+1` by four
/// entries per line, placed on two fresh Hamilton cycles.
///
/// The result has lines summing to exactly `2n(k+4)+1`.
pub fn augment_crucial(a: &SparseSquareArray, s1: &CellSet, s2: &CellSet) -> Result<SparseSquareArray, FillError> {
    let n = a.order();
    let k = a.uniform_fill().unwrap_or(0);
    let expected = (2 * n * k + 1) as i64;
    for (i, &sum) in a.row_sums().iter().enumerate() {
        if sum != expected {
            return Err(FillError::BadLineSum { line: Line::Row(i + 1), sum, expected });
        }
    }
    for (i, &sum) in a.col_sums().iter().enumerate() {
        if sum != expected {
            return Err(FillError::BadLineSum { line: Line::Column(i + 1), sum, expected });
        }
    }
    let filled = CellSet::from_positions(n, a.positions());
    if !filled.is_disjoint(s1) || !filled.is_disjoint(s2) {
        return Err(FillError::NotDisjoint);
    }
    let bacon = fill_bacon(n, s1, s2)?.shift((n * k) as u64);
    let out = a.negate().superimpose(&bacon)?;
    assert_line_sums(&out, (2 * n * (k + 4) + 1) as i64)?;
    Ok(out)
}

/// Fills two disjoint Hamilton cycles with a shiftable block on the runs
/// `{s+1..s+2n}` and `{t+1..t+2n}`; every line sums to 0.
pub fn fill_hamilton_pair(n: usize, s1: &CellSet, s2: &CellSet, runs: RunPair) -> Result<SparseSquareArray, FillError> {
    check_pair_spacing(n, runs)?;
    let (e, f) = aligned_hamilton_pair(n, s1, s2)?;
    fill_hamilton_pair_traversals(&e, &f, runs)
}

fn check_pair_spacing(n: usize, runs: RunPair) -> Result<(), FillError> {
    if runs.t == 0 {
        return Err(FillError::BadRunSpacing(format!("t = {} must be positive", runs.t)));
    }
    if runs.s < runs.t + 2 * n as u64 {
        return Err(FillError::BadRunSpacing(format!(
            "s = {} is below t + 2n = {}",
            runs.s,
            runs.t + 2 * n as u64
        )));
    }
    Ok(())
}

/// [`fill_hamilton_pair`] on explicitly labelled cycles.
pub fn fill_hamilton_pair_traversals(
    e: &CycleTraversal,
    f: &CycleTraversal,
    runs: RunPair,
) -> Result<SparseSquareArray, FillError> {
    let n = e.order();
    check_pair_spacing(n, runs)?;
    check_traversal_pair(e, f, 2 * n)?;
    let (s, t, n64) = (runs.s as i64, runs.t as i64, n as i64);
    let mut a = SparseSquareArray::new(n);
    a.insert(e.e(1), s + 2 * n64)?;
    a.insert(f.e(1), -(t + 2 * n64))?;
    for i in 1..n {
        let i64_ = i as i64;
        a.insert(e.e(2 * i + 1), s + 2 * i64_)?;
        a.insert(f.e(2 * i + 1), -(t + 2 * i64_))?;
    }
    for i in 1..=n {
        let i64_ = i as i64;
        a.insert(e.e(2 * i), -(s + 2 * i64_ - 1))?;
        a.insert(f.e(2 * i), t + 2 * i64_ - 1)?;
    }
    assert_line_sums(&a, 0)?;
    Ok(a)
}

fn check_quad_spacing(n: usize, r: RunQuad) -> Result<(), FillError> {
    let n = n as u64;
    if r.v == 0 {
        return Err(FillError::BadRunSpacing("v must be positive".into()));
    }
    for (hi, lo, name) in [(r.s, r.t, "s >= t + n"), (r.t, r.u, "t >= u + n"), (r.u, r.v, "u >= v + n")] {
        if hi < lo + n {
            return Err(FillError::BadRunSpacing(format!("{name} fails for (s,t,u,v) = ({},{},{},{})", r.s, r.t, r.u, r.v)));
        }
    }
    Ok(())
}

fn shares_row(a: &CycleTraversal, b: &CycleTraversal) -> bool {
    !a.cell_set().rows().is_disjoint(&b.cell_set().rows())
}

/// Fills two disjoint 2-factors, each made of two `n`-cycles, with a shiftable
/// block on four runs of length `n`; every line sums to 0.
pub fn fill_twofactor_pair(n: usize, s1: &TwoFactor, s2: &TwoFactor, runs: RunQuad) -> Result<SparseSquareArray, FillError> {
    let two_n_cycles = |tf: &TwoFactor| tf.order() == n && tf.cycle_lengths() == vec![n, n];
    if !n.is_multiple_of(2) || !two_n_cycles(s1) || !two_n_cycles(s2) {
        return Err(FillError::NotTwoFactorOfTwoNCycles { n });
    }
    check_quad_spacing(n, runs)?;
    if !s1.cell_set().is_disjoint(&s2.cell_set()) {
        return Err(FillError::NotDisjoint);
    }
    let (a, b) = (&s1.cycles()[0], &s1.cycles()[1]);
    let (c, d) = (&s2.cycles()[0], &s2.cycles()[1]);
    let (c1, c2, c1p, c2p) = if shares_row(a, c) && shares_row(b, d) {
        (a, c, b, d)
    } else if shares_row(a, d) && shares_row(b, c) {
        (a, d, b, c)
    } else {
        return Err(FillError::AlignmentImpossible);
    };
    let (e, g) = align_traversals(c1, c2)?;
    let (f, h) = align_traversals(c1p, c2p)?;
    fill_twofactor_pair_traversals(&e, &f, &g, &h, runs)
}

/// [`fill_twofactor_pair`] on explicitly labelled cycles: `e`, `f` from the
/// first 2-factor and `g`, `h` from the second, with `e_1, g_1` in a common
/// row and `f_1, h_1` in a common row.
pub fn fill_twofactor_pair_traversals(
    e: &CycleTraversal,
    f: &CycleTraversal,
    g: &CycleTraversal,
    h: &CycleTraversal,
    runs: RunQuad,
) -> Result<SparseSquareArray, FillError> {
    let n = e.order();
    if !n.is_multiple_of(2) {
        return Err(FillError::NotTwoFactorOfTwoNCycles { n });
    }
    check_quad_spacing(n, runs)?;
    check_traversal_pair(e, g, n)?;
    check_traversal_pair(f, h, n)?;
    let n64 = n as i64;
    let mut a = SparseSquareArray::new(n);
    // Each pair (x, y) gets +(p+n) / -(q+n) at the first cells, then the two
    // interleaved progressions.
    let mut place = |x: &CycleTraversal, y: &CycleTraversal, p: i64, q: i64| -> Result<(), FillError> {
        a.insert(x.e(1), p + n64)?;
        a.insert(y.e(1), -(q + n64))?;
        for i in 1..n / 2 {
            let i64_ = i as i64;
            a.insert(x.e(2 * i + 1), p + 2 * i64_)?;
            a.insert(y.e(2 * i + 1), -(q + 2 * i64_))?;
        }
        for i in 1..=n / 2 {
            let i64_ = i as i64;
            a.insert(x.e(2 * i), -(p + 2 * i64_ - 1))?;
            a.insert(y.e(2 * i), q + 2 * i64_ - 1)?;
        }
        Ok(())
    };
    place(e, g, runs.s as i64, runs.t as i64)?;
    place(f, h, runs.u as i64, runs.v as i64)?;
    if a.len() != 2 * n * 2 {
        return Err(FillError::NotDisjoint);
    }
    assert_line_sums(&a, 0)?;
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::array::{Position, SupportSet};

    #[test]
    fn bacon_order_five() {
        let a = fill_bacon(5, &CellSet::diagonals(5, &[0, 1]), &CellSet::diagonals(5, &[2, 3])).unwrap();
        assert_eq!(a.support(), SupportSet::range(1, 20));
        assert!(a.row_sums().iter().chain(a.col_sums().iter()).all(|&s| s == 42));
    }

    #[test]
    fn bacon_rejects_equal_sets() {
        let s = CellSet::diagonals(5, &[0, 1]);
        assert_eq!(fill_bacon(5, &s, &s), Err(FillError::NotDisjoint));
    }

    #[test]
    fn bacon_rejects_non_hamilton() {
        let err = fill_bacon(6, &CellSet::diagonals(6, &[0, 2]), &CellSet::diagonals(6, &[1, 4])).unwrap_err();
        assert!(matches!(err, FillError::NotHamilton { which: "S1", .. }));
    }

    #[test]
    fn hamilton_pair_order_five() {
        let runs = RunPair { s: 21, t: 10 };
        let a = fill_hamilton_pair(5, &CellSet::diagonals(5, &[1, 2]), &CellSet::diagonals(5, &[3, 4]), runs).unwrap();
        let want = SupportSet::range(11, 20).union(&SupportSet::range(22, 31));
        assert_eq!(a.support(), want);
        assert!(a.row_sums().iter().chain(a.col_sums().iter()).all(|&s| s == 0));
        for z in [0, 1, 7, 1000] {
            let b = a.shift(z);
            assert!(b.row_sums().iter().chain(b.col_sums().iter()).all(|&s| s == 0));
        }
    }

    #[test]
    fn hamilton_pair_spacing() {
        let s1 = CellSet::diagonals(5, &[1, 2]);
        let s2 = CellSet::diagonals(5, &[3, 4]);
        assert!(matches!(
            fill_hamilton_pair(5, &s1, &s2, RunPair { s: 10, t: 10 }),
            Err(FillError::BadRunSpacing(_))
        ));
        assert!(fill_hamilton_pair(5, &s1, &s2, RunPair { s: 20, t: 10 }).is_ok());
    }

    #[test]
    fn twofactor_pair_order_six() {
        let s1 = classify_cycles(&CellSet::diagonals(6, &[0, 2])).unwrap();
        let s2 = classify_cycles(&CellSet::diagonals(6, &[1, 3])).unwrap();
        let runs = RunQuad { s: 22, t: 15, u: 8, v: 1 };
        let a = fill_twofactor_pair(6, &s1, &s2, runs).unwrap();
        let want = [(2, 7), (9, 14), (16, 21), (23, 28)]
            .iter()
            .fold(SupportSet::new(), |acc, &(lo, hi)| acc.union(&SupportSet::range(lo, hi)));
        assert_eq!(a.support(), want);
        assert!(a.row_sums().iter().chain(a.col_sums().iter()).all(|&s| s == 0));
    }

    #[test]
    fn twofactor_pair_rejects_odd_order() {
        let s1 = classify_cycles(&CellSet::diagonals(5, &[0, 1])).unwrap();
        let s2 = classify_cycles(&CellSet::diagonals(5, &[2, 3])).unwrap();
        let runs = RunQuad { s: 40, t: 30, u: 20, v: 10 };
        assert_eq!(
            fill_twofactor_pair(5, &s1, &s2, runs),
            Err(FillError::NotTwoFactorOfTwoNCycles { n: 5 })
        );
    }

    #[test]
    fn crucial_rejects_wrong_sums() {
        let mut a = SparseSquareArray::new(3);
        for i in 1..=3 {
            a.insert(Position::new(i, i), -7).unwrap();
        }
        let err = augment_crucial(&a, &CellSet::diagonals(3, &[1, 2]), &CellSet::diagonals(3, &[1, 2])).unwrap_err();
        assert!(matches!(err, FillError::BadLineSum { sum: -7, expected: 7, .. }));
    }
}
