//! `n = 1 (mod 4)`, `k = 1 (mod 4)`: a formula `H(n;5)` whose lines sum to
//! `40m+11`, grown by augmentations on an explicit Hamilton cycle and
//! diagonal pairs.

use crate::array::SparseSquareArray;
use crate::cycles::CellSet;
use crate::fixtures::get_fixture;
use crate::repair::repair_h13_9;

use super::{expect_case, Augmentation, BuildError, BuildPlan, CaseVerdict};

/// The `H(4m+1;5)` for `m >= 3`.
pub fn base_case_d(m: usize) -> Result<SparseSquareArray, BuildError> {
    let n = 4 * m + 1;
    let mi = m as i64;
    let mut a = SparseSquareArray::new(n);
    let adhoc: [(i64, i64, i64); 18] = [
        (4 * mi - 1, 4 * mi, -1),
        (4 * mi - 1, 1, 2),
        (4 * mi, 2, 2 * mi + 1),
        (4 * mi + 1, 3, 2 * mi + 2),
        (2 * mi - 2, 4 * mi, 4 * mi),
        (2 * mi - 1, 2 * mi + 2, 4 * mi + 1),
        (2 * mi, 2 * mi + 3, 4 * mi + 2),
        (2 * mi + 2, 2 * mi + 3, -(4 * mi + 3)),
        (2 * mi + 1, 1, -(4 * mi + 4)),
        (4 * mi + 1, 2 * mi + 1, -(6 * mi + 2)),
        (4 * mi - 3, 2 * mi + 1, 6 * mi + 1),
        (2 * mi, 2 * mi + 2, -(8 * mi + 2)),
        (2, 2 * mi + 1, 8 * mi + 3),
        (3, 4 * mi, 8 * mi + 5),
        (1, 2 * mi, 12 * mi + 2),
        (1, 4 * mi + 1, 12 * mi + 4),
        (4 * mi, 2 * mi + 2, 12 * mi + 5),
        (4 * mi + 1, 4 * mi + 1, 16 * mi + 5),
    ];
    for (r, c, v) in adhoc {
        a.insert_wrapped(r, c, v)?;
    }
    for i in 1..=2 * mi - 3 {
        a.insert_wrapped(i, i + 3, 2 * mi + i + 2)?;
    }
    for i in 1..=2 * mi {
        a.insert_wrapped(i + 1, i, 16 * mi + 5 - i)?;
        a.insert_wrapped(i, i, 20 * mi + 6 - i)?;
        a.insert_wrapped(2 * mi + 1 + i, 2 * mi + i, 18 * mi + 6 - i)?;
    }
    for i in 1..=2 * mi - 1 {
        a.insert_wrapped(2 * mi - i, 2 * mi + 1 - i, -(8 * mi + 2 - i))?;
        a.insert_wrapped(2 * mi + 3 - i, 4 * mi + 2 - i, 12 * mi + 5 - 2 * i)?;
        a.insert_wrapped(2 * mi + i, 2 * mi + i, 14 * mi + 5 - i)?;
        a.insert_wrapped(4 * mi + 2 - i, 2 * mi - i, 12 * mi + 2 - 2 * i)?;
    }
    for i in 1..=mi - 1 {
        a.insert_wrapped(2 * mi + 2 * i, 2 * mi + 2 * i + 3, 2 * i + 1)?;
        a.insert_wrapped(2 * mi + 2 * i + 2, 2 * mi + 2 * i + 3, -(2 * i + 2))?;
    }
    for i in 1..=mi - 2 {
        a.insert_wrapped(2 * mi + 2 * i - 1, 2 * mi + 2 * i + 2, 4 * mi + 2 * i + 3)?;
        a.insert_wrapped(2 * mi + 2 * i + 1, 2 * mi + 2 * i + 2, -(4 * mi + 2 * i + 4))?;
    }
    Ok(a)
}

/// The Hamilton cycle avoiding [`base_case_d`], as an explicit cell list.
pub fn cycle_case_d(m: usize) -> CellSet {
    let n = 4 * m + 1;
    let mi = m as i64;
    let mut cells = Vec::new();
    for i in 1..=2 * mi - 3 {
        cells.push((i, 2 * mi + 1 + i));
        cells.push((i, 2 * mi + 2 + i));
    }
    cells.extend([
        (2 * mi - 2, 4 * mi - 1),
        (2 * mi - 2, 4 * mi + 1),
        (2 * mi - 1, 4 * mi + 1),
        (2 * mi - 1, 4 * mi),
        (4 * mi, 4 * mi),
        (4 * mi, 2 * mi + 1),
    ]);
    for i in 2 * mi..=4 * mi - 1 {
        cells.push((i, i - 2 * mi + 1));
        cells.push((i, i - 2 * mi + 2));
    }
    cells.extend([(4 * mi + 1, 1), (4 * mi + 1, 2 * mi + 2)]);
    CellSet::from_wrapped(n, cells)
}

/// Diagonal pairs used after the explicit cycle, in order; `m >= 4`.
fn diagonal_pairs(m: usize) -> Vec<(usize, usize)> {
    match m {
        4 => vec![(2, 3), (9, 11), (12, 13)],
        5 => vec![(2, 3), (5, 7), (11, 13), (14, 15), (16, 17)],
        _ => {
            let mut v = vec![(2, 3), (2 * m - 5, 2 * m - 3), (2 * m + 1, 2 * m + 3)];
            v.extend((0..=m - 6).map(|i| (5 + 2 * i, 6 + 2 * i)));
            v.extend((0..=m - 4).map(|i| (2 * m + 4 + 2 * i, 2 * m + 5 + 2 * i)));
            v
        }
    }
}

pub(super) fn plan(n: usize, k: usize) -> Result<BuildPlan, BuildError> {
    expect_case(n, k, CaseVerdict::CaseD)?;
    let m = (n - 1) / 4;
    let p = (k - 5) / 4;
    if n == 9 {
        return BuildPlan::new(n, k, CaseVerdict::CaseD, get_fixture("H(9;5)", None)?.array, "fixture H(9;5)");
    }
    if n == 13 && k == 9 {
        let r = repair_h13_9()?;
        let mut plan = BuildPlan::new(n, k, CaseVerdict::CaseD, r.base, "repaired fixture H(13;9)")?;
        plan.augmentations = vec![Augmentation::Crucial { s1: r.h, s2: r.k }];
        return Ok(plan);
    }
    let mut cycles = vec![cycle_case_d(m)];
    if m >= 4 {
        cycles.extend(diagonal_pairs(m).into_iter().map(|(a, b)| CellSet::diagonals(n, &[a, b])));
    }
    if cycles.len() < 2 * p {
        return Err(BuildError::Bookkeeping(format!("{} cycles available, {} needed", cycles.len(), 2 * p)));
    }
    let mut plan = BuildPlan::new(n, k, CaseVerdict::CaseD, base_case_d(m)?, "formula H(n;5)")?;
    plan.augmentations = (0..p)
        .map(|j| Augmentation::Crucial {
            s1: cycles[2 * j].clone(),
            s2: cycles[2 * j + 1].clone(),
        })
        .collect();
    Ok(plan)
}

pub fn build_case_d(n: usize, k: usize) -> Result<SparseSquareArray, BuildError> {
    plan(n, k)?.execute()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::classify_cycles;
    use crate::verifier::verify_heffter;

    #[test]
    fn reproduces_h17_5() {
        let f = get_fixture("H(17;5)", None).unwrap();
        assert_eq!(build_case_d(17, 5).unwrap(), f.array);
        assert_eq!(cycle_case_d(4), f.masks["H"]);
    }

    #[test]
    fn base_sums() {
        for m in 3..12 {
            let a = base_case_d(m).unwrap();
            let want = 40 * m as i64 + 11;
            assert!(a.row_sums().iter().chain(a.col_sums().iter()).all(|&s| s == want), "m = {m}");
        }
    }

    #[test]
    fn cycle_is_hamilton_and_avoids_base() {
        for m in 3..16 {
            let h = cycle_case_d(m);
            assert!(classify_cycles(&h).unwrap().is_hamilton(), "m = {m}");
            let filled = CellSet::from_positions(4 * m + 1, base_case_d(m).unwrap().positions());
            assert!(h.is_disjoint(&filled));
        }
    }

    #[test]
    fn pair_counts() {
        for m in 6..20 {
            assert_eq!(diagonal_pairs(m).len(), 2 * m - 5);
        }
    }

    #[test]
    fn order_nine_and_seventeen() {
        let r = verify_heffter(&build_case_d(9, 5).unwrap(), 5);
        assert!(r.is_valid());
        assert_eq!(r.row_sums[0], 91);
        let r = verify_heffter(&build_case_d(17, 9).unwrap(), 9);
        assert!(r.is_valid(), "{:?}", r.violations);
        assert_eq!(r.modulus, Some(307));
    }
}
