//! `n = 1, 3 (mod 4)`, `k = 2 (mod 4)`: six diagonal families give an
//! `H(n;6)`, then each augmentation adds two Hamilton cycles.

use crate::array::{ArrayError, SparseSquareArray};
use crate::cycles::CellSet;

use super::{expect_case, Augmentation, BuildError, BuildPlan, CaseVerdict};

/// The `H(n;6)` with every line summing to `12n+1`, for odd `n >= 7`.
pub fn base_case_a(n: usize) -> Result<SparseSquareArray, ArrayError> {
    let mut a = SparseSquareArray::new(n);
    let ni = n as i64;
    for i in 1..=ni {
        a.insert_wrapped(i, i, 6 * i)?;
        a.insert_wrapped(i + 2, i, 6 * ni + 2 - 6 * i)?;
        a.insert_wrapped(i + 1, ni - 2 + i, 6 * ni + 1 - 6 * i)?;
        a.insert_wrapped(i + 2, ni - 2 + i, 6 * i - 3)?;
        a.insert_wrapped(i, ni - 5 + i, 6 * ni + 5 - 6 * i)?;
        a.insert_wrapped(i + 1, ni - 5 + i, -6 * ni - 4 + 6 * i)?;
    }
    Ok(a)
}

pub(super) fn plan(n: usize, k: usize) -> Result<BuildPlan, BuildError> {
    expect_case(n, k, CaseVerdict::CaseA)?;
    let mut plan = BuildPlan::new(n, k, CaseVerdict::CaseA, base_case_a(n)?, "six diagonal families, H(n;6)")?;
    let p = (k - 6) / 4;
    // The first p cycles take D_7..D_{6+2p}, the next p take D_{7+2p}..D_{6+4p}.
    plan.augmentations = (0..p)
        .map(|j| Augmentation::Crucial {
            s1: CellSet::diagonals(n, &[7 + 2 * j, 8 + 2 * j]),
            s2: CellSet::diagonals(n, &[7 + 2 * p + 2 * j, 8 + 2 * p + 2 * j]),
        })
        .collect();
    Ok(plan)
}

pub fn build_case_a(n: usize, k: usize) -> Result<SparseSquareArray, BuildError> {
    plan(n, k)?.execute()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::get_fixture;
    use crate::verifier::verify_heffter;

    #[test]
    fn reproduces_h15_6() {
        assert_eq!(build_case_a(15, 6).unwrap(), get_fixture("H(15;6)", None).unwrap().array);
    }

    #[test]
    fn order_seven_base() {
        let a = build_case_a(7, 6).unwrap();
        assert!(a.row_sums().iter().chain(a.col_sums().iter()).all(|&s| s == 85));
        assert!(verify_heffter(&a, 6).is_valid());
    }

    #[test]
    fn base_uses_six_diagonals() {
        for n in [7, 9, 11, 13, 21, 23] {
            assert_eq!(base_case_a(n).unwrap().occupied_diagonals(), vec![0, 2, 3, 4, 5, 6]);
        }
    }

    #[test]
    fn one_augmentation() {
        let a = build_case_a(13, 10).unwrap();
        let r = verify_heffter(&a, 10);
        assert!(r.is_valid(), "{:?}", r.violations);
        assert_eq!(r.modulus, Some(261));
    }

    #[test]
    fn wrong_case() {
        assert!(matches!(build_case_a(19, 3), Err(BuildError::WrongCase { .. })));
    }
}
