//! `n = 3 (mod 4)`, `k = 3 (mod 4)`: a zero-sum base plus the 3x3 block `C`
//! gives an `H(n;3)`; zero-sum fills on pairs of Hamilton cycles add the rest.

use crate::array::SparseSquareArray;
use crate::cycles::CellSet;
use crate::fixtures::{get_fixture, BlockTemplate, Params};

use super::blocks::{a0_prime, zigzag_remap, A0Variant};
use super::{consecutive_free_pairs, expect_case, gap_start, hamilton_pair_schedule, BuildError, BuildPlan, CaseVerdict};

/// The 3x3 block `C` for the target `(n, k)`, placed in the last three rows and columns.
pub(super) fn c_block(n: usize, k: usize) -> Result<SparseSquareArray, BuildError> {
    let c = BlockTemplate::C.instantiate(Params {
        n: Some(n as i64),
        k: Some(k as i64),
        m: None,
    })?;
    Ok(c.embed_block(n, n - 3, n - 3)?)
}

/// Base with three cells per line, zero line sums except the `C` lines.
fn base(n: usize, k: usize) -> Result<(SparseSquareArray, String), BuildError> {
    match n {
        7 => Ok((get_fixture("H(7;3)", None)?.array, "fixture H(7;3)".into())),
        11 | 15 => {
            let name = format!("B({n})");
            let b = get_fixture(&name, None)?.array.embed_block(n, 0, 0)?;
            Ok((b.superimpose(&c_block(n, k)?)?, format!("fixture {name} with C")))
        }
        _ => {
            let m = (n - 3) / 4;
            let a0 = zigzag_remap(&a0_prime(m, A0Variant::CaseB)?)?.embed_block(n, 0, 0)?;
            let a1 = BlockTemplate::A1CaseB
                .instantiate(Params {
                    m: Some(m as i64),
                    ..Params::default()
                })?
                .embed_block(n, 4 * m - 7, 4 * m - 7)?;
            let a = a0.superimpose(&a1)?.superimpose(&c_block(n, k)?)?;
            Ok((a, "relabelled A_0' with A_1 and C".into()))
        }
    }
}

pub(super) fn plan(n: usize, k: usize) -> Result<BuildPlan, BuildError> {
    expect_case(n, k, CaseVerdict::CaseB)?;
    let (base, source) = base(n, k)?;
    let p = (k - 3) / 4;
    let lo = gap_start(&base, n * k, 4 * n * p)?;
    let cycles: Vec<CellSet> = consecutive_free_pairs(&base)
        .into_iter()
        .map(|(a, b)| CellSet::diagonals(n, &[a, b]))
        .collect();
    let mut plan = BuildPlan::new(n, k, CaseVerdict::CaseB, base, source)?;
    plan.augmentations = hamilton_pair_schedule(n, &cycles, p, lo)?;
    Ok(plan)
}

pub fn build_case_b(n: usize, k: usize) -> Result<SparseSquareArray, BuildError> {
    plan(n, k)?.execute()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verifier::verify_heffter;

    #[test]
    fn reproduces_h19_3() {
        assert_eq!(build_case_b(19, 3).unwrap(), get_fixture("H(19;3)", None).unwrap().array);
    }

    #[test]
    fn order_seven_is_the_fixture() {
        let a = build_case_b(7, 3).unwrap();
        assert_eq!(a.row_sums()[4..], [43, 43, 43]);
    }

    #[test]
    fn order_eleven_with_fill() {
        let r = verify_heffter(&build_case_b(11, 7).unwrap(), 7);
        assert!(r.is_valid(), "{:?}", r.violations);
        assert_eq!(r.modulus, Some(155));
    }

    #[test]
    fn base_confined_to_five_diagonals() {
        for m in 4..12 {
            let n = 4 * m + 3;
            let (b, _) = base(n, 3).unwrap();
            assert_eq!(b.occupied_diagonals(), vec![0, 1, 2, n - 2, n - 1]);
        }
    }

    #[test]
    fn c_block_corner() {
        let c = c_block(19, 3).unwrap();
        assert_eq!(c.len(), 9);
        assert_eq!(c.positions().next().unwrap(), crate::array::Position::new(17, 17));
    }
}
