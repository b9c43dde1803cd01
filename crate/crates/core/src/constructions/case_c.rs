//! `n = 2 (mod 4)`, `k = 3 (mod 4)`: as for `n = 3 (mod 4)` but with a
//! 13x13 middle block and two 3x3 blocks; orders up to 30 use printed bases.

use crate::array::SparseSquareArray;
use crate::cycles::{classify_cycles, CellSet};
use crate::fixtures::{get_fixture, BlockTemplate, Params};

use super::blocks::{a0_prime, zigzag_remap, A0Variant};
use super::case_b::c_block;
use super::{consecutive_free_pairs, expect_case, gap_start, hamilton_pair_schedule, BuildError, BuildPlan, CaseVerdict};

const PAIRS_26: [(usize, usize); 10] = [
    (10, 11),
    (12, 13),
    (14, 15),
    (16, 17),
    (18, 19),
    (20, 21),
    (22, 23),
    (3, 4),
    (5, 6),
    (7, 8),
];

const PAIRS_30: [(usize, usize); 10] = [
    (4, 5),
    (6, 7),
    (8, 9),
    (12, 13),
    (14, 15),
    (16, 17),
    (19, 20),
    (21, 22),
    (23, 24),
    (25, 26),
];

fn diagonal_cycles(n: usize, pairs: &[(usize, usize)]) -> Vec<CellSet> {
    pairs.iter().map(|&(a, b)| CellSet::diagonals(n, &[a, b])).collect()
}

fn large_base(n: usize, k: usize) -> Result<SparseSquareArray, BuildError> {
    let m = (n - 6) / 4;
    let params = Params {
        m: Some(m as i64),
        n: Some(n as i64),
        k: Some(k as i64),
    };
    let mut a = zigzag_remap(&a0_prime(m, A0Variant::CaseC)?)?.embed_block(n, 0, 0)?;
    for (block, offset) in [
        (BlockTemplate::A1CaseC, 4 * m - 13),
        (BlockTemplate::A2, 4 * m),
        (BlockTemplate::A3, 4 * m + 3),
    ] {
        a = a.superimpose(&block.instantiate(params)?.embed_block(n, offset, offset)?)?;
    }
    Ok(a)
}

/// Base array, its description, and the cycles in the order they are consumed.
fn base_and_cycles(n: usize, k: usize) -> Result<(SparseSquareArray, String, Vec<CellSet>), BuildError> {
    match n {
        6 => Ok((get_fixture("H(6;3)", None)?.array, "fixture H(6;3)".into(), Vec::new())),
        10 | 14 | 18 | 22 | 26 => {
            let name = format!("B({n})");
            let b = get_fixture(&name, None)?.array.embed_block(n, 0, 0)?;
            let base = b.superimpose(&c_block(n, k)?)?;
            let cycles = if n == 26 {
                diagonal_cycles(n, &PAIRS_26)
            } else {
                diagonal_cycles(n, &consecutive_free_pairs(&base))
            };
            Ok((base, format!("fixture {name} with C"), cycles))
        }
        30 => {
            let f = get_fixture("H(30;3)", Some(k as u64))?;
            let mut cycles = Vec::new();
            for mark in ["H", "K"] {
                let s = f.masks.get(mark).cloned().unwrap_or_else(|| CellSet::new(n));
                if !classify_cycles(&s)?.is_hamilton() {
                    return Err(BuildError::Bookkeeping(format!("mask {mark} of H(30;3) is not a Hamilton cycle")));
                }
                cycles.push(s);
            }
            cycles.extend(diagonal_cycles(n, &PAIRS_30));
            Ok((f.array, "fixture H(30;3) with cycles H and K".into(), cycles))
        }
        _ => {
            let base = large_base(n, k)?;
            let cycles = diagonal_cycles(n, &consecutive_free_pairs(&base));
            Ok((base, "relabelled A_0' with A_1, A_2 and A_3".into(), cycles))
        }
    }
}

pub(super) fn plan(n: usize, k: usize) -> Result<BuildPlan, BuildError> {
    expect_case(n, k, CaseVerdict::CaseC)?;
    let (base, source, cycles) = base_and_cycles(n, k)?;
    let p = (k - 3) / 4;
    let lo = gap_start(&base, n * k, 4 * n * p)?;
    let mut plan = BuildPlan::new(n, k, CaseVerdict::CaseC, base, source)?;
    plan.augmentations = hamilton_pair_schedule(n, &cycles, p, lo)?;
    Ok(plan)
}

pub fn build_case_c(n: usize, k: usize) -> Result<SparseSquareArray, BuildError> {
    plan(n, k)?.execute()
}
