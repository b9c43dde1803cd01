//! `n = 2 (mod 4)`, `k = 1 (mod 4)`: two `(2m+1)`-square blocks on the
//! main diagonal give an `H(n;5)`; zero-sum fills on 2-factors made of two
//! `n`-cycles, one per quadrant, add the rest.

use crate::array::{Position, SparseSquareArray};
use crate::cycles::{classify_cycles, CellSet};
use crate::fillers::RunQuad;
use crate::fixtures::{get_fixture, BlockTemplate, Params};

use super::{expect_case, gap_start, Augmentation, BuildError, BuildPlan, CaseVerdict};

/// Upper-left block of order `2m+1`, every line summing to 0.
pub fn a0_case_e(m: usize) -> Result<SparseSquareArray, BuildError> {
    let q = 2 * m + 1;
    let (mi, qi) = (m as i64, q as i64);
    let mut a = SparseSquareArray::new(q);
    for i in 1..=qi {
        a.insert_wrapped(i, i, 2 * i)?;
        a.insert_wrapped(3 - i, 2 * mi + 1 - i, 4 * mi + 2 + i)?;
        a.insert_wrapped(2 + i, 1 + i, -(6 * mi + 3 + i))?;
        a.insert_wrapped(2 + i, i - 2, 8 * mi + 3 + 2 * i)?;
        a.insert_wrapped(i, i - 2, -(8 * mi + 4 + 2 * i))?;
    }
    for r in [2, 4] {
        let (x, y) = (Position::new(r, 1), Position::new(r, q));
        let (vx, vy) = (a.get(x).expect("filled"), a.get(y).expect("filled"));
        a.replace(x, vy)?;
        a.replace(y, vx)?;
    }
    Ok(a)
}

/// Lower-right block of order `2m+1` for the target `k`, every line summing to `2nk+1`.
pub fn a1_case_e(m: usize, k: usize) -> Result<SparseSquareArray, BuildError> {
    let n = 4 * m + 2;
    let params = Params {
        m: Some(m as i64),
        n: Some(n as i64),
        k: Some(k as i64),
    };
    match m {
        2 => return Ok(BlockTemplate::A1M2.instantiate(params)?),
        3 => return Ok(BlockTemplate::A1M3.instantiate(params)?),
        _ => {}
    }
    let q = 2 * m + 1;
    let (mi, qi, kn) = (m as i64, q as i64, (k * n) as i64);
    let mut a = SparseSquareArray::new(q);
    // These three values follow the printed order-18 example.
    a.insert_wrapped(4, 1, 16 * mi + 8)?;
    a.insert_wrapped(5, 2 * mi + 1, 14 * mi + 8)?;
    a.insert_wrapped(6, 2 * mi, 14 * mi + 9)?;
    a.insert_wrapped(2 * mi - 1, 1, kn - 4 * mi + 1)?;
    a.insert_wrapped(2 * mi, 2 * mi + 1, kn - 4 * mi)?;
    a.insert_wrapped(2 * mi + 1, 2 * mi, kn - 4 * mi - 1)?;
    for i in 1..=qi {
        a.insert_wrapped(i, i, 2 * i - 1)?;
        a.insert_wrapped(i, 2 * mi - 1 + i, kn + 1 - i)?;
        a.insert_wrapped(4 + i, i, -(12 * mi + 6 + i))?;
    }
    for i in 1..=2 * mi - 2 {
        a.insert_wrapped(i, i + 1, kn - 2 * mi - i)?;
        a.insert_wrapped(6 + i, 1 + i, 14 * mi + 9 + i)?;
    }
    Ok(a)
}

/// The two cycles `H` and `K` of the lower-right block, in local coordinates; `m >= 4`.
pub fn cycles_case_e(m: usize) -> (CellSet, CellSet) {
    let q = 2 * m + 1;
    let mi = m as i64;
    let qi = q as i64;
    let build = |d1: i64, d2: i64, drop: [(i64, i64); 2], add: [(i64, i64); 2]| {
        let mut s = CellSet::from_wrapped(q, (1..=qi).flat_map(|i| [(d1 + i, i), (d2 + i, i)]));
        for (r, c) in drop {
            s.remove(Position::wrapped(q, r, c));
        }
        for (r, c) in add {
            s.insert(Position::wrapped(q, r, c));
        }
        s
    };
    let h = build(1, 2 * mi - 2, [(2 * mi - 1, 1), (2 * mi + 1, 2 * mi)], [(2 * mi - 1, 2 * mi), (2 * mi + 1, 1)]);
    let k = build(3, 7, [(4, 1), (6, 2 * mi)], [(4, 2 * mi), (6, 1)]);
    (h, k)
}

fn single_cycle(s: CellSet, what: &str) -> Result<CellSet, BuildError> {
    if classify_cycles(&s)?.is_hamilton() {
        Ok(s)
    } else {
        Err(BuildError::Bookkeeping(format!("{what} is not a single cycle")))
    }
}

/// Cycles of length `n` inside the lower-right quadrant, local coordinates.
fn lower_right_cycles(m: usize, a1: &SparseSquareArray) -> Result<Vec<CellSet>, BuildError> {
    let q = 2 * m + 1;
    let mut out = Vec::new();
    match m {
        2 => {}
        3 => {
            let mut empty = CellSet::new(q);
            for r in 1..=q {
                for c in 1..=q {
                    let p = Position::new(r, c);
                    if !a1.contains(p) {
                        empty.insert(p);
                    }
                }
            }
            out.push(single_cycle(empty, "the empty cells of the m = 3 block")?);
        }
        _ => {
            let (h, k) = cycles_case_e(m);
            out.push(single_cycle(h, "cycle H")?);
            out.push(single_cycle(k, "cycle K")?);
            let pairs: Vec<(usize, usize)> = if m == 5 {
                vec![(6, 9)]
            } else if m >= 6 {
                let mut v = vec![(6, 8), (2 * m - 3, 2 * m - 1)];
                v.extend((0..m - 6).map(|i| (9 + 2 * i, 10 + 2 * i)));
                v
            } else {
                Vec::new()
            };
            for (a, b) in pairs {
                out.push(single_cycle(CellSet::diagonals(q, &[a, b]), "a diagonal pair")?);
            }
        }
    }
    Ok(out)
}

pub(super) fn plan(n: usize, k: usize) -> Result<BuildPlan, BuildError> {
    expect_case(n, k, CaseVerdict::CaseE)?;
    if n == 6 {
        return BuildPlan::new(n, k, CaseVerdict::CaseE, get_fixture("H(6;5)", None)?.array, "fixture H(6;5)");
    }
    let m = (n - 2) / 4;
    let q = 2 * m + 1;
    let a0 = a0_case_e(m)?;
    let a1 = a1_case_e(m, k)?;
    let base = a0.embed_block(n, 0, 0)?.superimpose(&a1.embed_block(n, q, q)?)?;
    let applications = (k - 5) / 4;
    let lo = gap_start(&base, n * k, 4 * n * applications)?;

    let occupied = a0.occupied_diagonals();
    let free: Vec<usize> = (0..q).filter(|d| !occupied.contains(d)).collect();
    let upper_left: Vec<CellSet> = free
        .chunks_exact(2)
        .map(|c| single_cycle(CellSet::diagonals(q, &[c[0], c[1]]), "a diagonal pair"))
        .collect::<Result<_, _>>()?;
    let lower_right = lower_right_cycles(m, &a1)?;
    if upper_left.len() != m - 2 || lower_right.len() != m - 2 {
        return Err(BuildError::Bookkeeping(format!(
            "expected {} cycles in each diagonal quadrant, found {} and {}",
            m - 2,
            upper_left.len(),
            lower_right.len()
        )));
    }
    let off_diagonal: Vec<CellSet> = (0..m).map(|i| CellSet::diagonals(q, &[2 * i, 2 * i + 1])).collect();

    let mut factors: Vec<CellSet> = upper_left
        .iter()
        .zip(&lower_right)
        .map(|(tl, br)| tl.translated(n, 0, 0).union(&br.translated(n, q, q)))
        .collect();
    factors.extend(
        off_diagonal
            .iter()
            .map(|c| c.translated(n, 0, q).union(&c.translated(n, q, 0))),
    );

    let mut plan = BuildPlan::new(n, k, CaseVerdict::CaseE, base, "blocks A_0 and A_1 on the diagonal")?;
    let n64 = n as u64;
    plan.augmentations = (0..applications)
        .map(|j| {
            let b = lo + 4 * n64 * j as u64;
            Augmentation::TwoFactorPair {
                s1: factors[2 * j].clone(),
                s2: factors[2 * j + 1].clone(),
                runs: RunQuad {
                    s: b + 3 * n64,
                    t: b + 2 * n64,
                    u: b + n64,
                    v: b,
                },
            }
        })
        .collect();
    Ok(plan)
}

pub fn build_case_e(n: usize, k: usize) -> Result<SparseSquareArray, BuildError> {
    plan(n, k)?.execute()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verifier::{verify_block, verify_heffter};

    #[test]
    fn reproduces_h18_5() {
        let f = get_fixture("H(18;5)", None).unwrap();
        assert_eq!(build_case_e(18, 5).unwrap(), f.array);
        let (h, k) = cycles_case_e(4);
        assert_eq!(h.translated(18, 9, 9), f.masks["H"]);
        assert_eq!(k.translated(18, 9, 9), f.masks["K"]);
    }

    #[test]
    fn upper_block_sums_zero() {
        for m in 2..14 {
            let a = a0_case_e(m).unwrap();
            let support = a.support();
            assert!(verify_block(&a, 0, &support).is_valid(), "m = {m}");
        }
    }

    #[test]
    fn lower_block_sums() {
        for m in 2..14 {
            for k in (5..4 * m + 2).step_by(4) {
                let a = a1_case_e(m, k).unwrap();
                let want = (2 * (4 * m + 2) * k + 1) as i64;
                assert!(a.row_sums().iter().chain(a.col_sums().iter()).all(|&s| s == want), "m = {m}, k = {k}");
            }
        }
    }

    #[test]
    fn order_six_and_ten() {
        let r = verify_heffter(&build_case_e(6, 5).unwrap(), 5);
        assert!(r.is_valid());
        assert!(r.row_sums.iter().all(|&s| s == 0 || s == 61));
        let p = plan(10, 9).unwrap();
        assert_eq!(p.augmentations.len(), 1);
        let r = verify_heffter(&p.execute().unwrap(), 9);
        assert!(r.is_valid(), "{:?}", r.violations);
        assert_eq!(r.modulus, Some(181));
    }

    #[test]
    fn m3_empty_cells_form_one_cycle() {
        let a1 = a1_case_e(3, 9).unwrap();
        let cycles = lower_right_cycles(3, &a1).unwrap();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].len(), 14);
    }
}
