//! Case dispatch and the five non-integer constructions.
//!
//! Every builder produces a [`BuildPlan`]: a base array plus an ordered list
//! of augmentations on fresh cell sets. [`BuildPlan::check`] audits the cell
//! and support bookkeeping before [`BuildPlan::execute`] runs the fillers.

mod blocks;
mod case_a;
mod case_b;
mod case_c;
mod case_d;
mod case_e;

use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::array::{ArrayError, SparseSquareArray, SupportSet};
use crate::cycles::{classify_cycles, CellSet, CycleError};
use crate::fillers::{augment_crucial, fill_hamilton_pair, fill_twofactor_pair, FillError, RunPair, RunQuad};
use crate::fixtures::{FixtureError, TemplateError};
use crate::repair::RepairError;
use crate::verifier::verify_heffter;

pub use blocks::{a0_prime, zigzag, A0Variant};
pub use case_a::{base_case_a, build_case_a};
pub use case_b::build_case_b;
pub use case_c::build_case_c;
pub use case_d::{base_case_d, build_case_d, cycle_case_d};
pub use case_e::{a0_case_e, a1_case_e, build_case_e, cycles_case_e};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseVerdict {
    CaseA,
    CaseB,
    CaseC,
    CaseD,
    CaseE,
    IntegerCase,
    FullSquare,
    Invalid,
}

impl CaseVerdict {
    pub fn is_constructible(self) -> bool {
        matches!(
            self,
            CaseVerdict::CaseA | CaseVerdict::CaseB | CaseVerdict::CaseC | CaseVerdict::CaseD | CaseVerdict::CaseE
        )
    }
}

impl fmt::Display for CaseVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CaseVerdict::CaseA => "CaseA",
            CaseVerdict::CaseB => "CaseB",
            CaseVerdict::CaseC => "CaseC",
            CaseVerdict::CaseD => "CaseD",
            CaseVerdict::CaseE => "CaseE",
            CaseVerdict::IntegerCase => "IntegerCase",
            CaseVerdict::FullSquare => "FullSquare",
            CaseVerdict::Invalid => "Invalid",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseClassification {
    pub n: usize,
    pub k: usize,
    pub verdict: CaseVerdict,
    pub reason: String,
}

/// Maps `(n, k)` to the construction that covers it.
pub fn classify(n: usize, k: usize) -> CaseClassification {
    let (verdict, reason) = if k < 3 || k > n {
        (CaseVerdict::Invalid, format!("an H(n;k) requires 3 <= k <= n; got n = {n}, k = {k}"))
    } else if k == n {
        (
            CaseVerdict::FullSquare,
            format!("k = n = {n}: full square arrays come from a separate construction and are not built here"),
        )
    } else if (n * k).is_multiple_of(4) || (n * k) % 4 == 3 {
        (
            CaseVerdict::IntegerCase,
            format!(
                "nk = {} is {} mod 4: integer Heffter arrays cover this pair and are not built here",
                n * k,
                (n * k) % 4
            ),
        )
    } else {
        let v = match (k % 4, n % 4) {
            (2, 1) | (2, 3) => CaseVerdict::CaseA,
            (3, 3) => CaseVerdict::CaseB,
            (3, 2) => CaseVerdict::CaseC,
            (1, 1) => CaseVerdict::CaseD,
            (1, 2) => CaseVerdict::CaseE,
            _ => unreachable!("nk = 1, 2 mod 4 forces one of the five residue pairs"),
        };
        (v, format!("n = {n} is {} mod 4 and k = {k} is {} mod 4", n % 4, k % 4))
    };
    CaseClassification { n, k, verdict, reason }
}

/// `n = 4m + c` and `k = 4p + c'` for the residues used by a case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamDecomposition {
    pub m: usize,
    pub p: usize,
    pub n_offset: usize,
    pub k_offset: usize,
}

impl ParamDecomposition {
    pub fn new(verdict: CaseVerdict, n: usize, k: usize) -> Option<Self> {
        let (n_offset, k_offset) = match verdict {
            CaseVerdict::CaseA => (n % 4, 2),
            CaseVerdict::CaseB => (3, 3),
            CaseVerdict::CaseC => (6, 3),
            CaseVerdict::CaseD => (1, 1),
            CaseVerdict::CaseE => (2, 1),
            _ => return None,
        };
        if n < n_offset || k < k_offset {
            return None;
        }
        Some(Self {
            m: (n - n_offset) / 4,
            p: (k - k_offset) / 4,
            n_offset,
            k_offset,
        })
    }

    pub fn n(&self) -> usize {
        4 * self.m + self.n_offset
    }

    pub fn k(&self) -> usize {
        4 * self.p + self.k_offset
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Augmentation {
    /// Negate everything so far and add the shifted two-cycle fill.
    Crucial { s1: CellSet, s2: CellSet },
    /// Zero-sum fill of two Hamilton cycles on two runs of length `2n`.
    HamiltonPair { s1: CellSet, s2: CellSet, runs: RunPair },
    /// Zero-sum fill of two 2-factors on four runs of length `n`.
    TwoFactorPair { s1: CellSet, s2: CellSet, runs: RunQuad },
}

impl Augmentation {
    fn cells(&self) -> [&CellSet; 2] {
        match self {
            Augmentation::Crucial { s1, s2 }
            | Augmentation::HamiltonPair { s1, s2, .. }
            | Augmentation::TwoFactorPair { s1, s2, .. } => [s1, s2],
        }
    }

    pub fn filler_name(&self) -> &'static str {
        match self {
            Augmentation::Crucial { .. } => "augment_crucial",
            Augmentation::HamiltonPair { .. } => "fill_hamilton_pair",
            Augmentation::TwoFactorPair { .. } => "fill_twofactor_pair",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuildPlan {
    pub classification: CaseClassification,
    pub params: ParamDecomposition,
    pub base: SparseSquareArray,
    /// Which formulas or fixture the base comes from.
    pub base_source: String,
    pub augmentations: Vec<Augmentation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("({n},{k}) is {actual}, not {expected}")]
    WrongCase {
        n: usize,
        k: usize,
        expected: CaseVerdict,
        actual: CaseVerdict,
    },
    #[error("bookkeeping failure: {0}")]
    Bookkeeping(String),
    #[error(transparent)]
    Fill(#[from] FillError),
    #[error(transparent)]
    Cycle(#[from] CycleError),
    #[error(transparent)]
    Array(#[from] ArrayError),
    #[error(transparent)]
    Template(#[from] TemplateError),
    #[error(transparent)]
    Fixture(#[from] FixtureError),
    #[error(transparent)]
    Repair(#[from] RepairError),
}

impl BuildPlan {
    fn new(
        n: usize,
        k: usize,
        expected: CaseVerdict,
        base: SparseSquareArray,
        base_source: impl Into<String>,
    ) -> Result<Self, BuildError> {
        let classification = expect_case(n, k, expected)?;
        let params = ParamDecomposition::new(expected, n, k).expect("case residues fit");
        Ok(Self {
            classification,
            params,
            base,
            base_source: base_source.into(),
            augmentations: Vec::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.classification.n
    }

    pub fn k(&self) -> usize {
        self.classification.k
    }

    /// Audits the plan without running any filler: all cell sets are pairwise
    /// disjoint and avoid the base, each line ends with exactly `k` cells,
    /// and the base support together with the values each augmentation will
    /// add partitions `{1..nk}`.
    pub fn check(&self) -> Result<(), BuildError> {
        let (n, k) = (self.n(), self.k());
        let bad = |msg: String| Err(BuildError::Bookkeeping(msg));
        let mut used = CellSet::from_positions(n, self.base.positions());
        let Some(base_k) = self.base.uniform_fill() else {
            return bad("base does not have a uniform fill".into());
        };
        let mut fill = base_k;
        let mut support = self.base.support();
        if support.len() != self.base.len() {
            return bad("base repeats a magnitude".into());
        }
        for (j, aug) in self.augmentations.iter().enumerate() {
            for s in aug.cells() {
                if s.len() != 2 * n {
                    return bad(format!("augmentation {} uses a set of {} cells", j + 1, s.len()));
                }
                if !used.is_disjoint(s) {
                    return bad(format!("augmentation {} reuses a filled cell", j + 1));
                }
                used.extend(s);
            }
            let added = match aug {
                Augmentation::Crucial { .. } => {
                    SupportSet::range((n * fill + 1) as u64, (n * (fill + 4)) as u64)
                }
                Augmentation::HamiltonPair { runs, .. } => {
                    let len = 2 * n as u64;
                    SupportSet::range(runs.t + 1, runs.t + len).union(&SupportSet::range(runs.s + 1, runs.s + len))
                }
                Augmentation::TwoFactorPair { runs, .. } => {
                    let len = n as u64;
                    [runs.s, runs.t, runs.u, runs.v]
                        .iter()
                        .fold(SupportSet::new(), |acc, &x| acc.union(&SupportSet::range(x + 1, x + len)))
                }
            };
            if !support.is_disjoint(&added) {
                return bad(format!("augmentation {} reuses a magnitude", j + 1));
            }
            support = support.union(&added);
            fill += 4;
        }
        if fill != k {
            return bad(format!("plan reaches {fill} cells per line, expected {k}"));
        }
        if used.len() != n * k {
            return bad(format!("plan fills {} cells, expected {}", used.len(), n * k));
        }
        if support != SupportSet::range(1, (n * k) as u64) {
            return bad("support is not exactly {1..nk}".into());
        }
        Ok(())
    }

    /// Runs the plan after [`BuildPlan::check`].
    pub fn execute(&self) -> Result<SparseSquareArray, BuildError> {
        self.check()?;
        let n = self.n();
        let mut a = self.base.clone();
        for aug in &self.augmentations {
            a = match aug {
                Augmentation::Crucial { s1, s2 } => augment_crucial(&a, s1, s2)?,
                Augmentation::HamiltonPair { s1, s2, runs } => a.superimpose(&fill_hamilton_pair(n, s1, s2, *runs)?)?,
                Augmentation::TwoFactorPair { s1, s2, runs } => {
                    let f1 = classify_cycles(s1)?;
                    let f2 = classify_cycles(s2)?;
                    a.superimpose(&fill_twofactor_pair(n, &f1, &f2, *runs)?)?
                }
            };
        }
        Ok(a)
    }
}

fn expect_case(n: usize, k: usize, expected: CaseVerdict) -> Result<CaseClassification, BuildError> {
    let c = classify(n, k);
    if c.verdict != expected {
        return Err(BuildError::WrongCase {
            n,
            k,
            expected,
            actual: c.verdict,
        });
    }
    Ok(c)
}

/// Start of the contiguous block of magnitudes missing from `base`, which
/// the zero-sum fillers must cover exactly. Returns `lo - 1` for the gap
/// `{lo..=hi}`, checking that the gap has `len` elements.
fn gap_start(base: &SparseSquareArray, nk: usize, len: usize) -> Result<u64, BuildError> {
    let missing = SupportSet::range(1, nk as u64).difference(&base.support());
    if missing.len() != len {
        return Err(BuildError::Bookkeeping(format!(
            "base leaves {} magnitudes uncovered, fillers supply {len}",
            missing.len()
        )));
    }
    let Some(lo) = missing.min() else {
        return Ok(nk as u64);
    };
    if missing.max() != Some(lo + len as u64 - 1) {
        return Err(BuildError::Bookkeeping("uncovered magnitudes are not contiguous".into()));
    }
    Ok(lo - 1)
}

/// Unused diagonals of `base`, ascending, grouped as consecutive pairs.
fn consecutive_free_pairs(base: &SparseSquareArray) -> Vec<(usize, usize)> {
    let n = base.order();
    let occupied = base.occupied_diagonals();
    let free: Vec<usize> = (0..n).filter(|d| !occupied.contains(d)).collect();
    free.chunks_exact(2).map(|c| (c[0], c[1])).collect()
}

/// Hamilton-pair schedule: application `j` uses cycles `2j-1`, `2j` and the
/// runs `t = lo + (j-1) 4n`, `s = t + 2n`.
fn hamilton_pair_schedule(n: usize, cycles: &[CellSet], applications: usize, lo: u64) -> Result<Vec<Augmentation>, BuildError> {
    if cycles.len() < 2 * applications {
        return Err(BuildError::Bookkeeping(format!(
            "{} cycles available, {} needed",
            cycles.len(),
            2 * applications
        )));
    }
    Ok((0..applications)
        .map(|j| {
            let t = lo + (j * 4 * n) as u64;
            Augmentation::HamiltonPair {
                s1: cycles[2 * j].clone(),
                s2: cycles[2 * j + 1].clone(),
                runs: RunPair { s: t + 2 * n as u64, t },
            }
        })
        .collect())
}

/// Builds the plan for any in-scope pair.
pub fn plan(n: usize, k: usize) -> Result<BuildPlan, GenerateError> {
    let c = classify(n, k);
    let plan = match c.verdict {
        CaseVerdict::CaseA => case_a::plan(n, k),
        CaseVerdict::CaseB => case_b::plan(n, k),
        CaseVerdict::CaseC => case_c::plan(n, k),
        CaseVerdict::CaseD => case_d::plan(n, k),
        CaseVerdict::CaseE => case_e::plan(n, k),
        _ => return Err(GenerateError::OutOfScope(c)),
    };
    Ok(plan?)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("out of scope ({}): {}", .0.verdict, .0.reason)]
    OutOfScope(CaseClassification),
    #[error("construction failed: {0}")]
    Build(#[from] BuildError),
}

/// Builds an `H(n;k)` for any pair in Cases A to E.
pub fn generate(n: usize, k: usize) -> Result<SparseSquareArray, GenerateError> {
    Ok(plan(n, k)?.execute()?)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub n: usize,
    pub k: usize,
    pub verdict: CaseVerdict,
    pub modulus: u64,
    /// `None` when no construction was attempted.
    pub valid: Option<bool>,
    pub error: Option<String>,
    pub micros: u128,
}

/// Classifies every `3 <= k < n <= max_n`, and generates and verifies every
/// pair in Cases A to E. Rows come back sorted by `(n, k)`.
pub fn sweep(max_n: usize) -> Vec<SweepRow> {
    let pairs: Vec<(usize, usize)> = (4..=max_n).flat_map(|n| (3..n).map(move |k| (n, k))).collect();
    let mut rows: Vec<SweepRow> = pairs
        .into_par_iter()
        .map(|(n, k)| {
            let start = Instant::now();
            let verdict = classify(n, k).verdict;
            let (valid, error) = if verdict.is_constructible() {
                match generate(n, k) {
                    Ok(a) => (Some(verify_heffter(&a, k).is_valid()), None),
                    Err(e) => (Some(false), Some(e.to_string())),
                }
            } else {
                (None, None)
            };
            SweepRow {
                n,
                k,
                verdict,
                modulus: (2 * n * k + 1) as u64,
                valid,
                error,
                micros: start.elapsed().as_micros(),
            }
        })
        .collect();
    rows.sort_by_key(|r| (r.n, r.k));
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classification_examples() {
        assert_eq!(classify(15, 6).verdict, CaseVerdict::CaseA);
        assert_eq!(classify(12, 4).verdict, CaseVerdict::IntegerCase);
        assert_eq!(classify(5, 5).verdict, CaseVerdict::FullSquare);
        assert_eq!(classify(6, 7).verdict, CaseVerdict::Invalid);
        assert_eq!(classify(4, 3).verdict, CaseVerdict::IntegerCase);
        assert_eq!(classify(19, 3).verdict, CaseVerdict::CaseB);
        assert_eq!(classify(10, 7).verdict, CaseVerdict::CaseC);
        assert_eq!(classify(17, 5).verdict, CaseVerdict::CaseD);
        assert_eq!(classify(18, 5).verdict, CaseVerdict::CaseE);
        assert_eq!(classify(7, 2).verdict, CaseVerdict::Invalid);
    }

    #[test]
    fn cases_only_for_nonzero_residues() {
        for n in 3..80 {
            for k in 0..=n + 1 {
                let c = classify(n, k);
                if c.verdict.is_constructible() {
                    assert!(3 <= k && k < n);
                    assert!(matches!((n * k) % 4, 1 | 2));
                    let d = ParamDecomposition::new(c.verdict, n, k).unwrap();
                    assert_eq!((d.n(), d.k()), (n, k));
                }
            }
        }
    }

    #[test]
    fn out_of_scope_pairs() {
        assert!(matches!(
            generate(12, 4),
            Err(GenerateError::OutOfScope(CaseClassification { verdict: CaseVerdict::IntegerCase, .. }))
        ));
        assert!(matches!(generate(4, 3), Err(GenerateError::OutOfScope(_))));
        assert!(matches!(generate(6, 7), Err(GenerateError::OutOfScope(_))));
    }
}
