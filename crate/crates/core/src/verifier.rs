//! Certification of arrays against the Heffter definition and block contracts.
//!
//! Everything is recomputed from the raw cells. Violations are collected
//! exhaustively rather than stopping at the first failure.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::array::{SparseSquareArray, SupportSet};
use crate::cycles::Line;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    FillCount { line: LineRef, count: usize, expected: usize },
    SumNotDivisible { line: LineRef, sum: i64, residue: u64 },
    SumMismatch { line: LineRef, sum: i64, expected: i64 },
    MissingMagnitude { value: u64 },
    DuplicateMagnitude { value: u64, count: usize },
    UnexpectedMagnitude { value: u64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::FillCount { line, count, expected } => {
                write!(f, "{line} has {count} filled cells, expected {expected}")
            }
            Violation::SumNotDivisible { line, sum, residue } => {
                write!(f, "{line} sums to {sum} (residue {residue})")
            }
            Violation::SumMismatch { line, sum, expected } => {
                write!(f, "{line} sums to {sum}, expected {expected}")
            }
            Violation::MissingMagnitude { value } => write!(f, "neither {value} nor -{value} appears"),
            Violation::DuplicateMagnitude { value, count } => {
                write!(f, "magnitude {value} appears {count} times")
            }
            Violation::UnexpectedMagnitude { value } => write!(f, "magnitude {value} is out of range"),
        }
    }
}

/// A serializable row/column reference.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", content = "index", rename_all = "snake_case")]
pub enum LineRef {
    Row(usize),
    Column(usize),
}

impl From<Line> for LineRef {
    fn from(l: Line) -> Self {
        match l {
            Line::Row(r) => LineRef::Row(r),
            Line::Column(c) => LineRef::Column(c),
        }
    }
}

impl fmt::Display for LineRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LineRef::Row(r) => write!(f, "row {r}"),
            LineRef::Column(c) => write!(f, "column {c}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Valid,
    Invalid,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub n: usize,
    /// Expected filled cells per line; absent for block checks.
    pub k: Option<usize>,
    /// `2nk+1`; absent for block checks.
    pub modulus: Option<u64>,
    /// Number of lines (rows and columns together) holding each cell count.
    pub fill_histogram: BTreeMap<usize, usize>,
    pub row_sums: Vec<i64>,
    pub col_sums: Vec<i64>,
    /// Line sums reduced into `[0, modulus)`; empty for block checks.
    pub row_residues: Vec<u64>,
    pub col_residues: Vec<u64>,
    pub missing: Vec<u64>,
    pub duplicated: Vec<u64>,
    pub verdict: Verdict,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn is_valid(&self) -> bool {
        self.verdict == Verdict::Valid
    }
}

struct Tally {
    row_counts: Vec<usize>,
    col_counts: Vec<usize>,
    row_sums: Vec<i64>,
    col_sums: Vec<i64>,
    magnitudes: BTreeMap<u64, usize>,
}

fn tally(a: &SparseSquareArray) -> Tally {
    let mut magnitudes = BTreeMap::new();
    for (_, v) in a.iter() {
        *magnitudes.entry(v.unsigned_abs()).or_insert(0) += 1;
    }
    Tally {
        row_counts: a.row_counts(),
        col_counts: a.col_counts(),
        row_sums: a.row_sums(),
        col_sums: a.col_sums(),
        magnitudes,
    }
}

fn histogram(t: &Tally) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for &c in t.row_counts.iter().chain(&t.col_counts) {
        *h.entry(c).or_insert(0) += 1;
    }
    h
}

fn lines(n: usize) -> impl Iterator<Item = (usize, LineRef, LineRef)> {
    (0..n).map(|i| (i, LineRef::Row(i + 1), LineRef::Column(i + 1)))
}

/// Compares the multiset of magnitudes against `expected`, recording
/// missing, duplicated and unexpected values.
fn check_support(t: &Tally, expected: &SupportSet, violations: &mut Vec<Violation>) -> (Vec<u64>, Vec<u64>) {
    let mut missing = Vec::new();
    let mut duplicated = Vec::new();
    for x in expected.iter() {
        if !t.magnitudes.contains_key(&x) {
            missing.push(x);
            violations.push(Violation::MissingMagnitude { value: x });
        }
    }
    for (&x, &count) in &t.magnitudes {
        if count > 1 {
            duplicated.push(x);
            violations.push(Violation::DuplicateMagnitude { value: x, count });
        }
        if !expected.contains(x) {
            violations.push(Violation::UnexpectedMagnitude { value: x });
        }
    }
    (missing, duplicated)
}

fn heffter_report(a: &SparseSquareArray, k: usize, exact_zero: bool) -> VerificationReport {
    let n = a.order();
    let modulus = (2 * n * k + 1) as u64;
    let t = tally(a);
    let mut violations = Vec::new();
    for (i, row, col) in lines(n) {
        for (line, count) in [(row, t.row_counts[i]), (col, t.col_counts[i])] {
            if count != k {
                violations.push(Violation::FillCount { line, count, expected: k });
            }
        }
    }
    let residue = |s: i64| s.rem_euclid(modulus as i64) as u64;
    let row_residues: Vec<u64> = t.row_sums.iter().map(|&s| residue(s)).collect();
    let col_residues: Vec<u64> = t.col_sums.iter().map(|&s| residue(s)).collect();
    for (i, row, col) in lines(n) {
        for (line, sum, res) in [(row, t.row_sums[i], row_residues[i]), (col, t.col_sums[i], col_residues[i])] {
            if exact_zero {
                if sum != 0 {
                    violations.push(Violation::SumMismatch { line, sum, expected: 0 });
                }
            } else if res != 0 {
                violations.push(Violation::SumNotDivisible { line, sum, residue: res });
            }
        }
    }
    let (missing, duplicated) = check_support(&t, &SupportSet::range(1, (n * k) as u64), &mut violations);
    let verdict = if violations.is_empty() { Verdict::Valid } else { Verdict::Invalid };
    VerificationReport {
        n,
        k: Some(k),
        modulus: Some(modulus),
        fill_histogram: histogram(&t),
        row_sums: t.row_sums,
        col_sums: t.col_sums,
        row_residues,
        col_residues,
        missing,
        duplicated,
        verdict,
        violations,
    }
}

/// Checks `a` is an `H(n;k)`: `k` cells per line, every line sum divisible
/// by `2nk+1`, and exactly one of `x`, `-x` present for each `1 <= x <= nk`.
pub fn verify_heffter(a: &SparseSquareArray, k: usize) -> VerificationReport {
    heffter_report(a, k, false)
}

/// As [`verify_heffter`], but every line must sum to exactly 0.
pub fn verify_integer_heffter(a: &SparseSquareArray, k: usize) -> VerificationReport {
    heffter_report(a, k, true)
}

/// Checks a sub-block: every nonempty line sums to `expected_line_sum` and
/// the magnitudes are exactly `expected_support`, each once.
pub fn verify_block(a: &SparseSquareArray, expected_line_sum: i64, expected_support: &SupportSet) -> VerificationReport {
    let n = a.order();
    let t = tally(a);
    let mut violations = Vec::new();
    for (i, row, col) in lines(n) {
        for (line, count, sum) in [(row, t.row_counts[i], t.row_sums[i]), (col, t.col_counts[i], t.col_sums[i])] {
            if count > 0 && sum != expected_line_sum {
                violations.push(Violation::SumMismatch { line, sum, expected: expected_line_sum });
            }
        }
    }
    let (missing, duplicated) = check_support(&t, expected_support, &mut violations);
    let verdict = if violations.is_empty() { Verdict::Valid } else { Verdict::Invalid };
    VerificationReport {
        n,
        k: None,
        modulus: None,
        fill_histogram: histogram(&t),
        row_sums: t.row_sums,
        col_sums: t.col_sums,
        row_residues: Vec::new(),
        col_residues: Vec::new(),
        missing,
        duplicated,
        verdict,
        violations,
    }
}
