//! Exhaustive backtracking search for Heffter arrays of tiny order.
//!
//! This shares nothing with the constructions or the verifier beyond the
//! array type. Fill patterns are enumerated first (each row a `k`-subset of
//! columns, in lexicographic order, with no column over `k`), then signed
//! values are assigned to the cells in row-major order, magnitudes
//! ascending and the positive sign first. The last cell of a row or column
//! is forced to the unique value in `[-nk, nk]` that clears the line
//! residue modulo `2nk+1`.

use std::time::{Duration, Instant};

use itertools::Itertools;

use crate::array::{Position, SparseSquareArray};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub node_limit: u64,
    pub time_limit: Duration,
}

impl SearchBudget {
    pub fn new(node_limit: u64, time_limit: Duration) -> Self {
        Self { node_limit, time_limit }
    }

    /// One billion nodes or sixty seconds.
    pub fn generous() -> Self {
        Self::new(1_000_000_000, Duration::from_secs(60))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(SparseSquareArray),
    /// The whole space was explored without a solution.
    Exhausted,
    BudgetExceeded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountOutcome {
    Count(u64),
    BudgetExceeded,
}

enum Flow {
    Continue,
    Stop,
}

struct Search {
    n: usize,
    k: usize,
    modulus: i64,
    nk: i64,
    budget: SearchBudget,
    start: Instant,
    nodes: u64,
    exceeded: bool,
    count_all: bool,
    count: u64,
    found: Option<SparseSquareArray>,
    pattern: Vec<Vec<usize>>,
    col_fill: Vec<usize>,
}

impl Search {
    fn new(n: usize, k: usize, budget: SearchBudget, count_all: bool) -> Self {
        Self {
            n,
            k,
            modulus: (2 * n * k + 1) as i64,
            nk: (n * k) as i64,
            budget,
            start: Instant::now(),
            nodes: 0,
            exceeded: false,
            count_all,
            count: 0,
            found: None,
            pattern: Vec::new(),
            col_fill: vec![0; n + 1],
        }
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget.node_limit
            || (self.nodes.is_multiple_of(1024) && self.start.elapsed() > self.budget.time_limit)
        {
            self.exceeded = true;
        }
        self.exceeded
    }

    fn patterns(&mut self, row: usize) -> Flow {
        if row > self.n {
            return self.assign_pattern();
        }
        let rows_after = self.n - row;
        let eligible: Vec<usize> = (1..=self.n).filter(|&c| self.col_fill[c] < self.k).collect();
        for choice in eligible.into_iter().combinations(self.k) {
            if self.tick() {
                return Flow::Stop;
            }
            for &c in &choice {
                self.col_fill[c] += 1;
            }
            let feasible = (1..=self.n).all(|c| self.k - self.col_fill[c] <= rows_after);
            let flow = if feasible {
                self.pattern.push(choice.clone());
                let f = self.patterns(row + 1);
                self.pattern.pop();
                f
            } else {
                Flow::Continue
            };
            for &c in &choice {
                self.col_fill[c] -= 1;
            }
            if let Flow::Stop = flow {
                return Flow::Stop;
            }
        }
        Flow::Continue
    }

    fn assign_pattern(&mut self) -> Flow {
        let cells: Vec<Position> = self
            .pattern
            .iter()
            .enumerate()
            .flat_map(|(r, cols)| cols.iter().map(move |&c| Position::new(r + 1, c)))
            .collect();
        let last_row = self.n;
        let mut last_in_col = vec![0usize; self.n + 1];
        for (i, p) in cells.iter().enumerate() {
            last_in_col[p.col] = i;
        }
        let mut state = Assign {
            cells: &cells,
            closes_row: cells.iter().enumerate().map(|(i, p)| i + 1 == cells.len() || cells[i + 1].row != p.row).collect(),
            closes_col: cells.iter().enumerate().map(|(i, p)| last_in_col[p.col] == i).collect(),
            values: vec![0; cells.len()],
            row_sum: vec![0; last_row + 1],
            col_sum: vec![0; last_row + 1],
            used: vec![false; self.nk as usize + 1],
        };
        self.assign(&mut state, 0)
    }

    fn forced(&self, partial: i64) -> Option<i64> {
        let r = (-partial).rem_euclid(self.modulus);
        match r {
            0 => None,
            r if r <= self.nk => Some(r),
            r => Some(r - self.modulus),
        }
    }

    fn assign(&mut self, s: &mut Assign<'_>, i: usize) -> Flow {
        if i == s.cells.len() {
            return self.solution(s);
        }
        let p = s.cells[i];
        let candidates: Vec<i64> = match (s.closes_row[i], s.closes_col[i]) {
            (true, true) => match (self.forced(s.row_sum[p.row]), self.forced(s.col_sum[p.col])) {
                (Some(a), Some(b)) if a == b => vec![a],
                _ => vec![],
            },
            (true, false) => self.forced(s.row_sum[p.row]).into_iter().collect(),
            (false, true) => self.forced(s.col_sum[p.col]).into_iter().collect(),
            (false, false) => (1..=self.nk).flat_map(|x| [x, -x]).collect(),
        };
        for v in candidates {
            let mag = v.unsigned_abs() as usize;
            if s.used[mag] {
                continue;
            }
            if self.tick() {
                return Flow::Stop;
            }
            s.used[mag] = true;
            s.values[i] = v;
            s.row_sum[p.row] += v;
            s.col_sum[p.col] += v;
            let flow = self.assign(s, i + 1);
            s.row_sum[p.row] -= v;
            s.col_sum[p.col] -= v;
            s.used[mag] = false;
            if let Flow::Stop = flow {
                return Flow::Stop;
            }
        }
        Flow::Continue
    }

    fn solution(&mut self, s: &Assign<'_>) -> Flow {
        if self.count_all {
            self.count += 1;
            return Flow::Continue;
        }
        let cells = s.cells.iter().copied().zip(s.values.iter().copied());
        self.found = Some(SparseSquareArray::from_cells(self.n, cells).expect("distinct nonzero cells"));
        Flow::Stop
    }
}

struct Assign<'a> {
    cells: &'a [Position],
    closes_row: Vec<bool>,
    closes_col: Vec<bool>,
    values: Vec<i64>,
    row_sum: Vec<i64>,
    col_sum: Vec<i64>,
    used: Vec<bool>,
}

/// First `H(n;k)` in the fixed exploration order, if one exists within budget.
pub fn search(n: usize, k: usize, budget: SearchBudget) -> SearchOutcome {
    if k < 3 || k > n {
        return SearchOutcome::Exhausted;
    }
    let mut s = Search::new(n, k, budget, false);
    s.patterns(1);
    match (s.found, s.exceeded) {
        (Some(a), _) => SearchOutcome::Found(a),
        (None, true) => SearchOutcome::BudgetExceeded,
        (None, false) => SearchOutcome::Exhausted,
    }
}

/// Number of `H(n;k)`, counting every array separately.
pub fn count_solutions(n: usize, k: usize, budget: SearchBudget) -> CountOutcome {
    if k < 3 || k > n {
        return CountOutcome::Count(0);
    }
    let mut s = Search::new(n, k, budget, true);
    s.patterns(1);
    if s.exceeded {
        CountOutcome::BudgetExceeded
    } else {
        CountOutcome::Count(s.count)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SearchBudget {
        SearchBudget::new(50_000_000, Duration::from_secs(60))
    }

    #[test]
    fn first_solution_of_order_three() {
        let SearchOutcome::Found(a) = search(3, 3, small()) else {
            panic!("no H(3;3) found");
        };
        assert_eq!(a.len(), 9);
        for s in a.row_sums().into_iter().chain(a.col_sums()) {
            assert_eq!(s.rem_euclid(19), 0);
        }
        assert_eq!(a.support().len(), 9);
    }

    #[test]
    fn precondition_and_budget() {
        assert_eq!(search(2, 2, small()), SearchOutcome::Exhausted);
        assert_eq!(search(4, 5, small()), SearchOutcome::Exhausted);
        assert_eq!(count_solutions(2, 2, small()), CountOutcome::Count(0));
        assert_eq!(count_solutions(3, 3, SearchBudget::new(1, Duration::from_secs(1))), CountOutcome::BudgetExceeded);
        assert_eq!(search(3, 3, SearchBudget::new(1, Duration::from_secs(1))), SearchOutcome::BudgetExceeded);
    }

    #[test]
    fn order_three_count() {
        // Matches a separate enumeration over signed row triples.
        assert_eq!(count_solutions(3, 3, small()), CountOutcome::Count(432));
    }

    #[test]
    fn repeated_search_is_identical() {
        assert_eq!(search(4, 3, small()), search(4, 3, small()));
    }

    #[test]
    fn forced_value_range() {
        let s = Search::new(3, 3, small(), false);
        assert_eq!(s.forced(0), None);
        assert_eq!(s.forced(-5), Some(5));
        assert_eq!(s.forced(5), Some(-5));
        assert_eq!(s.forced(19), None);
        assert_eq!(s.forced(-10), Some(-9));
    }
}
