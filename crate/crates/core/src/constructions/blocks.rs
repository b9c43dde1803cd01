//! The zero-sum block `A_0'` shared by the orders `4m+3` and `4m+6`, and the
//! row/column relabelling that folds it onto five diagonals.

use crate::array::{ArrayError, Position, SparseSquareArray};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum A0Variant {
    /// Order `4m-7`, used when `n = 4m+3`.
    CaseB,
    /// Order `4m-13`, used when `n = 4m+6`.
    CaseC,
}

struct Shape {
    order: usize,
    third: usize,
    fourth: usize,
    tail_diagonal: usize,
    corner: i64,
}

fn shape(m: usize, variant: A0Variant) -> Shape {
    let mi = m as i64;
    match variant {
        A0Variant::CaseB => Shape {
            order: 4 * m - 7,
            third: m - 3,
            fourth: m - 4,
            tail_diagonal: 2 * m - 8,
            corner: 6 * mi + 3,
        },
        A0Variant::CaseC => Shape {
            order: 4 * m - 13,
            third: m - 6,
            fourth: m - 7,
            tail_diagonal: 2 * m - 14,
            corner: 6 * mi + 6,
        },
    }
}

/// `A_0'` before relabelling. Needs `m >= 4` for [`A0Variant::CaseB`] and
/// `m >= 7` for [`A0Variant::CaseC`]. Every line sums to 0.
pub fn a0_prime(m: usize, variant: A0Variant) -> Result<SparseSquareArray, ArrayError> {
    let s = shape(m, variant);
    let mut a = SparseSquareArray::new(s.order);
    let mi = m as i64;
    let mut put = |r: usize, c: usize, v: i64| a.insert(Position::new(r, c), v);
    for i in 1..=m {
        let ii = i as i64;
        put(2 * i - 1, 2 * i, 8 * mi + 1 - ii)?;
        put(2 * i, 2 * i - 1, -(8 * mi + ii))?;
    }
    for i in 1..m {
        let ii = i as i64;
        put(2 * i, 2 * i + 1, 12 * mi - ii)?;
        put(2 * i + 1, 2 * i, -(4 * mi + 1 + ii))?;
    }
    for i in 1..=s.third {
        let ii = i as i64;
        put(2 * m - 2 + 2 * i, 2 * m - 1 + 2 * i, 5 * mi + ii)?;
        put(2 * m - 1 + 2 * i, 2 * m - 2 + 2 * i, -(11 * mi + 1 - ii))?;
    }
    for i in 1..=s.fourth {
        let ii = i as i64;
        put(2 * m - 1 + 2 * i, 2 * m + 2 * i, 9 * mi + ii)?;
        put(2 * m + 2 * i, 2 * m - 1 + 2 * i, -(7 * mi + 1 - ii))?;
    }
    for i in 1..=2 * m - 2 {
        put(i + 1, i + 1, -(4 * mi - 1 - i as i64))?;
    }
    for i in 1..=s.tail_diagonal {
        put(2 * m + i, 2 * m + i, 2 * mi - i as i64)?;
    }
    put(2 * m, 2 * m, 4 * mi - 1)?;
    put(1, s.order, -12 * mi)?;
    put(1, 1, 4 * mi)?;
    put(s.order, 1, 4 * mi + 1)?;
    put(s.order, s.order, s.corner)?;
    Ok(a)
}

/// Odd labels ascending for the first half, even labels descending after:
/// `i -> 2i-1` for `i <= (N+1)/2`, `i -> 2(N+1)-2i` otherwise.
pub fn zigzag(i: usize, order: usize) -> usize {
    if i <= order.div_ceil(2) {
        2 * i - 1
    } else {
        2 * (order + 1) - 2 * i
    }
}

/// Applies [`zigzag`] to rows and columns.
pub fn zigzag_remap(a: &SparseSquareArray) -> Result<SparseSquareArray, ArrayError> {
    let n = a.order();
    a.permuted(|r| zigzag(r, n), |c| zigzag(c, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::get_fixture;

    #[test]
    fn zigzag_is_a_bijection() {
        for m in 4..40 {
            let order = 4 * m - 7;
            let mut seen: Vec<usize> = (1..=order).map(|i| zigzag(i, order)).collect();
            let odd: Vec<usize> = seen.iter().copied().filter(|x| x % 2 == 1).collect();
            let even: Vec<usize> = seen.iter().copied().filter(|x| x % 2 == 0).collect();
            assert!(odd.windows(2).all(|w| w[0] < w[1]));
            assert!(even.windows(2).all(|w| w[0] > w[1]));
            seen.sort_unstable();
            assert_eq!(seen, (1..=order).collect::<Vec<_>>());
        }
    }

    #[test]
    fn zigzag_matches_written_ranges() {
        for m in 4..30 {
            let order = 4 * m - 7;
            for i in 1..=order {
                let want = if i <= 2 * m - 3 { 2 * i - 1 } else { 8 * m - 2 * i - 12 };
                assert_eq!(zigzag(i, order), want);
            }
        }
    }

    #[test]
    fn printed_a0_blocks() {
        assert_eq!(a0_prime(4, A0Variant::CaseB).unwrap(), get_fixture("A0'(m=4)", None).unwrap().array);
        assert_eq!(a0_prime(7, A0Variant::CaseC).unwrap(), get_fixture("A0'(m=7)", None).unwrap().array);
    }

    #[test]
    fn zero_line_sums() {
        for (variant, lo) in [(A0Variant::CaseB, 4), (A0Variant::CaseC, 7)] {
            for m in lo..lo + 12 {
                let a = a0_prime(m, variant).unwrap();
                assert!(a.row_sums().iter().chain(a.col_sums().iter()).all(|&s| s == 0), "{variant:?} {m}");
                let b = zigzag_remap(&a).unwrap();
                assert!(b.row_sums().iter().chain(b.col_sums().iter()).all(|&s| s == 0));
            }
        }
    }
}
