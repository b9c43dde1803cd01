use heffter::cycles::{classify_cycles, CellSet};
use heffter::fillers::{fill_bacon, fill_hamilton_pair, fill_twofactor_pair, RunPair, RunQuad};
use heffter::{Position, SupportSet};
use proptest::prelude::*;

fn relabel(s: &CellSet, rows: &[usize], cols: &[usize]) -> CellSet {
    CellSet::from_positions(s.order(), s.iter().map(|p| Position::new(rows[p.row - 1], cols[p.col - 1])))
}

fn perms(n: usize) -> impl Strategy<Value = (Vec<usize>, Vec<usize>)> {
    let v: Vec<usize> = (1..=n).collect();
    (Just(v.clone()).prop_shuffle(), Just(v).prop_shuffle())
}

fn hamilton_case() -> impl Strategy<Value = (usize, CellSet, CellSet)> {
    (4usize..40).prop_flat_map(|n| (Just(n), 0..n, perms(n))).prop_map(|(n, d, (rows, cols))| {
        let s1 = CellSet::diagonals(n, &[d, (d + 1) % n]);
        let s2 = CellSet::diagonals(n, &[(d + 2) % n, (d + 3) % n]);
        (n, relabel(&s1, &rows, &cols), relabel(&s2, &rows, &cols))
    })
}

fn sign_balanced(a: &heffter::SparseSquareArray) -> bool {
    let n = a.order();
    let mut rows = vec![(0, 0); n + 1];
    let mut cols = vec![(0, 0); n + 1];
    for (p, v) in a.iter() {
        let bump = |t: &mut (usize, usize)| if v > 0 { t.0 += 1 } else { t.1 += 1 };
        bump(&mut rows[p.row]);
        bump(&mut cols[p.col]);
    }
    rows[1..].iter().chain(&cols[1..]).all(|&c| c == (2, 2))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn bacon_sums((n, s1, s2) in hamilton_case()) {
        let a = fill_bacon(n, &s1, &s2).unwrap();
        let want = 8 * n as i64 + 2;
        prop_assert!(a.row_sums().iter().chain(a.col_sums().iter()).all(|&s| s == want));
        prop_assert_eq!(a.support(), SupportSet::range(1, 4 * n as u64));
    }

    #[test]
    fn hamilton_pair_zero_and_shiftable((n, s1, s2) in hamilton_case(), t in 1u64..500, gap in 0u64..500, z in 0u64..100_000) {
        let s = t + 2 * n as u64 + gap;
        let a = fill_hamilton_pair(n, &s1, &s2, RunPair { s, t }).unwrap();
        prop_assert!(a.row_sums().iter().chain(a.col_sums().iter()).all(|&x| x == 0));
        prop_assert!(sign_balanced(&a));
        let len = 2 * n as u64;
        prop_assert_eq!(a.support(), SupportSet::range(t + 1, t + len).union(&SupportSet::range(s + 1, s + len)));
        let b = fill_hamilton_pair(n, &s1, &s2, RunPair { s: s + z, t: t + z }).unwrap();
        prop_assert_eq!(b, a.shift(z));
    }

    #[test]
    fn twofactor_pair_zero_and_shiftable(
        (n, d, rows, cols) in (2usize..20).prop_flat_map(|q| (Just(2 * q), 0..q, perms(2 * q))).prop_map(|(n, d, (r, c))| (n, d, r, c)),
        v in 1u64..300,
        z in 0u64..100_000,
    ) {
        let q = n / 2;
        let quad = CellSet::diagonals(q, &[d, (d + 1) % q]);
        let s1 = quad.translated(n, 0, 0).union(&quad.translated(n, q, q));
        let s2 = quad.translated(n, 0, q).union(&quad.translated(n, q, 0));
        let f1 = classify_cycles(&relabel(&s1, &rows, &cols)).unwrap();
        let f2 = classify_cycles(&relabel(&s2, &rows, &cols)).unwrap();
        let nn = n as u64;
        let runs = RunQuad { s: v + 3 * nn, t: v + 2 * nn, u: v + nn, v };
        let a = fill_twofactor_pair(n, &f1, &f2, runs).unwrap();
        prop_assert!(a.row_sums().iter().chain(a.col_sums().iter()).all(|&x| x == 0));
        prop_assert!(sign_balanced(&a));
        prop_assert_eq!(a.support(), SupportSet::range(v + 1, v + 4 * nn));
        let moved = RunQuad { s: runs.s + z, t: runs.t + z, u: runs.u + z, v: runs.v + z };
        prop_assert_eq!(fill_twofactor_pair(n, &f1, &f2, moved).unwrap(), a.shift(z));
    }
}
