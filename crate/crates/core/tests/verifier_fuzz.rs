use heffter::{generate, get_fixture, verify_block, verify_heffter, verify_integer_heffter, SupportSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn sign_flips_and_value_changes_are_rejected() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (n, k) in [(6, 5), (11, 7), (21, 10), (30, 7)] {
        let a = generate(n, k).unwrap();
        let cells: Vec<_> = a.iter().collect();
        for _ in 0..200 {
            let (p, v) = cells[rng.gen_range(0..cells.len())];
            let mut b = a.clone();
            b.replace(p, -v).unwrap();
            assert!(!verify_heffter(&b, k).is_valid());
            let mut c = a.clone();
            let w = v + if rng.gen_bool(0.5) { 1 } else { -1 };
            if w != 0 {
                c.replace(p, w).unwrap();
                assert!(!verify_heffter(&c, k).is_valid());
            }
        }
    }
}

#[test]
fn residues_stay_below_modulus() {
    for (n, k) in [(7, 6), (19, 11), (26, 7)] {
        let a = generate(n, k).unwrap().negate();
        let r = verify_heffter(&a, k);
        let m = r.modulus.unwrap();
        assert!(r.row_residues.iter().chain(&r.col_residues).all(|&x| x < m));
    }
}

#[test]
fn printed_blocks_meet_their_contracts() {
    for name in ["B(10)", "B(11)", "B(14)", "B(15)", "B(18)", "B(22)", "B(26)"] {
        let f = get_fixture(name, None).unwrap();
        let c = f.contract.unwrap();
        assert!(verify_block(&f.array, c.line_sum, &c.support).is_valid(), "{name}");
    }
}

#[test]
fn h6_3_is_not_integer() {
    let a = get_fixture("H(6;3)", None).unwrap().array;
    let r = verify_integer_heffter(&a, 3);
    assert!(!r.is_valid());
    assert_eq!(r.row_sums[0], 0);
    assert_eq!(r.row_sums[5], 37);
}

#[test]
fn empty_arrays() {
    let a = heffter::SparseSquareArray::new(4);
    assert!(verify_block(&a, 0, &SupportSet::new()).is_valid());
    assert!(!verify_integer_heffter(&a, 3).is_valid());
    assert!(!verify_heffter(&a, 3).is_valid());
}
