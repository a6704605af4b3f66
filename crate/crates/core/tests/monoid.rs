mod common;

use ckstar::{check_cancellation, classify, divisors, kron_index, kronecker, ZeroOneMatrix};
use common::*;
use proptest::prelude::*;

fn matrix(max_n: usize) -> impl Strategy<Value = ZeroOneMatrix> {
    (1..=max_n, any::<u64>()).prop_map(|(n, seed)| random_matrix(&mut rng(seed), n))
}

#[test]
fn index_map_examples() {
    assert_eq!(kron_index(2, 2, 2, 3).unwrap(), 5);
    assert_eq!(kron_index(2, 2, 3, 2).unwrap(), 4);
    assert_eq!(kron_index(1, 1, 7, 5).unwrap(), 1);
    assert!(kron_index(3, 1, 2, 2).is_err());
}

#[test]
fn golden_square_entries() {
    let gg = kronecker(&golden(), &golden());
    assert!(gg.get(0, 3));
    assert!(!gg.get(3, 3));
    assert_eq!(dense(&gg), dense_kron(&dense(&golden()), &dense(&golden())));
}

#[test]
fn not_commutative() {
    let (a, b) = (golden(), ZeroOneMatrix::identity(2));
    assert_ne!(kronecker(&a, &b), kronecker(&b, &a));
}

#[test]
fn divisors_of_full_twelve() {
    let got: Vec<(usize, usize)> = divisors(&ZeroOneMatrix::full(12))
        .iter()
        .map(|p| {
            assert!(p.left.is_full() && p.right.is_full());
            (p.left.n(), p.right.n())
        })
        .collect();
    assert_eq!(got, [(1, 12), (2, 6), (3, 4), (4, 3), (6, 2), (12, 1)]);
}

#[test]
fn irreducible_factors_need_coprime_periods() {
    let flip = ZeroOneMatrix::from_rows(&[[0, 1], [1, 0]]).unwrap();
    assert!(classify(&flip).irreducible);
    assert!(!classify(&kronecker(&flip, &flip)).irreducible);
    assert!(classify(&kronecker(&flip, &golden())).irreducible);
}

#[test]
fn product_irreducibility_exhaustive_small() {
    let all: Vec<ZeroOneMatrix> = (1..=3).flat_map(ZeroOneMatrix::all_nondegenerate).collect();
    let small: Vec<&ZeroOneMatrix> = all.iter().filter(|a| a.n() <= 2).collect();
    for a in &all {
        for b in &small {
            let ab = kronecker(a, b);
            let (ca, cb, cab) = (classify(a), classify(b), classify(&ab));
            if cab.irreducible {
                assert!(ca.irreducible && cb.irreducible, "{a} (x) {b}");
            }
            if ca.irreducible && cb.irreducible {
                let coprime = num_integer::Integer::gcd(&period(a), &period(b)) == 1;
                assert_eq!(cab.irreducible, coprime, "{a} (x) {b}");
            }
            if !ca.permutation && !cb.permutation {
                assert!(!cab.permutation);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn closure_and_associativity(a in matrix(4), b in matrix(4), c in matrix(3)) {
        let ab = kronecker(&a, &b);
        prop_assert!(ZeroOneMatrix::from_entries(ab.n(), ab.entries().to_vec()).is_ok());
        prop_assert_eq!(kronecker(&ab, &c), kronecker(&a, &kronecker(&b, &c)));
        prop_assert_eq!(kronecker(&ZeroOneMatrix::unit(), &a), a.clone());
        prop_assert_eq!(kronecker(&a, &ZeroOneMatrix::unit()), a);
    }

    #[test]
    fn entries_follow_index_map(a in matrix(4), b in matrix(4)) {
        prop_assert_eq!(dense(&kronecker(&a, &b)), dense_kron(&dense(&a), &dense(&b)));
    }

    #[test]
    fn mixed_product(a in matrix(4), c in matrix(4), seed in any::<u64>()) {
        let mut r = rng(seed);
        let b = random_matrix(&mut r, a.n());
        let d = random_matrix(&mut r, c.n());
        let lhs = matmul(&dense(&kronecker(&a, &c)), &dense(&kronecker(&b, &d)));
        let rhs = dense_kron(&matmul(&dense(&a), &dense(&b)), &matmul(&dense(&c), &dense(&d)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn classification_matches_oracles(a in matrix(6)) {
        let c = classify(&a);
        prop_assert!(c.nondegenerate);
        prop_assert_eq!(c.irreducible, irreducible_by_powers(&a));
        prop_assert_eq!(c.permutation, permutation_by_counts(&a));
        prop_assert_eq!(c.simple_ck, c.irreducible && !c.permutation);
    }

    #[test]
    fn reducible_factor_gives_reducible_product(a in matrix(3), b in matrix(3)) {
        let ab = kronecker(&a, &b);
        if !irreducible_by_powers(&a) || !irreducible_by_powers(&b) {
            prop_assert!(!classify(&ab).irreducible);
        }
    }

    #[test]
    fn divisors_match_brute_force(a in matrix(3), b in matrix(4)) {
        let ab = kronecker(&a, &b);
        let got: Vec<(ZeroOneMatrix, ZeroOneMatrix)> =
            divisors(&ab).into_iter().map(|p| (p.left, p.right)).collect();
        prop_assert!(got.contains(&(a.clone(), b.clone())));
        prop_assert!(got.contains(&(ZeroOneMatrix::unit(), ab.clone())));
        prop_assert!(got.contains(&(ab.clone(), ZeroOneMatrix::unit())));
        prop_assert_eq!(got, brute_force_divisors(&ab));
    }

    #[test]
    fn divisors_of_random_matrices(a in matrix(8)) {
        let got: Vec<(ZeroOneMatrix, ZeroOneMatrix)> =
            divisors(&a).into_iter().map(|p| (p.left, p.right)).collect();
        prop_assert_eq!(got, brute_force_divisors(&a));
    }

    #[test]
    fn cancellation(a in matrix(3), a2 in matrix(3), b in matrix(3), b2 in matrix(3)) {
        if a.n() == a2.n() && b.n() == b2.n() {
            prop_assert_eq!(check_cancellation(&a, &a2, &b, &b2), Ok(true));
        }
    }
}
