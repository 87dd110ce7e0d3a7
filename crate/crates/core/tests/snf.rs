mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use shifted_homology::{smith_normal_form, SmithForm, SparseMatrix};

fn matrix(max: usize, entries: Vec<i64>) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max, 1..=max).prop_flat_map(move |(r, c)| {
        prop::collection::vec(
            prop::collection::vec(prop::sample::select(entries.clone()), c),
            r,
        )
    })
}

fn factors(m: &[Vec<i64>]) -> Vec<BigInt> {
    let s: SparseMatrix<BigInt> = SparseMatrix::from_dense(
        &m.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    );
    smith_normal_form(&s).invariant_factors
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn agrees_with_dense_elimination(m in matrix(12, vec![0, 0, 0, 2, -2, 1, -1, 3, 6])) {
        prop_assert_eq!(factors(&m), common::naive_invariant_factors(&m));
    }

    #[test]
    fn factors_divide_in_chain(m in matrix(10, (-9..=9).collect())) {
        let f = factors(&m);
        prop_assert!(f.windows(2).all(|w| &w[1] % &w[0] == BigInt::from(0)));
        prop_assert!(f.iter().all(|d| *d > BigInt::from(0)));
    }

    #[test]
    fn scalar_types_agree(m in matrix(8, vec![0, 2, -2, 1, 4])) {
        let small: SmithForm<i128> = smith_normal_form(&SparseMatrix::from_dense(
            &m.iter().map(|r| r.iter().map(|&x| x as i128).collect::<Vec<_>>()).collect::<Vec<_>>(),
        ));
        let big = factors(&m);
        prop_assert_eq!(small.invariant_factors.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>(), big);
    }

    #[test]
    fn transpose_has_same_factors(m in matrix(9, vec![0, 0, 2, -2, 1])) {
        let t: Vec<Vec<i64>> = (0..m[0].len()).map(|j| m.iter().map(|r| r[j]).collect()).collect();
        prop_assert_eq!(factors(&m), factors(&t));
    }
}
