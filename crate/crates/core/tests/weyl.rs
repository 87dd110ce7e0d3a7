mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use shifted_homology::{Family, Root, SignedPermutation};

#[test]
fn length_is_inversion_count_and_bfs_distance() {
    for family in Family::ALL {
        for rank in 1..=4 {
            if family == Family::D && rank < 2 {
                continue;
            }
            let dist = common::bfs_lengths(family, rank);
            let all = common::all_elements(family, rank);
            assert_eq!(dist.len(), all.len(), "{family} rank {rank}");
            for w in &all {
                assert_eq!(w.length(), dist[w], "{family} {w}");
                assert_eq!(w.pi_w().len(), w.length());
            }
        }
    }
}

#[test]
fn beta_sequence_is_the_inversion_set() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for family in Family::ALL {
        for rank in 2..=4 {
            for w in common::all_elements(family, rank) {
                let word = w.random_reduced_word(&mut rng);
                assert_eq!(word.evaluate(), w);
                let betas: BTreeSet<Root> = word.beta_sequence().unwrap().into_iter().collect();
                let pi: BTreeSet<Root> = w.pi_w().into_iter().collect();
                assert_eq!(betas, pi, "{family} {w} via {word}");
            }
        }
    }
}

#[test]
fn reflections_fix_their_hyperplane() {
    for family in Family::ALL {
        for r in Root::positive_roots(family, 3) {
            let s = r.reflection(family);
            assert_eq!(s.act_on_root(&r), r.negated());
            assert!(s.compose(&s).is_identity());
        }
    }
}

fn family() -> impl Strategy<Value = Family> {
    prop_oneof![Just(Family::B), Just(Family::C), Just(Family::D)]
}

proptest! {
    #[test]
    fn inverse_and_generators(f in family(), rank in 2usize..6, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let all = common::all_elements(f, rank.min(4));
        let w = &all[(seed % all.len() as u64) as usize];
        prop_assert!(w.compose(&w.inverse()).is_identity());
        let word = w.random_reduced_word(&mut rng);
        prop_assert_eq!(word.len(), w.length());
        for i in 0..w.rank() {
            let x = w.apply_generator(i).unwrap();
            let up = x.length() > w.length();
            prop_assert_eq!(up, !w.is_right_descent(i));
            prop_assert_eq!(x.length().abs_diff(w.length()), 1);
        }
    }

    #[test]
    fn phi_is_sum_of_inversions(f in family(), idx in any::<prop::sample::Index>()) {
        let all = common::all_elements(f, 3);
        let w: &SignedPermutation = idx.get(&all);
        let mut total = shifted_homology::LatticeVector::zero(3);
        for r in w.pi_w() {
            total.add_root(&r);
        }
        prop_assert_eq!(total, w.phi());
    }
}
