use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use shifted_homology::chain::{build_complex_with, Orientation};
use shifted_homology::{
    build_complex, enumerate_cells, partition_to_permutation, ChainComplex, Error, Family,
    GrassmannianSpec,
};

fn small_specs() -> Vec<GrassmannianSpec> {
    Family::ALL
        .into_iter()
        .flat_map(|f| {
            (1..=5).flat_map(move |n| (0..n).map(move |k| GrassmannianSpec::new(f, n, k).unwrap()))
        })
        .collect()
}

#[test]
fn universal_coefficients_relate_integral_and_mod_two() {
    for s in small_specs() {
        let c = build_complex(&s).unwrap();
        let h = c.homology().unwrap();
        let m2 = c.mod2_betti();
        assert_eq!(h[0].to_string(), "Z", "{s}");
        for d in 0..h.len() {
            let below = if d == 0 { 0 } else { h[d - 1].torsion.len() };
            assert_eq!(
                m2[d],
                h[d].betti + h[d].torsion.len() + below,
                "{s} degree {d}"
            );
        }
        let top = h.last().unwrap();
        assert!(
            top.torsion.is_empty() && top.betti <= 1,
            "{s}: top group {top}"
        );
    }
}

#[test]
fn json_round_trip_preserves_homology() {
    for s in small_specs().into_iter().filter(|s| s.n <= 4) {
        let c = build_complex(&s).unwrap();
        let back = ChainComplex::from_json(&c.to_json()).unwrap();
        assert_eq!(back.dims(), c.dims());
        assert_eq!(back.homology().unwrap(), c.homology().unwrap(), "{s}");
    }
}

#[test]
fn cap_is_enforced() {
    let s = GrassmannianSpec::new(Family::C, 6, 0).unwrap();
    match build_complex_with(&s, 10, &Orientation::RowReading) {
        Err(Error::CellCapExceeded { count, cap }) => assert_eq!((count, cap), (64, 10)),
        other => panic!("expected cap error, got {other:?}"),
    }
}

fn spec() -> impl Strategy<Value = GrassmannianSpec> {
    (
        prop_oneof![Just(Family::B), Just(Family::C), Just(Family::D)],
        1usize..5,
    )
        .prop_flat_map(|(f, n)| (Just(f), Just(n), 0..n))
        .prop_map(|(f, n, k)| GrassmannianSpec::new(f, n, k).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn homology_does_not_depend_on_words(s in spec(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let words = enumerate_cells(&s)
            .iter()
            .map(|p| partition_to_permutation(&s, p).unwrap().random_reduced_word(&mut rng))
            .collect();
        let c = build_complex_with(&s, 5000, &Orientation::Words(words)).unwrap();
        prop_assert_eq!(c.homology().unwrap(), build_complex(&s).unwrap().homology().unwrap());
    }
}
