mod common;

use proptest::prelude::*;

use common::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn reduction_agrees_with_linear_algebra(gens in ideal_strategy()) {
        check_ideal(&gens)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn anick_identity_on_random_antichains(words in word_list_strategy()) {
        check_antichain(&words)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn reduced_basis_ignores_generator_order(perm in permutation_strategy()) {
        check_order(&perm)?;
    }
}

#[test]
fn anick_identity_on_catalog() {
    for (id, v) in catalog_antichains() {
        assert!(anick_identity(&v, 12), "{id}");
    }
}

#[test]
fn monomial_series_matches_enumeration() {
    let a = ncgb_core::Alphabet::standard2();
    for (id, v) in catalog_antichains() {
        let h = ncgb_core::monomial::hilbert_series_monomial(&a, &v, 10);
        assert_eq!(h, ncgb_core::monomial::brute_force_series(&a, &v, 10), "{id}");
    }
}

#[test]
fn twist_and_switch() {
    twist_and_switch_invariance().unwrap();
}

#[test]
fn oracles() {
    assert_eq!(product_oracle(&[1, 1], 4), [1, 2, 3, 4, 5]);
    assert_eq!(inverse_oracle(&[1, -2, 1], 4), [1, 2, 3, 4, 5]);
}
