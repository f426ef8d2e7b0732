mod common;

use braidfloer::braiddiag::BraidWord;
use common::props::*;
use common::{free_word_strategy, fully_alternating, small_matrix, staircase_braid};
use proptest::prelude::*;

fn any_odd_braid() -> impl Strategy<Value = BraidWord> {
    prop_oneof![Just(3usize), Just(5)].prop_flat_map(|b| {
        prop::collection::vec((1..b, prop::bool::ANY), 1..=6).prop_map(move |ls| {
            BraidWord::new(b, ls.into_iter().map(|(i, p)| (i, if p { 1 } else { -1 })).collect()).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn fox_fundamental_identity(rank in 1usize..=4, w in free_word_strategy(4, 12)) {
        let w = braidfloer::freegroup::FreeWord::from_letters(
            &w.letters().iter().map(|&(g, e)| ((g - 1) % rank + 1, e)).collect::<Vec<_>>(),
        );
        fox_fundamental(&w, rank)?;
    }

    #[test]
    fn smith_form_matches_determinantal_divisors(m in small_matrix()) {
        snf_matches_oracle(&m)?;
    }

    #[test]
    fn alexander_is_symmetric_and_counts_homology(w in fully_alternating(10)) {
        alexander_symmetric_with_order(&w)?;
    }

    #[test]
    fn torsion_specializes_to_alexander(w in fully_alternating(10)) {
        specialization_is_alexander(&w)?;
    }

    #[test]
    fn torsion_coefficients_alternate_in_sign(w in fully_alternating(10)) {
        sign_pattern(&w)?;
    }

    #[test]
    fn leaves_count_the_determinant(w in fully_alternating(12)) {
        leaf_count_is_determinant(&w)?;
    }

    #[test]
    fn alternating_determinant_counts_spanning_trees(w in fully_alternating(12)) {
        determinant_counts_spanning_trees(&w)?;
    }

    #[test]
    fn leaf_covers_are_signature_zero(w in fully_alternating(10)) {
        leaf_covers_have_zero_signature(&w)?;
    }

    #[test]
    fn staircase_euler_characteristic(w in staircase_braid()) {
        staircase_euler(&w)?;
    }

    #[test]
    fn staircase_hf_plus_matches_cohomology(w in staircase_braid()) {
        staircase_totals(&w)?;
    }

    #[test]
    fn torsion_survives_rotation_and_braid_relations(
        w in any_odd_braid(),
        rotate in 0usize..8,
        i in 1usize..=3,
        at in 0usize..8,
    ) {
        let i = (i - 1) % (w.strands() - 2) + 1;
        torsion_invariant_under_moves(&w, rotate, i, at)?;
    }
}
