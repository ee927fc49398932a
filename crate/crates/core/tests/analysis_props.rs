mod common;

use proptest::prelude::*;

use common::{arb_stable_ideal, complete_intersection};
use ginarl::analysis::{arl_check_direct, arl_check_profile, froberg_series, mainthm_analyze, slp_check, ssp_check};
use ginarl::gin::{compute_gin, random_form, trial_rng, GinConfig};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn arl_checks_agree(ideal in arb_stable_ideal(4, 7)) {
        let p = ideal.f_profile().unwrap();
        let direct = arl_check_direct(&ideal);
        prop_assert_eq!(direct.holds, arl_check_profile(&p).holds);
        prop_assert_eq!(direct.holds, direct.witness.is_none());
        let report = mainthm_analyze(&ideal).unwrap();
        prop_assert_eq!(report.arl_by_conditions(), direct.holds);
        prop_assert!(report.is_consistent());
    }

    #[test]
    fn lefschetz_decides_arl_in_three_variables(ideal in arb_stable_ideal(3, 7)) {
        prop_assume!(ideal.nvars() == 3);
        prop_assert_eq!(slp_check(&ideal.f_profile().unwrap()).holds, arl_check_direct(&ideal).holds);
    }

    #[test]
    fn stanley_implies_lefschetz_and_symmetry(ideal in arb_stable_ideal(4, 7)) {
        let p = ideal.f_profile().unwrap();
        if ssp_check(&p).holds {
            prop_assert!(slp_check(&p).holds);
            prop_assert!(ideal.hilbert_function().unwrap().is_symmetric());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn two_variable_gins_are_arl(seed in any::<u64>(), degrees in prop::collection::vec(1u32..=6, 2..=3)) {
        let mut rng = trial_rng(seed, 0);
        let gens: Vec<_> = degrees.iter().map(|&d| random_form(&mut rng, 2, d, 100)).collect();
        let r = compute_gin(&gens, &GinConfig { seed, ..GinConfig::default() }).unwrap();
        prop_assert!(arl_check_direct(&r.gin).holds);
    }

    #[test]
    fn froberg_matches_generic_complete_intersections(
        seed in any::<u64>(),
        degrees in (1usize..=4).prop_flat_map(|n| prop::collection::vec(1u32..=3, n)),
    ) {
        let n = degrees.len();
        let mut sorted = degrees.clone();
        sorted.sort_unstable();
        // sufficient degree condition for an almost revlex gin
        let bounded = (3..n).all(|i| sorted[i] as i64 > sorted[..i].iter().map(|&d| d as i64).sum::<i64>() - i as i64);
        prop_assume!(bounded);
        let mut rng = trial_rng(seed, 0);
        let gens: Vec<_> = degrees.iter().map(|&d| random_form(&mut rng, n, d, 1000)).collect();
        let r = compute_gin(&gens, &GinConfig { seed, ..GinConfig::default() }).unwrap();
        let hf = r.gin.hilbert_function().unwrap();
        prop_assert!(froberg_series(n, &degrees).unwrap().matches(&hf));
        let monomial = compute_gin(&complete_intersection(&sorted), &GinConfig::default()).unwrap();
        prop_assert_eq!(monomial.gin, r.gin);
    }
}
