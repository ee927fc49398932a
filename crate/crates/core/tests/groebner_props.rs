mod common;

use proptest::prelude::*;
use rug::Rational;

use ginarl::algebra::{Monomial, Polynomial};
use ginarl::groebner::{buchberger_reduced, initial_ideal, normal_form, pivot_initial_slice, DegreeSlice};

fn homogeneous(n: usize, d: u32, terms: &[(i64, Vec<u32>)]) -> Polynomial {
    // spread the requested degree over the variables
    Polynomial::from_terms(
        n,
        terms.iter().map(|(c, w)| {
            let mut e = vec![0u32; n];
            for k in 0..d as usize {
                e[w[k % w.len()] as usize % n] += 1;
            }
            (Monomial::new(e), Rational::from(*c))
        }),
    )
    .unwrap()
}

fn arb_gens() -> impl Strategy<Value = Vec<Polynomial>> {
    (2usize..=3).prop_flat_map(|n| {
        prop::collection::vec(
            (1u32..=3, prop::collection::vec((-3i64..=3, prop::collection::vec(0u32..3, 1..4)), 1..4)),
            1..=3,
        )
        .prop_map(move |gs| gs.iter().map(|(d, ts)| homogeneous(n, *d, ts)).collect::<Vec<_>>())
        .prop_filter("some nonzero generator", |gs| gs.iter().any(|g| !g.is_zero()))
    })
}

fn arb_multipliers(count: usize, n: usize) -> impl Strategy<Value = Vec<Polynomial>> {
    prop::collection::vec(
        (0u32..=2, prop::collection::vec((-2i64..=2, prop::collection::vec(0u32..3, 1..3)), 0..3)),
        count,
    )
    .prop_map(move |hs| hs.iter().map(|(d, ts)| homogeneous(n, *d, ts)).collect())
}

fn top_degree(gens: &[Polynomial]) -> u32 {
    gens.iter().filter_map(Polynomial::total_degree).max().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn buchberger_matches_pivot_slices(gens in arb_gens()) {
        let gb = buchberger_reduced(&gens).unwrap();
        let lead = initial_ideal(&gb);
        for d in 0..=top_degree(&gens) + 2 {
            let slice = DegreeSlice::spanned_by(&gens, d, None).unwrap();
            prop_assert_eq!(pivot_initial_slice(&slice).unwrap(), lead.monomials_in_degree(d), "degree {}", d);
        }
    }

    #[test]
    fn constructed_members_reduce_to_zero(
        (gens, hs) in arb_gens().prop_flat_map(|gs| {
            let (k, n) = (gs.len(), gs[0].nvars());
            (Just(gs), arb_multipliers(k, n))
        })
    ) {
        let gb = buchberger_reduced(&gens).unwrap();
        let mut member = Polynomial::zero(gens[0].nvars());
        for (h, f) in hs.iter().zip(&gens) {
            member = member.try_add(&h.try_mul(f).unwrap()).unwrap();
        }
        prop_assert!(normal_form(&member, gb.generators()).is_zero());
        for f in &gens {
            prop_assert!(gb.contains(f));
        }
    }

    #[test]
    fn normal_form_decides_membership(
        (gens, probe) in arb_gens().prop_flat_map(|gs| {
            let n = gs[0].nvars();
            (Just(gs), (1u32..=4, prop::collection::vec((-2i64..=2, prop::collection::vec(0u32..3, 1..4)), 1..4))
                .prop_map(move |(d, ts)| homogeneous(n, d, &ts)))
        })
    ) {
        prop_assume!(!probe.is_zero());
        let gb = buchberger_reduced(&gens).unwrap();
        let d = probe.total_degree().unwrap();
        let r = normal_form(&probe, gb.generators());
        // membership by rank: the probe adds nothing to the degree-d slice
        let base = DegreeSlice::spanned_by(&gens, d, None).unwrap().dimension();
        let mut with_probe = gens.clone();
        with_probe.push(probe.clone());
        let grown = DegreeSlice::spanned_by(&with_probe, d, None).unwrap().dimension();
        prop_assert_eq!(r.is_zero(), base == grown);
        let lead = gb.leading_monomials();
        prop_assert!(r.terms().all(|(m, _)| !lead.iter().any(|l| l.divides(m))));
    }

    #[test]
    fn reduced_basis_is_canonical(
        (gens, perm_seed, scales) in arb_gens().prop_flat_map(|gs| {
            let k = gs.len();
            (Just(gs), any::<u64>(), prop::collection::vec((1i64..=5, 1i64..=5, any::<bool>()), k))
        })
    ) {
        let gb = buchberger_reduced(&gens).unwrap();
        prop_assert_eq!(&buchberger_reduced(gb.generators()).unwrap(), &gb);

        let mut moved: Vec<Polynomial> = gens
            .iter()
            .zip(&scales)
            .map(|(f, &(p, q, neg))| f.scale(&Rational::from((if neg { -p } else { p }, q))))
            .collect();
        let k = moved.len();
        moved.rotate_left(perm_seed as usize % k);
        if perm_seed & 1 == 1 {
            moved.reverse();
        }
        prop_assert_eq!(&buchberger_reduced(&moved).unwrap(), &gb);
    }
}
