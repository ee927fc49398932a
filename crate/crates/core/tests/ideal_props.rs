mod common;

use proptest::prelude::*;

use common::{arb_stable_ideal, box_tuples};
use ginarl::algebra::Monomial;
use ginarl::ideal::MonomialIdeal;

fn padded(alpha: &[u32], n: usize) -> Monomial {
    let mut e = alpha.to_vec();
    e.resize(n, 0);
    Monomial::new(e)
}

fn axis(len: usize, m: u32) -> Vec<u32> {
    let mut v = vec![0; len];
    v[len - 1] = m;
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn index_sets_are_the_outside_tuples(ideal in arb_stable_ideal(4, 6)) {
        let n = ideal.nvars();
        let p = ideal.f_profile().unwrap();
        let t = p.socle_degree();
        for i in 1..n {
            let j = p.j_set(i);
            for alpha in box_tuples(i, t + 1) {
                prop_assert_eq!(j.contains(&alpha), !ideal.contains(&padded(&alpha, n)), "i={} alpha={:?}", i, alpha);
            }
        }
    }

    #[test]
    fn axis_points_dominate(ideal in arb_stable_ideal(4, 6)) {
        let n = ideal.nvars();
        let p = ideal.f_profile().unwrap();
        for i in 1..n {
            let j = p.j_set(i);
            for alpha in j {
                let size: u32 = alpha.iter().sum();
                prop_assert!(j.contains(&axis(i, size)));
                prop_assert!(p.f(i + 1, alpha).unwrap() <= p.f_axis(i + 1, size).unwrap());
            }
            let on_axis: Vec<u32> = j.iter().filter(|a| a[..i - 1].iter().all(|&v| v == 0)).map(|a| a[i - 1]).collect();
            for &a in &on_axis {
                for &b in on_axis.iter().filter(|&&b| b >= a) {
                    prop_assert!(a + p.f_axis(i + 1, a).unwrap() >= b + p.f_axis(i + 1, b).unwrap());
                }
            }
        }
    }

    #[test]
    fn profile_round_trips(ideal in arb_stable_ideal(4, 7)) {
        prop_assert_eq!(ideal.f_profile().unwrap().reconstruct().unwrap(), ideal);
    }

    #[test]
    fn standard_monomials_counted_two_ways(ideal in arb_stable_ideal(4, 7)) {
        let n = ideal.nvars();
        let hf = ideal.hilbert_function().unwrap();
        let p = ideal.f_profile().unwrap();
        let fibres: u64 = if n == 1 {
            p.f1() as u64
        } else {
            p.j_set(n - 1).iter().map(|a| p.f(n, a).unwrap() as u64).sum()
        };
        prop_assert_eq!(hf.total(), fibres);
        let direct: u64 = (0..=p.socle_degree() + 1).map(|d| ideal.standard_monomials(d).len() as u64).sum();
        prop_assert_eq!(hf.total(), direct);
        prop_assert_eq!(hf.socle_degree(), Some(p.socle_degree()));
    }

    #[test]
    fn restriction_keeps_stability(ideal in arb_stable_ideal(4, 7), i in 1usize..=3) {
        let n = ideal.nvars();
        prop_assume!(n >= 2);
        let i = i.min(n - 1);
        let r = ideal.restrict_to_first(i).unwrap();
        prop_assert_eq!(r.nvars(), i + 1);
        prop_assert!(r.is_strongly_stable() && r.is_artinian());
        let closure = MonomialIdeal::borel_closure(ideal.nvars(), ideal.generators().to_vec());
        prop_assert_eq!(closure, ideal);
    }
}
