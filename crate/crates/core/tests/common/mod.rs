#![allow(dead_code)]

use proptest::prelude::*;
use rand::Rng;

use ginarl::algebra::{monomials_of_degree, Monomial, Polynomial};
use ginarl::groebner::DegreeSlice;
use ginarl::ideal::{HilbertFunction, MonomialIdeal};

/// Smallest strongly stable ideal containing `seeds` and the pure power
/// `x_n^top`; its socle degree is below `top`.
pub fn stable_ideal(n: usize, top: u32, seeds: &[Vec<u32>]) -> MonomialIdeal {
    let mut gens: Vec<Monomial> =
        seeds.iter().filter(|e| e.iter().any(|&a| a > 0)).map(|e| Monomial::new(e.clone())).collect();
    gens.push(Monomial::pure_power(n, n - 1, top));
    MonomialIdeal::borel_closure(n, gens)
}

/// Random strongly stable Artinian ideal in `n` variables with socle degree
/// at most `max_socle`.
pub fn random_stable_ideal(rng: &mut impl Rng, n: usize, max_socle: u32) -> MonomialIdeal {
    let top = rng.gen_range(1..=max_socle + 1);
    let count = rng.gen_range(0..=12);
    let seeds: Vec<Vec<u32>> = (0..count)
        .map(|_| {
            let d = rng.gen_range((top / 2).max(1)..=top);
            let mut e = vec![0u32; n];
            for _ in 0..d {
                e[rng.gen_range(0..n)] += 1;
            }
            e
        })
        .collect();
    stable_ideal(n, top, &seeds)
}

pub fn arb_stable_ideal(max_n: usize, max_socle: u32) -> impl Strategy<Value = MonomialIdeal> {
    (1..=max_n).prop_flat_map(move |n| {
        (1..=max_socle + 1, prop::collection::vec(prop::collection::vec(0u32..4, n), 0..7))
            .prop_map(move |(top, seeds)| stable_ideal(n, top, &seeds))
    })
}

pub fn monomial_gens(ideal: &MonomialIdeal) -> Vec<Polynomial> {
    ideal.generators().iter().cloned().map(Polynomial::monomial).collect()
}

pub fn complete_intersection(degrees: &[u32]) -> Vec<Polynomial> {
    let n = degrees.len();
    degrees.iter().enumerate().map(|(i, &d)| Polynomial::monomial(Monomial::pure_power(n, i, d))).collect()
}

/// Hilbert function of the quotient read off slice dimensions of the
/// ideal generated by `gens`, through degree `last`.
pub fn hilbert_by_ranks(gens: &[Polynomial], last: u32) -> HilbertFunction {
    let n = gens[0].nvars();
    let values = (0..=last)
        .map(|d| {
            let slice = DegreeSlice::spanned_by(gens, d, None).unwrap();
            (monomials_of_degree(n, d).len() - slice.dimension()) as u64
        })
        .collect();
    HilbertFunction::new(values)
}

/// Every exponent tuple of length `len` with entries at most `bound`.
pub fn box_tuples(len: usize, bound: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..=bound).map(move |a| {
                    let mut t = t.clone();
                    t.push(a);
                    t
                })
            })
            .collect();
    }
    out
}

/// Independent revlex comparison by the definition.
pub fn revlex_greater(a: &[u32], b: &[u32]) -> bool {
    let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
    if da != db {
        return da > db;
    }
    a.iter().zip(b).rev().find(|(x, y)| x != y).is_some_and(|(x, y)| x < y)
}
