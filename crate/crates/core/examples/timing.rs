use std::time::Instant;

use ginarl::algebra::{Monomial, Polynomial};
use ginarl::gin::{compute_gin, gin_degree_slice_oracle, random_change, random_form, trial_rng, GinConfig};

fn main() {
    let mut args: Vec<String> = std::env::args().skip(1).collect();
    let dense = args.first().is_some_and(|a| a == "dense");
    if dense {
        args.remove(0);
    }
    let ds: Vec<u32> = args.iter().map(|a| a.parse().unwrap()).collect();
    let n = ds.len();
    let mut rng = trial_rng(7, 0);
    let gens: Vec<Polynomial> = ds
        .iter()
        .enumerate()
        .map(|(i, &d)| {
            if dense {
                random_form(&mut rng, n, d, 1000)
            } else {
                Polynomial::monomial(Monomial::pure_power(n, i, d))
            }
        })
        .collect();
    let t = Instant::now();
    let r = compute_gin(&gens, &GinConfig::default()).unwrap();
    println!("{} generators, {} trials, {:?}", r.gin.generators().len(), r.trials_used, t.elapsed());
    let socle = r.gin.hilbert_function().unwrap().socle_degree().unwrap();
    let g = random_change(&mut trial_rng(99, 0), n, 1000).unwrap();
    for d in 0..=socle + 1 {
        let t = Instant::now();
        let piv = gin_degree_slice_oracle(&gens, &g, d).unwrap();
        let ok = piv == r.gin.monomials_in_degree(d);
        println!("degree {d}: {} pivots, match {ok}, {:?}", piv.len(), t.elapsed());
    }
}
