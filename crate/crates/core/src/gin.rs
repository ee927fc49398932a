//! Generic initial ideals by random change of coordinates.
//!
//! Each trial draws an integer matrix with entries uniform in
//! `[-coeff_bound, coeff_bound]` from a ChaCha20 stream (stream number =
//! trial index, key derived from the seed), transforms the generators and
//! takes the initial ideal of the reduced Gröbner basis. A candidate is
//! accepted once two trials agree and it is strongly stable.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rug::Rational;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{CoordinateChange, Monomial, Polynomial};
use crate::groebner::{
    buchberger, initial_ideal, pivot_initial_slice, BuchbergerConfig, DegreeSlice, GroebnerError,
};
use crate::ideal::{HilbertFunction, IdealError, MonomialIdeal};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GinError {
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error("no two of {trials} trials agreed on a strongly stable initial ideal")]
    TrialsExhausted { trials: usize },
    #[error("initial ideal is not Artinian: no pure power of variable {variable}")]
    NotArtinian { variable: usize },
    #[error("degree ceiling {max_degree} reached before the initial ideal filled a whole degree")]
    DegreeCeiling { max_degree: u32 },
    #[error("every sampled coordinate change was singular")]
    AllSingular,
    #[error("invalid configuration: {0}")]
    Config(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GinConfig {
    pub seed: u64,
    pub coeff_bound: u32,
    pub max_trials: usize,
    pub max_degree: u32,
}

impl Default for GinConfig {
    fn default() -> Self {
        Self { seed: 0, coeff_bound: 1000, max_trials: 8, max_degree: 40 }
    }
}

impl GinConfig {
    pub fn validate(&self) -> Result<(), GinError> {
        if self.coeff_bound < 2 {
            return Err(GinError::Config("coeff_bound must be at least 2".into()));
        }
        if self.max_trials < 2 {
            return Err(GinError::Config("max_trials must be at least 2".into()));
        }
        if self.max_degree < 1 {
            return Err(GinError::Config("max_degree must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GinCertificate {
    pub strongly_stable: bool,
    pub trials_agreeing: usize,
    pub coefficient_bound: u32,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GinResult {
    pub gin: MonomialIdeal,
    pub trials_used: usize,
    pub certificate: GinCertificate,
    /// S-pairs reduced over all trials, a deterministic measure of work.
    pub pairs_reduced: usize,
}

/// Draws for trial `trial` are a pure function of `(seed, trial)`.
pub fn trial_rng(seed: u64, trial: usize) -> ChaCha20Rng {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

/// Random invertible integer matrix with entries in `[-bound, bound]`;
/// singular draws are discarded. Gives up after 64 singular draws.
pub fn random_change(rng: &mut impl Rng, nvars: usize, bound: u32) -> Result<CoordinateChange, GinError> {
    let b = bound as i64;
    for _ in 0..64 {
        let rows: Vec<Vec<i64>> = (0..nvars).map(|_| (0..nvars).map(|_| rng.gen_range(-b..=b)).collect()).collect();
        if let Ok(g) = CoordinateChange::from_integers(&rows) {
            return Ok(g);
        }
    }
    Err(GinError::AllSingular)
}

/// Initial ideal of `g . gens`, computed until the leading monomials fill a
/// whole degree or `max_degree` is passed.
pub fn transformed_initial_ideal(
    gens: &[Polynomial],
    g: &CoordinateChange,
    max_degree: u32,
    hilbert: Option<&HilbertFunction>,
) -> Result<MonomialIdeal, GinError> {
    initial_ideal_counted(gens, g, max_degree, hilbert).map(|(ideal, _)| ideal)
}

fn initial_ideal_counted(
    gens: &[Polynomial],
    g: &CoordinateChange,
    max_degree: u32,
    hilbert: Option<&HilbertFunction>,
) -> Result<(MonomialIdeal, usize), GinError> {
    let moved: Vec<Polynomial> = gens.iter().map(|f| g.apply(f).expect("same ring")).collect();
    let config = BuchbergerConfig {
        degree_cap: Some(max_degree),
        hilbert: hilbert.map(|h| h.values().to_vec()),
    };
    let run = buchberger(&moved, &config)?;
    if !run.complete && run.saturation_degree.is_none() {
        return Err(GinError::DegreeCeiling { max_degree });
    }
    let ideal = initial_ideal(&run.basis);
    if let Some(variable) = ideal.missing_pure_power() {
        return Err(GinError::NotArtinian { variable });
    }
    Ok((ideal, run.pairs_reduced))
}

fn monomial_input(gens: &[Polynomial]) -> Option<MonomialIdeal> {
    let nvars = gens.first()?.nvars();
    gens.iter()
        .filter(|f| !f.is_zero())
        .map(|f| if f.is_term() { f.leading_monomial().cloned() } else { None })
        .collect::<Option<Vec<Monomial>>>()
        .map(|ms| MonomialIdeal::from_generators(nvars, ms))
}

/// gin of the ideal generated by homogeneous `gens`.
pub fn compute_gin(gens: &[Polynomial], config: &GinConfig) -> Result<GinResult, GinError> {
    config.validate()?;
    let nvars = gens.first().map(Polynomial::nvars).ok_or(GroebnerError::AllZero)?;
    // the Hilbert function does not depend on coordinates; once known it
    // lets every later trial skip pairs that must reduce to zero
    let mut hilbert = monomial_input(gens).and_then(|m| m.hilbert_function().ok());
    let mut seen: Vec<MonomialIdeal> = Vec::new();
    let mut pairs_reduced = 0;
    for trial in 0..config.max_trials {
        let mut rng = trial_rng(config.seed, trial);
        let g = random_change(&mut rng, nvars, config.coeff_bound)?;
        let (candidate, pairs) = initial_ideal_counted(gens, &g, config.max_degree, hilbert.as_ref())?;
        pairs_reduced += pairs;
        if hilbert.is_none() {
            hilbert = Some(candidate.hilbert_function()?);
        }
        let agreeing = seen.iter().filter(|s| **s == candidate).count() + 1;
        if agreeing >= 2 && candidate.is_strongly_stable() {
            return Ok(GinResult {
                gin: candidate,
                trials_used: trial + 1,
                certificate: GinCertificate {
                    strongly_stable: true,
                    trials_agreeing: agreeing,
                    coefficient_bound: config.coeff_bound,
                    seed: config.seed,
                },
                pairs_reduced,
            });
        }
        seen.push(candidate);
    }
    Err(GinError::TrialsExhausted { trials: config.max_trials })
}

/// Degree-`d` part of in(g . I) by pivot extraction on a spanning set of
/// `(g . I)_d`, independent of the Gröbner engine.
///
/// For monomial generators the dimension of the slice is a monomial count,
/// which spares the exact rank check on redundant spanning rows.
pub fn gin_degree_slice_oracle(gens: &[Polynomial], g: &CoordinateChange, d: u32) -> Result<Vec<Monomial>, GinError> {
    let moved: Vec<Polynomial> = gens.iter().map(|f| g.apply(f).expect("same ring")).collect();
    let known_dim = monomial_input(gens).map(|m| m.monomials_in_degree(d).len());
    let slice = DegreeSlice::spanned_by(&moved, d, known_dim)?;
    Ok(pivot_initial_slice(&slice)?)
}

/// Random dense homogeneous form of degree `d` with integer coefficients in
/// `[-bound, bound]`.
pub fn random_form(rng: &mut impl Rng, nvars: usize, d: u32, bound: u32) -> Polynomial {
    let b = bound as i64;
    Polynomial::from_terms(
        nvars,
        crate::algebra::monomials_of_degree(nvars, d).into_iter().map(|m| (m, Rational::from(rng.gen_range(-b..=b)))),
    )
    .expect("same ring")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn powers(ds: &[u32]) -> Vec<Polynomial> {
        let n = ds.len();
        ds.iter().enumerate().map(|(i, &d)| Polynomial::monomial(Monomial::pure_power(n, i, d))).collect()
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_generators(n, gens.iter().map(|e| Monomial::new(e.to_vec())))
    }

    #[test]
    fn small_gins() {
        let cfg = GinConfig::default();
        let r = compute_gin(&powers(&[2, 2]), &cfg).unwrap();
        assert_eq!(r.gin, ideal(2, &[&[2, 0], &[1, 1], &[0, 3]]));
        assert!(r.certificate.trials_agreeing >= 2);
        let r = compute_gin(&powers(&[2, 2, 2]), &cfg).unwrap();
        assert_eq!(r.gin, ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0], &[1, 0, 2], &[0, 1, 2], &[0, 0, 4]]));
        assert_eq!(r.gin.hilbert_function().unwrap().values(), &[1, 3, 3, 1]);
    }

    #[test]
    fn stable_input_is_fixed() {
        let i = ideal(2, &[&[2, 0], &[1, 1], &[0, 3]]);
        let gens: Vec<Polynomial> = i.generators().iter().cloned().map(Polynomial::monomial).collect();
        assert_eq!(compute_gin(&gens, &GinConfig::default()).unwrap().gin, i);
    }

    #[test]
    fn deterministic() {
        let cfg = GinConfig { seed: 7, ..GinConfig::default() };
        let a = compute_gin(&powers(&[2, 3]), &cfg).unwrap();
        let b = compute_gin(&powers(&[2, 3]), &cfg).unwrap();
        assert_eq!(a, b);
        let mut r1 = trial_rng(7, 3);
        let mut r2 = trial_rng(7, 3);
        assert_eq!(r1.gen::<u64>(), r2.gen::<u64>());
    }

    #[test]
    fn oracle_slices() {
        let g = CoordinateChange::from_integers(&[vec![1, 1], vec![1, -1]]).unwrap();
        let m = |e: &[u32]| Monomial::new(e.to_vec());
        assert_eq!(gin_degree_slice_oracle(&powers(&[2, 2]), &g, 2).unwrap(), vec![m(&[2, 0]), m(&[1, 1])]);
        assert!(gin_degree_slice_oracle(&powers(&[2, 2]), &g, 0).unwrap().is_empty());
    }

    #[test]
    fn failures() {
        let cfg = GinConfig { max_trials: 1, ..GinConfig::default() };
        assert!(matches!(compute_gin(&powers(&[2, 2]), &cfg), Err(GinError::Config(_))));
        let x2 = vec![Polynomial::monomial(Monomial::pure_power(2, 0, 2))];
        assert_eq!(compute_gin(&x2, &GinConfig::default()), Err(GinError::NotArtinian { variable: 1 }));
    }
}
