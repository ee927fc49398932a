use std::collections::BTreeMap;

use super::{IdealError, MonomialIdeal};
use crate::algebra::Monomial;

/// The numeric description of a strongly stable Artinian ideal by the
/// minimal exponents `f_i`.
///
/// With variables numbered from 1: `f1` is the least `t` with `x_1^t` in
/// the ideal, and for `i >= 2`, `f_i(a)` is the least `t` with
/// `x^a * x_i^t` in the ideal, where `a` is an exponent vector in the first
/// `i - 1` variables. `J_i` is the set of `i`-tuples `a` with `a_1 < f1` and
/// `a_j < f_j(a_1, ..., a_{j-1})`, which are exactly the exponents of
/// monomials in the first `i` variables outside the ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FProfile {
    nvars: usize,
    f1: u32,
    /// `f_values[i - 2]` holds `f_i`, keyed by `(i - 1)`-tuples.
    f_values: Vec<BTreeMap<Vec<u32>, u32>>,
    /// `j_sets[i - 1]` holds `J_i`, grouped by ascending degree and
    /// descending revlex within a degree.
    j_sets: Vec<Vec<Vec<u32>>>,
    socle_degree: u32,
}

/// Least `t` with `alpha * x_var^t` in the ideal (`alpha` has `var`
/// entries). Exists whenever a pure power of `x_var` is a generator.
fn minimal_exponent(ideal: &MonomialIdeal, var: usize, alpha: &[u32]) -> Option<u32> {
    ideal
        .generators()
        .iter()
        .filter(|g| {
            let e = g.exps();
            e[var + 1..].iter().all(|&v| v == 0) && e[..var].iter().zip(alpha).all(|(a, b)| a <= b)
        })
        .map(|g| g.exps()[var])
        .min()
}

fn sort_tuples(set: &mut [Vec<u32>]) {
    set.sort_by(|a, b| {
        let (ma, mb) = (Monomial::new(a.clone()), Monomial::new(b.clone()));
        ma.degree().cmp(&mb.degree()).then_with(|| mb.cmp(&ma))
    });
}

fn axis(len: usize, m: u32) -> Vec<u32> {
    let mut v = vec![0; len];
    if let Some(last) = v.last_mut() {
        *last = m;
    }
    v
}

impl FProfile {
    /// Profile of a strongly stable Artinian ideal.
    pub fn from_ideal(ideal: &MonomialIdeal) -> Result<FProfile, IdealError> {
        ideal.check_artinian()?;
        ideal.check_strongly_stable()?;
        if ideal.is_unit() {
            return Err(IdealError::UnitIdeal);
        }
        let n = ideal.nvars();
        let f1 = minimal_exponent(ideal, 0, &[]).expect("artinian");
        let mut f_values = Vec::new();
        let mut j_sets: Vec<Vec<Vec<u32>>> = Vec::new();
        let mut current: Vec<Vec<u32>> = (0..f1).map(|a| vec![a]).collect();
        let mut socle: u32 = f1 - 1;
        for var in 1..n {
            sort_tuples(&mut current);
            let mut values = BTreeMap::new();
            let mut next = Vec::new();
            for alpha in &current {
                let f = minimal_exponent(ideal, var, alpha).expect("artinian");
                values.insert(alpha.clone(), f);
                for a in 0..f {
                    let mut beta = alpha.clone();
                    beta.push(a);
                    next.push(beta);
                }
            }
            j_sets.push(std::mem::replace(&mut current, next));
            f_values.push(values);
        }
        if n > 1 {
            let last = j_sets.last().unwrap();
            socle = last.iter().map(|a| a.iter().sum::<u32>() + f_values[n - 2][a] - 1).max().unwrap_or(0);
        }
        // axis points up to socle + 1
        for var in 1..n {
            for m in 0..=socle + 1 {
                let key = axis(var, m);
                let f = minimal_exponent(ideal, var, &key).expect("artinian");
                f_values[var - 1].insert(key, f);
            }
        }
        Ok(FProfile { nvars: n, f1, f_values, j_sets, socle_degree: socle })
    }

    /// Assembles a profile from raw parts, checking that the index sets
    /// follow from `f1` and the stored values.
    pub fn from_parts(
        nvars: usize,
        f1: u32,
        f_values: Vec<BTreeMap<Vec<u32>, u32>>,
        socle_degree: u32,
    ) -> Result<FProfile, IdealError> {
        let bad = |msg: String| Err(IdealError::InconsistentProfile(msg));
        if nvars == 0 || f1 == 0 {
            return bad("f1 must be positive".into());
        }
        if f_values.len() != nvars - 1 {
            return bad(format!("expected {} value tables, found {}", nvars - 1, f_values.len()));
        }
        let mut j_sets = Vec::new();
        let mut current: Vec<Vec<u32>> = (0..f1).map(|a| vec![a]).collect();
        for (k, table) in f_values.iter().enumerate() {
            sort_tuples(&mut current);
            let mut next = Vec::new();
            for alpha in &current {
                let Some(&f) = table.get(alpha) else {
                    return bad(format!("f_{} missing at {:?}", k + 2, alpha));
                };
                if f == 0 {
                    return bad(format!("f_{} vanishes at {:?}, a point of the index set", k + 2, alpha));
                }
                next.extend((0..f).map(|a| {
                    let mut beta = alpha.clone();
                    beta.push(a);
                    beta
                }));
            }
            j_sets.push(std::mem::replace(&mut current, next));
        }
        Ok(FProfile { nvars, f1, f_values, j_sets, socle_degree })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn f1(&self) -> u32 {
        self.f1
    }

    /// `f_i(alpha)` for `2 <= i <= n`, if stored.
    pub fn f(&self, i: usize, alpha: &[u32]) -> Option<u32> {
        if i < 2 || i > self.nvars || alpha.len() != i - 1 {
            return None;
        }
        self.f_values[i - 2].get(alpha).copied()
    }

    /// `f_i(0, ..., 0, m)`.
    pub fn f_axis(&self, i: usize, m: u32) -> Option<u32> {
        self.f(i, &axis(i - 1, m))
    }

    /// All stored values of `f_i`.
    pub fn f_table(&self, i: usize) -> &BTreeMap<Vec<u32>, u32> {
        &self.f_values[i - 2]
    }

    /// `J_i` for `1 <= i <= n - 1`, by ascending degree and descending revlex
    /// within a degree.
    pub fn j_set(&self, i: usize) -> &[Vec<u32>] {
        &self.j_sets[i - 1]
    }

    pub fn socle_degree(&self) -> u32 {
        self.socle_degree
    }

    /// Minimal generators: `x_1^f1` and `x^a * x_i^{f_i(a)}` for `a` in
    /// `J_{i-1}`.
    pub fn reconstruct(&self) -> Result<MonomialIdeal, IdealError> {
        let n = self.nvars;
        let mut gens = vec![Monomial::pure_power(n, 0, self.f1)];
        for i in 2..=n {
            for alpha in self.j_set(i - 1) {
                let f = self
                    .f(i, alpha)
                    .ok_or_else(|| IdealError::InconsistentProfile(format!("f_{i} missing at {alpha:?}")))?;
                let mut e = alpha.clone();
                e.push(f);
                e.resize(n, 0);
                gens.push(Monomial::new(e));
            }
        }
        Ok(MonomialIdeal::from_generators(n, gens))
    }
}

impl MonomialIdeal {
    /// See [`FProfile::from_ideal`].
    pub fn f_profile(&self) -> Result<FProfile, IdealError> {
        FProfile::from_ideal(self)
    }
}
