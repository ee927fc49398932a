//! Monomial ideals: minimal generators, membership, strong stability,
//! Hilbert functions and restriction to leading variables.

mod profile;

pub use profile::FProfile;

use std::collections::{BTreeSet, HashSet};

use thiserror::Error;

use crate::algebra::{monomials_of_degree, Monomial, VariableContext};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("ideal is not Artinian: no pure power of variable {variable} among the generators")]
    NotArtinian { variable: usize },
    #[error("ideal is not strongly stable: {swapped:?} is missing (from generator {generator:?})")]
    NotStronglyStable { generator: Monomial, swapped: Monomial },
    #[error("restriction index {index} out of range 1..={max}")]
    RestrictionOutOfRange { index: usize, max: usize },
    #[error("generator with {found} variables in a ring with {expected}")]
    ContextMismatch { expected: usize, found: usize },
    #[error("the unit ideal has no profile")]
    UnitIdeal,
    #[error("inconsistent profile: {0}")]
    InconsistentProfile(String),
}

/// A monomial ideal kept as its minimal generating antichain, sorted by
/// ascending degree and descending revlex order within a degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

/// Removes every monomial divisible by another one.
pub fn minimalize(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> MonomialIdeal {
    MonomialIdeal::from_generators(nvars, gens)
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, discarding redundant ones.
    /// All monomials must have `nvars` entries.
    pub fn from_generators(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let mut all: Vec<Monomial> = gens.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        assert!(all.iter().all(|m| m.nvars() == nvars), "generator context");
        // ascending order: a divisor never comes after its multiples
        let mut kept: Vec<Monomial> = Vec::with_capacity(all.len());
        for m in all.drain(..) {
            if !kept.iter().any(|k| k.divides(&m)) {
                kept.push(m);
            }
        }
        kept.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
        Self { nvars, gens: kept }
    }

    /// Like [`from_generators`](Self::from_generators), but reports a context
    /// mismatch instead of panicking.
    pub fn try_from_generators(nvars: usize, gens: Vec<Monomial>) -> Result<Self, IdealError> {
        if let Some(m) = gens.iter().find(|m| m.nvars() != nvars) {
            return Err(IdealError::ContextMismatch { expected: nvars, found: m.nvars() });
        }
        Ok(Self::from_generators(nvars, gens))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Minimal generators by degree, descending within a degree.
    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// First variable with no pure power among the generators.
    pub fn missing_pure_power(&self) -> Option<usize> {
        (0..self.nvars).find(|&i| {
            !self
                .gens
                .iter()
                .any(|g| g.exps().iter().enumerate().all(|(j, &e)| (j == i) == (e > 0)) || g.is_one())
        })
    }

    pub fn is_artinian(&self) -> bool {
        self.missing_pure_power().is_none()
    }

    pub fn check_artinian(&self) -> Result<(), IdealError> {
        match self.missing_pure_power() {
            Some(variable) => Err(IdealError::NotArtinian { variable }),
            None => Ok(()),
        }
    }

    /// Every swap `m * x_i / x_j` (i < j) of a minimal generator `m` stays in
    /// the ideal. The first missing swap is returned as the error.
    pub fn check_strongly_stable(&self) -> Result<(), IdealError> {
        for g in &self.gens {
            for j in 1..self.nvars {
                if g.exps()[j] == 0 {
                    continue;
                }
                for i in 0..j {
                    let swapped = g.shift(j, i).unwrap();
                    if !self.contains(&swapped) {
                        return Err(IdealError::NotStronglyStable { generator: g.clone(), swapped });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_strongly_stable(&self) -> bool {
        self.check_strongly_stable().is_ok()
    }

    /// Degree-`d` monomials of the ideal, descending.
    pub fn monomials_in_degree(&self, d: u32) -> Vec<Monomial> {
        monomials_of_degree(self.nvars, d).into_iter().filter(|m| self.contains(m)).collect()
    }

    /// Degree-`d` monomials outside the ideal, descending.
    pub fn standard_monomials(&self, d: u32) -> Vec<Monomial> {
        monomials_of_degree(self.nvars, d).into_iter().filter(|m| !self.contains(m)).collect()
    }

    /// Quotient dimensions per degree, up to the socle degree.
    pub fn hilbert_function(&self) -> Result<HilbertFunction, IdealError> {
        self.check_artinian()?;
        let mut values = Vec::new();
        for d in 0.. {
            let count = monomials_of_degree(self.nvars, d).iter().filter(|m| !self.contains(m)).count();
            // standard monomials are closed under division, so a gap never closes
            if count == 0 {
                break;
            }
            values.push(count as u64);
        }
        Ok(HilbertFunction { values })
    }

    /// Sets every variable after the first `i + 1` to zero.
    pub fn restrict_to_first(&self, i: usize) -> Result<MonomialIdeal, IdealError> {
        let max = self.nvars.saturating_sub(1);
        if i < 1 || i > max {
            return Err(IdealError::RestrictionOutOfRange { index: i, max });
        }
        let k = i + 1;
        Ok(MonomialIdeal::from_generators(
            k,
            self.gens.iter().filter(|g| g.exps()[k..].iter().all(|&e| e == 0)).map(|g| g.truncate(k)),
        ))
    }

    /// The smallest strongly stable ideal containing `gens`.
    pub fn borel_closure(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> MonomialIdeal {
        let mut seen: HashSet<Monomial> = HashSet::new();
        let mut stack: Vec<Monomial> = gens.into_iter().collect();
        while let Some(m) = stack.pop() {
            if !seen.insert(m.clone()) {
                continue;
            }
            for j in 1..nvars {
                for i in 0..j {
                    if let Some(s) = m.shift(j, i) {
                        if !seen.contains(&s) {
                            stack.push(s);
                        }
                    }
                }
            }
        }
        MonomialIdeal::from_generators(nvars, seen)
    }

    /// Generators joined by `", "`, e.g. `x^2, x*y, y^3`.
    pub fn format(&self, ctx: &VariableContext) -> String {
        self.gens.iter().map(|g| g.format(ctx)).collect::<Vec<_>>().join(", ")
    }
}

/// `values[d]` is the dimension of the quotient in degree `d`; zero past
/// the end of the list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HilbertFunction {
    values: Vec<u64>,
}

impl HilbertFunction {
    /// Trailing zeros are trimmed.
    pub fn new(mut values: Vec<u64>) -> Self {
        while values.last() == Some(&0) {
            values.pop();
        }
        Self { values }
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn get(&self, d: usize) -> u64 {
        self.values.get(d).copied().unwrap_or(0)
    }

    /// Last degree with a nonzero value.
    pub fn socle_degree(&self) -> Option<u32> {
        self.values.len().checked_sub(1).map(|t| t as u32)
    }

    pub fn total(&self) -> u64 {
        self.values.iter().sum()
    }

    /// `h(i) = h(t - i)` for all `i`.
    pub fn is_symmetric(&self) -> bool {
        self.values.iter().eq(self.values.iter().rev())
    }
}
