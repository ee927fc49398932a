use std::cmp::Ordering;
use std::fmt::Write as _;

use serde::Serialize;

use super::{AlgebraError, VariableContext};

/// Exponent vector of a monomial; entry `i` is the exponent of variable `i`.
///
/// `Ord` is graded reverse-lexicographic: higher total degree is greater, and
/// at equal degree `a > b` iff the last nonzero entry of `a - b` is negative.
/// Vectors of different lengths never meet in a well-formed computation; they
/// are ordered by length first so that `Ord` stays total.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Self { exps }
    }

    pub fn one(n: usize) -> Self {
        Self { exps: vec![0; n] }
    }

    pub fn var(n: usize, i: usize) -> Self {
        Self::pure_power(n, i, 1)
    }

    pub fn pure_power(n: usize, i: usize, e: u32) -> Self {
        let mut exps = vec![0; n];
        exps[i] = e;
        Self { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// `self | other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.len() == other.exps.len()
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    /// `self / other` when the division is exact.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// `self * x_to / x_from`, if `x_from` divides `self`.
    pub fn shift(&self, from: usize, to: usize) -> Option<Monomial> {
        if self.exps[from] == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[from] -= 1;
        exps[to] += 1;
        Some(Monomial { exps })
    }

    /// Index of the last variable with a nonzero exponent.
    pub fn last_var(&self) -> Option<usize> {
        self.exps.iter().rposition(|&e| e > 0)
    }

    /// Keeps the first `k` exponents.
    pub fn truncate(&self, k: usize) -> Monomial {
        Monomial { exps: self.exps[..k].to_vec() }
    }

    /// Renders as `x^2*y`, or `1` for the unit monomial.
    pub fn format(&self, ctx: &VariableContext) -> String {
        let mut out = String::new();
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push('*');
            }
            out.push_str(&ctx.names()[i]);
            if e > 1 {
                let _ = write!(out, "^{e}");
            }
        }
        if out.is_empty() {
            out.push('1');
        }
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.exps
            .len()
            .cmp(&other.exps.len())
            .then_with(|| self.degree().cmp(&other.degree()))
            .then_with(|| {
                for (a, b) in self.exps.iter().zip(&other.exps).rev() {
                    if a != b {
                        // smaller exponent in the last differing variable wins
                        return b.cmp(a);
                    }
                }
                Ordering::Equal
            })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub fn revlex_compare(a: &Monomial, b: &Monomial) -> Result<Ordering, AlgebraError> {
    if a.nvars() != b.nvars() {
        return Err(AlgebraError::ContextMismatch { left: a.nvars(), right: b.nvars() });
    }
    Ok(a.cmp(b))
}

/// `C(n + d - 1, d)`.
pub fn num_monomials_of_degree(n: usize, d: u32) -> usize {
    if n == 0 {
        return usize::from(d == 0);
    }
    let (mut num, k) = (1u128, (n - 1) as u128);
    for i in 1..=k {
        num = num * (d as u128 + i) / i;
    }
    num as usize
}

/// All monomials of degree `d` in `n` variables, strictly descending.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(num_monomials_of_degree(n, d));
    let mut exps = vec![0u32; n];
    fill_compositions(&mut exps, 0, d, &mut out);
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

fn fill_compositions(exps: &mut [u32], pos: usize, left: u32, out: &mut Vec<Monomial>) {
    if pos + 1 == exps.len() {
        exps[pos] = left;
        out.push(Monomial::new(exps.to_vec()));
        exps[pos] = 0;
        return;
    }
    for e in 0..=left {
        exps[pos] = e;
        fill_compositions(exps, pos + 1, left - e, out);
    }
    exps[pos] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn revlex_examples() {
        assert_eq!(revlex_compare(&m(&[2, 0, 0]), &m(&[1, 1, 0])), Ok(Ordering::Greater));
        // y^2 z w^2 > x z^2 w^2
        assert_eq!(revlex_compare(&m(&[0, 2, 1, 2]), &m(&[1, 0, 2, 2])), Ok(Ordering::Greater));
        assert_eq!(revlex_compare(&m(&[1, 2]), &m(&[1, 2])), Ok(Ordering::Equal));
        assert_eq!(revlex_compare(&m(&[0, 0, 1]), &m(&[1, 1])), Err(AlgebraError::ContextMismatch { left: 3, right: 2 }));
        // graded: z^2 > x
        assert_eq!(revlex_compare(&m(&[0, 0, 2]), &m(&[1, 0, 0])), Ok(Ordering::Greater));
    }

    #[test]
    fn degree_lists() {
        assert_eq!(monomials_of_degree(2, 1), vec![m(&[1, 0]), m(&[0, 1])]);
        assert_eq!(monomials_of_degree(1, 5), vec![m(&[5])]);
        // brute force: every composition, sorted by pairwise comparison count
        let got = monomials_of_degree(3, 2);
        let expected = [[2, 0, 0], [1, 1, 0], [0, 2, 0], [1, 0, 1], [0, 1, 1], [0, 0, 2]];
        assert_eq!(got, expected.iter().map(|e| m(e)).collect::<Vec<_>>());
        for n in 1..5 {
            for d in 0..6 {
                assert_eq!(monomials_of_degree(n, d).len(), num_monomials_of_degree(n, d));
            }
        }
        assert_eq!(monomials_of_degree(4, 0), vec![m(&[0, 0, 0, 0])]);
    }

    #[test]
    fn divisibility_helpers() {
        let a = m(&[1, 2, 0]);
        let b = m(&[2, 2, 1]);
        assert!(a.divides(&b));
        assert_eq!(b.div(&a), Some(m(&[1, 0, 1])));
        assert_eq!(a.div(&b), None);
        assert_eq!(a.lcm(&m(&[0, 3, 1])), m(&[1, 3, 1]));
        assert_eq!(a.shift(1, 0), Some(m(&[2, 1, 0])));
        assert_eq!(a.shift(2, 0), None);
        let ctx = VariableContext::standard(3).unwrap();
        assert_eq!(a.format(&ctx), "x*y^2");
        assert_eq!(Monomial::one(3).format(&ctx), "1");
    }
}
