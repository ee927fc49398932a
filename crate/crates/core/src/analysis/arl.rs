use serde::Serialize;

use super::Verdict;
use crate::algebra::{monomials_of_degree, Monomial};
use crate::ideal::{FProfile, MonomialIdeal};

/// A minimal generator and a greater monomial of the same degree that is
/// missing from the ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RevlexGap {
    pub generator: Monomial,
    pub monomial: Monomial,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ArlCondition {
    /// `f_{i+1}(0, ..., 0, |alpha| + 1) + 1 <= f_{i+1}(alpha)` fails.
    Axis { alpha: Vec<u32> },
    /// `alpha < beta` of equal degree with `f_{i+1}(beta) > f_{i+1}(alpha)`.
    Monotone { alpha: Vec<u32>, beta: Vec<u32> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArlViolation {
    /// Length of the index tuples, `1 <= level <= n - 1`.
    pub level: usize,
    pub condition: ArlCondition,
}

/// Checks that for every degree carrying minimal generators, all monomials
/// above the least such generator lie in the ideal.
///
/// Degrees are scanned upwards and monomials of a degree downwards, so the
/// witness is the greatest missing monomial in the lowest failing degree.
pub fn arl_check_direct(ideal: &MonomialIdeal) -> Verdict<RevlexGap> {
    let gens = ideal.generators();
    let mut k = 0;
    while k < gens.len() {
        let d = gens[k].degree();
        let mut last = k;
        while last + 1 < gens.len() && gens[last + 1].degree() == d {
            last += 1;
        }
        // generators are descending within a degree
        let least = &gens[last];
        for m in monomials_of_degree(ideal.nvars(), d) {
            if &m <= least {
                break;
            }
            if !ideal.contains(&m) {
                return Verdict::fail(RevlexGap { generator: least.clone(), monomial: m });
            }
        }
        k = last + 1;
    }
    Verdict::pass()
}

/// The equal-degree monotonicity condition at one level: for `alpha < beta`
/// in `J_level` with `|alpha| = |beta|`, `f_{level+1}(beta) <= f_{level+1}(alpha)`.
///
/// Pairs are visited by ascending degree, with `beta` running down from
/// the greatest tuple and `alpha` over the tuples below it.
pub fn equal_degree_monotone(p: &FProfile, level: usize) -> Option<ArlCondition> {
    let set = p.j_set(level);
    let f = |a: &Vec<u32>| p.f(level + 1, a).expect("profile covers its index sets");
    let mut start = 0;
    while start < set.len() {
        let deg: u32 = set[start].iter().sum();
        let end = start + set[start..].iter().take_while(|a| a.iter().sum::<u32>() == deg).count();
        // each group is sorted descending
        let group = &set[start..end];
        for (b, beta) in group.iter().enumerate() {
            for alpha in &group[b + 1..] {
                if f(beta) > f(alpha) {
                    return Some(ArlCondition::Monotone { alpha: alpha.clone(), beta: beta.clone() });
                }
            }
        }
        start = end;
    }
    None
}

pub(crate) fn axis_condition(p: &FProfile, level: usize) -> Option<ArlCondition> {
    for alpha in p.j_set(level) {
        let size: u32 = alpha.iter().sum();
        let on_axis = p.f_axis(level + 1, size + 1).expect("axis values stored through socle + 1");
        let value = p.f(level + 1, alpha).expect("profile covers its index sets");
        if on_axis + 1 > value {
            return Some(ArlCondition::Axis { alpha: alpha.clone() });
        }
    }
    None
}

/// Checks both profile conditions level by level; at each level the axis
/// condition is checked before monotonicity.
pub fn arl_check_profile(p: &FProfile) -> Verdict<ArlViolation> {
    for level in 1..p.nvars() {
        if let Some(condition) = axis_condition(p, level).or_else(|| equal_degree_monotone(p, level)) {
            return Verdict::fail(ArlViolation { level, condition });
        }
    }
    Verdict::pass()
}
