//! Gröbner bases in graded reverse-lexicographic order.
//!
//! The engine works on homogeneous input, degree by degree, with primitive
//! integer polynomials internally; reduced bases are returned monic over Q.
//! A per-degree pivot extraction (`pivot_initial_slice`) gives an
//! independent route to the same initial ideals.

use std::collections::{BTreeMap, HashMap};

use rug::{Assign, Integer, Rational};
use thiserror::Error;

use crate::algebra::{monomials_of_degree, num_monomials_of_degree, Monomial, Polynomial};
use crate::ideal::MonomialIdeal;
use crate::linalg::{is_zero, Echelon, ModEchelon};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("no nonzero generator")]
    AllZero,
    #[error("generator {index} is not homogeneous")]
    NotHomogeneous { index: usize },
    #[error("generators live in different rings")]
    ContextMismatch,
    #[error("slice element {index} is not homogeneous of degree {degree}")]
    SliceDegree { index: usize, degree: u32 },
    #[error("slice basis is linearly dependent (element {index})")]
    DependentBasis { index: usize },
}

/// A reduced Gröbner basis: monic, sorted by descending leading monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    nvars: usize,
    generators: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.generators.iter().filter_map(|g| g.leading_monomial().cloned()).collect()
    }

    /// Ideal membership by reduction to zero.
    pub fn contains(&self, p: &Polynomial) -> bool {
        normal_form(p, &self.generators).is_zero()
    }
}

/// A basis of one graded piece of an ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSlice {
    nvars: usize,
    degree: u32,
    basis: Vec<Polynomial>,
}

impl DegreeSlice {
    /// Wraps a basis; elements must be homogeneous of `degree`. Linear
    /// independence is checked by [`pivot_initial_slice`].
    pub fn new(nvars: usize, degree: u32, basis: Vec<Polynomial>) -> Result<Self, GroebnerError> {
        for (index, b) in basis.iter().enumerate() {
            if b.nvars() != nvars {
                return Err(GroebnerError::ContextMismatch);
            }
            if b.is_zero() || !b.is_homogeneous() || b.total_degree() != Some(degree) {
                return Err(GroebnerError::SliceDegree { index, degree });
            }
        }
        Ok(Self { nvars, degree, basis })
    }

    /// The degree-`d` piece of the ideal generated by `gens`, spanned by
    /// `m * f` over generators `f` and monomials `m` of complementary degree,
    /// then filtered down to an independent subset.
    ///
    /// `known_dim` is the dimension of the piece when it is known from an
    /// independent source (it is invariant under coordinate changes); once
    /// that many independent rows are found the rest are skipped.
    pub fn spanned_by(gens: &[Polynomial], degree: u32, known_dim: Option<usize>) -> Result<Self, GroebnerError> {
        let nvars = check_homogeneous(gens)?;
        let columns = monomials_of_degree(nvars, degree);
        let index = column_index(&columns);
        let mut candidates: Vec<Polynomial> = Vec::new();
        for f in gens.iter().filter(|f| !f.is_zero()) {
            let fd = f.total_degree().unwrap();
            if fd > degree {
                continue;
            }
            for m in monomials_of_degree(nvars, degree - fd) {
                candidates.push(f.mul_monomial(&m));
            }
        }
        let rows: Vec<Vec<Integer>> = candidates.iter().map(|p| integer_row(p, &index, columns.len())).collect();
        let target = known_dim.unwrap_or(columns.len()).min(columns.len());

        // rows independent mod p are independent over Q
        let mut screen = ModEchelon::new(columns.len());
        let mut chosen = Vec::new();
        let mut rest = Vec::new();
        for (i, r) in rows.iter().enumerate() {
            if screen.rank() < target && screen.insert(r) {
                chosen.push(i);
            } else {
                rest.push(i);
            }
        }
        if chosen.len() < target {
            let mut exact = Echelon::new(columns.len());
            for &i in &chosen {
                exact.insert(rows[i].clone());
            }
            for i in rest {
                if exact.rank() == target {
                    break;
                }
                if exact.insert(rows[i].clone()) {
                    chosen.push(i);
                }
            }
        }
        chosen.sort_unstable();
        let basis = chosen.into_iter().map(|i| candidates[i].clone()).collect();
        Ok(Self { nvars, degree, basis })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

fn column_index(columns: &[Monomial]) -> HashMap<&Monomial, usize> {
    columns.iter().enumerate().map(|(i, m)| (m, i)).collect()
}

/// Clears denominators of a homogeneous polynomial into a dense row.
fn integer_row(p: &Polynomial, index: &HashMap<&Monomial, usize>, ncols: usize) -> Vec<Integer> {
    let mut den = Integer::from(1);
    for (_, c) in p.terms() {
        den.lcm_mut(c.denom());
    }
    let mut row = vec![Integer::new(); ncols];
    for (m, c) in p.terms() {
        let scaled = Rational::from(c * &den);
        row[index[m]] = scaled.into_numer_denom().0;
    }
    row
}

/// The revlex-greatest set of monomials on which the slice's coefficient
/// matrix is invertible, in descending order.
///
/// Equivalently the pivot columns of row reduction with columns sorted
/// descending. When the screen prime already shows full column rank the
/// answer is every monomial of the degree (a nonzero minor mod p is nonzero
/// over Q); otherwise the pivots come from exact elimination.
pub fn pivot_initial_slice(slice: &DegreeSlice) -> Result<Vec<Monomial>, GroebnerError> {
    let columns = monomials_of_degree(slice.nvars, slice.degree);
    let index = column_index(&columns);
    let rows: Vec<Vec<Integer>> = slice.basis.iter().map(|p| integer_row(p, &index, columns.len())).collect();

    let mut screen = ModEchelon::new(columns.len());
    let mut screened_independent = true;
    for r in &rows {
        screened_independent &= screen.insert(r);
    }
    if screened_independent && rows.len() == columns.len() {
        return Ok(columns);
    }
    let mut exact = Echelon::new(columns.len());
    for (i, r) in rows.into_iter().enumerate() {
        if !exact.insert(r) {
            return Err(GroebnerError::DependentBasis { index: i });
        }
    }
    Ok(exact.pivots().into_iter().map(|c| columns[c].clone()).collect())
}

/// Remainder of `p` modulo `basis` by the division algorithm, always
/// reducing the greatest reducible monomial first with the first basis
/// element whose leading monomial divides it.
pub fn normal_form(p: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let leads: Vec<(&Monomial, &Rational)> = basis.iter().filter_map(|b| b.leading_term()).collect();
    let reducers: Vec<&Polynomial> = basis.iter().filter(|b| !b.is_zero()).collect();
    let mut work = p.clone();
    let mut rem = Polynomial::zero(p.nvars());
    while let Some((m, c)) = work.pop_leading_term() {
        match leads.iter().position(|(lm, _)| lm.divides(&m)) {
            Some(k) => {
                let (lm, lc) = leads[k];
                let u = m.div(lm).unwrap();
                let factor = -Rational::from(&c / lc);
                // the leading term of reducer * factor cancels `c * m`
                let mut tail = reducers[k].clone();
                tail.pop_leading_term();
                work.add_scaled_shifted(&tail, &factor, &u);
            }
            None => rem.add_term(m, c),
        }
    }
    rem
}

fn check_homogeneous(gens: &[Polynomial]) -> Result<usize, GroebnerError> {
    let nvars = gens.first().map(Polynomial::nvars).ok_or(GroebnerError::AllZero)?;
    for (index, g) in gens.iter().enumerate() {
        if g.nvars() != nvars {
            return Err(GroebnerError::ContextMismatch);
        }
        if !g.is_homogeneous() {
            return Err(GroebnerError::NotHomogeneous { index });
        }
    }
    Ok(nvars)
}

/// Tuning knobs for [`buchberger`].
#[derive(Debug, Clone, Default)]
pub struct BuchbergerConfig {
    /// Stop after this degree; the result is then a truncated basis.
    pub degree_cap: Option<u32>,
    /// `hilbert[d]` = dim of the degree-`d` piece of the quotient, when known.
    /// Pairs of a degree whose leading monomials already reach the matching
    /// count are skipped: they can only reduce to zero.
    pub hilbert: Option<Vec<u64>>,
}

#[derive(Debug, Clone)]
pub struct BuchbergerRun {
    pub basis: GroebnerBasis,
    /// False when the degree cap cut the computation short.
    pub complete: bool,
    /// First degree in which every monomial is a leading monomial.
    pub saturation_degree: Option<u32>,
    pub pairs_reduced: usize,
    pub pairs_skipped: usize,
}

/// Reduced Gröbner basis of the ideal generated by homogeneous `gens`.
pub fn buchberger_reduced(gens: &[Polynomial]) -> Result<GroebnerBasis, GroebnerError> {
    buchberger(gens, &BuchbergerConfig::default()).map(|r| r.basis)
}

/// Homogeneous Buchberger algorithm: normal selection strategy, pairs
/// pruned with the Gebauer–Möller criteria (which include the coprime
/// leading monomial criterion).
pub fn buchberger(gens: &[Polynomial], config: &BuchbergerConfig) -> Result<BuchbergerRun, GroebnerError> {
    let nvars = check_homogeneous(gens)?;
    let mut inputs: Vec<IntPoly> = gens.iter().filter(|g| !g.is_zero()).map(IntPoly::from_rational).collect();
    if inputs.is_empty() {
        return Err(GroebnerError::AllZero);
    }
    inputs.sort_by_key(IntPoly::degree);
    let mut inputs = std::collections::VecDeque::from(inputs);

    let mut state = State { nvars, basis: Vec::new(), pairs: Vec::new() };
    let mut complete = true;
    let mut saturation_degree = None;
    let (mut pairs_reduced, mut pairs_skipped) = (0, 0);

    loop {
        let next_input = inputs.front().map(IntPoly::degree);
        let next_pair = state.pairs.iter().map(|p| p.degree).min();
        let Some(d) = next_input.into_iter().chain(next_pair).min() else {
            break;
        };
        if config.degree_cap.is_some_and(|cap| d > cap) {
            complete = false;
            break;
        }
        let target = config
            .hilbert
            .as_ref()
            .map(|h| num_monomials_of_degree(nvars, d) as u64 - h.get(d as usize).copied().unwrap_or(0));
        let saturated = |state: &State| target.is_some_and(|t| state.leads_in_degree(d) as u64 >= t);

        while inputs.front().is_some_and(|f| f.degree() == d) {
            let f = inputs.pop_front().unwrap();
            if saturated(&state) {
                continue;
            }
            let r = state.reduce(f, None);
            if !r.is_zero() {
                state.insert(r);
            }
        }
        while let Some(k) = state.next_pair(d) {
            let pair = state.pairs.swap_remove(k);
            if saturated(&state) {
                pairs_skipped += 1;
                continue;
            }
            pairs_reduced += 1;
            let s = state.spoly(pair.i, pair.j, &pair.lcm);
            let r = state.reduce(s, None);
            if !r.is_zero() {
                state.insert(r);
            }
        }
        if state.leads_in_degree(d) == num_monomials_of_degree(nvars, d) {
            // every later S-polynomial and generator reduces to zero
            saturation_degree = Some(d);
            pairs_skipped += state.pairs.len();
            break;
        }
    }

    let basis = state.into_reduced();
    Ok(BuchbergerRun { basis, complete, saturation_degree, pairs_reduced, pairs_skipped })
}

/// Monomial ideal of leading monomials.
pub fn initial_ideal(gb: &GroebnerBasis) -> MonomialIdeal {
    MonomialIdeal::from_generators(gb.nvars, gb.leading_monomials())
}

// ---------------------------------------------------------------------------
// integer-coefficient internals

/// Primitive integer polynomial, terms in descending revlex order, positive
/// leading coefficient.
#[derive(Debug, Clone)]
struct IntPoly {
    terms: Vec<(Monomial, Integer)>,
}

impl IntPoly {
    fn from_rational(p: &Polynomial) -> IntPoly {
        let mut den = Integer::from(1);
        for (_, c) in p.terms() {
            den.lcm_mut(c.denom());
        }
        let terms = p
            .terms()
            .rev()
            .map(|(m, c)| (m.clone(), Rational::from(c * &den).into_numer_denom().0))
            .collect();
        let mut out = IntPoly { terms };
        out.normalize();
        out
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn degree(&self) -> u32 {
        self.terms.first().map_or(0, |t| t.0.degree())
    }

    fn normalize(&mut self) {
        let mut g = Integer::new();
        for (_, c) in &self.terms {
            g.gcd_mut(c);
            if g == 1 {
                break;
            }
        }
        if g != 1 && !is_zero(&g) {
            for (_, c) in self.terms.iter_mut() {
                c.div_exact_mut(&g);
            }
        }
        if self.terms.first().is_some_and(|t| t.1.cmp0().is_lt()) {
            for (_, c) in self.terms.iter_mut() {
                *c = Integer::from(-&*c);
            }
        }
    }

    fn to_monic(&self, nvars: usize) -> Polynomial {
        let lc = &self.terms[0].1;
        Polynomial::from_terms(nvars, self.terms.iter().map(|(m, c)| (m.clone(), Rational::from((c, lc)))))
            .expect("same context")
    }
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    degree: u32,
}

struct State {
    nvars: usize,
    basis: Vec<IntPoly>,
    pairs: Vec<Pair>,
}

impl State {
    fn leads_in_degree(&self, d: u32) -> usize {
        let leads: Vec<&Monomial> = self.basis.iter().map(IntPoly::lm).filter(|m| m.degree() <= d).collect();
        if leads.is_empty() {
            return 0;
        }
        monomials_of_degree(self.nvars, d)
            .iter()
            .filter(|m| leads.iter().any(|l| l.divides(m)))
            .count()
    }

    /// Index of the pair of degree `d` with the smallest lcm.
    fn next_pair(&self, d: u32) -> Option<usize> {
        self.pairs
            .iter()
            .enumerate()
            .filter(|(_, p)| p.degree == d)
            .min_by(|(_, a), (_, b)| a.lcm.cmp(&b.lcm).then((a.i, a.j).cmp(&(b.i, b.j))))
            .map(|(k, _)| k)
    }

    fn spoly(&self, i: usize, j: usize, lcm: &Monomial) -> IntPoly {
        let (f, g) = (&self.basis[i], &self.basis[j]);
        let (cf, cg) = (&f.terms[0].1, &g.terms[0].1);
        let gcd = Integer::from(cf.gcd_ref(cg));
        let af = Integer::from(cg.div_exact_ref(&gcd));
        let ag = Integer::from(cf.div_exact_ref(&gcd));
        let uf = lcm.div(f.lm()).unwrap();
        let ug = lcm.div(g.lm()).unwrap();
        let mut acc: BTreeMap<Monomial, Integer> = BTreeMap::new();
        for (m, c) in &f.terms[1..] {
            acc.insert(m.mul(&uf), Integer::from(c * &af));
        }
        for (m, c) in &g.terms[1..] {
            let key = m.mul(&ug);
            let v = acc.entry(key).or_default();
            *v -= Integer::from(c * &ag);
        }
        acc.retain(|_, c| !is_zero(c));
        IntPoly { terms: acc.into_iter().rev().collect() }
    }

    /// Full reduction of `p` by the current basis, skipping element `skip`.
    fn reduce(&self, p: IntPoly, skip: Option<usize>) -> IntPoly {
        let mut todo: BTreeMap<Monomial, Integer> = p.terms.into_iter().collect();
        let mut rem: Vec<(Monomial, Integer)> = Vec::new();
        let mut tmp = Integer::new();
        while let Some((m, c)) = todo.pop_last() {
            let reducer = self
                .basis
                .iter()
                .enumerate()
                .find(|(k, h)| Some(*k) != skip && h.lm().divides(&m))
                .map(|(_, h)| h);
            let Some(h) = reducer else {
                rem.push((m, c));
                continue;
            };
            let u = m.div(h.lm()).unwrap();
            let lc = &h.terms[0].1;
            let g = Integer::from(lc.gcd_ref(&c));
            let scale = Integer::from(lc.div_exact_ref(&g));
            let factor = Integer::from(c.div_exact_ref(&g));
            if scale != 1 {
                for (_, v) in rem.iter_mut() {
                    *v *= &scale;
                }
                for v in todo.values_mut() {
                    *v *= &scale;
                }
            }
            for (hm, hc) in &h.terms[1..] {
                tmp.assign(&factor * hc);
                let key = hm.mul(&u);
                match todo.entry(key) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(Integer::from(-&tmp));
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() -= &tmp;
                        if is_zero(e.get()) {
                            e.remove();
                        }
                    }
                }
            }
            if scale != 1 {
                remove_content(&mut rem, &mut todo);
            }
        }
        let mut out = IntPoly { terms: rem };
        out.normalize();
        out
    }

    fn insert(&mut self, h: IntPoly) {
        let hi = self.basis.len();
        let lm_h = h.lm().clone();
        self.basis.push(h);

        // Gebauer–Möller update
        let mut cands: Vec<(usize, Monomial, bool)> = (0..hi)
            .map(|g| {
                let lm_g = self.basis[g].lm();
                (g, lm_h.lcm(lm_g), lm_h.is_coprime(lm_g))
            })
            .collect();
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        while let Some((g1, l1, coprime)) = cands.pop() {
            let dominated = cands.iter().chain(kept.iter()).any(|(_, l2, _)| l2.divides(&l1));
            if coprime || !dominated {
                kept.push((g1, l1, coprime));
            }
        }
        self.pairs.retain(|p| {
            let li = lm_h.lcm(self.basis[p.i].lm());
            let lj = lm_h.lcm(self.basis[p.j].lm());
            !(lm_h.divides(&p.lcm) && li != p.lcm && lj != p.lcm)
        });
        for (g, l, coprime) in kept {
            if !coprime {
                let degree = l.degree();
                self.pairs.push(Pair { i: g, j: hi, lcm: l, degree });
            }
        }
    }

    fn into_reduced(self) -> GroebnerBasis {
        // drop non-minimal leading monomials, then tail-reduce each element
        let n = self.basis.len();
        let minimal: Vec<bool> = (0..n)
            .map(|i| {
                let lm = self.basis[i].lm();
                !(0..n).any(|j| {
                    j != i && self.basis[j].lm().divides(lm) && (self.basis[j].lm() != lm || j < i)
                })
            })
            .collect();
        let kept = State {
            nvars: self.nvars,
            basis: self.basis.into_iter().zip(&minimal).filter(|(_, &k)| k).map(|(b, _)| b).collect(),
            pairs: Vec::new(),
        };
        let mut generators: Vec<Polynomial> = (0..kept.basis.len())
            .map(|i| kept.reduce(kept.basis[i].clone(), Some(i)).to_monic(kept.nvars))
            .collect();
        generators.sort_by(|a, b| b.leading_monomial().cmp(&a.leading_monomial()));
        GroebnerBasis { nvars: kept.nvars, generators }
    }
}

fn remove_content(rem: &mut [(Monomial, Integer)], todo: &mut BTreeMap<Monomial, Integer>) {
    let mut g = Integer::new();
    for v in rem.iter().map(|t| &t.1).chain(todo.values()) {
        g.gcd_mut(v);
        if g == 1 {
            return;
        }
    }
    if is_zero(&g) {
        return;
    }
    for (_, v) in rem.iter_mut() {
        v.div_exact_mut(&g);
    }
    for v in todo.values_mut() {
        v.div_exact_mut(&g);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::CoordinateChange;

    fn p(terms: &[(i64, &[u32])]) -> Polynomial {
        Polynomial::from_int_terms(terms[0].1.len(), terms).unwrap()
    }

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn normal_form_examples() {
        let f = normal_form(&p(&[(1, &[2, 0])]), &[p(&[(1, &[2, 0]), (-1, &[0, 2])])]);
        assert_eq!(f, p(&[(1, &[0, 2])]));
        let y3 = p(&[(1, &[0, 3, 0])]);
        let basis = [p(&[(1, &[2, 0, 0]), (-1, &[0, 1, 1])]), p(&[(1, &[1, 1, 0])])];
        assert_eq!(normal_form(&y3, &basis), y3);
        let basis = [p(&[(1, &[2, 0, 0]), (-1, &[0, 0, 2])]), p(&[(1, &[0, 2, 0])])];
        assert_eq!(normal_form(&p(&[(1, &[2, 1, 0])]), &basis), p(&[(1, &[0, 1, 2])]));
        assert_eq!(normal_form(&y3, &[]), y3);
    }

    #[test]
    fn buchberger_examples() {
        let gb = buchberger_reduced(&[p(&[(1, &[2, 0])]), p(&[(1, &[0, 2])])]).unwrap();
        assert_eq!(gb.generators(), &[p(&[(1, &[2, 0])]), p(&[(1, &[0, 2])])]);

        // x - y, y - z: linear elimination gives x - z, y - z
        let gb = buchberger_reduced(&[p(&[(1, &[1, 0, 0]), (-1, &[0, 1, 0])]), p(&[(1, &[0, 1, 0]), (-1, &[0, 0, 1])])])
            .unwrap();
        assert_eq!(
            gb.generators(),
            &[p(&[(1, &[1, 0, 0]), (-1, &[0, 0, 1])]), p(&[(1, &[0, 1, 0]), (-1, &[0, 0, 1])])]
        );
        assert_eq!(initial_ideal(&gb).generators(), &[m(&[1, 0, 0]), m(&[0, 1, 0])]);

        let f = p(&[(2, &[1, 1]), (3, &[0, 2])]);
        assert_eq!(buchberger_reduced(&[f.clone(), f.clone()]).unwrap(), buchberger_reduced(&[f]).unwrap());
        assert_eq!(buchberger_reduced(&[Polynomial::zero(2)]), Err(GroebnerError::AllZero));
        assert_eq!(
            buchberger_reduced(&[p(&[(1, &[1, 0]), (1, &[0, 0])])]),
            Err(GroebnerError::NotHomogeneous { index: 0 })
        );
    }

    #[test]
    fn generic_change_of_two_squares() {
        // x -> x + y, y -> x - y
        let g = CoordinateChange::from_integers(&[vec![1, 1], vec![1, -1]]).unwrap();
        let gens: Vec<Polynomial> =
            [p(&[(1, &[2, 0])]), p(&[(1, &[0, 2])])].iter().map(|f| g.apply(f).unwrap()).collect();
        let gb = buchberger_reduced(&gens).unwrap();
        assert_eq!(initial_ideal(&gb).generators(), &[m(&[2, 0]), m(&[1, 1]), m(&[0, 3])]);

        // the 2x3 slice matrix in degree 2 has pivots x^2, xy
        let slice = DegreeSlice::new(2, 2, gens.clone()).unwrap();
        assert_eq!(pivot_initial_slice(&slice).unwrap(), vec![m(&[2, 0]), m(&[1, 1])]);
        let slice3 = DegreeSlice::spanned_by(&gens, 3, None).unwrap();
        // (x^2, y^2) has Hilbert function (1, 2, 1): the whole of degree 3 lies in the ideal
        assert_eq!(slice3.dimension(), 4);
        assert_eq!(pivot_initial_slice(&slice3).unwrap(), monomials_of_degree(2, 3));
    }

    #[test]
    fn pivot_examples() {
        let slice = DegreeSlice::new(2, 2, vec![p(&[(1, &[2, 0])]), p(&[(1, &[0, 2])])]).unwrap();
        assert_eq!(pivot_initial_slice(&slice).unwrap(), vec![m(&[2, 0]), m(&[0, 2])]);
        let slice = DegreeSlice::new(2, 1, vec![p(&[(1, &[1, 0]), (1, &[0, 1])])]).unwrap();
        assert_eq!(pivot_initial_slice(&slice).unwrap(), vec![m(&[1, 0])]);
        let dup = DegreeSlice::new(2, 1, vec![p(&[(1, &[1, 0])]), p(&[(2, &[1, 0])])]).unwrap();
        assert_eq!(pivot_initial_slice(&dup), Err(GroebnerError::DependentBasis { index: 1 }));
        assert!(DegreeSlice::new(2, 2, vec![p(&[(1, &[1, 0])])]).is_err());
    }

    #[test]
    fn degree_cap_truncates() {
        let g = CoordinateChange::from_integers(&[vec![1, 1], vec![1, -1]]).unwrap();
        let gens: Vec<Polynomial> =
            [p(&[(1, &[2, 0])]), p(&[(1, &[0, 2])])].iter().map(|f| g.apply(f).unwrap()).collect();
        let run = buchberger(&gens, &BuchbergerConfig { degree_cap: Some(2), hilbert: None }).unwrap();
        assert!(!run.complete);
        assert_eq!(run.basis.leading_monomials(), vec![m(&[2, 0]), m(&[1, 1])]);
        let run = buchberger(&gens, &BuchbergerConfig::default()).unwrap();
        assert!(run.complete);
        assert_eq!(run.saturation_degree, Some(3));
    }
}
