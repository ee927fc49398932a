//! Exact row reduction over the integers.
//!
//! Rows are kept primitive (content divided out) and eliminated
//! fraction-free, so no rational arithmetic happens inside the loop.
//! A word-size prime shadow is available for cheap rank pre-screening; a set
//! of rows that is independent modulo the prime is independent over Q.

use rug::{Assign, Integer};

/// Mersenne prime 2^61 - 1.
pub const SCREEN_PRIME: u64 = (1u64 << 61) - 1;

pub(crate) fn is_zero(v: &Integer) -> bool {
    v.cmp0().is_eq()
}

/// Divides a vector by the gcd of its entries and makes the first nonzero
/// entry positive. Returns false for the zero vector.
pub fn make_primitive(row: &mut [Integer]) -> bool {
    let mut g = Integer::new();
    for v in row.iter() {
        if !is_zero(v) {
            g.gcd_mut(v);
            if g == 1 {
                break;
            }
        }
    }
    if is_zero(&g) {
        return false;
    }
    let negate = row.iter().find(|v| !is_zero(v)).is_some_and(|v| v.cmp0().is_lt());
    if g != 1 {
        for v in row.iter_mut() {
            if !is_zero(v) {
                v.div_exact_mut(&g);
            }
        }
    }
    if negate {
        for v in row.iter_mut() {
            *v = Integer::from(-&*v);
        }
    }
    true
}

/// Incremental row-echelon form with exact integer rows.
///
/// Every stored row has a distinct pivot (its first nonzero column) and is
/// zero to the left of it. The pivot set depends only on the row space.
#[derive(Debug, Clone)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<Vec<Integer>>,
    row_of_pivot: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Self { ncols, rows: Vec::new(), row_of_pivot: vec![None; ncols] }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Integer>] {
        &self.rows
    }

    /// Pivot columns in increasing order.
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&c| self.row_of_pivot[c].is_some()).collect()
    }

    /// Reduces `row` against the stored rows; stores it and returns true if
    /// it is independent of them.
    pub fn insert(&mut self, mut row: Vec<Integer>) -> bool {
        assert_eq!(row.len(), self.ncols, "row width");
        let mut start = 0;
        let mut tmp = Integer::new();
        loop {
            let Some(lead) = (start..self.ncols).find(|&c| !is_zero(&row[c])) else {
                return false;
            };
            match self.row_of_pivot[lead] {
                None => {
                    make_primitive(&mut row[lead..]);
                    self.row_of_pivot[lead] = Some(self.rows.len());
                    self.rows.push(row);
                    return true;
                }
                Some(r) => {
                    let piv_row = &self.rows[r];
                    // row <- (p/g) row - (v/g) piv_row
                    let g = Integer::from(piv_row[lead].gcd_ref(&row[lead]));
                    let a = Integer::from(piv_row[lead].div_exact_ref(&g));
                    let b = Integer::from(row[lead].div_exact_ref(&g));
                    row[lead] = Integer::new();
                    for c in lead + 1..self.ncols {
                        let pr = &piv_row[c];
                        if is_zero(pr) {
                            if !is_zero(&row[c]) && a != 1 {
                                row[c] *= &a;
                            }
                            continue;
                        }
                        if a != 1 {
                            row[c] *= &a;
                        }
                        tmp.assign(&b * pr);
                        row[c] -= &tmp;
                    }
                    make_primitive(&mut row[lead + 1..]);
                    start = lead + 1;
                }
            }
        }
    }
}

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % SCREEN_PRIME as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a);
        }
        a = mul_mod(a, a);
        e >>= 1;
    }
    r
}

pub fn reduce_mod(v: &Integer) -> u64 {
    let m = Integer::from(v % SCREEN_PRIME);
    let m = if m.cmp0().is_lt() { m + SCREEN_PRIME } else { m };
    m.to_u64().expect("residue fits")
}

/// Echelon form modulo [`SCREEN_PRIME`], tracking which input rows were
/// independent.
#[derive(Debug, Clone)]
pub struct ModEchelon {
    ncols: usize,
    rows: Vec<Vec<u64>>,
    row_of_pivot: Vec<Option<usize>>,
}

impl ModEchelon {
    pub fn new(ncols: usize) -> Self {
        Self { ncols, rows: Vec::new(), row_of_pivot: vec![None; ncols] }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&c| self.row_of_pivot[c].is_some()).collect()
    }

    pub fn insert(&mut self, row: &[Integer]) -> bool {
        let mut v: Vec<u64> = row.iter().map(reduce_mod).collect();
        for c in 0..self.ncols {
            if v[c] == 0 {
                continue;
            }
            match self.row_of_pivot[c] {
                None => {
                    let inv = pow_mod(v[c], SCREEN_PRIME - 2);
                    for x in v[c..].iter_mut() {
                        *x = mul_mod(*x, inv);
                    }
                    self.row_of_pivot[c] = Some(self.rows.len());
                    self.rows.push(v);
                    return true;
                }
                Some(r) => {
                    let f = v[c];
                    let pr = &self.rows[r];
                    for k in c..self.ncols {
                        if pr[k] != 0 {
                            v[k] = (v[k] + SCREEN_PRIME - mul_mod(f, pr[k])) % SCREEN_PRIME;
                        }
                    }
                }
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(v: &[i64]) -> Vec<Integer> {
        v.iter().map(|&x| Integer::from(x)).collect()
    }

    #[test]
    fn pivots_of_small_matrix() {
        let mut e = Echelon::new(3);
        assert!(e.insert(row(&[0, 2, 4])));
        assert!(e.insert(row(&[1, 1, 1])));
        assert!(!e.insert(row(&[2, 4, 6])));
        assert_eq!(e.pivots(), vec![0, 1]);
        assert!(e.insert(row(&[0, 0, 5])));
        assert_eq!(e.rank(), 3);
    }

    #[test]
    fn primitive_rows() {
        let mut r = row(&[0, -4, 6, 8]);
        assert!(make_primitive(&mut r));
        assert_eq!(r, row(&[0, 2, -3, -4]));
        let mut z = row(&[0, 0]);
        assert!(!make_primitive(&mut z));
    }

    #[test]
    fn modular_matches_exact_on_small_input() {
        let rows = [row(&[3, 1, 4, 1]), row(&[6, 2, 8, 2]), row(&[0, 5, 9, 2]), row(&[3, 6, 13, 3])];
        let mut e = Echelon::new(4);
        let mut m = ModEchelon::new(4);
        for r in &rows {
            assert_eq!(e.insert(r.clone()), m.insert(r));
        }
        assert_eq!(e.pivots(), m.pivots());
        assert_eq!(reduce_mod(&Integer::from(-1)), SCREEN_PRIME - 1);
    }
}
