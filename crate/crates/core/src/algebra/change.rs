use rug::Rational;

use super::{AlgebraError, Monomial, Polynomial};

/// An invertible linear change of coordinates.
///
/// Row `j` of the matrix is the image of variable `j`:
/// `x_j ↦ Σ_k m[j][k] x_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordinateChange {
    matrix: Vec<Vec<Rational>>,
}

impl CoordinateChange {
    pub fn new(matrix: Vec<Vec<Rational>>) -> Result<Self, AlgebraError> {
        let n = matrix.len();
        if n == 0 || matrix.iter().any(|row| row.len() != n) {
            return Err(AlgebraError::MatrixShape { expected: n.max(1) });
        }
        if determinant(&matrix).cmp0().is_eq() {
            return Err(AlgebraError::SingularMatrix);
        }
        Ok(Self { matrix })
    }

    pub fn from_integers(rows: &[Vec<i64>]) -> Result<Self, AlgebraError> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::from(v)).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Self {
        let matrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { Rational::from(1) } else { Rational::new() })
                    .collect()
            })
            .collect();
        Self { matrix }
    }

    pub fn nvars(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<Rational>] {
        &self.matrix
    }

    pub fn determinant(&self) -> Rational {
        determinant(&self.matrix)
    }

    pub fn inverse(&self) -> CoordinateChange {
        let n = self.nvars();
        let mut a: Vec<Vec<Rational>> = self
            .matrix
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut r = row.clone();
                r.extend((0..n).map(|j| if i == j { Rational::from(1) } else { Rational::new() }));
                r
            })
            .collect();
        for col in 0..n {
            let piv = (col..n).find(|&r| !a[r][col].cmp0().is_eq()).expect("invertible by construction");
            a.swap(col, piv);
            let inv = Rational::from(a[col][col].recip_ref());
            for v in a[col].iter_mut() {
                *v *= &inv;
            }
            let pivot = a[col].clone();
            for (r, row) in a.iter_mut().enumerate() {
                if r != col && !row[col].cmp0().is_eq() {
                    let f = row[col].clone();
                    for (v, p) in row.iter_mut().zip(&pivot) {
                        *v -= Rational::from(p * &f);
                    }
                }
            }
        }
        CoordinateChange { matrix: a.into_iter().map(|r| r[n..].to_vec()).collect() }
    }

    /// The linear form that variable `j` is sent to.
    pub fn image_of_var(&self, j: usize) -> Polynomial {
        let n = self.nvars();
        Polynomial::from_terms(n, (0..n).map(|k| (Monomial::var(n, k), self.matrix[j][k].clone())))
            .expect("same context")
    }

    /// Substitutes every variable by its image and expands.
    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial, AlgebraError> {
        let n = self.nvars();
        if p.nvars() != n {
            return Err(AlgebraError::ContextMismatch { left: n, right: p.nvars() });
        }
        let mut powers: Vec<Vec<Polynomial>> = (0..n)
            .map(|j| vec![Polynomial::constant(n, Rational::from(1)), self.image_of_var(j)])
            .collect();
        let mut out = Polynomial::zero(n);
        for (m, c) in p.terms() {
            let mut acc = Polynomial::constant(n, c.clone());
            for (j, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let e = e as usize;
                while powers[j].len() <= e {
                    let next = powers[j].last().unwrap().try_mul(&powers[j][1])?;
                    powers[j].push(next);
                }
                acc = acc.try_mul(&powers[j][e])?;
            }
            out = out.try_add(&acc)?;
        }
        Ok(out)
    }
}

fn determinant(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = Rational::from(1);
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !a[r][col].cmp0().is_eq()) else {
            return Rational::new();
        };
        if piv != col {
            a.swap(piv, col);
            det = -det;
        }
        det *= &a[col][col];
        let (done, rest) = a.split_at_mut(col + 1);
        let pivot = &done[col];
        for row in rest.iter_mut().filter(|row| !row[col].cmp0().is_eq()) {
            let f = Rational::from(&row[col] / &pivot[col]);
            for (v, p) in row[col..].iter_mut().zip(&pivot[col..]) {
                *v -= Rational::from(p * &f);
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(n: usize, terms: &[(i64, &[u32])]) -> Polynomial {
        Polynomial::from_int_terms(n, terms).unwrap()
    }

    #[test]
    fn basic_actions() {
        let x2 = p(2, &[(1, &[2, 0])]);
        let id = CoordinateChange::identity(2);
        assert_eq!(id.apply(&x2).unwrap(), x2);
        let swap = CoordinateChange::from_integers(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(swap.apply(&x2).unwrap(), p(2, &[(1, &[0, 2])]));
        let shear = CoordinateChange::from_integers(&[vec![1, 1], vec![0, 1]]).unwrap();
        assert_eq!(shear.apply(&x2).unwrap(), p(2, &[(1, &[2, 0]), (2, &[1, 1]), (1, &[0, 2])]));
    }

    #[test]
    fn singular_rejected() {
        assert_eq!(
            CoordinateChange::from_integers(&[vec![1, 2], vec![2, 4]]),
            Err(AlgebraError::SingularMatrix)
        );
        assert!(CoordinateChange::from_integers(&[vec![1, 2]]).is_err());
    }

    fn arb_invertible(n: usize) -> impl Strategy<Value = CoordinateChange> {
        prop::collection::vec(prop::collection::vec(-4i64..=4, n), n)
            .prop_filter_map("singular", |rows| CoordinateChange::from_integers(&rows).ok())
    }

    proptest! {
        #[test]
        fn inverse_round_trip(
            (g, exps, coeffs) in (1usize..=3).prop_flat_map(|n| (
                arb_invertible(n),
                prop::collection::vec(prop::collection::vec(0u32..=3, n), 1..4),
                prop::collection::vec(-3i64..=3, 3),
            ))
        ) {
            let n = g.nvars();
            let f = Polynomial::from_terms(
                n,
                exps.into_iter().zip(coeffs).map(|(e, c)| (Monomial::new(e), Rational::from(c))),
            ).unwrap();
            let ginv = g.inverse();
            prop_assert_eq!(g.apply(&ginv.apply(&f).unwrap()).unwrap(), f.clone());
            prop_assert_eq!(ginv.apply(&g.apply(&f).unwrap()).unwrap(), f.clone());
            if f.is_homogeneous() && !f.is_zero() {
                prop_assert_eq!(g.apply(&f).unwrap().total_degree(), f.total_degree());
            }
        }
    }
}
