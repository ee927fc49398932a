//! Shared ideals for unit tests.

use crate::algebra::Monomial;
use crate::ideal::MonomialIdeal;

pub(crate) fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::from_generators(n, gens.iter().map(|e| Monomial::new(e.to_vec())))
}

/// Strongly stable ideal in four variables whose restriction to three
/// variables and itself both pass the Lefschetz test but which is not
/// almost revlex.
pub(crate) fn two_slp_not_arl() -> MonomialIdeal {
    let gens: [[u32; 4]; 24] = [
        [2, 0, 0, 0],
        [1, 2, 0, 0],
        [0, 4, 0, 0],
        [0, 3, 1, 0],
        [1, 1, 2, 0],
        [0, 2, 2, 0],
        [1, 0, 3, 0],
        [0, 1, 3, 0],
        [0, 0, 4, 0],
        [0, 3, 0, 1],
        [1, 1, 1, 1],
        [1, 0, 2, 2],
        [0, 2, 1, 3],
        [0, 1, 2, 3],
        [0, 0, 3, 3],
        [1, 1, 0, 4],
        [0, 2, 0, 4],
        [1, 0, 1, 4],
        [0, 1, 1, 4],
        [0, 0, 2, 4],
        [1, 0, 0, 5],
        [0, 1, 0, 5],
        [0, 0, 1, 5],
        [0, 0, 0, 6],
    ];
    MonomialIdeal::from_generators(4, gens.iter().map(|e| Monomial::new(e.to_vec())))
}

/// gin of three generic quadrics.
pub(crate) fn three_quadrics() -> MonomialIdeal {
    ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0], &[1, 0, 2], &[0, 1, 2], &[0, 0, 4]])
}
