pub mod algebra;
pub mod analysis;
pub mod gin;
pub mod groebner;
pub mod ideal;
pub mod linalg;

#[cfg(test)]
pub(crate) mod fixtures;
pub mod io;
