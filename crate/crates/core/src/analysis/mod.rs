//! Decision procedures on generic initial ideals: the almost-revlex
//! property (directly and through the exponent profile), strong Lefschetz
//! and Stanley criteria, the two-condition decomposition of the almost-revlex
//! property, and Fröberg series.

mod arl;
mod lefschetz;
mod series;

pub use arl::{arl_check_direct, arl_check_profile, equal_degree_monotone, ArlCondition, ArlViolation, RevlexGap};
pub use lefschetz::{mainthm_analyze, slp_check, ssp_check, AnalysisReport, LevelVerdict};
pub use series::{froberg_series, hilbert_after_generic_form, PowerSeriesTrunc};

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("number of variables must be positive")]
    NoVariables,
    #[error("degree {0} must be positive")]
    NonPositiveDegree(u32),
    #[error("{forms} forms in {nvars} variables: the series never reaches a non-positive coefficient")]
    InfiniteSeries { nvars: usize, forms: usize },
}

/// Outcome of a yes/no check together with the first counterexample found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict<W> {
    pub holds: bool,
    pub witness: Option<W>,
}

impl<W> Verdict<W> {
    pub fn pass() -> Self {
        Self { holds: true, witness: None }
    }

    pub fn fail(witness: W) -> Self {
        Self { holds: false, witness: Some(witness) }
    }

    pub(crate) fn from_witness(witness: Option<W>) -> Self {
        match witness {
            None => Self::pass(),
            Some(w) => Self::fail(w),
        }
    }
}
