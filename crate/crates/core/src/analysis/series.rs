use serde::Serialize;

use super::AnalysisError;
use crate::ideal::HilbertFunction;

/// Leading coefficients of a power series, cut before the first
/// coefficient that is zero or negative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerSeriesTrunc {
    coeffs: Vec<i64>,
}

impl PowerSeriesTrunc {
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn matches(&self, h: &HilbertFunction) -> bool {
        self.coeffs.len() == h.values().len() && self.coeffs.iter().zip(h.values()).all(|(&c, &v)| c as u64 == v)
    }
}

/// Expansion of `prod (1 - z^d) / (1 - z)^n`, truncated before its first
/// non-positive coefficient.
///
/// With fewer forms than variables every coefficient is positive, which is
/// reported as an error. Otherwise a non-positive coefficient occurs by
/// degree `sum (d - 1) + 1` over the `n` smallest degrees.
pub fn froberg_series(n: usize, degrees: &[u32]) -> Result<PowerSeriesTrunc, AnalysisError> {
    if n == 0 {
        return Err(AnalysisError::NoVariables);
    }
    if let Some(&d) = degrees.iter().find(|&&d| d == 0) {
        return Err(AnalysisError::NonPositiveDegree(d));
    }
    if degrees.len() < n {
        return Err(AnalysisError::InfiniteSeries { nvars: n, forms: degrees.len() });
    }
    let mut sorted = degrees.to_vec();
    sorted.sort_unstable();
    let bound = sorted[..n].iter().map(|&d| d as usize - 1).sum::<usize>() + 1;

    let mut coeffs = vec![0i128; bound + 1];
    coeffs[0] = 1;
    for &d in degrees {
        for k in (d as usize..=bound).rev() {
            coeffs[k] -= coeffs[k - d as usize];
        }
    }
    for _ in 0..n {
        for k in 1..=bound {
            coeffs[k] += coeffs[k - 1];
        }
    }
    let end = coeffs.iter().position(|&c| c <= 0).expect("a non-positive coefficient by the bound");
    Ok(PowerSeriesTrunc { coeffs: coeffs[..end].iter().map(|&c| c as i64).collect() })
}

/// `max(h(t) - h(t - d), 0)` pointwise, trailing zeros removed.
pub fn hilbert_after_generic_form(h: &HilbertFunction, d: u32) -> HilbertFunction {
    let d = d as usize;
    let values = (0..h.values().len())
        .map(|t| {
            let below = if t >= d { h.get(t - d) } else { 0 };
            h.get(t).saturating_sub(below)
        })
        .collect();
    HilbertFunction::new(values)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn froberg_examples() {
        assert_eq!(froberg_series(3, &[2, 2, 2]).unwrap().coeffs(), &[1, 3, 3, 1]);
        assert_eq!(froberg_series(2, &[2, 2, 2]).unwrap().coeffs(), &[1, 2]);
        assert_eq!(froberg_series(1, &[5]).unwrap().coeffs(), &[1; 5]);
        assert_eq!(froberg_series(4, &[2, 2, 2, 5]).unwrap().coeffs(), &[1, 4, 7, 8, 8, 7, 4, 1]);
        assert_eq!(froberg_series(3, &[2, 2]), Err(AnalysisError::InfiniteSeries { nvars: 3, forms: 2 }));
        assert!(froberg_series(0, &[1]).is_err());
        assert!(froberg_series(1, &[0]).is_err());
    }

    #[test]
    fn generic_form_examples() {
        let h = |v: &[u64]| HilbertFunction::new(v.to_vec());
        assert_eq!(hilbert_after_generic_form(&h(&[1, 3, 3, 1]), 2), h(&[1, 3, 2]));
        assert_eq!(hilbert_after_generic_form(&h(&[1]), 3), h(&[1]));
        assert_eq!(hilbert_after_generic_form(&h(&[1, 2, 1]), 1), h(&[1, 1]));
    }
}
