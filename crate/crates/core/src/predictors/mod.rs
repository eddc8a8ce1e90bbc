//! Average-case predictors and the exact quantities that back them.

mod binomial;
mod fischer_salzberg;
mod tournament;
mod walk;

use serde::Serialize;

use crate::counters::Algorithm;
use crate::error::{Error, Result};

pub use binomial::{binomial_pmf_tail, majority_probability, majority_proportion_rho};
pub use fischer_salzberg::predict_fischer_salzberg;
pub use tournament::{
    predict_tournament, tournament_discarded, tournament_first_phase, tournament_list_correction,
};
pub use walk::{
    catalan_triangle, expected_zeros_exact, expected_zeros_exact_capped, hitting_time,
    predict_mjrty, WalkParams, CATALAN_MAX_ROW, ZEROS_DEFAULT_CAP,
};

/// Expected comparison count for one algorithm at `(n, m)`.
///
/// `terms` are additive and sum to `expected_total`. `parameters` carries
/// intermediate quantities (expected zeros, majority probability, ...) that
/// are reported but not summed.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Prediction {
    pub algorithm: Algorithm,
    pub n: u64,
    pub m: u32,
    pub terms: Vec<(&'static str, f64)>,
    pub parameters: Vec<(&'static str, f64)>,
    pub expected_total: f64,
}

impl Prediction {
    fn from_terms(
        algorithm: Algorithm,
        n: u64,
        m: u32,
        terms: Vec<(&'static str, f64)>,
        parameters: Vec<(&'static str, f64)>,
    ) -> Self {
        let expected_total = terms.iter().map(|(_, v)| v).sum();
        Prediction {
            algorithm,
            n,
            m,
            terms,
            parameters,
            expected_total,
        }
    }

    pub fn term(&self, name: &str) -> Option<f64> {
        self.terms.iter().find(|(k, _)| *k == name).map(|(_, v)| *v)
    }

    pub fn parameter(&self, name: &str) -> Option<f64> {
        self.parameters.iter().find(|(k, _)| *k == name).map(|(_, v)| *v)
    }
}

/// Dispatches to the predictor for `algorithm`.
pub fn predict(algorithm: Algorithm, n: u64, m: u32) -> Result<Prediction> {
    match algorithm {
        Algorithm::Mjrty => predict_mjrty(n, m),
        Algorithm::FischerSalzberg => predict_fischer_salzberg(n, m),
        Algorithm::Tournament => predict_tournament(n, m),
    }
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Domain(msg()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // At n = 1 the tournament heuristic exceeds 2n (its list term alone is 1).
    #[test]
    fn totals_within_bounds_and_sum_terms() {
        for a in Algorithm::ALL {
            for m in [3u32, 4, 5, 10] {
                for n in [2u64, 3, 10, 250, 1000, 5000] {
                    let p = predict(a, n, m).unwrap();
                    let sum: f64 = p.terms.iter().map(|(_, v)| v).sum();
                    assert!((p.expected_total - sum).abs() <= 1e-9 * sum.abs().max(1.0));
                    assert!(p.expected_total >= 0.0, "{a} {n} {m}");
                    assert!(p.expected_total <= 2.0 * n as f64, "{a} {n} {m}");
                }
            }
        }
    }

    #[test]
    fn single_ball_predictions() {
        assert!(predict(Algorithm::Mjrty, 1, 3).unwrap().expected_total <= 2.0);
        assert!(predict(Algorithm::FischerSalzberg, 1, 3).unwrap().expected_total <= 2.0);
        let t = predict(Algorithm::Tournament, 1, 3).unwrap().expected_total;
        assert!((t - (0.6 + 0.6 * (2.0 / 3.0) * (5.0 / 3.0) + 1.0)).abs() < 1e-12);
    }

    #[test]
    fn mjrty_rejects_two_colours() {
        assert!(matches!(predict(Algorithm::Mjrty, 100, 2), Err(Error::Domain(_))));
        assert!(predict(Algorithm::Tournament, 100, 2).is_ok());
        assert!(predict(Algorithm::FischerSalzberg, 100, 2).is_ok());
    }
}
