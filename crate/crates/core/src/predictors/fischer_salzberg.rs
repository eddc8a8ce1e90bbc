use super::{majority_probability, majority_proportion_rho, require, Prediction};
use crate::counters::Algorithm;
use crate::error::Result;

/// `(n-1) + P·n(1-ρ) + (1-P)·B`.
///
/// With a majority the bucket ends near `n(2ρ-1)` balls and the list is walked
/// two balls at a time, `n(1-ρ)` comparisons. Without one, two colours force a
/// full walk (`B = n/2`) while more colours stop at the first mismatch after
/// `B = m/(m-1)` comparisons on average.
pub fn predict_fischer_salzberg(n: u64, m: u32) -> Result<Prediction> {
    require(m >= 2, || format!("need at least 2 colours, got {m}"))?;
    require(n >= 1, || "stream length must be at least 1".into())?;
    let n_f = n as f64;
    let m_f = f64::from(m);
    let p_maj = majority_probability(n, m)?;
    let mut parameters = vec![("p_majority", p_maj)];
    let majority_branch = if p_maj > 0.0 {
        let rho = majority_proportion_rho(n, m)?;
        parameters.push(("rho", rho));
        p_maj * n_f * (1.0 - rho)
    } else {
        0.0
    };
    let no_majority_cost = if m == 2 { n_f / 2.0 } else { m_f / (m_f - 1.0) };
    Ok(Prediction::from_terms(
        Algorithm::FischerSalzberg,
        n,
        m,
        vec![
            ("phase1", n_f - 1.0),
            ("majority_branch", majority_branch),
            ("no_majority_branch", (1.0 - p_maj) * no_majority_cost),
        ],
        parameters,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::predictors::binomial_pmf_tail;

    #[test]
    fn small_values() {
        let p = predict_fischer_salzberg(2, 2).unwrap();
        assert!((p.expected_total - 1.5).abs() < 1e-12);
        assert_eq!(p.parameter("p_majority"), Some(0.5));
        let p = predict_fischer_salzberg(3, 2).unwrap();
        assert!((p.expected_total - 2.75).abs() < 1e-12);
    }

    #[test]
    fn negligible_majority_at_many_colours() {
        let p = predict_fischer_salzberg(1000, 10).unwrap();
        let tail = binomial_pmf_tail(1000, 0.1, 501).unwrap();
        assert!(tail < 1e-100);
        assert!((p.expected_total - (999.0 + 10.0 / 9.0)).abs() < 1e-9);
    }

    #[test]
    fn underflowed_majority_drops_rho() {
        let p = predict_fischer_salzberg(10_000, 10).unwrap();
        assert_eq!(p.parameter("p_majority"), Some(0.0));
        assert_eq!(p.parameter("rho"), None);
        assert!((p.expected_total - (9999.0 + 10.0 / 9.0)).abs() < 1e-9);
    }
}
