//! Binomial tails and the majority statistics built on them.
//!
//! The pmf is built from the mode outward with the ratio
//! `f(x+1)/f(x) = (n-x)/(x+1) * p/q`, then normalized by its own sum. No
//! factorials or logarithms are involved, so precision does not degrade with
//! `n`; terms far in the tails underflow to zero harmlessly.

use super::require;
use crate::error::{Error, Result};

/// Normalized Binomial(n, p) pmf.
fn pmf(n: u64, p: f64) -> Vec<f64> {
    let len = n as usize + 1;
    let mut w = vec![0.0f64; len];
    if p == 0.0 {
        w[0] = 1.0;
        return w;
    }
    if p == 1.0 {
        w[len - 1] = 1.0;
        return w;
    }
    let q = 1.0 - p;
    let mode = (((n + 1) as f64 * p).floor() as usize).min(n as usize);
    w[mode] = 1.0;
    let (up, down) = (p / q, q / p);
    for x in mode..n as usize {
        let next = w[x] * (n as usize - x) as f64 / (x + 1) as f64 * up;
        if next == 0.0 {
            break;
        }
        w[x + 1] = next;
    }
    for x in (1..=mode).rev() {
        let next = w[x] * x as f64 / (n as usize - x + 1) as f64 * down;
        if next == 0.0 {
            break;
        }
        w[x - 1] = next;
    }
    let total = neumaier_sum(w.iter().copied());
    w.iter_mut().for_each(|v| *v /= total);
    w
}

fn neumaier_sum(values: impl Iterator<Item = f64>) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

fn check_p(p: f64) -> Result<()> {
    require((0.0..=1.0).contains(&p), || format!("probability {p} outside [0, 1]"))
}

/// `P(X >= k)` for `X ~ Binomial(n, p)`.
pub fn binomial_pmf_tail(n: u64, p: f64, k: u64) -> Result<f64> {
    check_p(p)?;
    if k == 0 {
        return Ok(1.0);
    }
    if k > n {
        return Ok(0.0);
    }
    let f = pmf(n, p);
    Ok(neumaier_sum(f[k as usize..].iter().copied()).min(1.0))
}

/// Smallest count that is a strict majority of `n`.
fn majority_threshold(n: u64) -> u64 {
    n / 2 + 1
}

/// Probability that a uniform `m`-colour stream of length `n` has a strict
/// majority: `m * P(Binomial(n, 1/m) > n/2)`, the per-colour events being
/// disjoint.
pub fn majority_probability(n: u64, m: u32) -> Result<f64> {
    require(m >= 2, || format!("need at least 2 colours, got {m}"))?;
    require(n >= 1, || "stream length must be at least 1".into())?;
    let tail = binomial_pmf_tail(n, 1.0 / f64::from(m), majority_threshold(n))?;
    Ok((f64::from(m) * tail).clamp(0.0, 1.0))
}

/// Expected fraction of balls carrying the majority colour, given that a
/// majority exists.
pub fn majority_proportion_rho(n: u64, m: u32) -> Result<f64> {
    require(m >= 2, || format!("need at least 2 colours, got {m}"))?;
    require(n >= 1, || "stream length must be at least 1".into())?;
    let f = pmf(n, 1.0 / f64::from(m));
    let t = majority_threshold(n) as usize;
    let tail = neumaier_sum(f[t..].iter().copied());
    if tail <= 0.0 {
        return Err(Error::Domain(format!(
            "majority probability underflows for n = {n}, m = {m}"
        )));
    }
    let moment = neumaier_sum(f[t..].iter().enumerate().map(|(i, v)| (t + i) as f64 * v));
    Ok(moment / (n as f64 * tail))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tail_examples() {
        assert!((binomial_pmf_tail(4, 0.5, 3).unwrap() - 0.3125).abs() < 1e-15);
        assert_eq!(binomial_pmf_tail(17, 0.3, 0).unwrap(), 1.0);
        assert_eq!(binomial_pmf_tail(17, 0.3, 18).unwrap(), 0.0);
        assert!(matches!(binomial_pmf_tail(4, 1.5, 2), Err(Error::Domain(_))));
        assert!(binomial_pmf_tail(4, f64::NAN, 2).is_err());
    }

    #[test]
    fn degenerate_probabilities() {
        assert_eq!(binomial_pmf_tail(10, 0.0, 1).unwrap(), 0.0);
        assert_eq!(binomial_pmf_tail(10, 1.0, 10).unwrap(), 1.0);
        assert_eq!(binomial_pmf_tail(0, 0.4, 1).unwrap(), 0.0);
    }

    #[test]
    fn majority_probability_examples() {
        assert!((majority_probability(3, 2).unwrap() - 1.0).abs() < 1e-15);
        assert!((majority_probability(4, 2).unwrap() - 0.625).abs() < 1e-15);
        assert!((majority_probability(2, 3).unwrap() - 1.0 / 3.0).abs() < 1e-15);
        assert!(majority_probability(5, 1).is_err());
    }

    #[test]
    fn rho_examples() {
        for m in 2..6 {
            assert!((majority_proportion_rho(1, m).unwrap() - 1.0).abs() < 1e-15);
        }
        assert!((majority_proportion_rho(3, 2).unwrap() - 0.75).abs() < 1e-15);
        assert!((majority_proportion_rho(2, 2).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn rho_underflow_is_domain_error() {
        assert!(matches!(majority_proportion_rho(10_000, 10), Err(Error::Domain(_))));
    }
}
