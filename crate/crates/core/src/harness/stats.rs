use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Two-sided 99% normal quantile.
pub const Z_99: f64 = 2.5758;

/// Sample statistics of one experiment cell against its prediction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StatsSummary {
    pub count: usize,
    pub mean: f64,
    /// `n - 1` denominator.
    pub sample_std: f64,
    pub ci99_low: f64,
    pub ci99_high: f64,
    /// `None` when no prediction applies to the cell.
    pub expected: Option<f64>,
    /// `None` unless `expected > 0`.
    pub rel_err_pct: Option<f64>,
    pub within_ci: Option<bool>,
}

/// Mean, sample standard deviation and `mean ± 2.5758·std/√count`.
pub fn summarize(samples: &[f64], expected: Option<f64>) -> Result<StatsSummary> {
    summarize_with_z(samples, expected, Z_99)
}

pub fn summarize_with_z(samples: &[f64], expected: Option<f64>, z: f64) -> Result<StatsSummary> {
    let count = samples.len();
    if count < 2 {
        return Err(Error::InvalidArgument(format!(
            "need at least 2 samples for a confidence interval, got {count}"
        )));
    }
    let n = count as f64;
    let mean = samples.iter().sum::<f64>() / n;
    let ss: f64 = samples.iter().map(|x| (x - mean).powi(2)).sum();
    let sample_std = (ss / (n - 1.0)).sqrt();
    let half = z * sample_std / n.sqrt();
    let (ci99_low, ci99_high) = (mean - half, mean + half);
    let rel_err_pct = expected
        .filter(|&e| e > 0.0)
        .map(|e| 100.0 * (mean - e).abs() / e);
    let within_ci = expected.map(|e| ci99_low <= e && e <= ci99_high);
    Ok(StatsSummary {
        count,
        mean,
        sample_std,
        ci99_low,
        ci99_high,
        expected,
        rel_err_pct,
        within_ci,
    })
}
