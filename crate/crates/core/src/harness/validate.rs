use std::fmt;

use serde::Serialize;

use super::experiment::ExperimentReport;
use crate::counters::Algorithm;

/// Pass criteria applied to every `(algorithm, m)` group.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Thresholds {
    /// Upper bound on the group's mean relative error, in percent.
    pub max_rel_err_pct: f64,
    /// Lower bound on the fraction of cells whose CI covers the prediction.
    pub min_ci_fraction: f64,
    /// Cells shorter than this are ignored.
    pub min_length: u64,
}

impl Default for Thresholds {
    fn default() -> Self {
        Thresholds {
            max_rel_err_pct: 0.5,
            min_ci_fraction: 0.95,
            min_length: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GroupVerdict {
    pub algorithm: Algorithm,
    pub m: u32,
    pub cells: usize,
    pub ci_fraction: f64,
    pub mean_rel_err_pct: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verdict {
    pub thresholds: Thresholds,
    pub groups: Vec<GroupVerdict>,
    /// `(algorithm, m, n)` of cells without a usable prediction.
    pub excluded: Vec<(Algorithm, u32, u64)>,
    pub passed: bool,
}

/// Groups cells by `(algorithm, m)` and checks CI coverage and mean relative
/// error. Cells with no prediction or a non-positive one are excluded and
/// listed. The verdict fails if any group fails or no group is left.
pub fn validate_report(report: &ExperimentReport, thresholds: Thresholds) -> Verdict {
    let mut groups: Vec<GroupVerdict> = Vec::new();
    let mut excluded = Vec::new();
    let mut sums: Vec<(usize, f64)> = Vec::new();

    for row in report.rows.iter().filter(|r| r.n >= thresholds.min_length) {
        let (Some(rel), Some(within)) = (row.summary.rel_err_pct, row.summary.within_ci) else {
            excluded.push((row.algorithm, row.m, row.n));
            continue;
        };
        let idx = match groups.iter().position(|g| g.algorithm == row.algorithm && g.m == row.m) {
            Some(i) => i,
            None => {
                groups.push(GroupVerdict {
                    algorithm: row.algorithm,
                    m: row.m,
                    cells: 0,
                    ci_fraction: 0.0,
                    mean_rel_err_pct: 0.0,
                    passed: false,
                });
                sums.push((0, 0.0));
                groups.len() - 1
            }
        };
        groups[idx].cells += 1;
        sums[idx].0 += usize::from(within);
        sums[idx].1 += rel;
    }

    for (g, (inside, rel_sum)) in groups.iter_mut().zip(sums) {
        let cells = g.cells as f64;
        g.ci_fraction = inside as f64 / cells;
        g.mean_rel_err_pct = rel_sum / cells;
        g.passed = g.ci_fraction >= thresholds.min_ci_fraction
            && g.mean_rel_err_pct <= thresholds.max_rel_err_pct;
    }
    groups.sort_by_key(|g| (g.algorithm, g.m));
    let passed = !groups.is_empty() && groups.iter().all(|g| g.passed);
    Verdict {
        thresholds,
        groups,
        excluded,
        passed,
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "thresholds: mean rel err <= {}%, CI coverage >= {}, n >= {}",
            self.thresholds.max_rel_err_pct, self.thresholds.min_ci_fraction, self.thresholds.min_length
        )?;
        for g in &self.groups {
            writeln!(
                f,
                "{:<16} m={:<4} cells={:<4} within_ci={:>6.1}% mean_rel_err={:.4}%  {}",
                g.algorithm.name(),
                g.m,
                g.cells,
                100.0 * g.ci_fraction,
                g.mean_rel_err_pct,
                if g.passed { "PASS" } else { "FAIL" }
            )?;
        }
        if !self.excluded.is_empty() {
            writeln!(f, "excluded {} cell(s) without a usable prediction:", self.excluded.len())?;
            for (a, m, n) in &self.excluded {
                writeln!(f, "  {a} m={m} n={n}")?;
            }
        }
        write!(f, "verdict: {}", if self.passed { "PASS" } else { "FAIL" })
    }
}
