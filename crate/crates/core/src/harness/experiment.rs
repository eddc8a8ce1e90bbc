use std::fs::File;

use serde::Serialize;

use super::config::ExperimentConfig;
use super::report::write_report;
use super::stats::{summarize_with_z, StatsSummary};
use crate::counters::{run, Algorithm};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::predictors::predict;
use crate::streams::{derive_trial_seed, generate_stream};

/// One `(algorithm, m, n)` cell of a report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportRow {
    pub algorithm: Algorithm,
    pub m: u32,
    pub n: u64,
    pub trials: u32,
    pub seed: u64,
    pub summary: StatsSummary,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentReport {
    /// Absent for reports read back from CSV.
    pub config: Option<ExperimentConfig>,
    /// Sorted by `(algorithm, m, n)`.
    pub rows: Vec<ReportRow>,
    pub library_version: String,
}

impl ExperimentReport {
    pub fn from_rows(mut rows: Vec<ReportRow>) -> Self {
        rows.sort_by_key(|r| (r.algorithm, r.m, r.n));
        ExperimentReport {
            config: None,
            rows,
            library_version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// Seed-derivation id of the `(m, n)` stream cell: `m << 20 | n`.
///
/// Every algorithm in a grid sees the same streams for a given `(m, n)`, and a
/// cell's streams do not depend on what else is in the grid.
pub fn cell_id(m: u32, n: u64) -> u32 {
    debug_assert!(n < 1 << 20 && m < 1 << 12);
    (m << 20) | n as u32
}

/// Simulates every cell of `config`, summarizes total comparisons against the
/// matching predictor and writes the report when an output path is set.
///
/// Cells whose predictor is undefined (MJRTY at two colours) are still
/// simulated and carry no expected value. Results do not depend on
/// `config.workers`.
pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentReport> {
    config.validate()?;
    if let Some(path) = &config.output_path {
        File::create(path).map_err(|e| Error::io(path, e))?;
    }
    let (algorithms, colours) = config.normalized();
    let cells: Vec<(u32, u64)> = colours
        .iter()
        .flat_map(|&m| config.lengths.iter().map(move |n| (m, n)))
        .collect();
    let jobs: Vec<(u32, u64, u32)> = cells
        .iter()
        .flat_map(|&(m, n)| (0..config.trials).map(move |t| (m, n, t)))
        .collect();

    let seed = config.master_seed;
    let totals: Vec<Vec<u64>> = Execution::with_workers(config.workers).map(&jobs, |&(m, n, t)| {
        let stream = generate_stream(n as usize, m, derive_trial_seed(seed, cell_id(m, n), t))
            .expect("validated colour count");
        algorithms.iter().map(|&a| run(a, &stream).tally.total()).collect()
    });

    let trials = config.trials as usize;
    let mut rows = Vec::with_capacity(cells.len() * algorithms.len());
    for (cell_index, &(m, n)) in cells.iter().enumerate() {
        let block = &totals[cell_index * trials..(cell_index + 1) * trials];
        for (ai, &algorithm) in algorithms.iter().enumerate() {
            let samples: Vec<f64> = block.iter().map(|t| t[ai] as f64).collect();
            let expected = match predict(algorithm, n, m) {
                Ok(p) => Some(p.expected_total),
                Err(Error::Domain(_)) => None,
                Err(e) => return Err(e),
            };
            rows.push(ReportRow {
                algorithm,
                m,
                n,
                trials: config.trials,
                seed,
                summary: summarize_with_z(&samples, expected, config.z)?,
            });
        }
    }

    let mut report = ExperimentReport::from_rows(rows);
    report.config = Some(config.clone());
    if let Some(path) = &config.output_path {
        write_report(&report, config.format, path)?;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::LengthRange;

    fn small(algorithms: Vec<Algorithm>, colours: Vec<u32>, lengths: LengthRange, trials: u32) -> ExperimentConfig {
        ExperimentConfig {
            algorithms,
            colour_counts: colours,
            lengths,
            trials,
            master_seed: 42,
            ..Default::default()
        }
    }

    #[test]
    fn grid_cardinality() {
        let cfg = small(Algorithm::ALL.to_vec(), vec![2, 3], LengthRange::new(250, 500, 250), 10);
        let report = run_experiment(&cfg).unwrap();
        assert_eq!(report.rows.len(), 12);
        let keys: Vec<_> = report.rows.iter().map(|r| (r.algorithm, r.m, r.n)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn mjrty_cell_expected_value() {
        let cfg = small(vec![Algorithm::Mjrty], vec![3], LengthRange::single(1000), 100);
        let report = run_experiment(&cfg).unwrap();
        assert_eq!(report.rows.len(), 1);
        assert!((report.rows[0].summary.expected.unwrap() - 1749.0).abs() < 1e-9);
    }

    #[test]
    fn mjrty_two_colours_has_no_prediction() {
        let cfg = small(vec![Algorithm::Mjrty], vec![2], LengthRange::single(100), 5);
        let row = &run_experiment(&cfg).unwrap().rows[0];
        assert_eq!(row.summary.expected, None);
        assert!(row.summary.mean > 0.0);
    }

    #[test]
    fn cells_share_streams_across_algorithm_sets() {
        let solo = small(vec![Algorithm::Tournament], vec![5], LengthRange::single(300), 8);
        let grid = small(Algorithm::ALL.to_vec(), vec![3, 5], LengthRange::new(100, 300, 100), 8);
        let a = run_experiment(&solo).unwrap();
        let b = run_experiment(&grid).unwrap();
        let row = b
            .rows
            .iter()
            .find(|r| r.algorithm == Algorithm::Tournament && r.m == 5 && r.n == 300)
            .unwrap();
        assert_eq!(&a.rows[0], row);
    }

    #[test]
    fn unwritable_output_is_io_error() {
        let mut cfg = small(vec![Algorithm::Mjrty], vec![3], LengthRange::single(10), 2);
        cfg.output_path = Some("/nonexistent-dir/x/report.csv".into());
        assert!(matches!(run_experiment(&cfg), Err(Error::Io { .. })));
    }

    #[test]
    fn cell_ids_are_distinct() {
        assert_ne!(cell_id(3, 1000), cell_id(1000, 3));
        assert_eq!(cell_id(0, 5), 5);
    }
}
