//! Seeded experiment grids, summary statistics, reports, figures and verdicts.

mod config;
mod experiment;
mod figure;
mod report;
mod stats;
mod validate;

pub use config::{ExperimentConfig, LengthRange, ReportFormat, MAX_CELL_COLOURS, MAX_CELL_LENGTH};
pub use experiment::{cell_id, run_experiment, ExperimentReport, ReportRow};
pub use figure::{emit_figure, FigureKind};
pub use report::{format_sig, parse_csv, read_csv, render_csv, render_json, write_report, CSV_HEADER};
pub use stats::{summarize, summarize_with_z, StatsSummary, Z_99};
pub use validate::{validate_report, GroupVerdict, Thresholds, Verdict};
