use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;

use super::config::ReportFormat;
use super::experiment::{ExperimentReport, ReportRow};
use super::stats::StatsSummary;
use crate::error::{Error, Result};

pub const CSV_HEADER: &str =
    "algorithm,m,n,trials,seed,mean,std,ci99_low,ci99_high,expected,rel_err_pct,within_ci";

/// Missing value marker for cells without a prediction.
const NA: &str = "NA";

/// Renders `value` with 6 significant digits in the style of C's `%g`.
pub fn format_sig(value: f64) -> String {
    const DIGITS: i32 = 6;
    if !value.is_finite() {
        return value.to_string();
    }
    if value == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.*e}", (DIGITS - 1) as usize, value);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..DIGITS).contains(&exp) {
        let mantissa = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (DIGITS - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{value:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn opt_num(v: Option<f64>) -> String {
    v.map_or_else(|| NA.into(), format_sig)
}

/// The CSV body, header included.
pub fn render_csv(report: &ExperimentReport) -> String {
    let mut out = String::with_capacity(64 * (report.rows.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in &report.rows {
        let s = &r.summary;
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            r.algorithm,
            r.m,
            r.n,
            r.trials,
            r.seed,
            format_sig(s.mean),
            format_sig(s.sample_std),
            format_sig(s.ci99_low),
            format_sig(s.ci99_high),
            opt_num(s.expected),
            opt_num(s.rel_err_pct),
            s.within_ci.map_or_else(|| NA.to_string(), |b| b.to_string()),
        );
    }
    out
}

#[derive(Serialize)]
struct JsonRow<'a> {
    algorithm: &'a str,
    m: u32,
    n: u64,
    trials: u32,
    seed: u64,
    mean: f64,
    std: f64,
    ci99_low: f64,
    ci99_high: f64,
    expected: Option<f64>,
    rel_err_pct: Option<f64>,
    within_ci: Option<bool>,
}

/// An array of row objects with the same fields as the CSV columns.
pub fn render_json(report: &ExperimentReport) -> String {
    let rows: Vec<JsonRow<'_>> = report
        .rows
        .iter()
        .map(|r| JsonRow {
            algorithm: r.algorithm.name(),
            m: r.m,
            n: r.n,
            trials: r.trials,
            seed: r.seed,
            mean: r.summary.mean,
            std: r.summary.sample_std,
            ci99_low: r.summary.ci99_low,
            ci99_high: r.summary.ci99_high,
            expected: r.summary.expected,
            rel_err_pct: r.summary.rel_err_pct,
            within_ci: r.summary.within_ci,
        })
        .collect();
    let mut text = serde_json::to_string_pretty(&rows).expect("rows serialize");
    text.push('\n');
    text
}

pub fn write_report(report: &ExperimentReport, format: ReportFormat, path: &Path) -> Result<()> {
    let body = match format {
        ReportFormat::Csv => render_csv(report),
        ReportFormat::Json => render_json(report),
    };
    std::fs::write(path, body).map_err(|e| Error::io(path, e))
}

/// Parses a CSV produced by [`render_csv`].
pub fn parse_csv(text: &str) -> Result<ExperimentReport> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    match lines.next() {
        Some((_, header)) if header.trim() == CSV_HEADER => {}
        Some((_, header)) => {
            return Err(Error::Parse(format!("unexpected CSV header `{header}`")));
        }
        None => return Err(Error::Parse("empty CSV".into())),
    }
    let rows = lines
        .map(|(i, line)| {
            parse_row(line).map_err(|e| match e {
                Error::Parse(msg) => Error::Parse(format!("line {}: {msg}", i + 1)),
                other => other,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ExperimentReport::from_rows(rows))
}

pub fn read_csv(path: &Path) -> Result<ExperimentReport> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_csv(&text)
}

fn parse_row(line: &str) -> Result<ReportRow> {
    let fields: Vec<&str> = line.split(',').map(str::trim).collect();
    let [algorithm, m, n, trials, seed, mean, std, lo, hi, expected, rel, within] = fields[..] else {
        return Err(Error::Parse(format!("expected 12 fields, got {}", fields.len())));
    };
    fn num<T: std::str::FromStr>(field: &str, name: &str) -> Result<T> {
        field
            .parse()
            .map_err(|_| Error::Parse(format!("bad {name} `{field}`")))
    }
    fn opt(field: &str, name: &str) -> Result<Option<f64>> {
        if field == NA {
            Ok(None)
        } else {
            num(field, name).map(Some)
        }
    }
    let trials: u32 = num(trials, "trials")?;
    Ok(ReportRow {
        algorithm: algorithm.parse()?,
        m: num(m, "m")?,
        n: num(n, "n")?,
        trials,
        seed: num(seed, "seed")?,
        summary: StatsSummary {
            count: trials as usize,
            mean: num(mean, "mean")?,
            sample_std: num(std, "std")?,
            ci99_low: num(lo, "ci99_low")?,
            ci99_high: num(hi, "ci99_high")?,
            expected: opt(expected, "expected")?,
            rel_err_pct: opt(rel, "rel_err_pct")?,
            within_ci: match within {
                "true" => Some(true),
                "false" => Some(false),
                NA => None,
                other => return Err(Error::Parse(format!("bad within_ci `{other}`"))),
            },
        },
    })
}
