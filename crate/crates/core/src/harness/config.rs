use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::Serialize;

use super::stats::Z_99;
use crate::counters::Algorithm;
use crate::error::{Error, Result};

/// Largest stream length an experiment cell may use (cell ids pack `n` in 20 bits).
pub const MAX_CELL_LENGTH: u64 = (1 << 20) - 1;
/// Largest colour count an experiment cell may use (12 bits).
pub const MAX_CELL_COLOURS: u32 = (1 << 12) - 1;

/// Inclusive arithmetic range `start, start+step, ..., <= stop`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LengthRange {
    pub start: u64,
    pub stop: u64,
    pub step: u64,
}

impl LengthRange {
    pub fn new(start: u64, stop: u64, step: u64) -> Self {
        LengthRange { start, stop, step }
    }

    pub fn single(n: u64) -> Self {
        LengthRange::new(n, n, 1)
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> {
        let step = self.step.max(1) as usize;
        (self.start..=self.stop).step_by(step)
    }
}

impl FromStr for LengthRange {
    type Err = Error;

    /// `start:stop:step`, `start:stop` (step 1) or a single length.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').map(str::trim).collect();
        let num = |p: &str| {
            p.replace('_', "")
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad length `{p}` in range `{s}`")))
        };
        match parts.as_slice() {
            [n] => Ok(LengthRange::single(num(n)?)),
            [a, b] => Ok(LengthRange::new(num(a)?, num(b)?, 1)),
            [a, b, c] => Ok(LengthRange::new(num(a)?, num(b)?, num(c)?)),
            _ => Err(Error::Parse(format!("bad length range `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportFormat {
    #[default]
    Csv,
    Json,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "csv" => Ok(ReportFormat::Csv),
            "json" => Ok(ReportFormat::Json),
            other => Err(Error::Parse(format!("unknown report format `{other}`"))),
        }
    }
}

/// A grid of `(algorithm, m, n)` cells, each simulated `trials` times.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentConfig {
    pub algorithms: Vec<Algorithm>,
    pub colour_counts: Vec<u32>,
    pub lengths: LengthRange,
    pub trials: u32,
    pub master_seed: u64,
    pub output_path: Option<PathBuf>,
    pub format: ReportFormat,
    /// Normal quantile for the confidence interval.
    pub z: f64,
    /// Worker threads; `0` = default pool, `1` = sequential. Never affects results.
    pub workers: usize,
}

impl Default for ExperimentConfig {
    /// Lengths 250..=10,000 step 250, 100 trials, m ∈ {2, 3, 5, 10}.
    fn default() -> Self {
        ExperimentConfig {
            algorithms: Algorithm::ALL.to_vec(),
            colour_counts: vec![2, 3, 5, 10],
            lengths: LengthRange::new(250, 10_000, 250),
            trials: 100,
            master_seed: 0,
            output_path: None,
            format: ReportFormat::Csv,
            z: Z_99,
            workers: 0,
        }
    }
}

const KEYS: &[&str] = &[
    "algorithms", "colours", "lengths", "trials", "seed", "out", "format", "z", "workers",
];

impl ExperimentConfig {
    /// The default grid with lengths capped at 5,000.
    pub fn desk() -> Self {
        ExperimentConfig {
            lengths: LengthRange::new(250, 5_000, 250),
            ..Default::default()
        }
    }

    /// Sets one option by its config-file / flag name.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let value = value.trim();
        let bad = |what: &str| Error::Parse(format!("bad value `{value}` for `{what}`"));
        match key.trim() {
            "algorithms" => {
                self.algorithms = split_list(value)
                    .map(|a| a.parse())
                    .collect::<Result<_>>()?;
            }
            "colours" | "colors" => {
                self.colour_counts = split_list(value)
                    .map(|m| m.parse().map_err(|_| bad("colours")))
                    .collect::<Result<_>>()?;
            }
            "lengths" => self.lengths = value.parse()?,
            "trials" => self.trials = value.parse().map_err(|_| bad("trials"))?,
            "seed" => self.master_seed = value.parse().map_err(|_| bad("seed"))?,
            "out" => self.output_path = Some(PathBuf::from(value)),
            "format" => self.format = value.parse()?,
            "z" => self.z = value.parse().map_err(|_| bad("z"))?,
            "workers" => self.workers = value.parse().map_err(|_| bad("workers"))?,
            other => {
                return Err(Error::Parse(format!(
                    "unknown config key `{other}` (expected one of {})",
                    KEYS.join(", ")
                )))
            }
        }
        Ok(())
    }

    /// Parses `key = value` lines on top of the defaults. Blank lines and
    /// `#` comments are ignored; unknown keys are errors.
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = ExperimentConfig::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::Parse(format!("line {}: expected `key = value`", lineno + 1))
            })?;
            cfg.set(key, value).map_err(|e| match e {
                Error::Parse(msg) => Error::Parse(format!("line {}: {msg}", lineno + 1)),
                other => other,
            })?;
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&text)
    }

    pub fn validate(&self) -> Result<()> {
        let invalid = |msg: String| Err(Error::InvalidArgument(msg));
        if self.algorithms.is_empty() {
            return invalid("no algorithms selected".into());
        }
        if self.colour_counts.is_empty() {
            return invalid("no colour counts given".into());
        }
        if let Some(&m) = self
            .colour_counts
            .iter()
            .find(|&&m| !(2..=MAX_CELL_COLOURS).contains(&m))
        {
            return invalid(format!("colour count {m} outside [2, {MAX_CELL_COLOURS}]"));
        }
        let LengthRange { start, stop, step } = self.lengths;
        if start < 1 || step < 1 || stop < start {
            return invalid(format!("length range {start}:{stop}:{step} is empty or malformed"));
        }
        if stop > MAX_CELL_LENGTH {
            return invalid(format!("length {stop} exceeds {MAX_CELL_LENGTH}"));
        }
        if self.trials < 2 {
            return invalid(format!("need at least 2 trials per cell, got {}", self.trials));
        }
        if !(self.z.is_finite() && self.z > 0.0) {
            return invalid(format!("z must be positive, got {}", self.z));
        }
        Ok(())
    }

    /// Sorted, de-duplicated algorithms and colour counts.
    pub(crate) fn normalized(&self) -> (Vec<Algorithm>, Vec<u32>) {
        let mut algorithms = self.algorithms.clone();
        algorithms.sort();
        algorithms.dedup();
        let mut colours = self.colour_counts.clone();
        colours.sort_unstable();
        colours.dedup();
        (algorithms, colours)
    }
}

fn split_list(value: &str) -> impl Iterator<Item = &str> {
    value.split(',').map(str::trim).filter(|s| !s.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        let r: LengthRange = "250:1000:250".parse().unwrap();
        assert_eq!(r.iter().collect::<Vec<_>>(), vec![250, 500, 750, 1000]);
        let r: LengthRange = "250:5000:250".parse().unwrap();
        assert_eq!(r.iter().count(), 20);
        assert_eq!("7".parse::<LengthRange>().unwrap(), LengthRange::single(7));
        assert!("1:2:3:4".parse::<LengthRange>().is_err());
        assert!("a:b".parse::<LengthRange>().is_err());
    }

    #[test]
    fn parse_file() {
        let cfg = ExperimentConfig::parse(
            "# grid\nalgorithms = mjrty, tournament\ncolours = 3,5\nlengths = 250:500:250\n\
             trials = 10\nseed = 42 # fixed\nout = /tmp/x.csv\n",
        )
        .unwrap();
        assert_eq!(cfg.algorithms, vec![Algorithm::Mjrty, Algorithm::Tournament]);
        assert_eq!(cfg.colour_counts, vec![3, 5]);
        assert_eq!(cfg.trials, 10);
        assert_eq!(cfg.master_seed, 42);
        assert_eq!(cfg.output_path.as_deref(), Some(Path::new("/tmp/x.csv")));
        cfg.validate().unwrap();
    }

    #[test]
    fn unknown_key_is_error() {
        let err = ExperimentConfig::parse("trails = 10\n").unwrap_err();
        assert!(err.to_string().contains("unknown config key `trails`"), "{err}");
        assert!(ExperimentConfig::parse("just words\n").is_err());
    }

    #[test]
    fn validation() {
        let ok = ExperimentConfig::desk();
        ok.validate().unwrap();
        let mut c = ok.clone();
        c.colour_counts = vec![1];
        assert!(c.validate().is_err());
        let mut c = ok.clone();
        c.trials = 1;
        assert!(c.validate().is_err());
        let mut c = ok.clone();
        c.lengths = LengthRange::new(0, 10, 1);
        assert!(c.validate().is_err());
        let mut c = ok.clone();
        c.lengths = LengthRange::new(10, 5, 1);
        assert!(c.validate().is_err());
        let mut c = ok;
        c.lengths = LengthRange::single(MAX_CELL_LENGTH + 1);
        assert!(c.validate().is_err());
    }
}
