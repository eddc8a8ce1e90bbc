//! Comparison-instrumented majority algorithms.
//!
//! Every colour-vs-colour equality test goes through [`Comparator`]; counter
//! arithmetic, list bookkeeping and threshold checks are free.

mod fischer_salzberg;
mod mjrty;
mod tournament;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::streams::{Colour, ColourStream, MajorityOutcome};

pub use fischer_salzberg::run_fischer_salzberg;
pub use mjrty::run_mjrty;
pub use tournament::run_tournament;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Algorithm {
    FischerSalzberg,
    Mjrty,
    Tournament,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::Mjrty, Algorithm::FischerSalzberg, Algorithm::Tournament];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::FischerSalzberg => "fischer_salzberg",
            Algorithm::Mjrty => "mjrty",
            Algorithm::Tournament => "tournament",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "mjrty" | "boyer_moore" => Ok(Algorithm::Mjrty),
            "fischer_salzberg" | "fs" => Ok(Algorithm::FischerSalzberg),
            "tournament" | "matula" => Ok(Algorithm::Tournament),
            other => Err(Error::InvalidArgument(format!("unknown algorithm `{other}`"))),
        }
    }
}

/// Colour-equality tests spent in each phase.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ComparisonTally {
    /// Candidate selection.
    pub phase1: u64,
    /// Verification.
    pub phase2: u64,
}

impl ComparisonTally {
    pub fn total(&self) -> u64 {
        self.phase1 + self.phase2
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlgorithmResult {
    pub algorithm: Algorithm,
    pub outcome: MajorityOutcome,
    pub tally: ComparisonTally,
}

/// Runs `algorithm` on `stream`.
pub fn run(algorithm: Algorithm, stream: &ColourStream) -> AlgorithmResult {
    match algorithm {
        Algorithm::Mjrty => run_mjrty(stream),
        Algorithm::FischerSalzberg => run_fischer_salzberg(stream),
        Algorithm::Tournament => run_tournament(stream),
    }
}

/// Counts equality tests.
#[derive(Debug, Default)]
struct Comparator {
    count: u64,
}

impl Comparator {
    #[inline]
    fn eq(&mut self, a: Colour, b: Colour) -> bool {
        self.count += 1;
        a == b
    }

    /// Returns the count so far and resets it.
    fn take(&mut self) -> u64 {
        std::mem::take(&mut self.count)
    }
}
