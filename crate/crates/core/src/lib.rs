//! Majority-finding algorithms instrumented for comparison counting, together
//! with closed-form average-case predictors, exact combinatorial oracles and a
//! Monte-Carlo harness that checks one against the other.
//!
//! Three deterministic algorithms are provided in [`counters`]: Boyer and
//! Moore's MJRTY, Fischer and Salzberg's list-and-bucket algorithm and Matula's
//! tournament. Each reports its outcome and the number of colour-equality
//! tests spent in the candidate-selection and verification phases.
//!
//! [`predictors`] holds the heuristic expected-comparison formulas and the
//! exact quantities used to check them. [`harness`] runs seeded experiment
//! grids, summarizes them with 99% confidence intervals and writes CSV/JSON
//! reports and SVG figures.
//!
//! All randomness flows through [`streams::generate_stream`], which uses
//! ChaCha8 seeded from a 64-bit value; OS entropy is never consulted.

pub mod counters;
pub mod error;
pub mod exec;
pub mod harness;
pub mod predictors;
pub mod streams;

pub use counters::{run, run_fischer_salzberg, run_mjrty, run_tournament, Algorithm, AlgorithmResult, ComparisonTally};
pub use error::{Error, Result};
pub use predictors::Prediction;
pub use streams::{Colour, ColourStream, MajorityOutcome};
