//! Boyer and Moore's MJRTY.

use super::{AlgorithmResult, Comparator, ComparisonTally};
use crate::counters::Algorithm;
use crate::streams::{ColourStream, MajorityOutcome};

/// Pairing pass with a single candidate and counter, then a counting pass
/// that stops as soon as the candidate passes `⌊n/2⌋`.
///
/// The first pass compares every ball except when the counter is zero. The
/// counting pass always runs, also when the counter finishes at zero; its
/// cost is then `n` and the outcome is necessarily no majority.
pub fn run_mjrty(stream: &ColourStream) -> AlgorithmResult {
    let balls = stream.colours();
    let n = balls.len();
    let mut cmp = Comparator::default();

    let mut counter = 0usize;
    let mut candidate = None;
    for &ball in balls {
        match candidate {
            Some(c) if counter > 0 => {
                if cmp.eq(ball, c) {
                    counter += 1;
                } else {
                    counter -= 1;
                }
            }
            _ => {
                candidate = Some(ball);
                counter = 1;
            }
        }
    }
    let phase1 = cmp.take();

    let mut outcome = MajorityOutcome::NoMajority;
    if let Some(c) = candidate {
        let mut seen = 0usize;
        for &ball in balls {
            if cmp.eq(ball, c) {
                seen += 1;
                if seen > n / 2 {
                    outcome = MajorityOutcome::Majority(c);
                    break;
                }
            }
        }
    }

    AlgorithmResult {
        algorithm: Algorithm::Mjrty,
        outcome,
        tally: ComparisonTally {
            phase1,
            phase2: cmp.take(),
        },
    }
}
