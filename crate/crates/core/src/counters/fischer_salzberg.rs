//! Fischer and Salzberg's list-and-bucket algorithm.

use super::{AlgorithmResult, Comparator, ComparisonTally};
use crate::counters::Algorithm;
use crate::streams::{ColourStream, MajorityOutcome};

/// Builds a list in which no two neighbours share a colour, parking clashing
/// balls in a bucket, then tries to re-insert the bucket from the list tail.
///
/// Phase 1 always spends `n - 1` comparisons. After a ball joins the list, a
/// bucket ball (if any) is appended behind it.
///
/// Phase 2 pops the list tail and compares it to the candidate, including the
/// final list element which is the candidate itself. A match discards the
/// next ball too; a mismatch consumes a bucket ball and the run ends with no
/// majority if none is left. If a match leaves nothing to discard (odd `n`
/// with the candidate on the first, last and every second position) the
/// candidate is the majority. Otherwise a non-empty bucket at the end means a
/// majority.
pub fn run_fischer_salzberg(stream: &ColourStream) -> AlgorithmResult {
    let mut balls = stream.colours().iter().copied();
    let mut cmp = Comparator::default();

    let Some(first) = balls.next() else {
        return AlgorithmResult {
            algorithm: Algorithm::FischerSalzberg,
            outcome: MajorityOutcome::NoMajority,
            tally: ComparisonTally::default(),
        };
    };

    let mut list = Vec::with_capacity(stream.len());
    let mut bucket = Vec::new();
    list.push(first);
    for ball in balls {
        let tail = *list.last().expect("list is never empty in phase 1");
        if cmp.eq(ball, tail) {
            bucket.push(ball);
        } else {
            list.push(ball);
            if let Some(parked) = bucket.pop() {
                list.push(parked);
            }
        }
    }
    let phase1 = cmp.take();

    let candidate = *list.last().expect("non-empty stream");
    let mut outcome = None;
    while let Some(ball) = list.pop() {
        if cmp.eq(ball, candidate) {
            if list.pop().is_none() {
                outcome = Some(MajorityOutcome::Majority(candidate));
                break;
            }
        } else if bucket.pop().is_none() {
            outcome = Some(MajorityOutcome::NoMajority);
            break;
        }
    }
    let outcome = outcome.unwrap_or(if bucket.is_empty() {
        MajorityOutcome::NoMajority
    } else {
        MajorityOutcome::Majority(candidate)
    });

    AlgorithmResult {
        algorithm: Algorithm::FischerSalzberg,
        outcome,
        tally: ComparisonTally {
            phase1,
            phase2: cmp.take(),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::streams::Colour;

    fn go(ids: &[u32], m: u32) -> AlgorithmResult {
        run_fischer_salzberg(&ColourStream::new(ids.to_vec(), m).unwrap())
    }

    #[test]
    fn alternating_odd_exception() {
        let r = go(&[0, 1, 0], 2);
        assert_eq!(r.outcome, MajorityOutcome::Majority(Colour(0)));
        assert_eq!((r.tally.phase1, r.tally.phase2, r.tally.total()), (2, 2, 4));
    }

    #[test]
    fn pair_of_distinct() {
        let r = go(&[0, 1], 2);
        assert_eq!(r.outcome, MajorityOutcome::NoMajority);
        assert_eq!((r.tally.phase1, r.tally.phase2, r.tally.total()), (1, 1, 2));
    }

    #[test]
    fn two_pairs() {
        let r = go(&[0, 0, 1, 1], 2);
        assert_eq!(r.outcome, MajorityOutcome::NoMajority);
        assert_eq!((r.tally.phase1, r.tally.phase2, r.tally.total()), (3, 2, 5));
    }

    #[test]
    fn bucket_left_over_is_majority() {
        let r = go(&[0, 0, 0, 1], 2);
        assert_eq!(r.outcome, MajorityOutcome::Majority(Colour(0)));
        assert_eq!(r.tally.phase1, 3);
    }

    #[test]
    fn single_ball() {
        let r = go(&[1], 2);
        assert_eq!(r.outcome, MajorityOutcome::Majority(Colour(1)));
        assert_eq!((r.tally.phase1, r.tally.phase2), (0, 1));
    }
}
