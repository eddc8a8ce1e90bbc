//! Matula's tournament algorithm.

use super::{AlgorithmResult, Comparator, ComparisonTally};
use crate::counters::Algorithm;
use crate::streams::{Colour, ColourStream, MajorityOutcome};

/// Two balls of different colours, each standing for `2^level` balls.
#[derive(Debug, Clone, Copy)]
struct DiscardedPair {
    first: Colour,
    second: Colour,
    level: u32,
}

/// Pairs entries level by level; equal pairs merge into one entry a level up,
/// unequal pairs are set aside with their level. An odd entry stays behind.
///
/// The candidate is the leftover on the highest level. Verification checks
/// every other leftover (down to level 0) against it, then each discarded
/// pair, comparing the second member only when the first does not match.
///
/// With no leftover anywhere the candidate is the first entry of the highest
/// level, which was discarded in a pair. That pair is credited without a
/// comparison and the remaining pairs are scanned as usual; the count can
/// never pass `n/2`, so the outcome is no majority.
pub fn run_tournament(stream: &ColourStream) -> AlgorithmResult {
    let mut cmp = Comparator::default();
    let mut discarded = Vec::new();
    let mut leftovers: Vec<Option<Colour>> = Vec::new();

    let mut level_entries: Vec<Colour> = stream.colours().to_vec();
    let mut level = 0u32;
    while !level_entries.is_empty() {
        let mut promoted = Vec::with_capacity(level_entries.len() / 2);
        let mut pairs = level_entries.chunks_exact(2);
        for pair in pairs.by_ref() {
            if cmp.eq(pair[0], pair[1]) {
                promoted.push(pair[0]);
            } else {
                discarded.push(DiscardedPair {
                    first: pair[0],
                    second: pair[1],
                    level,
                });
            }
        }
        leftovers.push(pairs.remainder().first().copied());
        level_entries = promoted;
        level += 1;
    }
    let phase1 = cmp.take();

    let n = stream.len() as u64;
    let mut outcome = MajorityOutcome::NoMajority;
    // (candidate, its weight, levels below it to check, pair it came from)
    let chosen = match leftovers.iter().rposition(Option::is_some) {
        Some(top) => leftovers[top].map(|c| (c, 1u64 << top, top, None)),
        // first pair of the highest level, i.e. that level's first entry
        None => discarded
            .iter()
            .enumerate()
            .rev()
            .max_by_key(|(_, p)| p.level)
            .map(|(i, p)| (p.first, 1u64 << p.level, 0, Some(i))),
    };
    if let Some((candidate, mut count, below, own_pair)) = chosen {
        for (i, entry) in leftovers[..below].iter().enumerate().rev() {
            if let Some(ball) = *entry {
                if cmp.eq(ball, candidate) {
                    count += 1 << i;
                }
            }
        }
        for (i, pair) in discarded.iter().enumerate() {
            if Some(i) == own_pair {
                continue;
            }
            if cmp.eq(pair.first, candidate) || cmp.eq(pair.second, candidate) {
                count += 1 << pair.level;
            }
        }
        if count > n / 2 {
            outcome = MajorityOutcome::Majority(candidate);
        }
    }

    AlgorithmResult {
        algorithm: Algorithm::Tournament,
        outcome,
        tally: ComparisonTally {
            phase1,
            phase2: cmp.take(),
        },
    }
}
