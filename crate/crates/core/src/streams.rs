//! Colour streams: generation, exhaustive enumeration and the brute-force
//! majority oracle every algorithm is checked against.
//!
//! Random streams come from ChaCha8 (`rand_chacha`) seeded with
//! `seed_from_u64`, sampling each colour uniformly from `[0, m)` with
//! `rand`'s integer `Uniform`. Both are portable and value-stable for a
//! pinned crate version, so a `(length, colours, seed)` triple always yields
//! the same stream.

use std::fmt;

use rand::distr::{Distribution, Uniform};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Default upper bound on `colours^length` for [`enumerate_streams`].
pub const DEFAULT_ENUMERATION_CAP: u128 = 1 << 24;

/// A colour identifier in `[0, m)`. Only equality is meaningful.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Colour(pub u32);

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite sequence of balls, each carrying one of `m` colours.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColourStream {
    colours: Vec<Colour>,
    m: u32,
}

impl ColourStream {
    /// Builds a stream, rejecting `m = 0` and any id outside `[0, m)`.
    pub fn new(ids: Vec<u32>, m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidArgument("colour count must be at least 1".into()));
        }
        if let Some(bad) = ids.iter().find(|&&c| c >= m) {
            return Err(Error::InvalidArgument(format!(
                "colour id {bad} out of range for {m} colours"
            )));
        }
        Ok(Self {
            colours: ids.into_iter().map(Colour).collect(),
            m,
        })
    }

    /// Number of balls `n`.
    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    /// Declared colour count `m`.
    pub fn colour_count(&self) -> u32 {
        self.m
    }

    pub fn colours(&self) -> &[Colour] {
        &self.colours
    }

    pub fn ids(&self) -> impl Iterator<Item = u32> + '_ {
        self.colours.iter().map(|c| c.0)
    }
}

/// Result of a majority query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MajorityOutcome {
    Majority(Colour),
    NoMajority,
}

impl MajorityOutcome {
    pub fn colour(self) -> Option<Colour> {
        match self {
            MajorityOutcome::Majority(c) => Some(c),
            MajorityOutcome::NoMajority => None,
        }
    }
}

/// Draws `length` colours independently and uniformly from `[0, colours)`.
pub fn generate_stream(length: usize, colours: u32, seed: u64) -> Result<ColourStream> {
    if colours == 0 {
        return Err(Error::InvalidArgument("colour count must be at least 1".into()));
    }
    let dist = Uniform::new(0, colours).expect("non-empty range");
    let rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(ColourStream {
        colours: dist.sample_iter(rng).take(length).map(Colour).collect(),
        m: colours,
    })
}

/// All `colours^length` streams in lexicographic order, using the default cap.
pub fn enumerate_streams(length: usize, colours: u32) -> Result<StreamEnumerator> {
    enumerate_streams_capped(length, colours, DEFAULT_ENUMERATION_CAP)
}

/// As [`enumerate_streams`] with an explicit cap on the number of streams.
pub fn enumerate_streams_capped(length: usize, colours: u32, cap: u128) -> Result<StreamEnumerator> {
    if colours == 0 {
        return Err(Error::InvalidArgument("colour count must be at least 1".into()));
    }
    let total = (colours as u128)
        .checked_pow(length.try_into().unwrap_or(u32::MAX))
        .unwrap_or(u128::MAX);
    if total > cap {
        return Err(Error::ResourceLimit {
            what: "stream enumeration",
            requested: total,
            cap,
        });
    }
    Ok(StreamEnumerator {
        current: Some(vec![0; length]),
        m: colours,
        remaining: total,
    })
}

/// Odometer over `[0, m)^n`; the last position varies fastest.
#[derive(Debug, Clone)]
pub struct StreamEnumerator {
    current: Option<Vec<u32>>,
    m: u32,
    remaining: u128,
}

impl Iterator for StreamEnumerator {
    type Item = ColourStream;

    fn next(&mut self) -> Option<ColourStream> {
        let ids = self.current.take()?;
        self.remaining -= 1;
        let mut next = ids.clone();
        let mut advanced = false;
        for slot in next.iter_mut().rev() {
            if *slot + 1 < self.m {
                *slot += 1;
                advanced = true;
                break;
            }
            *slot = 0;
        }
        if advanced {
            self.current = Some(next);
        }
        Some(ColourStream {
            colours: ids.into_iter().map(Colour).collect(),
            m: self.m,
        })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = usize::try_from(self.remaining).unwrap_or(usize::MAX);
        (n, Some(n))
    }
}

/// Ground truth: the colour occurring more than `⌊n/2⌋` times, if any.
pub fn brute_force_majority(stream: &ColourStream) -> MajorityOutcome {
    let mut counts = vec![0usize; stream.m as usize];
    for c in stream.colours() {
        counts[c.0 as usize] += 1;
    }
    let threshold = stream.len() / 2;
    counts
        .iter()
        .position(|&k| k > threshold)
        .map_or(MajorityOutcome::NoMajority, |c| {
            MajorityOutcome::Majority(Colour(c as u32))
        })
}

/// SplitMix64 output function; a bijection on `u64`.
fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed for one trial of one experiment cell.
///
/// The result is `mix64((cell << 32 | trial) + mix64(master))` with wrapping
/// addition. Packing is injective on 32-bit indices and both remaining steps
/// are bijections, so distinct `(cell, trial)` pairs never collide under a
/// fixed master seed.
pub fn derive_trial_seed(master_seed: u64, cell_id: u32, trial_index: u32) -> u64 {
    let key = (u64::from(cell_id) << 32) | u64::from(trial_index);
    mix64(key.wrapping_add(mix64(master_seed)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn ids(s: &ColourStream) -> Vec<u32> {
        s.ids().collect()
    }

    #[test]
    fn single_colour_is_all_zeros() {
        let s = generate_stream(5, 1, 1234).unwrap();
        assert_eq!(ids(&s), vec![0; 5]);
    }

    #[test]
    fn zero_length_is_empty() {
        let s = generate_stream(0, 3, 7).unwrap();
        assert!(s.is_empty());
        assert_eq!(s.colour_count(), 3);
    }

    #[test]
    fn generation_is_deterministic() {
        let a = generate_stream(1000, 3, 99).unwrap();
        let b = generate_stream(1000, 3, 99).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, generate_stream(1000, 3, 100).unwrap());
    }

    #[test]
    fn zero_colours_rejected() {
        assert!(matches!(generate_stream(3, 0, 0), Err(Error::InvalidArgument(_))));
        assert!(matches!(enumerate_streams(3, 0), Err(Error::InvalidArgument(_))));
        assert!(ColourStream::new(vec![0, 3], 3).is_err());
    }

    #[test]
    fn enumerate_two_by_two() {
        let all: Vec<_> = enumerate_streams(2, 2).unwrap().map(|s| ids(&s)).collect();
        assert_eq!(all, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn enumerate_empty_product() {
        let all: Vec<_> = enumerate_streams(0, 3).unwrap().collect();
        assert_eq!(all.len(), 1);
        assert!(all[0].is_empty());
    }

    #[test]
    fn enumerate_bounds() {
        let all: Vec<_> = enumerate_streams(3, 2).unwrap().map(|s| ids(&s)).collect();
        assert_eq!(all.len(), 8);
        assert_eq!(all[0], vec![0, 0, 0]);
        assert_eq!(all[7], vec![1, 1, 1]);
    }

    #[test]
    fn enumerate_counts_and_distinct() {
        for (n, m) in [(16usize, 2u32), (10, 3), (8, 4), (4, 16)] {
            let all: Vec<_> = enumerate_streams(n, m).unwrap().map(|s| ids(&s)).collect();
            assert_eq!(all.len() as u64, u64::from(m).pow(n as u32));
            assert!(all.windows(2).all(|w| w[0] < w[1]), "lexicographic ({n},{m})");
        }
    }

    #[test]
    fn enumerate_cap_is_reported() {
        match enumerate_streams(25, 2) {
            Err(Error::ResourceLimit { cap, requested, .. }) => {
                assert_eq!(cap, 1 << 24);
                assert_eq!(requested, 1 << 25);
            }
            other => panic!("expected resource limit, got {other:?}"),
        }
        assert!(enumerate_streams_capped(3, 2, 7).is_err());
        assert!(enumerate_streams_capped(3, 2, 8).is_ok());
    }

    #[test]
    fn brute_force_examples() {
        let s = ColourStream::new(vec![0, 1, 0], 2).unwrap();
        assert_eq!(brute_force_majority(&s), MajorityOutcome::Majority(Colour(0)));
        let s = ColourStream::new(vec![0, 1], 2).unwrap();
        assert_eq!(brute_force_majority(&s), MajorityOutcome::NoMajority);
        let s = ColourStream::new(vec![], 2).unwrap();
        assert_eq!(brute_force_majority(&s), MajorityOutcome::NoMajority);
    }

    #[test]
    fn brute_force_matches_count_recomputation() {
        for (n, m) in [(10usize, 2u32), (7, 3), (5, 4)] {
            for s in enumerate_streams(n, m).unwrap() {
                let v: Vec<u32> = s.ids().collect();
                let winner = (0..m).find(|&c| 2 * v.iter().filter(|&&x| x == c).count() > n);
                assert_eq!(brute_force_majority(&s).colour().map(|c| c.0), winner);
            }
        }
    }

    #[test]
    fn trial_seeds_are_distinct() {
        let s = 0xdead_beef;
        assert_eq!(derive_trial_seed(s, 3, 4), derive_trial_seed(s, 3, 4));
        assert_ne!(derive_trial_seed(s, 0, 0), derive_trial_seed(s, 0, 1));
        assert_ne!(derive_trial_seed(s, 1, 0), derive_trial_seed(s, 0, 1));

        let mut seen = HashSet::with_capacity(1 << 20);
        for cell in 0..1000 {
            for trial in 0..1000 {
                assert!(seen.insert(derive_trial_seed(42, cell, trial)));
            }
        }
    }
}
