//! Independent oracles shared by the integration suites.
#![allow(dead_code)]

use majority::exec::Execution;
use majority::streams::{brute_force_majority, derive_trial_seed, enumerate_streams, generate_stream};
use majority::{run_mjrty, MajorityOutcome};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `(P(majority), E[majority count / n | majority])` by walking every stream.
pub fn exhaustive_pmaj_rho(n: usize, m: u32) -> (f64, f64) {
    let mut total = 0u64;
    let mut with_majority = 0u64;
    let mut majority_balls = 0u64;
    for s in enumerate_streams(n, m).unwrap() {
        total += 1;
        if let MajorityOutcome::Majority(c) = brute_force_majority(&s) {
            with_majority += 1;
            majority_balls += s.ids().filter(|&x| x == c.0).count() as u64;
        }
    }
    let p = with_majority as f64 / total as f64;
    let rho = majority_balls as f64 / (n as f64 * with_majority as f64);
    (p, rho)
}

/// Exact mean number of draws with a zero counter, averaged over every stream.
pub fn exhaustive_zeros(n: usize, m: u32) -> f64 {
    let mut total = 0u64;
    let mut zeros = 0u64;
    for s in enumerate_streams(n, m).unwrap() {
        total += 1;
        let mut counter = 0u64;
        let mut candidate = u32::MAX;
        for x in s.ids() {
            if counter == 0 {
                zeros += 1;
                candidate = x;
                counter = 1;
            } else if x == candidate {
                counter += 1;
            } else {
                counter -= 1;
            }
        }
    }
    zeros as f64 / total as f64
}

pub fn mean_and_se(samples: &[f64]) -> (f64, f64) {
    let n = samples.len() as f64;
    let mean = samples.iter().sum::<f64>() / n;
    let var = samples.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, (var / n).sqrt())
}

/// Zero-counter draws of MJRTY, read off its first-phase tally, over random streams.
pub fn monte_carlo_zeros(m: u32, n: usize, trials: u32, seed: u64) -> (f64, f64) {
    let idx: Vec<u32> = (0..trials).collect();
    let samples = Execution::Auto.map(&idx, |&t| {
        let s = generate_stream(n, m, derive_trial_seed(seed, m, t)).unwrap();
        (n as u64 - run_mjrty(&s).tally.phase1) as f64
    });
    mean_and_se(&samples)
}

/// First-passage steps from 1 to 0 for a walk moving up with probability `1/m`.
pub fn monte_carlo_hitting_time(m: u32, walks: u32, seed: u64) -> (f64, f64) {
    const BATCH: u32 = 10_000;
    let batches: Vec<u32> = (0..walks.div_ceil(BATCH)).collect();
    let per_batch = Execution::Auto.map(&batches, |&b| {
        let mut rng = ChaCha8Rng::seed_from_u64(derive_trial_seed(seed, m, b));
        let count = BATCH.min(walks - b * BATCH);
        (0..count)
            .map(|_| {
                let (mut pos, mut steps) = (1u64, 0u64);
                while pos > 0 {
                    steps += 1;
                    if rng.random_range(0..m) == 0 {
                        pos += 1;
                    } else {
                        pos -= 1;
                    }
                }
                steps as f64
            })
            .collect::<Vec<_>>()
    });
    mean_and_se(&per_batch.concat())
}

/// Dyck paths of semilength `i` bucketed by number of returns to zero.
pub fn dyck_returns(i: u32) -> Vec<u64> {
    let mut counts = vec![0u64; i as usize + 1];
    for bits in 0u64..1 << (2 * i) {
        let (mut h, mut returns, mut ok) = (0i64, 0usize, true);
        for step in 0..2 * i {
            h += if bits >> step & 1 == 1 { 1 } else { -1 };
            if h < 0 {
                ok = false;
                break;
            }
            returns += usize::from(h == 0);
        }
        if ok && h == 0 {
            counts[returns] += 1;
        }
    }
    counts
}
