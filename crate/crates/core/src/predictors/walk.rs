//! The MJRTY counter as a reflected random walk.

use super::{require, Prediction};
use crate::counters::Algorithm;
use crate::error::{Error, Result};

/// Default bound on `n` for [`expected_zeros_exact`].
pub const ZEROS_DEFAULT_CAP: u64 = 100_000;

/// Largest row index accepted by [`catalan_triangle`].
pub const CATALAN_MAX_ROW: u32 = 30;

/// Probabilities below this are dropped from the top of the DP state range.
const NEGLIGIBLE_MASS: f64 = 1e-30;

/// Step probabilities of the candidate counter once a candidate is held.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WalkParams {
    pub m: u32,
    /// Next ball matches the candidate.
    pub up: f64,
    /// Next ball differs.
    pub down: f64,
}

impl WalkParams {
    pub fn new(m: u32) -> Result<Self> {
        require(m >= 1, || "colour count must be at least 1".into())?;
        let m_f = f64::from(m);
        Ok(WalkParams {
            m,
            up: 1.0 / m_f,
            down: (m_f - 1.0) / m_f,
        })
    }

    /// Expected steps from 1 to 0, `1/(q - p)`; infinite unless the walk drifts down.
    pub fn hitting_time(&self) -> Result<f64> {
        require(self.m >= 3, || {
            format!("hitting time is infinite for m = {} (needs m >= 3)", self.m)
        })?;
        let m = f64::from(self.m);
        Ok(m / (m - 2.0))
    }
}

/// `m/(m-2)`: expected draws for the counter to fall from one to zero.
pub fn hitting_time(m: u32) -> Result<f64> {
    WalkParams::new(m)?.hitting_time()
}

/// Heuristic MJRTY cost `2n - 1 - n/(1 + m/(m-2))`.
///
/// Terms: `phase1 = n - zeros`, `phase2 = n`, `constant = -1`.
pub fn predict_mjrty(n: u64, m: u32) -> Result<Prediction> {
    require(n >= 1, || "stream length must be at least 1".into())?;
    let t = hitting_time(m)?;
    let n_f = n as f64;
    let zeros = n_f / (1.0 + t);
    Ok(Prediction::from_terms(
        Algorithm::Mjrty,
        n,
        m,
        vec![("phase1", n_f - zeros), ("phase2", n_f), ("constant", -1.0)],
        vec![("expected_zeros", zeros), ("hitting_time", t)],
    ))
}

/// Exact expected number of draws at which the MJRTY counter is zero.
pub fn expected_zeros_exact(n: u64, m: u32) -> Result<f64> {
    expected_zeros_exact_capped(n, m, ZEROS_DEFAULT_CAP)
}

/// Dynamic programme over the counter distribution. Zero always moves to one;
/// `k >= 1` moves up with probability `1/m` and down otherwise.
pub fn expected_zeros_exact_capped(n: u64, m: u32, cap: u64) -> Result<f64> {
    require(m >= 2, || format!("need at least 2 colours, got {m}"))?;
    if n > cap {
        return Err(Error::ResourceLimit {
            what: "exact expected zeros",
            requested: n.into(),
            cap: cap.into(),
        });
    }
    let walk = WalkParams::new(m)?;
    let n = n as usize;
    let mut dist = vec![0.0f64; n + 2];
    let mut next = vec![0.0f64; n + 2];
    dist[0] = 1.0;
    // highest state with non-negligible mass in `dist`, and the stale extent of `next`
    let mut hi = 0usize;
    let mut stale = 0usize;
    let mut zeros = 0.0;
    for _ in 0..n {
        zeros += dist[0];
        next[..=stale.max(hi + 1)].fill(0.0);
        next[1] += dist[0];
        for k in 1..=hi {
            let mass = dist[k];
            next[k + 1] += mass * walk.up;
            next[k - 1] += mass * walk.down;
        }
        stale = hi;
        hi += 1;
        while hi > 0 && next[hi] < NEGLIGIBLE_MASS {
            next[hi] = 0.0;
            hi -= 1;
        }
        std::mem::swap(&mut dist, &mut next);
    }
    Ok(zeros)
}

/// Number of lattice paths of length `2i` with `k` returns to zero
/// (the Catalan triangle), via `T(i,k) = T(i,k+1) + T(i-1,k-1)`.
pub fn catalan_triangle(i: u32, k: u32) -> Result<u64> {
    require(i <= CATALAN_MAX_ROW, || {
        format!("row {i} exceeds maximum {CATALAN_MAX_ROW}")
    })?;
    require(k <= i, || format!("column {k} exceeds row {i}"))?;
    let i = i as usize;
    let mut prev = vec![1u64];
    for row in 1..=i {
        let mut cur = vec![0u64; row + 2];
        for col in (1..=row).rev() {
            cur[col] = cur[col + 1] + prev.get(col - 1).copied().unwrap_or(0);
        }
        cur.truncate(row + 1);
        prev = cur;
    }
    Ok(prev[k as usize])
}
