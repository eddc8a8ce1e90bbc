use super::{require, Prediction};
use crate::counters::Algorithm;
use crate::error::Result;

fn check_m(m: u32) -> Result<()> {
    require(m >= 1, || "colour count must be at least 1".into())
}

/// Expected first-phase comparisons, `mn/(2m-1)`.
pub fn tournament_first_phase(n: u64, m: u32) -> Result<f64> {
    check_m(m)?;
    let m = f64::from(m);
    Ok(m * n as f64 / (2.0 * m - 1.0))
}

/// Expected comparisons spent on discarded pairs: first-phase comparisons
/// times `(1 - 1/m)` pairs per comparison times `(2 - 1/m)` tests per pair.
pub fn tournament_discarded(n: u64, m: u32) -> Result<f64> {
    let first = tournament_first_phase(n, m)?;
    let m = f64::from(m);
    Ok(first * (1.0 - 1.0 / m) * (2.0 - 1.0 / m))
}

/// One comparison for each level `i` in `0..=⌊log2 n⌋` whose floored
/// expected size `⌊n/(2m)^i⌋` is odd.
pub fn tournament_list_correction(n: u64, m: u32) -> Result<f64> {
    check_m(m)?;
    require(n >= 1, || "stream length must be at least 1".into())?;
    let base = 2 * u64::from(m);
    let mut size = n;
    let mut odd = 0u32;
    for _ in 0..=n.ilog2() {
        odd += (size % 2) as u32;
        size /= base;
    }
    Ok(f64::from(odd))
}

/// Sum of the first-phase, discarded-pair and list terms.
pub fn predict_tournament(n: u64, m: u32) -> Result<Prediction> {
    require(m >= 2, || format!("need at least 2 colours, got {m}"))?;
    let first = tournament_first_phase(n, m)?;
    let discarded = tournament_discarded(n, m)?;
    let lists = tournament_list_correction(n, m)?;
    Ok(Prediction::from_terms(
        Algorithm::Tournament,
        n,
        m,
        vec![("phase1", first), ("phase2_discarded", discarded), ("phase2_lists", lists)],
        vec![],
    ))
}
