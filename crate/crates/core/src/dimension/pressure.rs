use std::sync::OnceLock;

use rayon::prelude::*;

use crate::coverings::compensated_sum;
use crate::error::{PerronError, Result};
use crate::expansion::{cylinder, DigitRule, DigitWord, Sign};
use crate::rational::ExactQ;

use super::enumerate::enumerate_compatible_bases;
use super::predicate::DigitPredicate;

/// Rank-`k`, cap-`N` approximation of a dimension.
#[derive(Clone, Debug, PartialEq)]
pub struct DimensionEstimate {
    pub rank: usize,
    pub digit_cap: u64,
    pub s_value: f64,
    /// `|sum |Δ|^s - 1|` at `s_value`.
    pub residual: f64,
    pub bases_count: usize,
    /// Prefixes that could not be extended below the cap.
    pub dead_ends: u64,
}

impl DimensionEstimate {
    /// True when the cap cut off every digit at some position of some
    /// compatible prefix.
    pub fn cap_too_small(&self) -> bool {
        self.dead_ends > 0
    }
}

const CHUNK: usize = 4096;
const MAX_STEPS: usize = 400;

fn pool() -> &'static rayon::ThreadPool {
    static POOL: OnceLock<rayon::ThreadPool> = OnceLock::new();
    POOL.get_or_init(|| {
        let threads = std::env::var("PERRON_THREADS")
            .ok()
            .and_then(|v| v.parse::<usize>().ok())
            .filter(|&n| n > 0)
            .unwrap_or(0);
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool")
    })
}

/// `sum exp(s * l) - 1` over log-diameters. Chunk boundaries are fixed and
/// chunk sums are combined in order, so the value does not depend on the
/// number of threads.
fn excess(logs: &[f64], s: f64) -> f64 {
    let partial: Vec<f64> = pool().install(|| {
        logs.par_chunks(CHUNK)
            .map(|chunk| compensated_sum(chunk.iter().map(|l| (s * l).exp())))
            .collect()
    });
    compensated_sum(partial) - 1.0
}

fn log_diameters(rule: &DigitRule, sign: Sign, words: &[DigitWord]) -> Result<Vec<f64>> {
    pool().install(|| {
        words
            .par_iter()
            .map(|w| cylinder(rule, w, sign).map(|c| c.diameter().ln()))
            .collect()
    })
}

/// Bisection for the decreasing function `f` on `[lo, hi]` with
/// `f(lo) >= 0 >= f(hi)`. Stops when the bracket is at most `tol` wide and
/// `|f(mid)| <= tol`, or when the bracket cannot be split further.
fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> (f64, f64) {
    let mut mid = 0.5 * (lo + hi);
    let mut value = f(mid);
    for _ in 0..MAX_STEPS {
        if (hi - lo <= tol && value.abs() <= tol) || value == 0.0 {
            break;
        }
        if value > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        let next = 0.5 * (lo + hi);
        if next == lo || next == hi {
            break;
        }
        mid = next;
        value = f(mid);
    }
    (mid, value.abs())
}

/// Root `s` of `sum |Δ_w|^s = 1` over the compatible rank-`k` words with
/// digits at most `digit_cap`, found by bisection on `[0, 1.5]`.
///
/// The sum is evaluated in `f64` from the logarithms of exact diameters with
/// compensated summation. The positive and alternating cylinders of a word
/// have the same diameter, so both signs give bit-identical results.
pub fn pressure_root(
    rule: &DigitRule,
    sign: Sign,
    predicate: &DigitPredicate,
    rank: usize,
    digit_cap: u64,
    tol: f64,
) -> Result<DimensionEstimate> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(PerronError::domain(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let mut stream = enumerate_compatible_bases(rule, predicate, rank, digit_cap)?;
    let words = stream.by_ref().collect::<Result<Vec<_>>>()?;
    let dead_ends = stream.dead_ends();
    let estimate = |s_value, residual| DimensionEstimate {
        rank,
        digit_cap,
        s_value,
        residual,
        bases_count: words.len(),
        dead_ends,
    };
    match words.len() {
        0 => return Ok(estimate(0.0, 0.0)),
        // |Δ|^s = 1 only at s = 0
        1 => return Ok(estimate(0.0, 0.0)),
        _ => {}
    }
    let logs = log_diameters(rule, sign, &words)?;
    let (s, residual) = bisect(|s| excess(&logs, s), 0.0, 1.5, tol);
    Ok(estimate(s, residual))
}

/// Similarity dimension: the `s in [0, 1]` with `sum r_i^s = 1`.
pub fn moran_dimension(ratios: &[ExactQ], tol: f64) -> Result<f64> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(PerronError::domain(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    if ratios.is_empty() {
        return Err(PerronError::domain("ratio list is empty"));
    }
    let zero = ExactQ::zero();
    let one = ExactQ::one();
    if let Some(r) = ratios.iter().find(|r| **r <= zero || **r >= one) {
        return Err(PerronError::domain(format!("ratio {r} is outside (0, 1)")));
    }
    let total = ratios.iter().fold(ExactQ::zero(), |acc, r| acc + r);
    if total > one {
        return Err(PerronError::domain(format!("ratios sum to {total} > 1")));
    }
    if ratios.len() == 1 {
        return Ok(0.0);
    }
    let logs: Vec<f64> = ratios.iter().map(ExactQ::ln).collect();
    let f = |s: f64| compensated_sum(logs.iter().map(|l| (s * l).exp())) - 1.0;
    Ok(bisect(f, 0.0, 1.0, tol).0)
}

/// Exact total length of the compatible rank-`k` cylinders with digits at
/// most `digit_cap`.
pub fn measure_at_rank(
    rule: &DigitRule,
    sign: Sign,
    predicate: &DigitPredicate,
    rank: usize,
    digit_cap: u64,
) -> Result<ExactQ> {
    let mut total = ExactQ::zero();
    for word in enumerate_compatible_bases(rule, predicate, rank, digit_cap)? {
        total = total + cylinder(rule, &word?, sign)?.diameter();
    }
    Ok(total)
}
