use num_traits::One;

use crate::error::{PerronError, Result};
use crate::expansion::{Digit, DigitRule, DigitWord, Sign};
use crate::rational::ExactQ;

use super::family::{End, FamilySet};

/// Lazy split of an unbounded family set `M` into consecutive bounded blocks
/// `M_j = t_j ..= t_{j+1} - 1` with `sum_j |M_j|^alpha < (1 + eps) |M|^alpha`.
///
/// `s` is the smallest natural with `sum_{j>=1} s^{-j alpha} = 1/(s^alpha - 1) < eps`,
/// and each `t_{j+1}` is the smallest digit whose tail is shorter than
/// `1/(s+1)` of the tail at `t_j`. The tail from digit `t` has length
/// `F/(t-1)`, so `t_{j+1} = (s+1)(t_j - 1) + 2`.
#[derive(Clone, Debug)]
pub struct SplitStream {
    sign: Sign,
    prefix: DigitWord,
    factor: ExactQ,
    s: u64,
    alpha: f64,
    next_start: Digit,
}

/// Smallest natural `s >= 2` with `1/(s^alpha - 1) < eps`.
pub fn minimal_ratio_base(alpha: f64, eps: f64) -> Result<u64> {
    if !(alpha > 0.0 && alpha.is_finite()) || !(eps > 0.0 && eps.is_finite()) {
        return Err(PerronError::domain(format!(
            "alpha and eps must be positive (alpha = {alpha}, eps = {eps})"
        )));
    }
    let ok = |s: u64| 1.0 / ((s as f64).powf(alpha) - 1.0) < eps;
    let guess = (1.0 + 1.0 / eps).powf(1.0 / alpha);
    if !guess.is_finite() || guess > 1e15 {
        return Err(PerronError::domain(format!(
            "alpha = {alpha}, eps = {eps} need a ratio base beyond 10^15"
        )));
    }
    let mut s = (guess.floor() as u64).saturating_sub(1).max(2);
    while !ok(s) {
        s += 1;
    }
    Ok(s)
}

/// Splits the unbounded family set `fs` into bounded blocks whose α-cost
/// stays below `(1 + eps) |fs|^alpha`.
pub fn split_to_finite(
    rule: &DigitRule,
    fs: &FamilySet,
    alpha: f64,
    eps: f64,
) -> Result<SplitStream> {
    if fs.end != End::Unbounded {
        return Err(PerronError::domain(
            "split_to_finite needs an unbounded family set",
        ));
    }
    let s = minimal_ratio_base(alpha, eps)?;
    let factor = fs.prefix_factor(rule)?;
    Ok(SplitStream {
        sign: fs.sign,
        prefix: fs.prefix.clone(),
        factor,
        s,
        alpha,
        next_start: fs.start.clone(),
    })
}

impl SplitStream {
    pub fn ratio_base(&self) -> u64 {
        self.s
    }

    /// Digit where the next block starts.
    pub fn next_start(&self) -> &Digit {
        &self.next_start
    }

    /// Exact length of the part of the set not yet emitted.
    pub fn residue_diameter(&self) -> ExactQ {
        &self.factor / ExactQ::from_natural(&(&self.next_start - 1u32))
    }

    /// Upper bound on the α-cost of all blocks not yet emitted: each later
    /// block is shorter than `1/s` of the one before and the next block is
    /// shorter than the residue, so the cost is below `R^alpha s^alpha / (s^alpha - 1)`.
    pub fn residue_cost_bound(&self) -> f64 {
        let sa = (self.s as f64).powf(self.alpha);
        self.residue_diameter().powf(self.alpha) * sa / (sa - 1.0)
    }

    /// Exact length of a block emitted by this stream.
    pub fn block_diameter(&self, block: &FamilySet) -> ExactQ {
        let End::Digit(end) = &block.end else {
            return &self.factor / ExactQ::from_natural(&(&block.start - 1u32));
        };
        let below = ExactQ::from_natural(&(&block.start - 1u32)).recip();
        &self.factor * (below - ExactQ::from_natural(end).recip())
    }
}

impl Iterator for SplitStream {
    type Item = FamilySet;

    fn next(&mut self) -> Option<FamilySet> {
        let start = self.next_start.clone();
        let after: Digit = (&start - 1u32) * Digit::from(self.s + 1) + 2u32;
        let end: Digit = &after - Digit::one();
        self.next_start = after;
        Some(FamilySet::bounded(
            self.sign,
            self.prefix.clone(),
            start,
            end,
        ))
    }
}
