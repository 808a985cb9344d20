use num_traits::One;

use crate::error::{PerronError, Result};
use crate::expansion::{Digit, DigitRule, DigitWord};

use super::predicate::DigitPredicate;

/// Depth-first, lexicographic stream of the compatible rank-`k` words with
/// every digit at most `digit_cap`.
///
/// Prefixes rejected by the predicate are pruned. A prefix whose next
/// admissible digit already exceeds the cap is a dead end; the count is
/// available from [`BaseStream::dead_ends`] and signals that the cap is too
/// small for the rule.
pub struct BaseStream<'a> {
    rule: &'a DigitRule,
    predicate: &'a DigitPredicate,
    rank: usize,
    cap: Digit,
    word: DigitWord,
    // next candidate digit and last candidate at each depth 0..=word.len()
    cursor: Vec<Digit>,
    limit: Vec<Digit>,
    dead_ends: u64,
    done: bool,
}

pub fn enumerate_compatible_bases<'a>(
    rule: &'a DigitRule,
    predicate: &'a DigitPredicate,
    rank: usize,
    digit_cap: u64,
) -> Result<BaseStream<'a>> {
    if rank == 0 {
        return Err(PerronError::domain("rank must be at least 1"));
    }
    let cap = Digit::from(digit_cap);
    let first = rule.phi0() + 1u32;
    if cap < first {
        return Err(PerronError::domain(format!(
            "digit cap {digit_cap} is below the smallest first digit {first}"
        )));
    }
    let mut stream = BaseStream {
        rule,
        predicate,
        rank,
        cap,
        word: DigitWord::empty(),
        cursor: Vec::new(),
        limit: Vec::new(),
        dead_ends: 0,
        done: false,
    };
    stream.open_level(first);
    Ok(stream)
}

impl BaseStream<'_> {
    /// Prefixes shorter than the rank that had no digit below the cap.
    pub fn dead_ends(&self) -> u64 {
        self.dead_ends
    }

    /// Starts scanning the digits after the current word, from `start` on.
    fn open_level(&mut self, start: Digit) {
        let (lo, hi) = self.predicate.next_digit_bounds(&self.word);
        let start = match lo {
            Some(lo) if lo > start => lo,
            _ => start,
        };
        let limit = match hi {
            Some(hi) if hi < self.cap => hi,
            _ => self.cap.clone(),
        };
        self.cursor.push(start);
        self.limit.push(limit);
    }

    fn backtrack(&mut self) {
        self.cursor.pop();
        self.limit.pop();
        if self.word.pop().is_none() {
            self.done = true;
        }
    }
}

impl Iterator for BaseStream<'_> {
    type Item = Result<DigitWord>;

    fn next(&mut self) -> Option<Result<DigitWord>> {
        while !self.done {
            if self.word.len() == self.rank {
                let out = self.word.clone();
                self.backtrack();
                return Some(Ok(out));
            }
            let depth = self.word.len();
            let c = self.cursor[depth].clone();
            if c > self.limit[depth] {
                self.backtrack();
                continue;
            }
            self.cursor[depth] = &c + Digit::one();
            let candidate = self.word.extended(c);
            if !self.predicate.extends(&candidate) {
                continue;
            }
            if candidate.len() < self.rank {
                let r = match self.rule.next_value(candidate.digits()) {
                    Ok(r) => r,
                    Err(e) => {
                        self.done = true;
                        return Some(Err(e));
                    }
                };
                let start = r + 1u32;
                if start > self.cap {
                    self.dead_ends += 1;
                    continue;
                }
                self.word = candidate;
                self.open_level(start);
            } else {
                self.word = candidate;
                self.cursor.push(Digit::one());
                self.limit.push(Digit::one());
            }
        }
        None
    }
}
