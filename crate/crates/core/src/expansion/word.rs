use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::PerronError;

/// A single expansion digit. Digits of restricted Oppenheim expansions
/// outgrow 64 bits within twenty ranks, so digits are arbitrary precision.
pub type Digit = BigUint;

/// A finite digit prefix `c_1 ... c_k`. The empty word stands for `(0, 1]`.
///
/// Validity depends on the rule, so it is checked by
/// [`DigitRule::validate_word`](crate::DigitRule::validate_word) rather than
/// on construction.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DigitWord(Vec<Digit>);

impl DigitWord {
    pub fn new(digits: Vec<Digit>) -> Self {
        DigitWord(digits)
    }

    pub fn empty() -> Self {
        DigitWord(Vec::new())
    }

    pub fn from_u64s(digits: &[u64]) -> Self {
        DigitWord(digits.iter().map(|&d| BigUint::from(d)).collect())
    }

    pub fn digits(&self) -> &[Digit] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, d: Digit) {
        self.0.push(d);
    }

    pub fn pop(&mut self) -> Option<Digit> {
        self.0.pop()
    }

    pub fn last(&self) -> Option<&Digit> {
        self.0.last()
    }

    /// A new word with `d` appended.
    pub fn extended(&self, d: Digit) -> Self {
        let mut v = self.0.clone();
        v.push(d);
        DigitWord(v)
    }

    pub fn prefix(&self, len: usize) -> Self {
        DigitWord(self.0[..len].to_vec())
    }

    pub fn into_vec(self) -> Vec<Digit> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Digit> {
        self.0.iter()
    }
}

impl From<Vec<Digit>> for DigitWord {
    fn from(v: Vec<Digit>) -> Self {
        DigitWord(v)
    }
}

impl<'a> IntoIterator for &'a DigitWord {
    type Item = &'a Digit;
    type IntoIter = std::slice::Iter<'a, Digit>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for DigitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl FromStr for DigitWord {
    type Err = PerronError;

    /// Comma-separated naturals, e.g. `"3,9,9"`. The empty string is the empty word.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(DigitWord::empty());
        }
        s.split(',')
            .map(|part| {
                part.trim()
                    .parse::<BigUint>()
                    .map_err(|_| PerronError::Parse(format!("not a digit: {part:?}")))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(DigitWord)
    }
}
