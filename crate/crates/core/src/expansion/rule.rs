use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::error::{PerronError, Result};
use crate::expansion::word::{Digit, DigitWord};

/// A user-supplied digit rule `prefix -> r_k`. It must be pure and return a
/// natural `>= 1` for every valid prefix; the empty prefix is never passed
/// (that value is the rule's `phi0`).
pub type CustomFn = dyn Fn(&[Digit]) -> Digit + Send + Sync;

#[derive(Clone)]
pub enum RuleKind {
    /// `r_n = 1`.
    Luroth,
    /// `r_n = c_n - 1`.
    Engel,
    /// `r_n = c_n`.
    EngelMod,
    /// `r_n = c_n`; same numerators as [`RuleKind::EngelMod`], named for its
    /// use with alternating expansions (Perron notation of Pierce digits).
    Pierce,
    /// `r_n = a * c_n + b`.
    OppenheimAffine {
        a: u64,
        b: i64,
    },
    Custom {
        name: String,
        rule: Arc<CustomFn>,
    },
}

impl fmt::Debug for RuleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleKind::Luroth => write!(f, "Luroth"),
            RuleKind::Engel => write!(f, "Engel"),
            RuleKind::EngelMod => write!(f, "EngelMod"),
            RuleKind::Pierce => write!(f, "Pierce"),
            RuleKind::OppenheimAffine { a, b } => write!(f, "OppenheimAffine({a}, {b})"),
            RuleKind::Custom { name, .. } => write!(f, "Custom({name})"),
        }
    }
}

/// The sequence `P = (phi_n)` that turns a digit prefix into the numerator
/// factor of the next series term.
#[derive(Clone, Debug)]
pub struct DigitRule {
    kind: RuleKind,
    phi0: Digit,
}

impl DigitRule {
    pub fn luroth() -> Self {
        Self::with_kind(RuleKind::Luroth)
    }

    pub fn engel() -> Self {
        Self::with_kind(RuleKind::Engel)
    }

    pub fn engel_mod() -> Self {
        Self::with_kind(RuleKind::EngelMod)
    }

    pub fn pierce() -> Self {
        Self::with_kind(RuleKind::Pierce)
    }

    /// Restricted Oppenheim rule `r_n = a c_n + b`. Since every digit is at
    /// least 2, `a >= 0` and `2a + b >= 1` keep the numerators natural.
    pub fn oppenheim(a: u64, b: i64) -> Result<Self> {
        if 2 * i128::from(a) + i128::from(b) < 1 {
            return Err(PerronError::domain(format!(
                "oppenheim rule a*c+b must be >= 1 for all digits c >= 2 (a={a}, b={b})"
            )));
        }
        Ok(Self::with_kind(RuleKind::OppenheimAffine { a, b }))
    }

    pub fn custom(
        name: impl Into<String>,
        phi0: Digit,
        rule: impl Fn(&[Digit]) -> Digit + Send + Sync + 'static,
    ) -> Result<Self> {
        if phi0 < BigUint::one() {
            return Err(PerronError::domain("phi0 must be a natural >= 1"));
        }
        Ok(DigitRule {
            kind: RuleKind::Custom {
                name: name.into(),
                rule: Arc::new(rule),
            },
            phi0,
        })
    }

    fn with_kind(kind: RuleKind) -> Self {
        DigitRule {
            kind,
            phi0: BigUint::one(),
        }
    }

    /// Replaces the constant `phi0` (the numerator of the first term).
    pub fn with_phi0(mut self, phi0: Digit) -> Result<Self> {
        if phi0 < BigUint::one() {
            return Err(PerronError::domain("phi0 must be a natural >= 1"));
        }
        self.phi0 = phi0;
        Ok(self)
    }

    pub fn kind(&self) -> &RuleKind {
        &self.kind
    }

    pub fn phi0(&self) -> &Digit {
        &self.phi0
    }

    /// `r_k` for a prefix assumed valid. Fails only when a rule produces a
    /// value below 1.
    pub(crate) fn next_value(&self, prefix: &[Digit]) -> Result<Digit> {
        let Some(last) = prefix.last() else {
            return Ok(self.phi0.clone());
        };
        let value = match &self.kind {
            RuleKind::Luroth => BigUint::one(),
            RuleKind::Engel => last - 1u32,
            RuleKind::EngelMod | RuleKind::Pierce => last.clone(),
            RuleKind::OppenheimAffine { a, b } => {
                let v = BigInt::from(*a) * BigInt::from(last.clone()) + BigInt::from(*b);
                if v < BigInt::one() {
                    return Err(PerronError::domain(format!(
                        "oppenheim rule produced {v} at prefix length {}",
                        prefix.len()
                    )));
                }
                v.magnitude().clone()
            }
            RuleKind::Custom { name, rule } => {
                let v = rule(prefix);
                if v < BigUint::one() {
                    return Err(PerronError::domain(format!(
                        "custom rule {name} returned 0 at prefix length {}",
                        prefix.len()
                    )));
                }
                v
            }
        };
        Ok(value)
    }

    /// `r_k` for a prefix of length `k`; the prefix is validated first.
    pub fn rule_value(&self, prefix: &DigitWord) -> Result<Digit> {
        self.validate_word(prefix)?;
        self.next_value(prefix.digits())
    }

    /// Checks `c_i >= r_{i-1} + 1` for every digit, reporting the first
    /// offending 1-based index.
    pub fn validate_word(&self, word: &DigitWord) -> Result<()> {
        let digits = word.digits();
        for i in 0..digits.len() {
            let r = self.next_value(&digits[..i])?;
            if digits[i] <= r {
                return Err(PerronError::validity(
                    i + 1,
                    format!("digit {} must be at least {}", digits[i], r + 1u32),
                ));
            }
        }
        Ok(())
    }

    /// Short identifier used on the command line.
    pub fn system_name(&self) -> String {
        match &self.kind {
            RuleKind::Luroth => "luroth".into(),
            RuleKind::Engel => "engel".into(),
            RuleKind::EngelMod => "engel-mod".into(),
            RuleKind::Pierce => "pierce".into(),
            RuleKind::OppenheimAffine { a, b } => format!("oppenheim:{a},{b}"),
            RuleKind::Custom { name, .. } => name.clone(),
        }
    }
}

impl FromStr for DigitRule {
    type Err = PerronError;

    /// `luroth`, `engel`, `engel-mod`, `pierce` or `oppenheim:a,b`.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "luroth" => Ok(Self::luroth()),
            "engel" => Ok(Self::engel()),
            "engel-mod" => Ok(Self::engel_mod()),
            "pierce" => Ok(Self::pierce()),
            other => {
                let bad = || PerronError::Parse(format!("unknown system {other:?}"));
                let params = other.strip_prefix("oppenheim:").ok_or_else(bad)?;
                let (a, b) = params.split_once(',').ok_or_else(bad)?;
                let a: u64 = a.trim().parse().map_err(|_| bad())?;
                let b: i64 = b.trim().parse().map_err(|_| bad())?;
                Self::oppenheim(a, b)
            }
        }
    }
}
