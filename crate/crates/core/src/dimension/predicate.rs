use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_traits::{FromPrimitive, ToPrimitive};

use crate::error::{PerronError, Result};
use crate::expansion::{Digit, DigitWord};
use crate::rational::ExactQ;
use crate::transforms::{inverse_transform_digits, TransformKind};

pub type FloorFn = dyn Fn(usize) -> ExactQ + Send + Sync;
pub type ClassifyFn = dyn Fn(&DigitWord) -> bool + Send + Sync;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Compatibility {
    Compatible,
    Incompatible,
}

/// A condition on digit sequences, checked on finite prefixes.
///
/// Every builtin is hereditary: once a prefix is incompatible, so is every
/// extension of it. Custom predicates must keep that property, since the
/// enumerator prunes on it.
#[derive(Clone)]
pub enum DigitPredicate {
    All,
    /// Every digit lies in the given set.
    AlphabetRestrict(BTreeSet<Digit>),
    /// `c_{n+1} / c_n <= k` for consecutive digits.
    BoundedRatio(ExactQ),
    /// `c_n >= floor(n)` for every 1-based position `n`.
    GrowthFloor {
        description: String,
        floor: Arc<FloorFn>,
    },
    /// `|ln c_{n+1} / ln c_n - alpha| <= delta` for consecutive digits.
    RatioLimitWindow {
        alpha: f64,
        delta: f64,
    },
    Custom {
        description: String,
        classify: Arc<ClassifyFn>,
    },
    /// Digits are first mapped back through the inverse of a digit
    /// transformation; words outside the image are incompatible.
    Pullback {
        inner: Box<DigitPredicate>,
        kind: TransformKind,
    },
}

impl DigitPredicate {
    pub fn alphabet(digits: &[u64]) -> Self {
        DigitPredicate::AlphabetRestrict(digits.iter().map(|&d| Digit::from(d)).collect())
    }

    /// Digits at least `n^power`.
    pub fn power_floor(power: u32) -> Self {
        DigitPredicate::GrowthFloor {
            description: format!("c_n >= n^{power}"),
            floor: Arc::new(move |n| ExactQ::from_integer(num_bigint::BigInt::from(n).pow(power))),
        }
    }

    /// Digits at least `base^n`.
    pub fn geometric_floor(base: u64) -> Self {
        DigitPredicate::GrowthFloor {
            description: format!("c_n >= {base}^n"),
            floor: Arc::new(move |n| {
                ExactQ::from_integer(num_bigint::BigInt::from(base).pow(n as u32))
            }),
        }
    }

    pub fn custom(
        description: impl Into<String>,
        classify: impl Fn(&DigitWord) -> bool + Send + Sync + 'static,
    ) -> Self {
        DigitPredicate::Custom {
            description: description.into(),
            classify: Arc::new(classify),
        }
    }

    pub fn pullback(inner: DigitPredicate, kind: TransformKind) -> Self {
        DigitPredicate::Pullback {
            inner: Box::new(inner),
            kind,
        }
    }

    pub fn description(&self) -> String {
        match self {
            DigitPredicate::All => "all digits".into(),
            DigitPredicate::AlphabetRestrict(set) => {
                let list: Vec<String> = set.iter().map(|d| d.to_string()).collect();
                format!("digits in {{{}}}", list.join(","))
            }
            DigitPredicate::BoundedRatio(k) => format!("c_(n+1)/c_n <= {k}"),
            DigitPredicate::GrowthFloor { description, .. } => description.clone(),
            DigitPredicate::RatioLimitWindow { alpha, delta } => {
                format!("|ln c_(n+1)/ln c_n - {alpha}| <= {delta}")
            }
            DigitPredicate::Custom { description, .. } => description.clone(),
            DigitPredicate::Pullback { inner, kind } => {
                format!("{} after inverse {:?}", inner.description(), kind)
            }
        }
    }

    pub fn classify(&self, word: &DigitWord) -> Compatibility {
        let ok = match self {
            DigitPredicate::Custom { classify, .. } => classify(word),
            DigitPredicate::Pullback { inner, kind } => {
                match inverse_transform_digits(kind, word) {
                    Ok(source) => inner.classify(&source) == Compatibility::Compatible,
                    Err(_) => false,
                }
            }
            _ => (1..=word.len()).all(|n| self.position_ok(word.digits(), n)),
        };
        if ok {
            Compatibility::Compatible
        } else {
            Compatibility::Incompatible
        }
    }

    /// Compatibility of `word` given that `word` minus its last digit is
    /// already known to be compatible.
    pub(crate) fn extends(&self, word: &DigitWord) -> bool {
        match self {
            DigitPredicate::Custom { .. } | DigitPredicate::Pullback { .. } => {
                self.classify(word) == Compatibility::Compatible
            }
            _ => self.position_ok(word.digits(), word.len()),
        }
    }

    /// Conservative bounds on the digit that may follow `prefix`, assuming
    /// `prefix` is compatible. Digits outside the bounds are never
    /// compatible; digits inside still have to be checked.
    pub(crate) fn next_digit_bounds(&self, prefix: &DigitWord) -> (Option<Digit>, Option<Digit>) {
        let n = prefix.len() + 1;
        match self {
            DigitPredicate::AlphabetRestrict(set) => {
                (set.iter().next().cloned(), set.iter().next_back().cloned())
            }
            DigitPredicate::BoundedRatio(k) => match prefix.last() {
                Some(p) => {
                    let top = (k * &ExactQ::from_natural(p)).floor();
                    (None, Some(top.to_biguint().unwrap_or_default()))
                }
                None => (None, None),
            },
            DigitPredicate::GrowthFloor { floor, .. } => (floor(n).ceil().to_biguint(), None),
            DigitPredicate::RatioLimitWindow { alpha, delta } => match prefix.last() {
                // ln c must lie within (alpha -+ delta) ln p; pad by one
                // digit and a relative 1e-9 for rounding
                Some(p) if *p > Digit::from(1u32) => {
                    let l = ln_natural(p);
                    let lo = ((alpha - delta) * l).exp() * (1.0 - 1e-9) - 1.0;
                    let hi = ((alpha + delta) * l).exp() * (1.0 + 1e-9) + 1.0;
                    let lo = if lo.is_finite() && lo > 1.0 {
                        Digit::from_f64(lo.floor())
                    } else {
                        None
                    };
                    let hi = if hi.is_finite() && hi < 1e300 {
                        Digit::from_f64(hi.ceil())
                    } else {
                        None
                    };
                    (lo, hi)
                }
                _ => (None, None),
            },
            _ => (None, None),
        }
    }

    /// Condition at 1-based position `n` of `digits` for the positional
    /// builtins.
    fn position_ok(&self, digits: &[Digit], n: usize) -> bool {
        let c = &digits[n - 1];
        let prev = if n >= 2 { Some(&digits[n - 2]) } else { None };
        match self {
            DigitPredicate::All => true,
            DigitPredicate::AlphabetRestrict(set) => set.contains(c),
            DigitPredicate::BoundedRatio(k) => match prev {
                Some(p) => ExactQ::ratio(c, p) <= *k,
                None => true,
            },
            DigitPredicate::GrowthFloor { floor, .. } => ExactQ::from_natural(c) >= floor(n),
            DigitPredicate::RatioLimitWindow { alpha, delta } => match prev {
                Some(p) => {
                    let ratio = ln_natural(c) / ln_natural(p);
                    (ratio - alpha).abs() <= *delta
                }
                None => true,
            },
            DigitPredicate::Custom { .. } | DigitPredicate::Pullback { .. } => {
                unreachable!("whole-word predicates are classified directly")
            }
        }
    }
}

fn ln_natural(d: &Digit) -> f64 {
    match d.to_f64() {
        Some(v) if v.is_finite() => v.ln(),
        _ => ExactQ::from_natural(d).ln(),
    }
}

impl fmt::Debug for DigitPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DigitPredicate({})", self.description())
    }
}

impl FromStr for DigitPredicate {
    type Err = PerronError;

    /// `all`, `alphabet:2,3`, `ratio:5/2`, `growth:pow:3`, `growth:geom:2`
    /// or `window:alpha,delta`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| PerronError::Parse(format!("predicate {s:?}: {why}"));
        let s = s.trim();
        if s == "all" {
            return Ok(DigitPredicate::All);
        }
        let (head, rest) = s.split_once(':').ok_or_else(|| bad("unknown predicate"))?;
        match head {
            "alphabet" => {
                let set = rest
                    .split(',')
                    .map(|d| d.trim().parse::<Digit>().map_err(|_| bad("bad digit")))
                    .collect::<Result<BTreeSet<_>>>()?;
                Ok(DigitPredicate::AlphabetRestrict(set))
            }
            "ratio" => {
                let k: ExactQ = rest.parse()?;
                if !k.is_positive() {
                    return Err(bad("ratio bound must be positive"));
                }
                Ok(DigitPredicate::BoundedRatio(k))
            }
            "growth" => {
                let (form, arg) = rest
                    .split_once(':')
                    .ok_or_else(|| bad("expected pow:k or geom:b"))?;
                match form {
                    "pow" => Ok(Self::power_floor(
                        arg.parse().map_err(|_| bad("bad power"))?,
                    )),
                    "geom" => Ok(Self::geometric_floor(
                        arg.parse().map_err(|_| bad("bad base"))?,
                    )),
                    _ => Err(bad("expected pow:k or geom:b")),
                }
            }
            "window" => {
                let (a, d) = rest
                    .split_once(',')
                    .ok_or_else(|| bad("expected alpha,delta"))?;
                let alpha: f64 = a.trim().parse().map_err(|_| bad("bad alpha"))?;
                let delta: f64 = d.trim().parse().map_err(|_| bad("bad delta"))?;
                if !(alpha.is_finite() && delta.is_finite() && delta >= 0.0) {
                    return Err(bad("alpha must be finite and delta non-negative"));
                }
                Ok(DigitPredicate::RatioLimitWindow { alpha, delta })
            }
            _ => Err(bad("unknown predicate")),
        }
    }
}
