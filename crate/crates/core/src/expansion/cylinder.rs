//! Cylinder geometry.
//!
//! Every cylinder is the image of the unit interval under an affine chart
//! `x = base + slope * t`. Factoring the first term out of the positive series
//!
//! ```text
//! x = r/p + r/((p-1)p) * x'
//! ```
//!
//! (where `x'` is again a Perron series whose leading numerator is the next
//! `r`) shows that descending into digit `p` composes the chart with
//! `t -> r/p + r/((p-1)p) t`. For the alternating series the same factoring
//! gives `x = r/(q-1) - r/((q-1)q) * x'`, so the child map is
//! `t -> r/(q-1) - r/((q-1)q) t`. In the local coordinate `t` the children of
//! every cylinder therefore look alike: digit `c` occupies `(r/c, r/(c-1))`,
//! larger digits sit closer to `t = 0` and accumulate there.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{PerronError, Result};
use crate::expansion::rule::DigitRule;
use crate::expansion::word::{Digit, DigitWord};
use crate::rational::ExactQ;

/// Which series a cylinder or family set refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "P")]
    Positive,
    #[serde(rename = "P-")]
    Alternating,
}

impl Sign {
    pub fn label(self) -> &'static str {
        match self {
            Sign::Positive => "P",
            Sign::Alternating => "P-",
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl std::str::FromStr for Sign {
    type Err = PerronError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "P" | "p" | "positive" | "+" => Ok(Sign::Positive),
            "P-" | "p-" | "alternating" | "-" => Ok(Sign::Alternating),
            other => Err(PerronError::Parse(format!("unknown sign {other:?}"))),
        }
    }
}

/// Affine chart of a cylinder: `x = base + slope * t`, `t in (0, 1)`.
///
/// Kept unreduced over the common denominator `den = prod (c_i - 1) c_i`:
/// `base = base_num / den` and `slope = +-slope_num / den`, so descending
/// one level costs a few integer products and no gcd.
#[derive(Clone, Debug)]
pub(crate) struct Chart {
    pub word: DigitWord,
    base_num: BigInt,
    slope_num: BigUint,
    den: BigUint,
    increasing: bool,
    /// `r_k` for this word; children start at digit `next_r + 1`.
    pub next_r: Digit,
}

impl Chart {
    pub fn root(rule: &DigitRule) -> Self {
        Chart {
            word: DigitWord::empty(),
            base_num: BigInt::zero(),
            slope_num: BigUint::one(),
            den: BigUint::one(),
            increasing: true,
            next_r: rule.phi0().clone(),
        }
    }

    /// Chart of `word`, validating every digit on the way down.
    pub fn of_word(rule: &DigitRule, sign: Sign, word: &DigitWord) -> Result<Self> {
        let mut chart = Chart::root(rule);
        for (i, d) in word.iter().enumerate() {
            if *d <= chart.next_r {
                return Err(PerronError::validity(
                    i + 1,
                    format!("digit {d} must be at least {}", &chart.next_r + 1u32),
                ));
            }
            chart = chart.child(rule, sign, d)?;
        }
        Ok(chart)
    }

    /// Local offset and scale of child `c`: `t = offset + scale * t'`.
    pub fn child_map(&self, sign: Sign, c: &Digit) -> (ExactQ, ExactQ) {
        let c_minus = c - 1u32;
        let width = ExactQ::ratio(&self.next_r, &(&c_minus * c));
        match sign {
            Sign::Positive => (ExactQ::ratio(&self.next_r, c), width),
            Sign::Alternating => (ExactQ::ratio(&self.next_r, &c_minus), -width),
        }
    }

    pub fn child(&self, rule: &DigitRule, sign: Sign, c: &Digit) -> Result<Self> {
        debug_assert!(*c > self.next_r);
        let c_minus = c - 1u32;
        let step = &self.slope_num * &self.next_r;
        // base + slope * offset, over den * (c - 1) c
        let shift = match sign {
            Sign::Positive => &step * &c_minus,
            Sign::Alternating => &step * c,
        };
        let shift = BigInt::from(shift);
        let scaled = &self.base_num * BigInt::from(&c_minus * c);
        let base_num = if self.increasing {
            scaled + shift
        } else {
            scaled - shift
        };
        let word = self.word.extended(c.clone());
        let next_r = rule.next_value(word.digits())?;
        Ok(Chart {
            base_num,
            slope_num: step,
            den: &self.den * &c_minus * c,
            increasing: self.increasing == (sign == Sign::Positive),
            word,
            next_r,
        })
    }

    pub fn base(&self) -> ExactQ {
        ExactQ::new(self.base_num.clone(), BigInt::from(self.den.clone()))
    }

    pub fn slope(&self) -> ExactQ {
        let d = ExactQ::ratio(&self.slope_num, &self.den);
        if self.increasing {
            d
        } else {
            -d
        }
    }

    pub fn increasing(&self) -> bool {
        self.increasing
    }

    pub fn diameter(&self) -> ExactQ {
        ExactQ::ratio(&self.slope_num, &self.den)
    }

    /// Image of the local coordinate `t`.
    pub fn to_global(&self, t: &ExactQ) -> ExactQ {
        self.base() + self.slope() * t
    }

    /// Local coordinate of the global point `x`.
    pub fn to_local(&self, x: &ExactQ) -> ExactQ {
        (x - &self.base()) / self.slope()
    }

    fn far_end(&self) -> ExactQ {
        let n = BigInt::from(self.slope_num.clone());
        let num = if self.increasing {
            &self.base_num + n
        } else {
            &self.base_num - n
        };
        ExactQ::new(num, BigInt::from(self.den.clone()))
    }

    pub fn lo(&self) -> ExactQ {
        if self.increasing {
            self.base()
        } else {
            self.far_end()
        }
    }

    pub fn hi(&self) -> ExactQ {
        if self.increasing {
            self.far_end()
        } else {
            self.base()
        }
    }
}

/// Exact endpoints of a cylinder. Positive cylinders are `(lo, hi]`;
/// alternating cylinders are `(lo, hi)` minus the countable set of cylinder
/// endpoints, which is represented only by both flags being open.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CylinderInterval {
    pub lo: ExactQ,
    pub hi: ExactQ,
    pub lo_included: bool,
    pub hi_included: bool,
    pub sign: Sign,
    pub word: DigitWord,
}

impl CylinderInterval {
    pub fn diameter(&self) -> ExactQ {
        &self.hi - &self.lo
    }

    /// Exact membership test honouring the openness flags. Points of the
    /// alternating exceptional set inside `(lo, hi)` are not detected here.
    pub fn contains(&self, x: &ExactQ) -> bool {
        let above = if self.lo_included {
            *x >= self.lo
        } else {
            *x > self.lo
        };
        let below = if self.hi_included {
            *x <= self.hi
        } else {
            *x < self.hi
        };
        above && below
    }

    pub(crate) fn from_chart(chart: &Chart, sign: Sign) -> Self {
        CylinderInterval {
            lo: chart.lo(),
            hi: chart.hi(),
            lo_included: false,
            hi_included: sign == Sign::Positive,
            sign,
            word: chart.word.clone(),
        }
    }
}

/// Exact value of the first `k` series terms for a word of length `k`.
///
/// For the positive series this is the infimum of the rank-`k` cylinder. For
/// the alternating series it is the supremum at odd rank and the infimum at
/// even rank.
pub fn partial_sum(rule: &DigitRule, word: &DigitWord, sign: Sign) -> Result<ExactQ> {
    if word.is_empty() {
        return Err(PerronError::domain("partial_sum needs a nonempty word"));
    }
    Ok(Chart::of_word(rule, sign, word)?.base())
}

/// Exact interval of the rank-`k` cylinder with base `word`.
pub fn cylinder(rule: &DigitRule, word: &DigitWord, sign: Sign) -> Result<CylinderInterval> {
    if word.is_empty() {
        return Err(PerronError::domain("cylinder needs a nonempty word"));
    }
    let chart = Chart::of_word(rule, sign, word)?;
    Ok(CylinderInterval::from_chart(&chart, sign))
}

/// Closed-form cylinder diameter `r_0 ... r_{k-1} / ((c_1 - 1) c_1 ... (c_k - 1) c_k)`,
/// shared by positive and alternating cylinders with the same base.
pub fn cylinder_diameter(rule: &DigitRule, word: &DigitWord) -> Result<ExactQ> {
    rule.validate_word(word)?;
    let digits = word.digits();
    let mut numer = Digit::one();
    let mut denom = Digit::one();
    for i in 0..digits.len() {
        numer *= rule.next_value(&digits[..i])?;
        denom *= (&digits[i] - 1u32) * &digits[i];
    }
    Ok(ExactQ::ratio(&numer, &denom))
}
