use std::fmt;

use num_traits::One;
use serde_json::{json, Number, Value};

use crate::error::{PerronError, Result};
use crate::expansion::cylinder::Chart;
use crate::expansion::{Digit, DigitRule, DigitWord, Sign};
use crate::rational::ExactQ;

/// Upper end of a family set's digit range.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum End {
    Digit(Digit),
    Unbounded,
}

/// A union of consecutive same-rank cylinders inside one parent cylinder:
/// the children `start..=end` of `prefix`.
///
/// Every set belongs to the family of all such unions; bounded ones belong to
/// the finite sub-family. With `start = r_k + 1` and an unbounded end the set
/// is the parent cylinder itself.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FamilySet {
    pub sign: Sign,
    pub prefix: DigitWord,
    pub start: Digit,
    pub end: End,
}

/// Interval with exact endpoints and openness flags, `lo < hi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QInterval {
    pub lo: ExactQ,
    pub hi: ExactQ,
    pub lo_included: bool,
    pub hi_included: bool,
}

impl QInterval {
    /// `(lo, hi]`, the shape of positive cylinders and of the intervals the
    /// positive cover construction handles.
    pub fn half_open(lo: ExactQ, hi: ExactQ) -> Result<Self> {
        Self::with_flags(lo, hi, false, true)
    }

    /// `(lo, hi)`.
    pub fn open(lo: ExactQ, hi: ExactQ) -> Result<Self> {
        Self::with_flags(lo, hi, false, false)
    }

    pub fn with_flags(
        lo: ExactQ,
        hi: ExactQ,
        lo_included: bool,
        hi_included: bool,
    ) -> Result<Self> {
        if lo >= hi {
            return Err(PerronError::domain(format!("empty interval ({lo}, {hi})")));
        }
        Ok(QInterval {
            lo,
            hi,
            lo_included,
            hi_included,
        })
    }

    /// The endpoint convention that matches cylinders of `sign`.
    pub fn for_sign(sign: Sign, lo: ExactQ, hi: ExactQ) -> Result<Self> {
        match sign {
            Sign::Positive => Self::half_open(lo, hi),
            Sign::Alternating => Self::open(lo, hi),
        }
    }

    pub fn diameter(&self) -> ExactQ {
        &self.hi - &self.lo
    }
}

impl fmt::Display for QInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let open = if self.lo_included { '[' } else { '(' };
        let close = if self.hi_included { ']' } else { ')' };
        write!(f, "{open}{}, {}{close}", self.lo, self.hi)
    }
}

impl FamilySet {
    pub fn new(sign: Sign, prefix: DigitWord, start: Digit, end: End) -> Self {
        FamilySet {
            sign,
            prefix,
            start,
            end,
        }
    }

    pub fn bounded(sign: Sign, prefix: DigitWord, start: Digit, end: Digit) -> Self {
        Self::new(sign, prefix, start, End::Digit(end))
    }

    pub fn unbounded(sign: Sign, prefix: DigitWord, start: Digit) -> Self {
        Self::new(sign, prefix, start, End::Unbounded)
    }

    /// The whole cylinder `prefix`, written as all of its children.
    pub fn whole(rule: &DigitRule, sign: Sign, prefix: DigitWord) -> Result<Self> {
        let r = rule.rule_value(&prefix)?;
        Ok(Self::unbounded(sign, prefix, r + 1u32))
    }

    pub fn is_bounded(&self) -> bool {
        matches!(self.end, End::Digit(_))
    }

    fn check(&self, rule: &DigitRule) -> Result<Chart> {
        let chart = Chart::of_word(rule, self.sign, &self.prefix)?;
        let index = self.prefix.len() + 1;
        if self.start <= chart.next_r {
            return Err(PerronError::validity(
                index,
                format!(
                    "range start {} must be at least {}",
                    self.start,
                    &chart.next_r + 1u32
                ),
            ));
        }
        if let End::Digit(end) = &self.end {
            if *end < self.start {
                return Err(PerronError::validity(
                    index,
                    format!("range end {end} is below start {}", self.start),
                ));
            }
        }
        Ok(chart)
    }

    /// `r_0 ... r_k / ((c_1 - 1) c_1 ... (c_k - 1) c_k)` for the prefix.
    pub fn prefix_factor(&self, rule: &DigitRule) -> Result<ExactQ> {
        let chart = self.check(rule)?;
        Ok(chart.diameter() * ExactQ::from_natural(&chart.next_r))
    }

    /// Exact interval hull. Telescoping the child diameters gives the length
    /// `F (1/(start-1) - 1/end)`, or `F/(start-1)` when unbounded, with `F`
    /// the prefix factor.
    pub fn hull(&self, rule: &DigitRule) -> Result<QInterval> {
        let chart = self.check(rule)?;
        let (t_lo, t_hi) = self.local_range(&chart);
        let a = chart.to_global(&t_lo);
        let b = chart.to_global(&t_hi);
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        QInterval::for_sign(self.sign, lo, hi)
    }

    pub fn diameter(&self, rule: &DigitRule) -> Result<ExactQ> {
        let factor = self.prefix_factor(rule)?;
        let below = ExactQ::from_natural(&(&self.start - 1u32)).recip();
        Ok(match &self.end {
            End::Digit(end) => factor * (below - ExactQ::from_natural(end).recip()),
            End::Unbounded => factor * below,
        })
    }

    /// Local chart coordinates `(r/end, r/(start-1))` covered by the range.
    pub(crate) fn local_range(&self, chart: &Chart) -> (ExactQ, ExactQ) {
        let r = ExactQ::from_natural(&chart.next_r);
        let top = &r / ExactQ::from_natural(&(&self.start - 1u32));
        let bottom = match &self.end {
            End::Digit(end) => &r / ExactQ::from_natural(end),
            End::Unbounded => ExactQ::zero(),
        };
        (bottom, top)
    }

    /// Words of the member cylinders of a bounded set.
    pub fn members(&self) -> Result<Vec<DigitWord>> {
        let End::Digit(end) = &self.end else {
            return Err(PerronError::domain(
                "an unbounded family set has infinitely many members",
            ));
        };
        let mut out = Vec::new();
        let mut d = self.start.clone();
        while d <= *end {
            out.push(self.prefix.extended(d.clone()));
            d += Digit::one();
        }
        Ok(out)
    }

    /// `{"sign":"P"|"P-","prefix":[...],"from":n,"to":m|"inf"}`.
    pub fn to_json(&self) -> Value {
        let prefix: Vec<Value> = self.prefix.iter().map(natural_json).collect();
        let to = match &self.end {
            End::Digit(d) => natural_json(d),
            End::Unbounded => Value::String("inf".into()),
        };
        json!({
            "sign": self.sign.label(),
            "prefix": prefix,
            "from": natural_json(&self.start),
            "to": to,
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |what: &str| PerronError::Parse(format!("family set: {what} in {v}"));
        let sign = v
            .get("sign")
            .and_then(Value::as_str)
            .ok_or_else(|| bad("missing sign"))?
            .parse::<Sign>()?;
        let prefix = v
            .get("prefix")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing prefix"))?
            .iter()
            .map(|d| json_natural(d).ok_or_else(|| bad("bad prefix digit")))
            .collect::<Result<Vec<_>>>()?;
        let start = v
            .get("from")
            .and_then(json_natural)
            .ok_or_else(|| bad("bad from"))?;
        let end = match v.get("to") {
            Some(Value::String(s)) if s == "inf" => End::Unbounded,
            Some(d) => End::Digit(json_natural(d).ok_or_else(|| bad("bad to"))?),
            None => return Err(bad("missing to")),
        };
        Ok(FamilySet::new(sign, DigitWord::new(prefix), start, end))
    }
}

impl fmt::Display for FamilySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]{{{}..", self.sign, self.prefix, self.start)?;
        match &self.end {
            End::Digit(d) => write!(f, "{d}}}"),
            End::Unbounded => write!(f, "inf}}"),
        }
    }
}

pub(crate) fn natural_json(d: &Digit) -> Value {
    Value::Number(d.to_string().parse::<Number>().expect("decimal natural"))
}

pub(crate) fn json_natural(v: &Value) -> Option<Digit> {
    match v {
        Value::Number(n) => n.to_string().parse().ok(),
        _ => None,
    }
}
