//! Exact rational values.
//!
//! [`ExactQ`] wraps a [`BigRational`] that is always kept in lowest terms.
//! It prints and parses as `"num/den"`; parsing also accepts plain integers
//! and finite decimals such as `"0.3"`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::PerronError;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactQ(BigRational);

impl ExactQ {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Self {
        let denom = denom.into();
        assert!(!denom.is_zero(), "zero denominator");
        ExactQ(BigRational::new(numer.into(), denom))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        ExactQ(BigRational::from_integer(n.into()))
    }

    pub fn from_natural(n: &BigUint) -> Self {
        ExactQ(BigRational::from_integer(BigInt::from(n.clone())))
    }

    /// `n / d` for naturals, `d > 0`.
    pub fn ratio(n: &BigUint, d: &BigUint) -> Self {
        Self::new(BigInt::from(n.clone()), BigInt::from(d.clone()))
    }

    pub fn zero() -> Self {
        ExactQ(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactQ(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        ExactQ(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        ExactQ(self.0.recip())
    }

    pub fn floor(&self) -> BigInt {
        self.0.numer().div_floor(self.0.denom())
    }

    pub fn ceil(&self) -> BigInt {
        self.0.numer().div_ceil(self.0.denom())
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }

    /// Lossy conversion; exact values keep working past the `f64` range via [`ExactQ::ln`].
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or_else(|| {
            let l = self.abs().ln();
            let v = l.exp();
            if self.is_negative() {
                -v
            } else {
                v
            }
        })
    }

    /// Natural logarithm of `|self|`, accurate to `f64` precision for any magnitude.
    /// Returns `-inf` for zero.
    pub fn ln(&self) -> f64 {
        if self.is_zero() {
            return f64::NEG_INFINITY;
        }
        ln_big(self.numer().magnitude()) - ln_big(self.denom().magnitude())
    }

    /// `|self|^alpha` in floating point, computed through logarithms so that
    /// tiny diameters underflow to zero instead of to NaN.
    pub fn powf(&self, alpha: f64) -> f64 {
        if self.is_zero() {
            return if alpha == 0.0 { 1.0 } else { 0.0 };
        }
        (alpha * self.ln()).exp()
    }

    pub fn min(self, other: Self) -> Self {
        std::cmp::min(self, other)
    }

    pub fn max(self, other: Self) -> Self {
        std::cmp::max(self, other)
    }
}

fn ln_big(n: &BigUint) -> f64 {
    let bits = n.bits();
    if bits <= 1000 {
        return n.to_f64().expect("finite below 2^1000").ln();
    }
    let shift = bits - 64;
    let top = (n >> shift).to_f64().expect("64-bit head");
    top.ln() + (shift as f64) * std::f64::consts::LN_2
}

impl fmt::Display for ExactQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for ExactQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for ExactQ {
    type Err = PerronError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || PerronError::Parse(format!("not a rational literal: {s:?}"));
        if let Some((n, d)) = s.split_once('/') {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            return Ok(ExactQ::new(n, d));
        }
        if let Some((int, frac)) = s.split_once('.') {
            if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let negative = int.starts_with('-');
            let int: BigInt = match int.trim_start_matches(['-', '+']) {
                "" => BigInt::zero(),
                digits => digits.parse().map_err(|_| bad())?,
            };
            let frac_val: BigInt = frac.parse().map_err(|_| bad())?;
            let scale = num_traits::pow(BigInt::from(10u32), frac.len());
            let mut q = ExactQ::new(int * &scale + frac_val, scale);
            if negative {
                q = -q;
            }
            return Ok(q);
        }
        let n: BigInt = s.parse().map_err(|_| bad())?;
        Ok(ExactQ::from_integer(n))
    }
}

impl From<u64> for ExactQ {
    fn from(n: u64) -> Self {
        ExactQ::from_integer(n)
    }
}

impl From<&BigUint> for ExactQ {
    fn from(n: &BigUint) -> Self {
        ExactQ::from_natural(n)
    }
}

impl From<BigRational> for ExactQ {
    fn from(r: BigRational) -> Self {
        ExactQ(r)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&ExactQ> for &ExactQ {
            type Output = ExactQ;
            fn $method(self, rhs: &ExactQ) -> ExactQ {
                ExactQ((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<ExactQ> for ExactQ {
            type Output = ExactQ;
            fn $method(self, rhs: ExactQ) -> ExactQ {
                ExactQ(self.0.$method(rhs.0))
            }
        }
        impl $trait<&ExactQ> for ExactQ {
            type Output = ExactQ;
            fn $method(self, rhs: &ExactQ) -> ExactQ {
                ExactQ(self.0.$method(&rhs.0))
            }
        }
        impl $trait<ExactQ> for &ExactQ {
            type Output = ExactQ;
            fn $method(self, rhs: ExactQ) -> ExactQ {
                ExactQ((&self.0).$method(rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for ExactQ {
    type Output = ExactQ;
    fn neg(self) -> ExactQ {
        ExactQ(-self.0)
    }
}

impl Neg for &ExactQ {
    type Output = ExactQ;
    fn neg(self) -> ExactQ {
        ExactQ(-&self.0)
    }
}
