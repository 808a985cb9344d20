//! Exact arithmetic for positive and alternating Perron expansions.
//!
//! A Perron expansion writes `x in (0, 1]` as a series whose numerators are
//! produced by a digit rule `P = (phi_n)`. Lüroth, Engel, modified Engel,
//! Pierce and restricted Oppenheim expansions are all special cases.
//!
//! The crate is organised around four parts:
//!
//! - [`expansion`]: digit rules, digit extraction, partial sums and exact
//!   cylinder intervals.
//! - [`coverings`]: unions of consecutive same-rank cylinders and the
//!   constructive covers of intervals by at most three of them.
//! - [`transforms`]: the digit maps between positive and alternating
//!   expansions, classical and modified Engel digits, and Pierce notations.
//! - [`dimension`]: rank-`k` dimension estimates for digit-defined sets.
//!
//! All interval arithmetic is exact ([`ExactQ`]); floating point appears only
//! in α-costs and dimension estimates.
//!
//! ```
//! use perron::{positive_digits, cylinder, DigitRule, DigitWord, ExactQ, Sign};
//!
//! let engel = DigitRule::engel();
//! let x: ExactQ = "3/8".parse().unwrap();
//! let word = positive_digits(&engel, &x, 2).unwrap();
//! assert_eq!(word, DigitWord::from_u64s(&[3, 9]));
//!
//! let cyl = cylinder(&engel, &word, Sign::Positive).unwrap();
//! assert_eq!(cyl.hi, x);
//! ```

pub mod cli;
pub mod coverings;
pub mod dimension;
mod error;
pub mod expansion;
mod rational;
pub mod transforms;

pub use error::{PerronError, Result};
pub use expansion::{
    alternating_digits, cylinder, cylinder_diameter, partial_sum, pierce_notation_convert,
    positive_digits, traditional_pierce_digits, AltDigits, CylinderInterval, Digit, DigitRule,
    DigitWord, PierceNotation, RuleKind, Sign,
};
pub use rational::ExactQ;
