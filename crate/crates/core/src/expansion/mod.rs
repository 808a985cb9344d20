//! Digit rules, digit extraction, partial sums and cylinder geometry for
//! positive and alternating Perron expansions.

pub(crate) mod cylinder;
mod digits;
mod rule;
mod word;

pub use cylinder::{cylinder, cylinder_diameter, partial_sum, CylinderInterval, Sign};
pub use digits::{
    alternating_digits, pierce_notation_convert, positive_digits, traditional_pierce_digits,
    AltDigits, PierceNotation,
};
pub use rule::{CustomFn, DigitRule, RuleKind};
pub use word::{Digit, DigitWord};
