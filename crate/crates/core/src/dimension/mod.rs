//! Rank-`k` dimension estimates for sets defined by conditions on digits.
//!
//! A set is described by a [`DigitPredicate`]. Its compatible rank-`k`
//! cylinders, with digits truncated at a cap, form a cover; the exponent at
//! which the cover's cost equals one ([`pressure_root`]) approximates the
//! dimension from above as the rank grows. Sets defined by limits (growth
//! rates, ratio limits) are only approximated through prefix windows, so the
//! numbers are approximants indexed by rank and cap, not exact dimensions.

mod enumerate;
mod predicate;
mod pressure;

pub use enumerate::{enumerate_compatible_bases, BaseStream};
pub use predicate::{ClassifyFn, Compatibility, DigitPredicate, FloorFn};
pub use pressure::{measure_at_rank, moran_dimension, pressure_root, DimensionEstimate};
