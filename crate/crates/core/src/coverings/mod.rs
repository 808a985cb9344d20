//! Families of unions of consecutive same-rank cylinders and the covers of
//! intervals built from them.

mod cover;
mod family;
mod split;
mod verify;

pub use cover::{cover_boundary, cover_interval, BoundaryCover, BoundarySide};
pub use family::{End, FamilySet, QInterval};
pub use split::{minimal_ratio_base, split_to_finite, SplitStream};
pub use verify::{alpha_cost, compensated_sum, verify_cover, CoverReport};
