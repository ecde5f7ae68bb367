//! Exact point sets, directions, monotonicity predicates and longest-run search.

mod antichain;
mod direction;
mod longest;
mod point;
mod profile;

pub use antichain::{intersecting_core, peel_antichains};
pub use direction::{
    enumerate_directions, is_monotonic, is_monotonic_signs, is_strictly_monotonic, is_strictly_monotonic_signs,
    pair_direction, raw_signs, Direction, Orientation,
};
pub use longest::{
    longest_all_directions, longest_monotone_subsequence, longest_nonstrict_monotone, longest_strict_monotone,
    longest_strict_subsequence, verify_good_set, GoodSetReport,
};
pub use point::{width, Point, PointSequence, PointSet};
pub use profile::{LengthProfile, Witness};
