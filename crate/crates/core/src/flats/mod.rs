//! Axis-aligned flats, minimal intersecting flat systems, cross-intersecting pair
//! families with their exterior-algebra certificate, and the diagonal grid partition.

mod exterior;
mod flat;
mod grid;
mod linalg;
mod pairs;

pub use exterior::{blade_coordinates, exterior_certificate, relabel, wedge_vector, ExteriorCertificate, Multivector};
pub use flat::{
    coordinate_value_bound_check, is_intersecting_system, is_minimal, minimalize, point_in_flat, CoordinateBound, Flat,
    FlatSystem,
};
pub use grid::{diagonal_class, diagonal_partition, meets_classes_at_most_once, GridPoint};
pub use linalg::rank;
pub use pairs::{
    cube_pairs, max_cross_intersecting_search, verify_cross_intersecting, CrossViolation, PairFamily,
    PairSearchOutcome,
};
