//! Exact construction and verification toolkit for strictly monotonic sequences in
//! multidimensional point sets, intersecting flat systems, cross-intersecting pair
//! families and internally stable sets of pillage games.
//!
//! All coordinates are exact rationals ([`Rational`]); equality of coordinates is
//! never tolerance based, which is what strict monotonicity hinges on.
//!
//! The crate is organised as:
//! - [`core_monotone`]: points, directions, monotonicity predicates, longest-run
//!   dynamic programming, antichain peeling and intersecting-core extraction.
//! - [`constructions`]: the extremal lower-bound sets and the size recursions.
//! - [`flats`]: axis-aligned flats, minimal intersecting systems, cross-intersecting
//!   pair families and their exterior-algebra certificate.
//! - [`pillage`]: allocations, power functions, domination and stability checks,
//!   and the explicit internally stable construction.

pub mod constructions;
pub mod core_monotone;
mod error;
pub mod flats;
pub mod pillage;
pub mod rational;

pub use error::{Error, Result};
pub use rational::Rational;
