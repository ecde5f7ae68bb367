use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use super::sequences::SequenceProfile;
use crate::core_monotone::{LengthProfile, Point, PointSequence, PointSet};
use crate::rational::Exact;
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ConstructionKind {
    /// Non-strict extremal set built by iterated translated copies.
    A,
    /// Strict extremal set: small copies of a lower-dimensional set placed at the
    /// points of a non-strict set.
    G,
    /// Strict extremal sequence obtained by projecting a lifted strict set.
    #[serde(rename = "sequence")]
    Sequence,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstructedPoints {
    Set(PointSet),
    Sequence(PointSequence),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstructionProfile {
    Lengths(LengthProfile),
    Sequence(SequenceProfile),
}

/// One translation stage of the non-strict construction: `copies` translates of the
/// previous stage, spaced `step` apart along `direction`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Stage {
    pub direction: Vec<i8>,
    pub copies: u64,
    pub step: i128,
    pub size: u128,
}

/// How a construction was assembled, recursively.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "stage", rename_all = "snake_case")]
pub enum Trace {
    /// `length` equally spaced points on a line.
    Line { length: u64 },
    Translates { n: usize, stages: Vec<Stage> },
    /// `inner` embedded with a zero at `pivot`, scaled by `scale`, and translated
    /// onto every point of `outer`.
    Product {
        n: usize,
        pivot: usize,
        #[serde(serialize_with = "ser_exact")]
        scale: Rational,
        inner: Box<Trace>,
        outer: Box<Trace>,
    },
    /// A lifted strict set ordered by its first coordinate and projected away from it.
    Projection { inner: Box<Trace> },
}

fn ser_exact<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    Exact(*r).serialize(s)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionResult {
    pub kind: ConstructionKind,
    pub points: ConstructedPoints,
    pub profile: ConstructionProfile,
    pub claimed_size: u128,
    pub trace: Trace,
}

impl ConstructionResult {
    pub fn dim(&self) -> usize {
        match &self.points {
            ConstructedPoints::Set(s) => s.dim(),
            ConstructedPoints::Sequence(s) => s.dim(),
        }
    }

    pub fn len(&self) -> usize {
        self.point_list().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn point_list(&self) -> &[Point] {
        match &self.points {
            ConstructedPoints::Set(s) => s.points(),
            ConstructedPoints::Sequence(s) => s.items(),
        }
    }

    pub fn set(&self) -> Option<&PointSet> {
        match &self.points {
            ConstructedPoints::Set(s) => Some(s),
            ConstructedPoints::Sequence(_) => None,
        }
    }

    pub fn sequence(&self) -> Option<&PointSequence> {
        match &self.points {
            ConstructedPoints::Sequence(s) => Some(s),
            ConstructedPoints::Set(_) => None,
        }
    }

    pub fn length_profile(&self) -> Option<&LengthProfile> {
        match &self.profile {
            ConstructionProfile::Lengths(p) => Some(p),
            ConstructionProfile::Sequence(_) => None,
        }
    }
}

/// `{"kind", "n", "profile", "size", "points", "trace"}`.
impl Serialize for ConstructionResult {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(6))?;
        map.serialize_entry("kind", &self.kind)?;
        map.serialize_entry("n", &self.dim())?;
        match &self.profile {
            ConstructionProfile::Lengths(p) => map.serialize_entry("profile", p)?,
            ConstructionProfile::Sequence(p) => map.serialize_entry("profile", p)?,
        }
        map.serialize_entry("size", &self.claimed_size)?;
        map.serialize_entry("points", self.point_list())?;
        map.serialize_entry("trace", &self.trace)?;
        map.end()
    }
}
