use std::collections::HashMap;
use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::rational::{self, Exact};
use crate::{Error, Rational, Result};

/// A point of `Q^n` with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point(Vec<Rational>);

impl Point {
    pub fn new(coords: Vec<Rational>) -> Self {
        Point(coords)
    }

    pub fn from_ints<I: IntoIterator<Item = i128>>(coords: I) -> Self {
        Point(coords.into_iter().map(rational::int).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    /// Two points intersect when they agree exactly in some coordinate.
    pub fn intersects(&self, other: &Point) -> bool {
        self.0.iter().zip(&other.0).any(|(a, b)| a == b)
    }

    /// Max-norm distance `||self - other||_inf`.
    pub fn linf_distance(&self, other: &Point) -> Rational {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a - b).abs())
            .max()
            .unwrap_or_else(Rational::zero)
    }
}

impl std::ops::Index<usize> for Point {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(&rational::to_string(c))?;
        }
        f.write_str(")")
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(|c| Exact(*c)))
    }
}

impl<'de> Deserialize<'de> for Point {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<Exact> = Vec::deserialize(d)?;
        Ok(Point(v.into_iter().map(|e| e.0).collect()))
    }
}

fn check_dims<'a>(n: usize, points: impl IntoIterator<Item = &'a Point>) -> Result<()> {
    for p in points {
        if p.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: p.dim(),
            });
        }
    }
    Ok(())
}

/// A finite set of distinct points of a common dimension `n >= 1`.
///
/// Points keep their insertion order; witnesses and partitions refer to positions
/// in that order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    n: usize,
    points: Vec<Point>,
}

impl PointSet {
    pub fn new(n: usize, points: Vec<Point>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("point sets need dimension n >= 1".into()));
        }
        check_dims(n, &points)?;
        let mut seen: HashMap<&Point, usize> = HashMap::with_capacity(points.len());
        for (i, p) in points.iter().enumerate() {
            if let Some(&first) = seen.get(p) {
                return Err(Error::DuplicatePoint { first, second: i });
            }
            seen.insert(p, i);
        }
        Ok(PointSet { n, points })
    }

    /// Builds a set from points that may repeat, keeping the first occurrence of each.
    pub fn dedup(n: usize, points: Vec<Point>) -> Result<Self> {
        let mut seen = std::collections::HashSet::with_capacity(points.len());
        let points = points.into_iter().filter(|p| seen.insert(p.clone())).collect();
        PointSet::new(n, points)
    }

    pub fn empty(n: usize) -> Result<Self> {
        PointSet::new(n, Vec::new())
    }

    pub(crate) fn from_trusted(n: usize, points: Vec<Point>) -> Self {
        debug_assert!(PointSet::new(n, points.clone()).is_ok());
        PointSet { n, points }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn into_points(self) -> Vec<Point> {
        self.points
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.points.contains(p)
    }

    pub fn position(&self, p: &Point) -> Option<usize> {
        self.points.iter().position(|q| q == p)
    }

    /// Subset of the points at the given positions, in the given order.
    pub fn select(&self, indices: &[usize]) -> PointSet {
        PointSet {
            n: self.n,
            points: indices.iter().map(|&i| self.points[i].clone()).collect(),
        }
    }

    /// Whether every two points agree in some coordinate.
    pub fn is_pairwise_intersecting(&self) -> bool {
        self.first_non_intersecting_pair().is_none()
    }

    pub fn first_non_intersecting_pair(&self) -> Option<(usize, usize)> {
        for i in 0..self.points.len() {
            for j in i + 1..self.points.len() {
                if !self.points[i].intersects(&self.points[j]) {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

/// Exact max-norm diameter `max_{x,y} ||x - y||_inf` of a nonempty set.
pub fn width(set: &PointSet) -> Result<Rational> {
    if set.is_empty() {
        return Err(Error::Domain("width of an empty set".into()));
    }
    // The max-norm diameter is the largest per-coordinate spread.
    let spread = (0..set.n)
        .map(|i| {
            let col = set.points.iter().map(|p| p[i]);
            let hi = col.clone().max().unwrap();
            let lo = col.min().unwrap();
            hi - lo
        })
        .max()
        .unwrap_or_else(Rational::zero);
    Ok(spread)
}

/// An ordered list of points of a common dimension; repeats allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSequence {
    n: usize,
    items: Vec<Point>,
}

impl PointSequence {
    pub fn new(n: usize, items: Vec<Point>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("sequences need dimension n >= 1".into()));
        }
        check_dims(n, &items)?;
        Ok(PointSequence { n, items })
    }

    /// One-dimensional sequence of integers.
    pub fn from_ints<I: IntoIterator<Item = i128>>(values: I) -> Self {
        PointSequence {
            n: 1,
            items: values.into_iter().map(|v| Point::from_ints([v])).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn items(&self) -> &[Point] {
        &self.items
    }

    /// Maps `x^j` to `(j, x^j)` in dimension `n + 1`; positions are 0-based.
    pub fn lift(&self) -> PointSet {
        let points = self
            .items
            .iter()
            .enumerate()
            .map(|(j, p)| {
                let mut coords = Vec::with_capacity(self.n + 1);
                coords.push(rational::int(j as i128));
                coords.extend_from_slice(p.coords());
                Point(coords)
            })
            .collect();
        PointSet::from_trusted(self.n + 1, points)
    }
}

#[derive(Serialize, Deserialize)]
struct PointsJson {
    n: usize,
    points: Vec<Point>,
}

impl Serialize for PointSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PointsJson {
            n: self.n,
            points: self.points.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PointSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = PointsJson::deserialize(d)?;
        PointSet::new(raw.n, raw.points).map_err(serde::de::Error::custom)
    }
}

impl Serialize for PointSequence {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PointsJson {
            n: self.n,
            points: self.items.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PointSequence {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = PointsJson::deserialize(d)?;
        PointSequence::new(raw.n, raw.points).map_err(serde::de::Error::custom)
    }
}
