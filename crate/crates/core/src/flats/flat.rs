use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::core_monotone::{Point, PointSet};
use crate::rational::{self, Exact};
use crate::{Error, Rational, Result};

/// An axis-aligned affine subspace: each cell is a fixed value or a wildcard.
/// Its dimension is the number of wildcards.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flat(Vec<Option<Rational>>);

impl Flat {
    pub fn new(cells: Vec<Option<Rational>>) -> Self {
        Flat(cells)
    }

    /// The 0-dimensional flat holding a single point.
    pub fn from_point(p: &Point) -> Self {
        Flat(p.coords().iter().map(|&c| Some(c)).collect())
    }

    /// Parses cells written as integers or `*`, e.g. `"1 * 1 *"`.
    pub fn parse(text: &str) -> Result<Self> {
        text.split_whitespace()
            .map(|t| if t == "*" { Ok(None) } else { rational::parse(t).map(Some) })
            .collect::<Result<_>>()
            .map(Flat)
    }

    pub fn cells(&self) -> &[Option<Rational>] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dimension(&self) -> usize {
        self.0.iter().filter(|c| c.is_none()).count()
    }

    /// Positions of the wildcard cells.
    pub fn wildcards(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i].is_none()).collect()
    }

    /// Some position holds the same non-wildcard value in both flats.
    pub fn meets(&self, other: &Flat) -> bool {
        self.0.iter().zip(&other.0).any(|(a, b)| a.is_some() && a == b)
    }

    pub fn widened(&self, i: usize) -> Flat {
        let mut cells = self.0.clone();
        cells[i] = None;
        Flat(cells)
    }
}

impl fmt::Display for Flat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            match c {
                Some(v) => f.write_str(&rational::to_string(v))?,
                None => f.write_str("*")?,
            }
        }
        f.write_str(")")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum CellJson {
    Value(Exact),
    Star(String),
}

impl Serialize for Flat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(|c| match c {
            Some(v) => CellJson::Value(Exact(*v)),
            None => CellJson::Star("*".into()),
        }))
    }
}

impl<'de> Deserialize<'de> for Flat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw: Vec<serde_json::Value> = Vec::deserialize(d)?;
        raw.into_iter()
            .map(|v| match v {
                serde_json::Value::String(s) if s == "*" => Ok(None),
                other => rational::from_json(&other).map(Some).map_err(D::Error::custom),
            })
            .collect::<std::result::Result<_, _>>()
            .map(Flat)
    }
}

/// Membership: every cell is a wildcard or equals the coordinate.
pub fn point_in_flat(x: &Point, u: &Flat) -> Result<bool> {
    if x.dim() != u.len() {
        return Err(Error::DimensionMismatch {
            expected: u.len(),
            found: x.dim(),
        });
    }
    Ok(u.0.iter().zip(x.coords()).all(|(c, v)| c.as_ref().is_none_or(|c| c == v)))
}

/// A finite collection of distinct flats in a common dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlatSystem {
    n: usize,
    flats: Vec<Flat>,
}

impl FlatSystem {
    pub fn new(n: usize, flats: Vec<Flat>) -> Result<Self> {
        for (i, f) in flats.iter().enumerate() {
            if f.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: f.len(),
                });
            }
            if let Some(j) = flats[..i].iter().position(|g| g == f) {
                return Err(Error::DuplicatePoint { first: j, second: i });
            }
        }
        Ok(FlatSystem { n, flats })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    /// Whether some flat of the system contains `x`.
    pub fn covers(&self, x: &Point) -> bool {
        self.flats.iter().any(|u| point_in_flat(x, u).unwrap_or(false))
    }
}

impl<'de> Deserialize<'de> for FlatSystem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            n: usize,
            flats: Vec<Flat>,
        }
        let raw = Raw::deserialize(d)?;
        FlatSystem::new(raw.n, raw.flats).map_err(serde::de::Error::custom)
    }
}

/// Every two flats, and every flat with itself, share a non-wildcard value in some
/// position. A lone all-wildcard flat therefore does not form an intersecting system.
pub fn is_intersecting_system(w: &FlatSystem) -> bool {
    let f = &w.flats;
    (0..f.len()).all(|i| (i..f.len()).all(|j| f[i].meets(&f[j])))
}

/// Whether flat `u` of the system, widened at cell `i`, keeps the system intersecting.
/// A widened flat equal to another flat merges with it.
fn can_widen(flats: &[Flat], u: usize, i: usize) -> bool {
    let cand = flats[u].widened(i);
    if flats.iter().enumerate().any(|(k, v)| k != u && *v == cand) {
        return true;
    }
    cand.meets(&cand) && flats.iter().enumerate().all(|(k, v)| k == u || cand.meets(v))
}

/// Intersecting, and no single non-wildcard cell can be widened while staying
/// intersecting.
pub fn is_minimal(w: &FlatSystem) -> bool {
    is_intersecting_system(w)
        && (0..w.flats.len()).all(|u| (0..w.n).all(|i| w.flats[u].0[i].is_none() || !can_widen(&w.flats, u, i)))
}

/// Greedy enlargement of a pairwise intersecting point set into an intersecting,
/// minimal flat system covering it.
///
/// Flats are scanned in insertion order and cells left to right; a cell becomes a
/// wildcard whenever the system stays intersecting, duplicates are merged, and passes
/// repeat until one makes no change.
pub fn minimalize(v: &PointSet) -> Result<FlatSystem> {
    if let Some((i, j)) = v.first_non_intersecting_pair() {
        return Err(Error::Precondition(format!(
            "points {} and {} (positions {i}, {j}) share no coordinate",
            v.points()[i],
            v.points()[j]
        )));
    }
    let n = v.dim();
    let mut flats: Vec<Flat> = v.points().iter().map(Flat::from_point).collect();
    loop {
        let mut changed = false;
        let mut u = 0;
        while u < flats.len() {
            let mut removed = false;
            for i in 0..n {
                if flats[u].0[i].is_some() && can_widen(&flats, u, i) {
                    let cand = flats[u].widened(i);
                    changed = true;
                    if flats.contains(&cand) {
                        flats.remove(u);
                        removed = true;
                        break;
                    }
                    flats[u] = cand;
                }
            }
            if !removed {
                u += 1;
            }
        }
        if !changed {
            break;
        }
    }
    FlatSystem::new(n, flats)
}

/// Distinct non-wildcard values per coordinate of a minimal intersecting system,
/// against the bound `2^(n-2)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoordinateBound {
    pub counts: Vec<usize>,
    pub bound: u64,
    pub pass: bool,
}

pub fn coordinate_value_bound_check(w: &FlatSystem) -> Result<CoordinateBound> {
    if w.n < 2 {
        return Err(Error::Domain("the per-coordinate bound needs n >= 2".into()));
    }
    if w.n > 64 {
        return Err(Error::Domain(format!("n = {} is too large", w.n)));
    }
    if !is_intersecting_system(w) {
        return Err(Error::Precondition("flat system is not intersecting".into()));
    }
    if !is_minimal(w) {
        return Err(Error::Precondition("flat system is not minimal".into()));
    }
    let counts: Vec<usize> = (0..w.n)
        .map(|i| {
            let mut vals: Vec<&Rational> = w.flats.iter().filter_map(|f| f.0[i].as_ref()).collect();
            vals.sort();
            vals.dedup();
            vals.len()
        })
        .collect();
    let bound = 1u64 << (w.n - 2);
    let pass = counts.iter().all(|&c| c as u64 <= bound);
    Ok(CoordinateBound { counts, bound, pass })
}
