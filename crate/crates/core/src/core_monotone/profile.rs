use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::direction::{enumerate_directions, Direction};
use crate::{Error, Result};

/// Maximum permitted run lengths, one per canonical direction.
///
/// A strict profile is defined on every strict canonical direction of dimension `n`,
/// a non-strict profile on every non-strict one. Lengths are at least 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthProfile {
    n: usize,
    strict: bool,
    lengths: BTreeMap<Direction, u64>,
}

impl LengthProfile {
    pub fn from_fn(n: usize, strict: bool, mut f: impl FnMut(&Direction) -> u64) -> Result<Self> {
        let lengths = enumerate_directions(n, strict)?
            .into_iter()
            .map(|d| {
                let l = f(&d);
                (d, l)
            })
            .collect();
        LengthProfile::from_map(n, strict, lengths)
    }

    pub fn uniform(n: usize, strict: bool, length: u64) -> Result<Self> {
        LengthProfile::from_fn(n, strict, |_| length)
    }

    /// Non-strict profile from lengths listed in direction enumeration order.
    pub fn nonstrict_from_list(n: usize, lengths: &[u64]) -> Result<Self> {
        let dirs = enumerate_directions(n, false)?;
        if dirs.len() != lengths.len() {
            return Err(Error::Domain(format!(
                "expected {} lengths for n = {n}, got {}",
                dirs.len(),
                lengths.len()
            )));
        }
        LengthProfile::from_map(n, false, dirs.into_iter().zip(lengths.iter().copied()).collect())
    }

    pub fn from_map(n: usize, strict: bool, lengths: BTreeMap<Direction, u64>) -> Result<Self> {
        let expected = enumerate_directions(n, strict)?;
        if lengths.len() != expected.len() || expected.iter().any(|d| !lengths.contains_key(d)) {
            return Err(Error::Domain(format!(
                "profile must cover exactly the {} canonical {} directions of dimension {n}",
                expected.len(),
                if strict { "strict" } else { "non-strict" }
            )));
        }
        if let Some((d, _)) = lengths.iter().find(|(_, &l)| l == 0) {
            return Err(Error::Domain(format!("length for {d} must be at least 1")));
        }
        Ok(LengthProfile { n, strict, lengths })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn is_strict(&self) -> bool {
        self.strict
    }

    pub fn get(&self, d: &Direction) -> Option<u64> {
        self.lengths.get(d).copied()
    }

    /// Length for the direction with these signs.
    pub fn length_of(&self, signs: &[i8]) -> Option<u64> {
        let d = if self.strict {
            Direction::strict(signs.to_vec())
        } else {
            Direction::nonstrict(signs.to_vec())
        };
        d.ok().and_then(|d| self.get(&d))
    }

    /// Entries in direction enumeration order.
    pub fn iter(&self) -> impl Iterator<Item = (&Direction, u64)> {
        self.lengths.iter().map(|(d, &l)| (d, l))
    }

    /// Directions whose length is below 2. The bound on good sets needs every
    /// strict length to be at least 2; such directions are reported, not rejected.
    pub fn below_two(&self) -> Vec<Direction> {
        self.lengths
            .iter()
            .filter(|(_, &l)| l < 2)
            .map(|(d, _)| d.clone())
            .collect()
    }

    /// Pointwise `<=` against a profile over the same directions.
    pub fn is_dominated_by(&self, other: &LengthProfile) -> bool {
        self.n == other.n
            && self.strict == other.strict
            && self.lengths.iter().all(|(d, &l)| other.get(d).is_some_and(|o| l <= o))
    }
}

#[derive(Serialize, Deserialize)]
struct ProfileEntry {
    direction: Vec<i8>,
    length: u64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProfileJson {
    n: usize,
    mode: String,
    lengths: Vec<ProfileEntry>,
}

impl Serialize for LengthProfile {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ProfileJson {
            n: self.n,
            mode: if self.strict { "strict" } else { "nonstrict" }.into(),
            lengths: self
                .lengths
                .iter()
                .map(|(d, &length)| ProfileEntry {
                    direction: d.signs().to_vec(),
                    length,
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LengthProfile {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = ProfileJson::deserialize(d)?;
        let strict = match raw.mode.as_str() {
            "strict" => true,
            "nonstrict" => false,
            other => return Err(D::Error::custom(format!("unknown profile mode {other:?}"))),
        };
        let mut lengths = BTreeMap::new();
        for e in raw.lengths {
            let dir = if strict {
                Direction::strict(e.direction)
            } else {
                Direction::nonstrict(e.direction)
            }
            .map_err(D::Error::custom)?;
            if lengths.insert(dir.clone(), e.length).is_some() {
                return Err(D::Error::custom(format!("direction {dir} listed twice")));
            }
        }
        LengthProfile::from_map(raw.n, strict, lengths).map_err(D::Error::custom)
    }
}

/// A monotone run: a direction and the positions of the run's points, in run order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub direction: Direction,
    pub indices: Vec<usize>,
}
