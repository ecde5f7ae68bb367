use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::result::{ConstructedPoints, ConstructionKind, ConstructionProfile, ConstructionResult, Trace};
use super::strict::build_strict;
use crate::core_monotone::{LengthProfile, Point, PointSequence};
use crate::{Error, Result};

/// Run-length caps for sequences: one entry per sign vector in `{-1,0,1}^n`,
/// including the zero vector (constant subsequences). Orientation matters for
/// sequences, so no vector is identified with its negation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceProfile {
    n: usize,
    lengths: BTreeMap<Vec<i8>, u64>,
}

fn all_sign_vectors(n: usize) -> Vec<Vec<i8>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i8>| {
                [-1i8, 0, 1].into_iter().map(move |s| {
                    let mut w = v.clone();
                    w.push(s);
                    w
                })
            })
            .collect();
    }
    out
}

impl SequenceProfile {
    pub fn from_fn(n: usize, mut f: impl FnMut(&[i8]) -> u64) -> Result<Self> {
        if n == 0 || n > 12 {
            return Err(Error::Domain(format!("sequence profiles need 1 <= n <= 12, got {n}")));
        }
        let lengths = all_sign_vectors(n)
            .into_iter()
            .map(|v| {
                let l = f(&v);
                (v, l)
            })
            .collect();
        SequenceProfile::from_map(n, lengths)
    }

    pub fn uniform(n: usize, length: u64) -> Result<Self> {
        SequenceProfile::from_fn(n, |_| length)
    }

    pub fn from_map(n: usize, lengths: BTreeMap<Vec<i8>, u64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("sequence profiles need n >= 1".into()));
        }
        let expected = all_sign_vectors(n);
        if lengths.len() != expected.len() || expected.iter().any(|v| !lengths.contains_key(v)) {
            return Err(Error::Domain(format!(
                "sequence profile must cover all {} sign vectors of length {n}",
                expected.len()
            )));
        }
        Ok(SequenceProfile { n, lengths })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, signs: &[i8]) -> Option<u64> {
        self.lengths.get(signs).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[i8], u64)> {
        self.lengths.iter().map(|(v, &l)| (v.as_slice(), l))
    }

    /// Strict profile on dimension `n + 1` for the lifted set `{(j, x^j)}`: directions
    /// with a leading `+1` inherit the cap of their tail, all others get 1.
    pub fn lifted(&self) -> LengthProfile {
        LengthProfile::from_fn(self.n + 1, true, |d| match d.signs().split_first() {
            Some((1, tail)) => self.get(tail).expect("profile covers every sign vector"),
            _ => 1,
        })
        .expect("lifted profile is total")
    }
}

#[derive(Serialize, Deserialize)]
struct Entry {
    direction: Vec<i8>,
    length: u64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SequenceProfileJson {
    n: usize,
    mode: String,
    lengths: Vec<Entry>,
}

impl Serialize for SequenceProfile {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SequenceProfileJson {
            n: self.n,
            mode: "sequence".into(),
            lengths: self
                .lengths
                .iter()
                .map(|(v, &length)| Entry {
                    direction: v.clone(),
                    length,
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SequenceProfile {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = SequenceProfileJson::deserialize(d)?;
        if raw.mode != "sequence" {
            return Err(D::Error::custom(format!("expected mode \"sequence\", got {:?}", raw.mode)));
        }
        let mut lengths = BTreeMap::new();
        for e in raw.lengths {
            if lengths.insert(e.direction.clone(), e.length).is_some() {
                return Err(D::Error::custom(format!("sign vector {:?} listed twice", e.direction)));
            }
        }
        SequenceProfile::from_map(raw.n, lengths).map_err(D::Error::custom)
    }
}

/// Longest sequence in `Q^n` with no strictly monotonic subsequence of length
/// `l_d + 1` in any direction `d`.
///
/// Builds the strict extremal set for the lifted profile in dimension `n + 1`, orders
/// it by the first coordinate and drops that coordinate. Every cap must be at least 2.
pub fn build_sequence_extremal(profile: &SequenceProfile) -> Result<ConstructionResult> {
    if let Some((v, l)) = profile.iter().find(|(_, l)| *l < 2) {
        return Err(Error::Domain(format!("sequence cap for {v:?} is {l}; every cap must be at least 2")));
    }
    let lifted = profile.lifted();
    let g = build_strict(&lifted)?;
    let mut points: Vec<Point> = g.set().expect("strict construction is a set").points().to_vec();
    points.sort_by(|a, b| a[0].cmp(&b[0]));
    if let Some(w) = points.windows(2).find(|w| w[0][0] == w[1][0]) {
        return Err(Error::Internal(format!(
            "lifted construction has two points with first coordinate {}",
            crate::rational::to_string(&w[0][0])
        )));
    }
    let items = points.into_iter().map(|p| Point::new(p.coords()[1..].to_vec())).collect();
    Ok(ConstructionResult {
        kind: ConstructionKind::Sequence,
        points: ConstructedPoints::Sequence(PointSequence::new(profile.dim(), items)?),
        profile: ConstructionProfile::Sequence(profile.clone()),
        claimed_size: g.claimed_size,
        trace: Trace::Projection {
            inner: Box::new(g.trace),
        },
    })
}

/// `(b, b-1, .., 1, 2b, .., b+1, .., ab, .., (a-1)b+1)`: length `ab` with longest
/// increasing run `a` and longest decreasing run `b`.
pub fn es_real_sequence(a: u64, b: u64) -> Result<PointSequence> {
    es_blocks(a, b, 1)
}

/// The `(l, l)` sequence above with every entry repeated `l` times: length `l^3`
/// and no strictly increasing, strictly decreasing or constant subsequence of
/// length `l + 1`.
pub fn repeated_es_sequence(l: u64) -> Result<PointSequence> {
    es_blocks(l, l, l)
}

fn es_blocks(a: u64, b: u64, repeat: u64) -> Result<PointSequence> {
    if a == 0 || b == 0 || repeat == 0 {
        return Err(Error::Domain("sequence parameters must be at least 1".into()));
    }
    let len = (a as u128) * (b as u128) * (repeat as u128);
    if len > 10_000_000 {
        return Err(Error::Domain(format!("sequence of length {len} is too long")));
    }
    let (a, b) = (a as i128, b as i128);
    let values = (1..=a).flat_map(|block| (1..=b).rev().map(move |k| (block - 1) * b + k));
    Ok(PointSequence::from_ints(
        values.flat_map(|v| std::iter::repeat_n(v, repeat as usize)),
    ))
}
