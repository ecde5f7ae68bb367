use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use super::point::{Point, PointSequence};
use crate::{Error, Result};

/// Whether a pair runs along its canonical direction or against it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Forward,
    Backward,
}

impl Orientation {
    pub fn sign(self) -> i8 {
        match self {
            Orientation::Forward => 1,
            Orientation::Backward => -1,
        }
    }
}

/// A canonical sign vector.
///
/// Strict directions live in `{-1,0,1}^n`, are nonzero, and have `+1` as their first
/// nonzero entry. Non-strict directions live in `{-1,1}^n` with `+1` first. A direction
/// and its negation describe the same runs of a set read backwards, so only the
/// canonical representative is kept.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Direction {
    signs: Vec<i8>,
    strict: bool,
}

fn first_nonzero(signs: &[i8]) -> Option<usize> {
    signs.iter().position(|&s| s != 0)
}

impl Direction {
    /// A strict direction; `signs` must already be canonical.
    pub fn strict(signs: Vec<i8>) -> Result<Self> {
        if signs.iter().any(|s| !(-1..=1).contains(s)) {
            return Err(Error::Domain(format!("sign vector {signs:?} has entries outside {{-1,0,1}}")));
        }
        match first_nonzero(&signs) {
            Some(i) if signs[i] == 1 => Ok(Direction { signs, strict: true }),
            Some(_) => Err(Error::Domain(format!("{signs:?} is not canonical (first nonzero entry must be +1)"))),
            None => Err(Error::Domain("the zero vector is not a direction".into())),
        }
    }

    /// A non-strict direction; `signs` must be in `{-1,1}^n` with `signs[0] = 1`.
    pub fn nonstrict(signs: Vec<i8>) -> Result<Self> {
        if signs.is_empty() || signs[0] != 1 || signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::Domain(format!("{signs:?} is not a canonical non-strict direction")));
        }
        Ok(Direction { signs, strict: false })
    }

    /// Canonicalizes an arbitrary nonzero sign vector into a strict direction.
    pub fn canonicalize(raw: &[i8]) -> Option<(Direction, Orientation)> {
        let i = first_nonzero(raw)?;
        if raw[i] > 0 {
            Some((Direction { signs: raw.to_vec(), strict: true }, Orientation::Forward))
        } else {
            let signs = raw.iter().map(|s| -s).collect();
            Some((Direction { signs, strict: true }, Orientation::Backward))
        }
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn dim(&self) -> usize {
        self.signs.len()
    }

    pub fn is_strict(&self) -> bool {
        self.strict
    }

    /// Positions of the nonzero entries.
    pub fn support(&self) -> Vec<usize> {
        self.signs
            .iter()
            .enumerate()
            .filter(|(_, &s)| s != 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Support as a bitmask over coordinate positions.
    pub fn support_mask(&self) -> u32 {
        self.signs
            .iter()
            .enumerate()
            .filter(|(_, &s)| s != 0)
            .fold(0, |m, (i, _)| m | (1 << i))
    }

    pub fn has_full_support(&self) -> bool {
        self.signs.iter().all(|&s| s != 0)
    }

    /// The same sign vector viewed as a strict direction.
    pub fn as_strict(&self) -> Direction {
        Direction {
            signs: self.signs.clone(),
            strict: true,
        }
    }

    /// Number of `+1` entries.
    pub fn positives(&self) -> usize {
        self.signs.iter().filter(|&&s| s == 1).count()
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, s) in self.signs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str(")")
    }
}

impl Serialize for Direction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.signs.serialize(s)
    }
}

/// All canonical directions of dimension `n`, in lexicographic order of their sign
/// vectors (`-1 < 0 < +1`).
///
/// Strict mode yields `(3^n - 1) / 2` directions, non-strict mode `2^(n-1)`.
pub fn enumerate_directions(n: usize, strict: bool) -> Result<Vec<Direction>> {
    if n == 0 {
        return Err(Error::Domain("directions need n >= 1".into()));
    }
    if n > 20 {
        return Err(Error::Domain(format!("n = {n} is too large to enumerate directions")));
    }
    let alphabet: &[i8] = if strict { &[-1, 0, 1] } else { &[-1, 1] };
    let mut out = Vec::new();
    let mut cur = vec![0i8; n];
    fn rec(pos: usize, alphabet: &[i8], cur: &mut Vec<i8>, strict: bool, out: &mut Vec<Direction>) {
        if pos == cur.len() {
            if let Some(i) = first_nonzero(cur) {
                if cur[i] == 1 {
                    out.push(Direction { signs: cur.clone(), strict });
                }
            }
            return;
        }
        for &s in alphabet {
            cur[pos] = s;
            rec(pos + 1, alphabet, cur, strict, out);
        }
    }
    rec(0, alphabet, &mut cur, strict, &mut out);
    Ok(out)
}

fn sign_of(o: Ordering) -> i8 {
    match o {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

/// Raw sign vector of `y - x`.
pub fn raw_signs(x: &Point, y: &Point) -> Result<Vec<i8>> {
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch {
            expected: x.dim(),
            found: y.dim(),
        });
    }
    Ok(x.coords().iter().zip(y.coords()).map(|(a, b)| sign_of(b.cmp(a))).collect())
}

/// The canonical strict direction `d` and orientation `s` such that `(x, y)` is
/// strictly monotonic in direction `s * d`; `None` when `x == y`.
pub fn pair_direction(x: &Point, y: &Point) -> Result<Option<(Direction, Orientation)>> {
    Ok(Direction::canonicalize(&raw_signs(x, y)?))
}

fn check_seq_dim(seq: &PointSequence, n: usize) -> Result<()> {
    if seq.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: seq.dim(),
            found: n,
        });
    }
    Ok(())
}

/// Whether each coordinate sequence is strictly decreasing, constant or strictly
/// increasing according to the signs. Accepts any sign vector, including
/// non-canonical ones and the zero vector (all points equal).
pub fn is_strictly_monotonic_signs(seq: &PointSequence, signs: &[i8]) -> Result<bool> {
    check_seq_dim(seq, signs.len())?;
    Ok(seq
        .items()
        .windows(2)
        .all(|w| w[0].coords().iter().zip(w[1].coords()).zip(signs).all(|((a, b), &s)| sign_of(b.cmp(a)) == s)))
}

/// Weak monotonicity per sign; a zero sign imposes nothing.
pub fn is_monotonic_signs(seq: &PointSequence, signs: &[i8]) -> Result<bool> {
    check_seq_dim(seq, signs.len())?;
    Ok(seq.items().windows(2).all(|w| {
        w[0].coords().iter().zip(w[1].coords()).zip(signs).all(|((a, b), &s)| match s {
            1 => a <= b,
            -1 => a >= b,
            _ => true,
        })
    }))
}

pub fn is_strictly_monotonic(seq: &PointSequence, d: &Direction) -> Result<bool> {
    if !d.is_strict() {
        return Err(Error::Domain(format!("{d} is not a strict direction")));
    }
    is_strictly_monotonic_signs(seq, d.signs())
}

pub fn is_monotonic(seq: &PointSequence, c: &Direction) -> Result<bool> {
    if c.is_strict() {
        return Err(Error::Domain(format!("{c} is not a non-strict direction")));
    }
    is_monotonic_signs(seq, c.signs())
}
