//! Longest monotone runs by longest-path dynamic programming.
//!
//! Coordinates are first compressed to dense integer ranks per axis, which keeps every
//! comparison exact while making the quadratic pair scan cheap.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::direction::{enumerate_directions, Direction};
use super::point::{Point, PointSequence, PointSet};
use super::profile::{LengthProfile, Witness};
use crate::{Error, Result};

/// Per-axis dense ranks of a point list: `rows[p][i]` is the rank of point `p`'s
/// `i`-th coordinate among all values on axis `i`.
pub(crate) struct Ranks {
    rows: Vec<Vec<i64>>,
}

impl Ranks {
    pub(crate) fn new(points: &[Point], n: usize) -> Ranks {
        let mut rows = vec![vec![0i64; n]; points.len()];
        let mut order: Vec<usize> = (0..points.len()).collect();
        for axis in 0..n {
            order.sort_by(|&a, &b| points[a][axis].cmp(&points[b][axis]));
            let mut rank = 0;
            for k in 0..order.len() {
                if k > 0 && points[order[k]][axis] != points[order[k - 1]][axis] {
                    rank += 1;
                }
                rows[order[k]][axis] = rank;
            }
        }
        Ranks { rows }
    }

    fn len(&self) -> usize {
        self.rows.len()
    }

    /// `(x, y)` is strictly monotonic along `signs`.
    fn strict_arc(&self, x: usize, y: usize, signs: &[i8]) -> bool {
        let (a, b) = (&self.rows[x], &self.rows[y]);
        signs.iter().enumerate().all(|(i, &s)| (b[i] - a[i]).signum() as i8 == s)
    }

    /// `(x, y)` is weakly monotonic along `signs`, for distinct points.
    fn weak_arc(&self, x: usize, y: usize, signs: &[i8]) -> bool {
        let (a, b) = (&self.rows[x], &self.rows[y]);
        signs.iter().enumerate().all(|(i, &s)| match s {
            1 => a[i] <= b[i],
            -1 => a[i] >= b[i],
            _ => true,
        })
    }

    /// For each point, the number of elements on the longest strict chain in
    /// direction `signs` that starts at it (1 for maximal elements).
    pub(crate) fn chain_heights(&self, signs: &[i8]) -> Vec<usize> {
        let lead = signs.iter().position(|&s| s != 0).expect("nonzero direction");
        let key: Vec<i64> = (0..self.len()).map(|p| self.rows[p][lead] * signs[lead] as i64).collect();
        longest_from(self.len(), &key, |x, y| self.strict_arc(x, y, signs))
    }

    fn signed_sum(&self, x: usize, signs: &[i8]) -> i64 {
        self.rows[x].iter().zip(signs).map(|(&r, &s)| r * s as i64).sum()
    }
}

/// Longest path in a DAG given by `arc`, where `key` strictly increases along arcs.
///
/// Returns the longest length and the lexicographically smallest index sequence
/// among the paths attaining it.
fn longest_path(count: usize, key: &[i64], arc: impl Fn(usize, usize) -> bool) -> (usize, Vec<usize>) {
    if count == 0 {
        return (0, Vec::new());
    }
    let from = longest_from(count, key, &arc);
    let longest = *from.iter().max().unwrap();
    let mut path = Vec::with_capacity(longest);
    let mut cur = (0..count).find(|&i| from[i] == longest).unwrap();
    path.push(cur);
    while from[cur] > 1 {
        cur = (0..count)
            .find(|&j| from[j] == from[cur] - 1 && key[j] > key[cur] && arc(cur, j))
            .expect("a successor exists on every maximal path");
        path.push(cur);
    }
    (longest, path)
}

/// `from[i]`: number of vertices on the longest path starting at `i`.
fn longest_from(count: usize, key: &[i64], arc: impl Fn(usize, usize) -> bool) -> Vec<usize> {
    let mut order: Vec<usize> = (0..count).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(key[i]));
    let mut from = vec![1usize; count];
    for (pos, &i) in order.iter().enumerate() {
        let mut best = 0;
        for &j in &order[..pos] {
            if from[j] > best && key[j] > key[i] && arc(i, j) {
                best = from[j];
            }
        }
        from[i] = best + 1;
    }
    from
}

fn strict_run(ranks: &Ranks, signs: &[i8]) -> (usize, Vec<usize>) {
    // Every arc strictly increases the first nonzero axis, up to its sign.
    let lead = signs.iter().position(|&s| s != 0);
    let key: Vec<i64> = (0..ranks.len())
        .map(|p| lead.map_or(0, |i| ranks.rows[p][i] * signs[i] as i64))
        .collect();
    if lead.is_none() {
        // Only equal points are constant in every coordinate; sets hold distinct points.
        return (ranks.len().min(1), if ranks.len() > 0 { vec![0] } else { vec![] });
    }
    longest_path(ranks.len(), &key, |x, y| ranks.strict_arc(x, y, signs))
}

fn weak_run(ranks: &Ranks, signs: &[i8]) -> (usize, Vec<usize>) {
    let key: Vec<i64> = (0..ranks.len()).map(|p| ranks.signed_sum(p, signs)).collect();
    longest_path(ranks.len(), &key, |x, y| x != y && ranks.weak_arc(x, y, signs))
}

fn check_direction(set_dim: usize, d: &Direction, strict: bool) -> Result<()> {
    if d.dim() != set_dim {
        return Err(Error::DimensionMismatch {
            expected: set_dim,
            found: d.dim(),
        });
    }
    if d.is_strict() != strict {
        return Err(Error::Domain(format!(
            "{d} is not a {} direction",
            if strict { "strict" } else { "non-strict" }
        )));
    }
    Ok(())
}

/// Maximum number of points of `set` forming a strictly monotonic sequence in
/// direction `d`, with the lexicographically smallest witness attaining it.
pub fn longest_strict_monotone(set: &PointSet, d: &Direction) -> Result<(usize, Witness)> {
    check_direction(set.dim(), d, true)?;
    let ranks = Ranks::new(set.points(), set.dim());
    let (len, indices) = strict_run(&ranks, d.signs());
    Ok((len, Witness { direction: d.clone(), indices }))
}

/// Maximum number of points of `set` forming a weakly monotonic sequence in
/// direction `c`.
pub fn longest_nonstrict_monotone(set: &PointSet, c: &Direction) -> Result<(usize, Witness)> {
    check_direction(set.dim(), c, false)?;
    let ranks = Ranks::new(set.points(), set.dim());
    let (len, indices) = weak_run(&ranks, c.signs());
    Ok((len, Witness { direction: c.clone(), indices }))
}

/// Longest run length for every canonical direction of the set's dimension.
pub fn longest_all_directions(set: &PointSet, strict: bool) -> Result<BTreeMap<Direction, usize>> {
    let dirs = enumerate_directions(set.dim(), strict)?;
    let ranks = Ranks::new(set.points(), set.dim());
    Ok(dirs
        .into_par_iter()
        .map(|d| {
            let len = if strict { strict_run(&ranks, d.signs()).0 } else { weak_run(&ranks, d.signs()).0 };
            (d, len)
        })
        .collect())
}

/// Longest strictly monotonic subsequence of `seq` along any sign vector, including
/// non-canonical ones and the zero vector (constant subsequences). Returns the length
/// and the subsequence positions.
pub fn longest_strict_subsequence(seq: &PointSequence, signs: &[i8]) -> Result<(usize, Vec<usize>)> {
    if signs.len() != seq.dim() {
        return Err(Error::DimensionMismatch {
            expected: seq.dim(),
            found: signs.len(),
        });
    }
    let lifted = seq.lift();
    let mut lifted_signs = vec![1i8];
    lifted_signs.extend_from_slice(signs);
    Ok(strict_run(&Ranks::new(lifted.points(), lifted.dim()), &lifted_signs))
}

/// Longest weakly monotonic subsequence of `seq` along `signs`.
pub fn longest_monotone_subsequence(seq: &PointSequence, signs: &[i8]) -> Result<(usize, Vec<usize>)> {
    if signs.len() != seq.dim() {
        return Err(Error::DimensionMismatch {
            expected: seq.dim(),
            found: signs.len(),
        });
    }
    let ranks = Ranks::new(seq.items(), seq.dim());
    let count = seq.len();
    let key: Vec<i64> = (0..count as i64).collect();
    Ok(longest_path(count, &key, |x, y| ranks.weak_arc(x, y, signs)))
}

/// Per-direction comparison of a set against a length profile.
#[derive(Debug, Clone, Serialize)]
pub struct GoodSetReport {
    /// `(direction, longest run, permitted maximum)` in direction order.
    pub directions: Vec<(Direction, usize, u64)>,
    /// First direction whose longest run exceeds its cap, with a witness run.
    pub violation: Option<Witness>,
}

impl GoodSetReport {
    pub fn is_good(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks that `set` has no run longer than the profile permits in any direction,
/// strict or non-strict according to the profile's mode.
pub fn verify_good_set(set: &PointSet, profile: &LengthProfile) -> Result<GoodSetReport> {
    if profile.dim() != set.dim() {
        return Err(Error::DimensionMismatch {
            expected: set.dim(),
            found: profile.dim(),
        });
    }
    let ranks = Ranks::new(set.points(), set.dim());
    let strict = profile.is_strict();
    let entries: Vec<(Direction, u64)> = profile.iter().map(|(d, l)| (d.clone(), l)).collect();
    let runs: Vec<(usize, Vec<usize>)> = entries
        .par_iter()
        .map(|(d, _)| if strict { strict_run(&ranks, d.signs()) } else { weak_run(&ranks, d.signs()) })
        .collect();
    let mut directions = Vec::with_capacity(entries.len());
    let mut violation = None;
    for ((d, cap), (len, indices)) in entries.into_iter().zip(runs) {
        if violation.is_none() && len as u64 > cap {
            violation = Some(Witness {
                direction: d.clone(),
                indices,
            });
        }
        directions.push((d, len, cap));
    }
    Ok(GoodSetReport { directions, violation })
}
