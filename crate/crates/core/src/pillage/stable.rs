use std::collections::HashMap;

use num_traits::{One, Zero};
use serde::Serialize;

use super::game::{max_share, Allocation, Coalition, PowerFunction, StableCandidate};
use crate::constructions::build_nonstrict;
use crate::core_monotone::{width, LengthProfile, Point, PointSet};
use crate::{Error, Rational, Result};

/// Chain heights in the strict coordinatewise order restricted to `coords`:
/// `u < v` iff `u_i < v_i` for every `i` in `coords`. Heights are capped at 3.
fn depths(coords: &[usize], points: &[Point]) -> Vec<u8> {
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| points[a][coords[0]].cmp(&points[b][coords[0]]));
    let mut height = vec![0u8; points.len()];
    for (k, &v) in order.iter().enumerate() {
        let below = order[..k]
            .iter()
            .filter(|&&u| coords.iter().all(|&i| points[u][i] < points[v][i]))
            .map(|&u| height[u])
            .max()
            .unwrap_or(0);
        height[v] = (below + 1).min(3);
    }
    height
}

fn check_block(b: Coalition, t: &PointSet) -> Result<Vec<usize>> {
    let dim = t.dim();
    if !dim.is_multiple_of(2) {
        return Err(Error::Domain(format!("base set has odd dimension {dim}")));
    }
    if !b.is_subset_of(Coalition::all(dim)) || b.len() != dim / 2 {
        return Err(Error::Domain(format!(
            "block must be {} of the coordinates 0..{dim}",
            dim / 2
        )));
    }
    Ok(b.members().collect())
}

fn check_no_shared_coordinates(t: &PointSet) -> Result<()> {
    let pts = t.points();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            if pts[i].intersects(&pts[j]) {
                return Err(Error::Precondition(format!(
                    "points {} and {} share a coordinate",
                    pts[i], pts[j]
                )));
            }
        }
    }
    Ok(())
}

/// Depth (1, 2 or 3, capped) of `x` in the order `u < v iff u_i < v_i for all i in B`
/// on `t`, where `t` lives in even dimension `2d`, `|B| = d`, and no two points of
/// `t` share a coordinate.
pub fn chain_depth(b: Coalition, x: &Point, t: &PointSet) -> Result<u8> {
    let coords = check_block(b, t)?;
    let pos = t
        .position(x)
        .ok_or_else(|| Error::Domain(format!("{x} is not in the base set")))?;
    check_no_shared_coordinates(t)?;
    Ok(depths(&coords, t.points())[pos])
}

/// The power function built from chain depths on the first `2d` coordinates,
/// `d = floor((n - 1) / 2)`. Defined only on the allocations it was built from.
#[derive(Debug, Clone)]
pub struct ChainPower {
    n: usize,
    d: usize,
    index: HashMap<Allocation, usize>,
    depth: HashMap<Coalition, Vec<u8>>,
}

impl ChainPower {
    pub fn new(n: usize, allocations: &[Allocation]) -> Result<Self> {
        if n < 3 {
            return Err(Error::Domain("the chain-depth power needs at least 3 players".into()));
        }
        let d = (n - 1) / 2;
        let mut projected = Vec::with_capacity(allocations.len());
        for a in allocations {
            if a.players() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: a.players(),
                });
            }
            projected.push(Point::new(a.shares()[..2 * d].to_vec()));
        }
        let base = PointSet::new(2 * d, projected)?;
        check_no_shared_coordinates(&base)?;
        let depth = (0u32..1 << (2 * d))
            .filter(|m| m.count_ones() as usize == d)
            .map(|m| {
                let c = Coalition::from_mask(m);
                (c, depths(&c.members().collect::<Vec<_>>(), base.points()))
            })
            .collect();
        let index = allocations.iter().cloned().enumerate().map(|(i, a)| (a, i)).collect();
        Ok(ChainPower { n, d, index, depth })
    }

    pub fn half(&self) -> usize {
        self.d
    }
}

impl PowerFunction for ChainPower {
    fn players(&self) -> usize {
        self.n
    }

    fn power(&self, c: Coalition, x: &Allocation) -> Result<Rational> {
        let &pos = self
            .index
            .get(x)
            .ok_or_else(|| Error::Undefined(format!("allocation {x} is outside the stable set")))?;
        let core = c.intersection(Coalition::all(2 * self.d));
        Ok(match core.len().cmp(&self.d) {
            std::cmp::Ordering::Less => max_share(c, x),
            std::cmp::Ordering::Equal => Rational::from(self.depth[&core][pos] as i128),
            std::cmp::Ordering::Greater => max_share(c, x) + Rational::from(3),
        })
    }
}

#[derive(Serialize)]
pub struct InternallyStableSet {
    /// The integer point set the allocations are rescaled from.
    pub base: PointSet,
    #[serde(skip)]
    pub candidate: StableCandidate<ChainPower>,
}

/// Builds an internally stable allocation set for `n >= 3` players together with
/// a power function satisfying the axioms on it.
pub fn build_internally_stable(n: usize) -> Result<InternallyStableSet> {
    if n < 3 {
        return Err(Error::Domain("the construction needs at least 3 players".into()));
    }
    let d = (n - 1) / 2;
    let profile = LengthProfile::from_fn(2 * d, false, |c| if c.positives() == d { 3 } else { 1 })?;
    let base = build_nonstrict(&profile)?
        .set()
        .cloned()
        .ok_or_else(|| Error::Internal("non-strict construction did not return a set".into()))?;
    let w = width(&base)?;
    let scale = (w + Rational::one()) * Rational::from(2 * d as i128);
    let mins: Vec<Rational> = (0..2 * d)
        .map(|i| base.points().iter().map(|p| p[i]).min().unwrap_or_else(Rational::zero))
        .collect();
    let extra = n - 2 * d;
    let allocations = base
        .points()
        .iter()
        .map(|p| {
            let mut shares: Vec<Rational> = (0..2 * d).map(|i| (p[i] - mins[i]) / scale).collect();
            let rest = (Rational::one() - shares.iter().sum::<Rational>()) / Rational::from(extra as i128);
            shares.extend(std::iter::repeat_n(rest, extra));
            Allocation::new(shares)
        })
        .collect::<Result<Vec<_>>>()?;
    let power = ChainPower::new(n, &allocations)?;
    Ok(InternallyStableSet {
        base,
        candidate: StableCandidate::new(allocations, power)?,
    })
}
