use super::direction::{enumerate_directions, Direction};
use super::longest::{verify_good_set, Ranks};
use super::point::PointSet;
use super::profile::LengthProfile;
use crate::{Error, Result};

/// Partitions `set` into antichains of the order `x < y` iff `(x, y)` is strictly
/// monotonic in direction `c`, by repeatedly removing the maximal elements.
///
/// Part `k` (0-based) holds the points whose longest chain upwards has `k + 1`
/// elements, so the number of parts is the maximum chain length. `c` must have
/// full support; strict and non-strict flags are both accepted.
pub fn peel_antichains(set: &PointSet, c: &Direction) -> Result<Vec<PointSet>> {
    Ok(peel_indices(set, c)?.into_iter().map(|part| set.select(&part)).collect())
}

pub(crate) fn peel_indices(set: &PointSet, c: &Direction) -> Result<Vec<Vec<usize>>> {
    if c.dim() != set.dim() {
        return Err(Error::DimensionMismatch {
            expected: set.dim(),
            found: c.dim(),
        });
    }
    if !c.has_full_support() {
        return Err(Error::Domain(format!("{c} must have full support to order a set")));
    }
    let ranks = Ranks::new(set.points(), set.dim());
    let heights = ranks.chain_heights(c.signs());
    let levels = heights.iter().copied().max().unwrap_or(0);
    let mut parts = vec![Vec::new(); levels];
    for (i, &h) in heights.iter().enumerate() {
        parts[h - 1].push(i);
    }
    Ok(parts)
}

/// Extracts a pairwise intersecting subset from a good set.
///
/// For each full-support direction in enumeration order the current set is peeled
/// into antichains and the first largest antichain is kept. The result has size at
/// least `|U| / prod_c l_c` and every two of its points agree in some coordinate.
pub fn intersecting_core(set: &PointSet, profile: &LengthProfile) -> Result<PointSet> {
    if !profile.is_strict() {
        return Err(Error::Domain("intersecting_core needs a strict profile".into()));
    }
    let report = verify_good_set(set, profile)?;
    if let Some(w) = report.violation {
        let pts: Vec<String> = w.indices.iter().map(|&i| set.points()[i].to_string()).collect();
        return Err(Error::Precondition(format!(
            "set contains a strictly monotonic run of length {} in direction {} (cap {}): {}",
            w.indices.len(),
            w.direction,
            profile.get(&w.direction).unwrap_or(0),
            pts.join(" ")
        )));
    }
    let mut current = set.clone();
    for c in enumerate_directions(set.dim(), false)? {
        let parts = peel_indices(&current, &c)?;
        let Some(largest) = parts.iter().map(Vec::len).max() else {
            break;
        };
        let keep = parts.iter().find(|p| p.len() == largest).unwrap();
        current = current.select(keep);
    }
    Ok(current)
}
