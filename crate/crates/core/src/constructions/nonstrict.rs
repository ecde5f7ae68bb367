use super::result::{ConstructedPoints, ConstructionKind, ConstructionProfile, ConstructionResult, Stage, Trace};
use crate::core_monotone::{enumerate_directions, LengthProfile, Point, PointSet};
use crate::{rational, Error, Result};

/// Largest construction materialized as an explicit point list.
pub(crate) const MAX_POINTS: u128 = 5_000_000;

/// Extremal set for the non-strict problem: `prod_i l_i` integer points with no
/// weakly monotonic run of length `l_i + 1` in direction `c^i`.
///
/// Starting from the origin, stage `k` takes `l_k` copies of the previous stage
/// translated by `m * L_{k-1} * c^k` for `m = 0 .. l_k - 1`, where `L_k` is the
/// running product of lengths. No two distinct output points share a coordinate.
pub fn build_nonstrict(profile: &LengthProfile) -> Result<ConstructionResult> {
    if profile.is_strict() {
        return Err(Error::Domain("build_nonstrict needs a non-strict profile".into()));
    }
    let (points, stages) = translates(profile)?;
    let claimed_size = stages.last().map_or(1, |s| s.size);
    Ok(ConstructionResult {
        kind: ConstructionKind::A,
        points: ConstructedPoints::Set(PointSet::from_trusted(profile.dim(), to_points(points))),
        profile: ConstructionProfile::Lengths(profile.clone()),
        claimed_size,
        trace: Trace::Translates {
            n: profile.dim(),
            stages,
        },
    })
}

/// Integer coordinates of every stage-by-stage translate, in stage order.
pub(crate) fn translates(profile: &LengthProfile) -> Result<(Vec<Vec<i128>>, Vec<Stage>)> {
    let n = profile.dim();
    let total = profile
        .iter()
        .try_fold(1u128, |acc, (_, l)| acc.checked_mul(l as u128))
        .ok_or(Error::Overflow("non-strict construction size"))?;
    if total > MAX_POINTS {
        return Err(Error::Domain(format!("construction of {total} points is too large to materialize")));
    }
    let mut points: Vec<Vec<i128>> = vec![vec![0; n]];
    let mut stages = Vec::new();
    let mut running: i128 = 1;
    for c in enumerate_directions(n, false)? {
        let copies = profile.get(&c).expect("profile covers every direction");
        let mut next = Vec::with_capacity(points.len() * copies as usize);
        for m in 0..copies as i128 {
            let shift = m * running;
            for p in &points {
                next.push(p.iter().zip(c.signs()).map(|(&x, &s)| x + shift * s as i128).collect());
            }
        }
        points = next;
        running *= copies as i128;
        stages.push(Stage {
            direction: c.signs().to_vec(),
            copies,
            step: running / copies as i128,
            size: running as u128,
        });
    }
    Ok((points, stages))
}

pub(crate) fn to_points(raw: Vec<Vec<i128>>) -> Vec<Point> {
    raw.into_iter().map(|p| Point::new(p.into_iter().map(rational::int).collect())).collect()
}
