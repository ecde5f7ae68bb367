use num_traits::One;

use super::nonstrict::{translates, MAX_POINTS};
use super::result::{ConstructedPoints, ConstructionKind, ConstructionProfile, ConstructionResult, Trace};
use super::sizes::{insert_zero, lambda_of};
use crate::core_monotone::{enumerate_directions, width, LengthProfile, Point, PointSet};
use crate::{rational, Error, Rational, Result};

/// Extremal set for the strict problem, of size `lambda([n])`.
///
/// For `n = 1` this is `l` points on a line. Otherwise, with `i0` the smallest
/// maximizer in the `lambda` recursion, the profile restricted to directions with a
/// zero at `i0` is built recursively into `F`, embedded with coordinate `i0 = 0` and
/// scaled by `1 / (w(F) + 1)`, and a copy is translated onto each point of the
/// non-strict set `E` built from the full-support lengths.
pub fn build_strict(profile: &LengthProfile) -> Result<ConstructionResult> {
    if !profile.is_strict() {
        return Err(Error::Domain("build_strict needs a strict profile".into()));
    }
    let table = lambda_of(profile)?;
    let size = table.full_lambda();
    if size > MAX_POINTS {
        return Err(Error::Domain(format!("construction of {size} points is too large to materialize")));
    }
    let (points, trace) = build(profile)?;
    if points.len() as u128 != size {
        return Err(Error::Internal(format!(
            "strict construction produced {} points, expected {size}",
            points.len()
        )));
    }
    let set = PointSet::new(profile.dim(), points)
        .map_err(|e| Error::Internal(format!("strict construction is not a set: {e}")))?;
    Ok(ConstructionResult {
        kind: ConstructionKind::G,
        points: ConstructedPoints::Set(set),
        profile: ConstructionProfile::Lengths(profile.clone()),
        claimed_size: size,
        trace,
    })
}

fn build(profile: &LengthProfile) -> Result<(Vec<Point>, Trace)> {
    let n = profile.dim();
    if n == 1 {
        let length = profile.length_of(&[1]).expect("D_1 has one direction");
        let points = (0..length as i128).map(|v| Point::from_ints([v])).collect();
        return Ok((points, Trace::Line { length }));
    }
    let table = lambda_of(profile)?;
    let pivot = table.argmax(table.full_mask()).expect("nonempty coordinate set");

    let reduced = LengthProfile::from_fn(n - 1, true, |d| {
        profile.get(&insert_zero(d, pivot)).expect("profile covers every direction")
    })?;
    let (inner, inner_trace) = build(&reduced)?;
    let inner_set = PointSet::from_trusted(n - 1, inner);
    let scale = Rational::one() / (width(&inner_set)? + Rational::one());
    let small: Vec<Vec<Rational>> = inner_set
        .into_points()
        .into_iter()
        .map(|p| {
            let mut coords: Vec<Rational> = p.into_coords().into_iter().map(|c| c * scale).collect();
            coords.insert(pivot, Rational::from_integer(0));
            coords
        })
        .collect();

    let outer_profile = LengthProfile::from_fn(n, false, |c| {
        profile.get(&c.as_strict()).expect("full-support directions are strict directions")
    })?;
    debug_assert_eq!(outer_profile.iter().count(), enumerate_directions(n, false)?.len());
    let (outer, stages) = translates(&outer_profile)?;

    let mut points = Vec::with_capacity(outer.len() * small.len());
    for x in &outer {
        for f in &small {
            points.push(Point::new(
                x.iter().zip(f).map(|(&xi, fi)| rational::int(xi) + fi).collect(),
            ));
        }
    }
    let trace = Trace::Product {
        n,
        pivot,
        scale,
        inner: Box::new(inner_trace),
        outer: Box::new(Trace::Translates { n, stages }),
    };
    Ok((points, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core_monotone::longest_all_directions;

    #[test]
    fn sizes_match_closed_form() {
        for (n, l, size) in [(1, 5, 5), (2, 2, 8), (2, 3, 27), (3, 2, 128)] {
            let g = build_strict(&LengthProfile::uniform(n, true, l).unwrap()).unwrap();
            assert_eq!(g.len(), size);
            assert_eq!(g.claimed_size, size as u128);
        }
    }

    #[test]
    fn line_base_case() {
        let g = build_strict(&LengthProfile::uniform(1, true, 5).unwrap()).unwrap();
        assert_eq!(g.set().unwrap().points(), &[0, 1, 2, 3, 4].map(|v| Point::from_ints([v])));
    }

    #[test]
    fn g22_is_good() {
        let g = build_strict(&LengthProfile::uniform(2, true, 2).unwrap()).unwrap();
        let runs = longest_all_directions(g.set().unwrap(), true).unwrap();
        assert!(runs.values().all(|&l| l <= 2), "{runs:?}");
        // The pivot axis is constant inside each small copy and the outer set shares
        // no coordinates, so moving along the other axis alone is impossible.
        assert_eq!(runs[&crate::core_monotone::Direction::strict(vec![1, 0]).unwrap()], 1);
        assert_eq!(runs.values().filter(|&&l| l == 2).count(), 3);
    }

    #[test]
    fn mixed_profile_respects_every_cap() {
        let p = LengthProfile::from_fn(2, true, |d| match d.signs() {
            [0, 1] => 2,
            [1, -1] => 3,
            [1, 0] => 4,
            _ => 2,
        })
        .unwrap();
        let g = build_strict(&p).unwrap();
        assert_eq!(g.len() as u128, lambda_of(&p).unwrap().full_lambda());
        for (d, len) in longest_all_directions(g.set().unwrap(), true).unwrap() {
            assert!(len as u64 <= p.get(&d).unwrap(), "{d}: {len}");
        }
    }
}
