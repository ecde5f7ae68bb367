use std::collections::BTreeSet;

use proptest::prelude::*;
use strictmono::constructions::lambda_of;
use strictmono::core_monotone::{
    enumerate_directions, intersecting_core, is_monotonic, is_strictly_monotonic, longest_all_directions,
    longest_nonstrict_monotone, longest_strict_monotone, pair_direction, peel_antichains, verify_good_set, Direction,
    LengthProfile, Orientation, Point, PointSequence, PointSet,
};

fn point_set(n: usize, raw: Vec<Vec<i128>>) -> PointSet {
    let unique: BTreeSet<Vec<i128>> = raw.into_iter().collect();
    PointSet::new(n, unique.into_iter().map(Point::from_ints).collect()).unwrap()
}

fn small_set(max_len: usize, side: i128) -> impl Strategy<Value = PointSet> {
    (1usize..=3).prop_flat_map(move |n| {
        prop::collection::vec(prop::collection::vec(0..side, n), 0..=max_len).prop_map(move |raw| point_set(n, raw))
    })
}

/// Longest run found by trying every ordering of every subset, checking the
/// whole prefix with the public predicate at each step.
fn brute_longest(set: &PointSet, d: &Direction) -> usize {
    fn dfs(set: &PointSet, d: &Direction, seq: &mut Vec<Point>, used: &mut Vec<bool>, best: &mut usize) {
        *best = (*best).max(seq.len());
        for i in 0..set.len() {
            if used[i] {
                continue;
            }
            seq.push(set.points()[i].clone());
            let candidate = PointSequence::new(set.dim(), seq.clone()).unwrap();
            let ok = if d.is_strict() {
                is_strictly_monotonic(&candidate, d).unwrap()
            } else {
                is_monotonic(&candidate, d).unwrap()
            };
            if ok {
                used[i] = true;
                dfs(set, d, seq, used, best);
                used[i] = false;
            }
            seq.pop();
        }
    }
    let mut best = 0;
    dfs(set, d, &mut Vec::new(), &mut vec![false; set.len()], &mut best);
    best
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn strict_dp_matches_brute_force(set in small_set(6, 4)) {
        for d in enumerate_directions(set.dim(), true).unwrap() {
            let (len, witness) = longest_strict_monotone(&set, &d).unwrap();
            prop_assert_eq!(len, brute_longest(&set, &d), "direction {}", d);
            prop_assert_eq!(witness.indices.len(), len);
            let run = PointSequence::new(set.dim(), witness.indices.iter().map(|&i| set.points()[i].clone()).collect()).unwrap();
            prop_assert!(is_strictly_monotonic(&run, &d).unwrap());
        }
    }

    #[test]
    fn nonstrict_dp_matches_brute_force(set in small_set(6, 4)) {
        for c in enumerate_directions(set.dim(), false).unwrap() {
            let (len, witness) = longest_nonstrict_monotone(&set, &c).unwrap();
            prop_assert_eq!(len, brute_longest(&set, &c), "direction {}", c);
            let run = PointSequence::new(set.dim(), witness.indices.iter().map(|&i| set.points()[i].clone()).collect()).unwrap();
            prop_assert!(is_monotonic(&run, &c).unwrap());
        }
    }

    #[test]
    fn pair_direction_is_symmetric(a in prop::collection::vec(-3i128..3, 3), b in prop::collection::vec(-3i128..3, 3)) {
        let (x, y) = (Point::from_ints(a), Point::from_ints(b));
        let fwd = pair_direction(&x, &y).unwrap();
        let bwd = pair_direction(&y, &x).unwrap();
        match (fwd, bwd) {
            (None, None) => prop_assert_eq!(&x, &y),
            (Some((d1, o1)), Some((d2, o2))) => {
                prop_assert_eq!(d1, d2);
                prop_assert_ne!(o1, o2);
                prop_assert!(matches!(o1, Orientation::Forward | Orientation::Backward));
            }
            _ => prop_assert!(false, "asymmetric result"),
        }
    }

    /// Weak runs in all non-strict directions bound the size multiplicatively.
    #[test]
    fn size_bounded_by_nonstrict_run_product(set in small_set(12, 5)) {
        let runs = longest_all_directions(&set, false).unwrap();
        let product: u128 = runs.values().map(|&l| l.max(1) as u128).product();
        prop_assert!(set.len() as u128 <= product);
    }

    /// Every set is good for its own observed strict profile (raised to 2), so it
    /// can be no larger than the extremal size of that profile.
    #[test]
    fn size_bounded_by_extremal_size(set in small_set(12, 5)) {
        let runs = longest_all_directions(&set, true).unwrap();
        let profile = LengthProfile::from_fn(set.dim(), true, |d| runs[d].max(2) as u64).unwrap();
        prop_assert!(verify_good_set(&set, &profile).unwrap().is_good());
        prop_assert!(set.len() as u128 <= lambda_of(&profile).unwrap().full_lambda());
    }

    #[test]
    fn peeling_partitions_into_antichains(set in small_set(10, 4)) {
        for c in enumerate_directions(set.dim(), false).unwrap() {
            let parts = peel_antichains(&set, &c).unwrap();
            let total: usize = parts.iter().map(PointSet::len).sum();
            prop_assert_eq!(total, set.len());
            let union: BTreeSet<&Point> = parts.iter().flat_map(|p| p.points()).collect();
            prop_assert_eq!(union.len(), set.len());
            let strict_c = c.as_strict();
            for part in &parts {
                prop_assert!(longest_strict_monotone(part, &strict_c).unwrap().0 <= 1);
            }
            prop_assert_eq!(parts.len(), longest_strict_monotone(&set, &strict_c).unwrap().0);
        }
    }

    #[test]
    fn core_is_intersecting_and_large(set in small_set(12, 5)) {
        let runs = longest_all_directions(&set, true).unwrap();
        let profile = LengthProfile::from_fn(set.dim(), true, |d| runs[d].max(1) as u64).unwrap();
        let core = intersecting_core(&set, &profile).unwrap();
        prop_assert!(core.points().iter().all(|p| set.contains(p)));
        prop_assert!(core.is_pairwise_intersecting());
        let product: usize = enumerate_directions(set.dim(), false)
            .unwrap()
            .iter()
            .map(|c| profile.get(&c.as_strict()).unwrap() as usize)
            .product();
        prop_assert!(core.len() * product >= set.len());
    }
}

#[test]
fn core_rejects_sets_over_the_cap() {
    let set = point_set(2, vec![vec![0, 0], vec![1, 1], vec![2, 2]]);
    let profile = LengthProfile::uniform(2, true, 2).unwrap();
    assert!(intersecting_core(&set, &profile).is_err());
}
