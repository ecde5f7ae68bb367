//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use strictmono::constructions::{build_nonstrict, build_strict, lambda_of, repeated_es_sequence};
use strictmono::core_monotone::{
    enumerate_directions, is_strictly_monotonic, longest_all_directions, longest_strict_monotone, verify_good_set,
    width, Direction, LengthProfile, Point, PointSequence, PointSet,
};
use strictmono::flats::{
    coordinate_value_bound_check, cube_pairs, exterior_certificate, is_intersecting_system, is_minimal,
    max_cross_intersecting_search, minimalize, verify_cross_intersecting,
};
use strictmono::pillage::{build_internally_stable, check_axioms, internal_stability};
use strictmono::Rational;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn construction_sizes() -> Outcome {
    let mut sizes = Vec::new();
    for ell in [2u64, 3] {
        for n in 1..=3usize {
            let profile = LengthProfile::uniform(n, true, ell).map_err(err)?;
            let built = build_strict(&profile).map_err(err)?;
            let expected = (ell as u128).pow((1 << n) - 1);
            ensure(built.len() as u128 == expected, || {
                format!("n={n} l={ell}: {} points, expected {expected}", built.len())
            })?;
            sizes.push(built.len().to_string());
        }
    }
    Ok(format!("sizes {}", sizes.join(", ")))
}

fn strict_constructions_are_good() -> Outcome {
    for (n, ell) in [(2usize, 2u64), (2, 3), (3, 2), (3, 3)] {
        let profile = LengthProfile::uniform(n, true, ell).map_err(err)?;
        let built = build_strict(&profile).map_err(err)?;
        let runs = longest_all_directions(built.set().unwrap(), true).map_err(err)?;
        ensure(runs.len() == enumerate_directions(n, true).map_err(err)?.len(), || "missing directions".into())?;
        if let Some((d, l)) = runs.iter().find(|(_, &l)| l as u64 > ell) {
            return Err(format!("n={n} l={ell}: run of {l} in direction {d}"));
        }
    }
    Ok("all directions within caps for (2,2) (2,3) (3,2) (3,3)".into())
}

fn random_sets_exceeding_extremal_size() -> Outcome {
    let profile = LengthProfile::uniform(2, true, 2).map_err(err)?;
    let size = lambda_of(&profile).map_err(err)?.full_lambda() as usize + 1;
    ensure(size == 9, || format!("extremal size {} + 1 is not 9", size - 1))?;
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for trial in 0..100 {
        let mut seen = BTreeSet::new();
        let mut points = Vec::new();
        while points.len() < size {
            let (a, b) = (rng.gen_range(0..12i128), rng.gen_range(0..12i128));
            if seen.insert((a, b)) {
                points.push(Point::new(vec![Rational::new(a, 12), Rational::new(b, 12)]));
            }
        }
        let set = PointSet::new(2, points).map_err(err)?;
        let found = enumerate_directions(2, true)
            .map_err(err)?
            .iter()
            .any(|d| longest_strict_monotone(&set, d).map(|(l, _)| l >= 3).unwrap_or(false));
        ensure(found, || format!("trial {trial}: no strict run of length 3"))?;
    }
    Ok("100/100 sets contain a strict run of length 3".into())
}

fn nonstrict_profiles(n: usize) -> Vec<LengthProfile> {
    let dirs = enumerate_directions(n, false).unwrap();
    (0..3usize.pow(dirs.len() as u32))
        .map(|mut code| {
            LengthProfile::from_fn(n, false, |_| {
                let l = (code % 3) as u64 + 1;
                code /= 3;
                l
            })
            .unwrap()
        })
        .collect()
}

fn nonstrict_construction_suite() -> Outcome {
    let mut count = 0;
    for n in 1..=3 {
        for profile in nonstrict_profiles(n) {
            let built = build_nonstrict(&profile).map_err(err)?;
            let set = built.set().unwrap();
            let target: u64 = profile.iter().map(|(_, l)| l).product();
            ensure(set.len() as u64 == target, || format!("{profile:?}: size {}", set.len()))?;
            ensure(set.points().iter().all(|p| p.coords().iter().all(Rational::is_integer)), || {
                format!("{profile:?}: non-integral point")
            })?;
            ensure(width(set).map_err(err)? <= Rational::from(target as i128 - 1), || {
                format!("{profile:?}: width too large")
            })?;
            let runs = longest_all_directions(set, false).map_err(err)?;
            for (d, l) in profile.iter() {
                ensure(runs[d] as u64 <= l, || format!("{profile:?}: direction {d} run {}", runs[d]))?;
            }
            let pts = set.points();
            for i in 0..pts.len() {
                for j in i + 1..pts.len() {
                    ensure(!pts[i].intersects(&pts[j]), || format!("{profile:?}: {} and {} share a coordinate", pts[i], pts[j]))?;
                }
            }
            count += 1;
        }
    }
    Ok(format!("{count} profiles checked"))
}

fn cross_intersecting_bound() -> Outcome {
    for d in 1..=3 {
        let outcome = max_cross_intersecting_search(d, 2, 64, u64::MAX).map_err(err)?;
        ensure(outcome.complete && outcome.best == 1 << (d - 1), || {
            format!("d={d}: best {} (complete {})", outcome.best, outcome.complete)
        })?;
    }
    for d in 1..=5 {
        let family = cube_pairs(d).map_err(err)?;
        ensure(verify_cross_intersecting(&family).is_none(), || format!("cube family d={d} rejected"))?;
        if d <= 4 {
            let cert = exterior_certificate(&family).map_err(err)?;
            ensure(cert.independent && cert.rank == 2 * family.len(), || {
                format!("d={d}: rank {} of {}", cert.rank, 2 * family.len())
            })?;
        }
    }
    Ok("search maxima 1, 2, 4; cube families verified; full rank for d <= 4".into())
}

fn coordinate_value_bound() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut max_seen = 0;
    for trial in 0..200 {
        let n = if trial % 2 == 0 { 3 } else { 4 };
        let mut kept: Vec<Point> = Vec::new();
        for _ in 0..60 {
            let p = Point::from_ints((0..n).map(|_| rng.gen_range(0..4i128)));
            if !kept.contains(&p) && kept.iter().all(|q| q.intersects(&p)) {
                kept.push(p);
            }
        }
        let set = PointSet::new(n, kept).map_err(err)?;
        let system = minimalize(&set).map_err(err)?;
        ensure(is_intersecting_system(&system) && is_minimal(&system), || {
            format!("trial {trial}: output not intersecting and minimal")
        })?;
        let bound = coordinate_value_bound_check(&system).map_err(err)?;
        ensure(bound.pass && bound.counts.iter().all(|&c| c <= 1 << (n - 2)), || {
            format!("trial {trial}: counts {:?} exceed {}", bound.counts, bound.bound)
        })?;
        max_seen = max_seen.max(*bound.counts.iter().max().unwrap_or(&0));
    }
    Ok(format!("200 systems certified, largest per-coordinate count {max_seen}"))
}

fn stable_set_construction() -> Outcome {
    for (n, size) in [(3, 3), (4, 3), (5, 27)] {
        let built = build_internally_stable(n).map_err(err)?;
        let cand = &built.candidate;
        ensure(cand.len() == size, || format!("n={n}: {} points, expected {size}", cand.len()))?;
        let axioms = check_axioms(cand.power(), cand.allocations()).map_err(err)?;
        ensure(axioms.passes(), || format!("n={n}: axiom violations {axioms:?}"))?;
        let internal = internal_stability(cand).map_err(err)?;
        ensure(internal.stable, || format!("n={n}: dominations {:?}", internal.dominations))?;
    }
    Ok("sizes 3, 3, 27; no axiom violations; internally stable".into())
}

/// Every index triple `i < j < k` checked directly for strict increase, strict
/// decrease, or equality.
fn has_monotone_triple(values: &[Rational]) -> bool {
    let n = values.len();
    (0..n).any(|i| {
        (i + 1..n).any(|j| {
            (j + 1..n).any(|k| {
                let (a, b, c) = (values[i], values[j], values[k]);
                (a < b && b < c) || (a > b && b > c) || (a == b && b == c)
            })
        })
    })
}

fn sequence_bound() -> Outcome {
    let seq = repeated_es_sequence(2).map_err(err)?;
    let values: Vec<Rational> = seq.items().iter().map(|p| p[0]).collect();
    ensure(values.len() == 8, || format!("length {}", values.len()))?;
    ensure(!has_monotone_triple(&values), || format!("monotone triple in {values:?}"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for trial in 0..100 {
        let values: Vec<Rational> = (0..9).map(|_| Rational::new(rng.gen_range(-20..20), rng.gen_range(1..5))).collect();
        ensure(has_monotone_triple(&values), || format!("trial {trial}: no monotone triple"))?;
    }
    Ok("length 8 without monotone triples; 100/100 random length-9 sequences contain one".into())
}

fn counterexample_guard() -> Outcome {
    let profile = LengthProfile::from_fn(3, true, |d| match d.signs() {
        [0, 1, -1] | [1, 0, -1] | [1, -1, 0] => 2,
        _ => 1,
    })
    .map_err(err)?;
    let lambda = lambda_of(&profile).map_err(err)?.full_lambda();
    ensure(lambda == 2, || format!("extremal size {lambda}, expected 2"))?;
    let basis = PointSet::new(
        3,
        vec![Point::from_ints([1, 0, 0]), Point::from_ints([0, 1, 0]), Point::from_ints([0, 0, 1])],
    )
    .map_err(err)?;
    let report = verify_good_set(&basis, &profile).map_err(err)?;
    ensure(report.is_good(), || format!("basis violates the profile: {:?}", report.violation))?;
    Ok("extremal size 2 while a 3-point set is good".into())
}

/// Longest strict run by trying every ordering of every subset.
fn brute_longest(set: &PointSet, d: &Direction) -> usize {
    fn extend(set: &PointSet, d: &Direction, seq: &mut Vec<Point>, used: &mut [bool]) -> usize {
        let mut best = seq.len();
        for i in 0..set.len() {
            if used[i] {
                continue;
            }
            seq.push(set.points()[i].clone());
            let run = PointSequence::new(set.dim(), seq.clone()).unwrap();
            if is_strictly_monotonic(&run, d).unwrap() {
                used[i] = true;
                best = best.max(extend(set, d, seq, used));
                used[i] = false;
            }
            seq.pop();
        }
        best
    }
    extend(set, d, &mut Vec::new(), &mut vec![false; set.len()])
}

fn oracle_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut comparisons = 0;
    for trial in 0..500 {
        let n = rng.gen_range(1..=3usize);
        let target = rng.gen_range(0..=7usize);
        let mut seen = BTreeSet::new();
        let mut points = Vec::new();
        for _ in 0..target {
            let p: Vec<i128> = (0..n).map(|_| rng.gen_range(0..4)).collect();
            if seen.insert(p.clone()) {
                points.push(Point::from_ints(p));
            }
        }
        let set = PointSet::new(n, points).map_err(err)?;
        for d in enumerate_directions(n, true).map_err(err)? {
            let (fast, _) = longest_strict_monotone(&set, &d).map_err(err)?;
            let slow = brute_longest(&set, &d);
            ensure(fast == slow, || format!("trial {trial}, direction {d}: dp {fast}, exhaustive {slow}"))?;
            comparisons += 1;
        }
    }
    Ok(format!("{comparisons} direction comparisons agree"))
}

/// Name, time limit in seconds, and check.
type Criterion = (&'static str, u64, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("construction sizes match closed forms", 5, construction_sizes),
        ("strict constructions respect every cap", 60, strict_constructions_are_good),
        ("random 9-point sets exceed the n=2, l=2 caps", 5, random_sets_exceeding_extremal_size),
        ("non-strict construction suite", 30, nonstrict_construction_suite),
        ("cross-intersecting bound and tightness", 120, cross_intersecting_bound),
        ("per-coordinate value bound on minimal systems", 60, coordinate_value_bound),
        ("internally stable pillage sets", 60, stable_set_construction),
        ("sequence bound", 5, sequence_bound),
        ("counterexample guard", 1, counterexample_guard),
        ("dynamic program matches exhaustive search", 60, oracle_equivalence),
    ];
    let mut failures = 0;
    for (k, (name, limit, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let result = match outcome {
            Ok(detail) if elapsed <= Duration::from_secs(*limit) => Ok(detail),
            Ok(detail) => Err(format!("{detail}; took {elapsed:.2?}, limit {limit}s")),
            Err(e) => Err(e),
        };
        match result {
            Ok(detail) => println!("PASS {:>2} {name} ({elapsed:.2?}): {detail}", k + 1),
            Err(e) => {
                failures += 1;
                println!("FAIL {:>2} {name} ({elapsed:.2?}): {e}", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", criteria.len() - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
