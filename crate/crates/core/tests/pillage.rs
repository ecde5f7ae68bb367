use proptest::prelude::*;
use strictmono::pillage::{
    build_internally_stable, chain_depth, check_axioms, dominates, internal_stability, no_length4_check,
    winners_losers, Allocation, Coalition, PowerFn, PowerFunction, StableCandidate,
};
use strictmono::{core_monotone::PointSet, Rational};

/// Random allocation on a grid of step `1/denom`.
fn allocation(n: usize, denom: i128) -> impl Strategy<Value = Allocation> {
    prop::collection::vec(0..=denom, n - 1).prop_map(move |mut cuts| {
        cuts.sort();
        let mut prev = 0;
        let mut shares = Vec::with_capacity(n);
        for c in cuts.into_iter().chain([denom]) {
            shares.push(Rational::new(c - prev, denom));
            prev = c;
        }
        Allocation::new(shares).unwrap()
    })
}

/// Sum of shares plus a per-player weight: satisfies all three axioms.
fn weighted(weights: Vec<u8>) -> PowerFn<impl Fn(Coalition, &Allocation) -> Rational> {
    let n = weights.len();
    PowerFn::new(n, move |c: Coalition, x: &Allocation| {
        c.members().map(|i| x[i] + Rational::from(weights[i] as i128)).sum()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn domination_matches_definition(
        x in allocation(4, 6),
        y in allocation(4, 6),
        weights in prop::collection::vec(0u8..3, 4),
    ) {
        let pi = weighted(weights.clone());
        let gains: Vec<usize> = (0..4).filter(|&i| y[i] > x[i]).collect();
        let losses: Vec<usize> = (0..4).filter(|&i| y[i] < x[i]).collect();
        let strength = |who: &[usize]| who.iter().map(|&i| x[i] + Rational::from(weights[i] as i128)).sum::<Rational>();
        prop_assert_eq!(dominates(&y, &x, &pi).unwrap(), strength(&gains) > strength(&losses));
        let (w, l) = winners_losers(&x, &y).unwrap();
        prop_assert_eq!(w.members().collect::<Vec<_>>(), gains);
        prop_assert_eq!(l.members().collect::<Vec<_>>(), losses);
    }

    #[test]
    fn axiom_abiding_power_passes(set in prop::collection::vec(allocation(3, 5), 1..8), weights in prop::collection::vec(0u8..3, 3)) {
        prop_assert!(check_axioms(&weighted(weights), &set).unwrap().passes());
    }

    /// Under any axiom-abiding power, an internally stable set has no run of 4.
    #[test]
    fn stable_sets_have_no_long_runs(set in prop::collection::vec(allocation(3, 6), 1..10), weights in prop::collection::vec(0u8..2, 3)) {
        let mut set = set;
        set.sort();
        set.dedup();
        let cand = StableCandidate::new(set.clone(), weighted(weights)).unwrap();
        if internal_stability(&cand).unwrap().stable {
            prop_assert!(no_length4_check(&set).unwrap().passes);
        }
    }
}

#[test]
fn decreasing_power_violates_monotonicity() {
    let pi = PowerFn::new(2, |c: Coalition, x: &Allocation| -c.members().map(|i| x[i]).sum::<Rational>());
    let set = vec![
        Allocation::new(vec![Rational::new(1, 2), Rational::new(1, 2)]).unwrap(),
        Allocation::new(vec![Rational::new(1, 4), Rational::new(3, 4)]).unwrap(),
    ];
    let report = check_axioms(&pi, &set).unwrap();
    assert!(!report.p1.is_empty() && !report.p2.is_empty() && !report.p3.is_empty());
    assert_eq!(report.p1[0].0, 0);
}

#[test]
fn built_sets_are_stable_and_short() {
    for (n, size) in [(3, 3), (4, 3), (5, 27)] {
        let built = build_internally_stable(n).unwrap();
        let cand = &built.candidate;
        assert_eq!(cand.len(), size);
        assert!(check_axioms(cand.power(), cand.allocations()).unwrap().passes());
        let internal = internal_stability(cand).unwrap();
        assert!(internal.stable, "{:?}", internal.dominations);
        assert!(no_length4_check(cand.allocations()).unwrap().passes);
        for x in cand.allocations() {
            assert!(x.shares().iter().all(|s| *s >= Rational::from(0)));
        }
    }
}

#[test]
fn depths_agree_with_power_on_core_blocks() {
    let built = build_internally_stable(5).unwrap();
    let base: &PointSet = &built.base;
    let cand = &built.candidate;
    for mask in [0b0011u32, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100] {
        let b = Coalition::from_mask(mask);
        for (k, x) in cand.allocations().iter().enumerate() {
            let depth = chain_depth(b, &base.points()[k], base).unwrap();
            assert!((1..=3).contains(&depth));
            assert_eq!(cand.power().power(b, x).unwrap(), Rational::from(depth as i128));
        }
    }
}
