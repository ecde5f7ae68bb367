use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::core_monotone::{verify_good_set, LengthProfile, Point, PointSet, Witness};
use crate::rational::Exact;
use crate::{Error, Rational, Result};

/// A wealth distribution: nonnegative exact shares summing to exactly 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Allocation(Vec<Rational>);

impl Allocation {
    pub fn new(shares: Vec<Rational>) -> Result<Self> {
        if shares.is_empty() {
            return Err(Error::Domain("an allocation needs at least one player".into()));
        }
        if let Some(i) = shares.iter().position(|s| s.is_negative()) {
            return Err(Error::Domain(format!("share of player {i} is negative")));
        }
        let total: Rational = shares.iter().sum();
        if !total.is_one() {
            return Err(Error::Domain(format!(
                "shares sum to {}, not 1",
                crate::rational::to_string(&total)
            )));
        }
        Ok(Allocation(shares))
    }

    pub fn players(&self) -> usize {
        self.0.len()
    }

    pub fn shares(&self) -> &[Rational] {
        &self.0
    }

    pub fn to_point(&self) -> Point {
        Point::new(self.0.clone())
    }
}

impl std::ops::Index<usize> for Allocation {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl fmt::Display for Allocation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_point().fmt(f)
    }
}

impl Serialize for Allocation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(|c| Exact(*c)))
    }
}

impl<'de> Deserialize<'de> for Allocation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<Exact> = Vec::deserialize(d)?;
        Allocation::new(raw.into_iter().map(|e| e.0).collect()).map_err(serde::de::Error::custom)
    }
}

/// A set of players, as a bitmask over player indices `0..n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Coalition(u32);

pub const MAX_PLAYERS: usize = 24;

impl Coalition {
    pub const EMPTY: Coalition = Coalition(0);

    pub fn from_mask(mask: u32) -> Self {
        Coalition(mask)
    }

    pub fn from_players(players: &[usize]) -> Result<Self> {
        players.iter().try_fold(Coalition(0), |c, &p| {
            if p >= MAX_PLAYERS {
                Err(Error::Domain(format!("player index {p} out of range")))
            } else {
                Ok(Coalition(c.0 | 1 << p))
            }
        })
    }

    pub fn all(n: usize) -> Self {
        Coalition(((1u64 << n) - 1) as u32)
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, player: usize) -> bool {
        player < 32 && self.0 >> player & 1 == 1
    }

    pub fn is_subset_of(self, other: Coalition) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersection(self, other: Coalition) -> Coalition {
        Coalition(self.0 & other.0)
    }

    pub fn members(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&i| self.0 >> i & 1 == 1)
    }
}

impl Serialize for Coalition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.members())
    }
}

impl<'de> Deserialize<'de> for Coalition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let players: Vec<usize> = Vec::deserialize(d)?;
        Coalition::from_players(&players).map_err(serde::de::Error::custom)
    }
}

/// The strength `pi(C, x)` of coalition `C` at allocation `x`.
pub trait PowerFunction {
    fn players(&self) -> usize;
    fn power(&self, coalition: Coalition, x: &Allocation) -> Result<Rational>;
}

impl<P: PowerFunction + ?Sized> PowerFunction for &P {
    fn players(&self) -> usize {
        (**self).players()
    }
    fn power(&self, coalition: Coalition, x: &Allocation) -> Result<Rational> {
        (**self).power(coalition, x)
    }
}

/// A power function given by a closure, total on the whole simplex.
pub struct PowerFn<F> {
    n: usize,
    f: F,
}

impl<F: Fn(Coalition, &Allocation) -> Rational> PowerFn<F> {
    pub fn new(n: usize, f: F) -> Self {
        PowerFn { n, f }
    }
}

impl<F: Fn(Coalition, &Allocation) -> Rational> PowerFunction for PowerFn<F> {
    fn players(&self) -> usize {
        self.n
    }
    fn power(&self, coalition: Coalition, x: &Allocation) -> Result<Rational> {
        Ok((self.f)(coalition, x))
    }
}

/// A power function tabulated on a finite allocation set. Lookups outside the
/// table are errors, never defaults.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TablePower {
    n: usize,
    index: HashMap<Allocation, usize>,
    values: HashMap<(Coalition, usize), Rational>,
}

impl TablePower {
    pub fn new(n: usize, allocations: &[Allocation], entries: Vec<(Coalition, usize, Rational)>) -> Result<Self> {
        let index = allocations.iter().cloned().enumerate().map(|(i, a)| (a, i)).collect();
        let mut values = HashMap::new();
        for (c, point, v) in entries {
            if point >= allocations.len() {
                return Err(Error::Domain(format!("table entry refers to point {point} of {}", allocations.len())));
            }
            if !c.is_subset_of(Coalition::all(n)) {
                return Err(Error::Domain(format!("coalition {:?} has players outside 0..{n}", c.members().collect::<Vec<_>>())));
            }
            if values.insert((c, point), v).is_some() {
                return Err(Error::Domain(format!("duplicate table entry for point {point}")));
            }
        }
        Ok(TablePower { n, index, values })
    }

    pub fn entries(&self) -> impl Iterator<Item = (Coalition, usize, Rational)> + '_ {
        self.values.iter().map(|(&(c, p), &v)| (c, p, v))
    }
}

impl PowerFunction for TablePower {
    fn players(&self) -> usize {
        self.n
    }
    fn power(&self, coalition: Coalition, x: &Allocation) -> Result<Rational> {
        let &point = self
            .index
            .get(x)
            .ok_or_else(|| Error::Undefined(format!("allocation {x} is not in the table")))?;
        self.values.get(&(coalition, point)).copied().ok_or_else(|| {
            Error::Undefined(format!(
                "no value for coalition {:?} at point {point}",
                coalition.members().collect::<Vec<_>>()
            ))
        })
    }
}

fn same_players(x: &Allocation, y: &Allocation) -> Result<()> {
    if x.players() != y.players() {
        return Err(Error::DimensionMismatch {
            expected: x.players(),
            found: y.players(),
        });
    }
    Ok(())
}

/// Players strictly gaining (`W`) and strictly losing (`L`) when moving from `x`
/// to `x_new`.
pub fn winners_losers(x: &Allocation, x_new: &Allocation) -> Result<(Coalition, Coalition)> {
    same_players(x, x_new)?;
    let mut w = 0u32;
    let mut l = 0u32;
    for i in 0..x.players() {
        match x_new[i].cmp(&x[i]) {
            std::cmp::Ordering::Greater => w |= 1 << i,
            std::cmp::Ordering::Less => l |= 1 << i,
            std::cmp::Ordering::Equal => {}
        }
    }
    Ok((Coalition(w), Coalition(l)))
}

/// `x_new` dominates `x` when the winners are stronger than the losers, both
/// evaluated at `x`.
pub fn dominates<P: PowerFunction + ?Sized>(x_new: &Allocation, x: &Allocation, pi: &P) -> Result<bool> {
    let (w, l) = winners_losers(x, x_new)?;
    Ok(pi.power(w, x)? > pi.power(l, x)?)
}

/// A finite allocation set paired with a power function.
pub struct StableCandidate<P> {
    allocations: Vec<Allocation>,
    power: P,
}

impl<P: PowerFunction> StableCandidate<P> {
    pub fn new(allocations: Vec<Allocation>, power: P) -> Result<Self> {
        for (i, a) in allocations.iter().enumerate() {
            if a.players() != power.players() {
                return Err(Error::DimensionMismatch {
                    expected: power.players(),
                    found: a.players(),
                });
            }
            if let Some(j) = allocations[..i].iter().position(|b| b == a) {
                return Err(Error::DuplicatePoint { first: j, second: i });
            }
        }
        Ok(StableCandidate { allocations, power })
    }

    pub fn allocations(&self) -> &[Allocation] {
        &self.allocations
    }

    pub fn power(&self) -> &P {
        &self.power
    }

    pub fn len(&self) -> usize {
        self.allocations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.allocations.is_empty()
    }
}

/// Violations of the three power-function axioms, indexed into the allocation set.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    /// `(point, C, C')` with `C subset C'` but `pi(C', x) < pi(C, x)`.
    pub p1: Vec<(usize, Coalition, Coalition)>,
    /// `(x, x', C)` with `x'_i >= x_i` on `C` but `pi(C, x') < pi(C, x)`.
    pub p2: Vec<(usize, usize, Coalition)>,
    /// `(x, x', C)` with `C` nonempty, `x'_i > x_i` on `C`, but `pi(C, x') <= pi(C, x)`.
    pub p3: Vec<(usize, usize, Coalition)>,
}

impl AxiomReport {
    pub fn passes(&self) -> bool {
        self.p1.is_empty() && self.p2.is_empty() && self.p3.is_empty()
    }
}

/// Exhaustive axiom check over all coalitions and all (ordered pairs of) points.
pub fn check_axioms<P: PowerFunction + ?Sized>(pi: &P, set: &[Allocation]) -> Result<AxiomReport> {
    let n = pi.players();
    if n > MAX_PLAYERS {
        return Err(Error::Domain(format!("{n} players is too many for an exhaustive check")));
    }
    let coalitions = 1u32 << n;
    // value[x][C]
    let value: Vec<Vec<Rational>> = set
        .iter()
        .map(|x| {
            if x.players() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: x.players(),
                });
            }
            (0..coalitions).map(|c| pi.power(Coalition(c), x)).collect()
        })
        .collect::<Result<_>>()?;
    let mut report = AxiomReport::default();
    for (p, vals) in value.iter().enumerate() {
        for big in 0..coalitions {
            // every proper subset of `big`
            let mut small = big;
            while small != 0 {
                small = (small - 1) & big;
                if vals[big as usize] < vals[small as usize] {
                    report.p1.push((p, Coalition(small), Coalition(big)));
                }
            }
        }
    }
    for (a, x) in set.iter().enumerate() {
        for (b, y) in set.iter().enumerate() {
            if a == b {
                continue;
            }
            let ge = (0..n).filter(|&i| y[i] >= x[i]).fold(0u32, |m, i| m | 1 << i);
            let gt = (0..n).filter(|&i| y[i] > x[i]).fold(0u32, |m, i| m | 1 << i);
            for c in 0..coalitions {
                let (before, after) = (&value[a][c as usize], &value[b][c as usize]);
                if c & !ge == 0 && after < before {
                    report.p2.push((a, b, Coalition(c)));
                }
                if c != 0 && c & !gt == 0 && after <= before {
                    report.p3.push((a, b, Coalition(c)));
                }
            }
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InternalStability {
    pub stable: bool,
    /// `(dominating, dominated)` index pairs, sorted.
    pub dominations: Vec<(usize, usize)>,
}

/// Checks every ordered pair of the candidate for domination.
pub fn internal_stability<P: PowerFunction>(cand: &StableCandidate<P>) -> Result<InternalStability> {
    let s = &cand.allocations;
    let mut dominations = Vec::new();
    for (a, x_new) in s.iter().enumerate() {
        for (b, x) in s.iter().enumerate() {
            if a != b && dominates(x_new, x, &cand.power)? {
                dominations.push((a, b));
            }
        }
    }
    Ok(InternalStability {
        stable: dominations.is_empty(),
        dominations,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExternalSample {
    /// Sample points outside the candidate that were checked.
    pub checked: usize,
    /// `(sample index, first dominating candidate index)`.
    pub dominated: Vec<(usize, usize)>,
    /// Sample indices no candidate point dominates.
    pub undominated: Vec<usize>,
}

impl ExternalSample {
    pub fn passes(&self) -> bool {
        self.undominated.is_empty()
    }
}

/// Finite probe of external stability: each sample point outside the candidate
/// should be dominated by some candidate point. If the power function is undefined
/// at some sample points, the error lists all of them.
pub fn external_stability_sample<P: PowerFunction>(
    cand: &StableCandidate<P>,
    sample: &[Allocation],
) -> Result<ExternalSample> {
    let mut report = ExternalSample {
        checked: 0,
        dominated: Vec::new(),
        undominated: Vec::new(),
    };
    let mut missing = Vec::new();
    for (k, q) in sample.iter().enumerate() {
        if cand.allocations.contains(q) {
            continue;
        }
        report.checked += 1;
        let mut hit = None;
        for (s_idx, s) in cand.allocations.iter().enumerate() {
            match dominates(s, q, &cand.power) {
                Ok(true) => {
                    hit = Some(s_idx);
                    break;
                }
                Ok(false) => {}
                Err(Error::Undefined(_)) => {
                    missing.push(q.to_string());
                    hit = None;
                    break;
                }
                Err(e) => return Err(e),
            }
        }
        match hit {
            Some(s_idx) => report.dominated.push((k, s_idx)),
            None => report.undominated.push(k),
        }
    }
    if !missing.is_empty() {
        return Err(Error::Undefined(format!(
            "power function undefined at {} sample point(s): {}",
            missing.len(),
            missing.join(" ")
        )));
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Length4Check {
    pub passes: bool,
    pub witness: Option<Witness>,
}

/// Necessary condition for stability: no strictly monotonic run of 4 allocations
/// in any direction.
pub fn no_length4_check(set: &[Allocation]) -> Result<Length4Check> {
    let Some(first) = set.first() else {
        return Ok(Length4Check {
            passes: true,
            witness: None,
        });
    };
    let n = first.players();
    let points = PointSet::new(n, set.iter().map(Allocation::to_point).collect())?;
    let report = verify_good_set(&points, &LengthProfile::uniform(n, true, 3)?)?;
    Ok(Length4Check {
        passes: report.is_good(),
        witness: report.violation,
    })
}

/// Number of unordered pairs `{W, L}` of disjoint nonempty coalitions:
/// `(3^n - 2^(n+1) + 1) / 2`.
pub fn direction_pair_count(n: usize) -> Result<u128> {
    if n < 2 {
        return Err(Error::Domain("direction pairs need at least 2 players".into()));
    }
    if n > 60 {
        return Err(Error::Overflow("direction pair count"));
    }
    Ok((3u128.pow(n as u32) - (1u128 << (n + 1))).div_ceil(2))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StableBound {
    /// `3^(2^n - 1)`, from internal stability alone.
    pub generic: u128,
    /// Sharper bound known for three players.
    pub refined: Option<u128>,
}

pub fn stable_size_bound(n: usize) -> Result<StableBound> {
    if n == 0 {
        return Err(Error::Domain("a game needs at least one player".into()));
    }
    let exp = 1u32
        .checked_shl(n as u32)
        .filter(|_| n < 32)
        .map(|p| p - 1)
        .ok_or(Error::Overflow("stable set bound"))?;
    let generic = 3u128.checked_pow(exp).ok_or(Error::Overflow("stable set bound"))?;
    Ok(StableBound {
        generic,
        refined: (n == 3).then_some(27),
    })
}

/// `max_{i in C} x_i`, with 0 for the empty coalition.
pub fn max_share(c: Coalition, x: &Allocation) -> Rational {
    c.members()
        .filter(|&i| i < x.players())
        .map(|i| x[i])
        .max()
        .unwrap_or_else(Rational::zero)
}
