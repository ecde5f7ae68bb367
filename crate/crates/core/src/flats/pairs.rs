use std::collections::HashMap;

use serde::{Deserialize, Deserializer, Serialize};

use crate::core_monotone::Point;
use crate::{Error, Result};

/// `t` unordered pairs `{a^j, b^j}` of points in dimension `d`, all `2t` distinct.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairFamily {
    d: usize,
    pairs: Vec<(Point, Point)>,
}

impl PairFamily {
    pub fn new(d: usize, pairs: Vec<(Point, Point)>) -> Result<Self> {
        if d == 0 {
            return Err(Error::Domain("pair families need d >= 1".into()));
        }
        let mut seen: HashMap<&Point, usize> = HashMap::new();
        for (k, p) in pairs.iter().flat_map(|(a, b)| [a, b]).enumerate() {
            if p.dim() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    found: p.dim(),
                });
            }
            if let Some(&first) = seen.get(p) {
                return Err(Error::DuplicatePoint { first, second: k });
            }
            seen.insert(p, k);
        }
        Ok(PairFamily { d, pairs })
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(Point, Point)] {
        &self.pairs
    }

    /// The `2t` points as `a^1, b^1, a^2, b^2, ..`.
    pub fn points(&self) -> Vec<&Point> {
        self.pairs.iter().flat_map(|(a, b)| [a, b]).collect()
    }
}

impl<'de> Deserialize<'de> for PairFamily {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            d: usize,
            pairs: Vec<(Point, Point)>,
        }
        let raw = Raw::deserialize(d)?;
        PairFamily::new(raw.d, raw.pairs).map_err(serde::de::Error::custom)
    }
}

/// Why a family is not cross-intersecting. Points are addressed as
/// `(pair index, side)` with side 0 for `a`, 1 for `b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CrossViolation {
    PartnersIntersect { pair: usize },
    OthersDisjoint { first: (usize, usize), second: (usize, usize) },
}

/// Whether each pair is non-intersecting while all other point pairs intersect.
/// Returns the first violation found, if any.
pub fn verify_cross_intersecting(family: &PairFamily) -> Option<CrossViolation> {
    for (j, (a, b)) in family.pairs.iter().enumerate() {
        if a.intersects(b) {
            return Some(CrossViolation::PartnersIntersect { pair: j });
        }
    }
    let pts = family.points();
    for x in 0..pts.len() {
        for y in x + 1..pts.len() {
            if x / 2 != y / 2 && !pts[x].intersects(pts[y]) {
                return Some(CrossViolation::OthersDisjoint {
                    first: (x / 2, x % 2),
                    second: (y / 2, y % 2),
                });
            }
        }
    }
    None
}

/// Antipodal pairs of `{0,1}^d`: each point with first coordinate 0, in
/// lexicographic order, paired with its complement. `t = 2^(d-1)`.
pub fn cube_pairs(d: usize) -> Result<PairFamily> {
    if d == 0 || d > 20 {
        return Err(Error::Domain(format!("cube_pairs needs 1 <= d <= 20, got {d}")));
    }
    let pairs = (0..1u64 << (d - 1))
        .map(|bits| {
            let a: Vec<i128> = (0..d).map(|i| ((bits >> (d - 1 - i)) & 1) as i128).collect();
            let b: Vec<i128> = a.iter().map(|v| 1 - v).collect();
            (Point::from_ints(a), Point::from_ints(b))
        })
        .collect();
    PairFamily::new(d, pairs)
}

/// Result of the exhaustive search for large cross-intersecting families.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairSearchOutcome {
    pub d: usize,
    pub alphabet: usize,
    /// Largest `t` found (capped at `t_cap`).
    pub best: usize,
    pub family: PairFamily,
    /// False when the node budget ran out before the search space was exhausted;
    /// `best` is then only a lower bound.
    pub complete: bool,
    pub nodes: u64,
}

struct Search {
    inter: Vec<u64>,
    pairs: Vec<(usize, usize)>,
    t_cap: usize,
    budget: u64,
    nodes: u64,
    best: Vec<usize>,
    exhausted: bool,
}

impl Search {
    fn allowed(&self, p: usize, mask: u64) -> bool {
        let (a, b) = self.pairs[p];
        mask & (1 << a) != 0 && mask & (1 << b) != 0
    }

    fn extend(&mut self, chosen: &mut Vec<usize>, mask: u64, next: usize) {
        if chosen.len() > self.best.len() {
            self.best = chosen.clone();
        }
        if self.best.len() >= self.t_cap {
            return;
        }
        let candidates: Vec<usize> = (next..self.pairs.len()).filter(|&p| self.allowed(p, mask)).collect();
        if chosen.len() + candidates.len() <= self.best.len()
            || chosen.len() + (mask.count_ones() as usize) / 2 <= self.best.len()
        {
            return;
        }
        for (k, &p) in candidates.iter().enumerate() {
            if chosen.len() + candidates.len() - k <= self.best.len() || self.best.len() >= self.t_cap {
                return;
            }
            if self.nodes >= self.budget {
                self.exhausted = true;
                return;
            }
            self.nodes += 1;
            let (a, b) = self.pairs[p];
            chosen.push(p);
            self.extend(chosen, mask & self.inter[a] & self.inter[b], p + 1);
            chosen.pop();
        }
    }
}

/// Exact maximum number of cross-intersecting pairs with coordinates in
/// `{0, .., alphabet-1}^d`, found by backtracking over non-intersecting point pairs.
///
/// Any one pair can be mapped to `(0,..,0), (1,..,1)` by permuting values per
/// coordinate, so that pair is fixed first; the rest are added in increasing index
/// order. The search stops early once `t_cap` is reached and reports an incomplete
/// result if `node_budget` runs out.
pub fn max_cross_intersecting_search(
    d: usize,
    alphabet: usize,
    t_cap: usize,
    node_budget: u64,
) -> Result<PairSearchOutcome> {
    if d == 0 || alphabet == 0 {
        return Err(Error::Domain("search needs d >= 1 and alphabet >= 1".into()));
    }
    let grid = alphabet
        .checked_pow(d as u32)
        .filter(|&g| g <= 64)
        .ok_or_else(|| Error::Domain(format!("grid {alphabet}^{d} exceeds 64 points")))?;
    let points: Vec<Vec<usize>> = (0..grid)
        .map(|mut k| {
            let mut v = vec![0; d];
            for i in (0..d).rev() {
                v[i] = k % alphabet;
                k /= alphabet;
            }
            v
        })
        .collect();
    let meets = |x: &[usize], y: &[usize]| x.iter().zip(y).any(|(a, b)| a == b);
    let inter: Vec<u64> = points
        .iter()
        .map(|x| (0..grid).filter(|&y| meets(x, &points[y])).fold(0, |m, y| m | (1 << y)))
        .collect();
    let pairs: Vec<(usize, usize)> = (0..grid)
        .flat_map(|a| (a + 1..grid).map(move |b| (a, b)))
        .filter(|&(a, b)| !meets(&points[a], &points[b]))
        .collect();

    let mut search = Search {
        inter,
        pairs,
        t_cap,
        budget: node_budget,
        nodes: 0,
        best: Vec::new(),
        exhausted: false,
    };
    if t_cap > 0 {
        let all_ones = (0..d).fold(0, |k, _| k * alphabet + 1);
        if let Some(first) = search.pairs.iter().position(|&p| p == (0, all_ones)) {
            search.nodes = 1;
            let mask = search.inter[0] & search.inter[all_ones];
            search.extend(&mut vec![first], mask, 0);
        }
    }
    let to_point = |k: usize| Point::from_ints(points[k].iter().map(|&v| v as i128));
    let family = PairFamily::new(
        d,
        search
            .best
            .iter()
            .map(|&p| {
                let (a, b) = search.pairs[p];
                (to_point(a), to_point(b))
            })
            .collect(),
    )?;
    Ok(PairSearchOutcome {
        d,
        alphabet,
        best: search.best.len(),
        family,
        complete: !search.exhausted,
        nodes: search.nodes,
    })
}
