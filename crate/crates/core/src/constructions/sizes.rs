use serde::Serialize;

use crate::core_monotone::{Direction, LengthProfile};
use crate::{Error, Result};

/// Subsets of coordinate positions `{0, .., n-1}` are bitmasks.
pub type CoordMask = u32;

/// The exact size recursions over the subset lattice of coordinate positions.
///
/// `m(I)` is the product of lengths over directions supported exactly on `I`;
/// `lambda(I) = m(I) * max_{i in I} lambda(I \ {i})` with `lambda(empty) = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SizeTable {
    n: usize,
    m: Vec<u128>,
    lambda: Vec<u128>,
    argmax: Vec<Option<usize>>,
}

impl SizeTable {
    pub fn dim(&self) -> usize {
        self.n
    }

    /// `m(I)`; `None` for the empty set, where it is not defined.
    pub fn m(&self, mask: CoordMask) -> Option<u128> {
        (mask != 0).then(|| self.m[mask as usize])
    }

    pub fn lambda(&self, mask: CoordMask) -> u128 {
        self.lambda[mask as usize]
    }

    /// Smallest `i` attaining the maximum in the recursion for `I`.
    pub fn argmax(&self, mask: CoordMask) -> Option<usize> {
        self.argmax[mask as usize]
    }

    pub fn full_mask(&self) -> CoordMask {
        full_mask(self.n)
    }

    pub fn full_lambda(&self) -> u128 {
        self.lambda(self.full_mask())
    }
}

pub fn full_mask(n: usize) -> CoordMask {
    ((1u64 << n) - 1) as CoordMask
}

pub fn mask_of(positions: &[usize]) -> CoordMask {
    positions.iter().fold(0, |m, &i| m | (1 << i))
}

fn require_strict(profile: &LengthProfile) -> Result<()> {
    if !profile.is_strict() {
        return Err(Error::Domain("size recursions need a strict profile".into()));
    }
    if profile.dim() > 16 {
        return Err(Error::Domain(format!("n = {} is too large for the subset table", profile.dim())));
    }
    Ok(())
}

fn product_by_support(profile: &LengthProfile) -> Result<Vec<u128>> {
    let mut m = vec![1u128; 1 << profile.dim()];
    for (d, l) in profile.iter() {
        let slot = &mut m[d.support_mask() as usize];
        *slot = slot.checked_mul(l as u128).ok_or(Error::Overflow("m_I"))?;
    }
    Ok(m)
}

/// `m(I)` for a nonempty `I` given as a bitmask.
pub fn m_of(profile: &LengthProfile, mask: CoordMask) -> Result<u128> {
    require_strict(profile)?;
    if mask == 0 {
        return Err(Error::Domain("m is not defined for the empty coordinate set".into()));
    }
    if mask & !full_mask(profile.dim()) != 0 {
        return Err(Error::Domain(format!("coordinate set {mask:#b} exceeds n = {}", profile.dim())));
    }
    let mut m = 1u128;
    for (d, l) in profile.iter() {
        if d.support_mask() == mask {
            m = m.checked_mul(l as u128).ok_or(Error::Overflow("m_I"))?;
        }
    }
    Ok(m)
}

/// Full `m`/`lambda` table by dynamic programming over subsets in order of size.
pub fn lambda_of(profile: &LengthProfile) -> Result<SizeTable> {
    require_strict(profile)?;
    let n = profile.dim();
    let m = product_by_support(profile)?;
    let size = 1usize << n;
    let mut lambda = vec![0u128; size];
    let mut argmax = vec![None; size];
    lambda[0] = 1;
    let mut masks: Vec<usize> = (1..size).collect();
    masks.sort_by_key(|&s| s.count_ones());
    for s in masks {
        let (best_i, best) = (0..n)
            .filter(|i| s & (1 << i) != 0)
            .map(|i| (i, lambda[s & !(1 << i)]))
            .fold((usize::MAX, 0u128), |acc, (i, v)| if v > acc.1 { (i, v) } else { acc });
        lambda[s] = m[s].checked_mul(best).ok_or(Error::Overflow("lambda_I"))?;
        argmax[s] = Some(best_i);
    }
    Ok(SizeTable { n, m, lambda, argmax })
}

/// The strict direction with a zero inserted at position `slot`.
pub(crate) fn insert_zero(d: &Direction, slot: usize) -> Direction {
    let mut signs = d.signs().to_vec();
    signs.insert(slot, 0);
    Direction::strict(signs).expect("inserting a zero keeps the first nonzero entry")
}
