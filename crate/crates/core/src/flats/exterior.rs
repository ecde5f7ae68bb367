//! Exterior-algebra certificate for cross-intersecting pair families.
//!
//! Work in the exterior algebra over `Q^(2d)` with generators interleaved as
//! `e_1, f_1, e_2, f_2, ..`. A point `x` with coordinates relabeled into `1..=m`
//! maps to `v_x = (e_1 + x_1 f_1) ^ .. ^ (e_d + x_d f_d)`, and `v_x ^ v_y` vanishes
//! exactly when `x` and `y` agree in some coordinate. For a cross-intersecting
//! family the `2t` vectors `v_x` are linearly independent inside the `2^d`-dimensional
//! span of the blades `g_1 ^ .. ^ g_d`, `g_i in {e_i, f_i}`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

use super::linalg::rank;
use super::pairs::{verify_cross_intersecting, PairFamily};
use crate::core_monotone::Point;
use crate::{Error, Rational, Result};

/// A multivector as blade bitmask -> coefficient, zero coefficients omitted.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Multivector(BTreeMap<u64, Rational>);

impl Multivector {
    pub fn scalar(v: Rational) -> Self {
        let mut m = BTreeMap::new();
        if !v.is_zero() {
            m.insert(0, v);
        }
        Multivector(m)
    }

    /// `sum_k coeffs[k] * g_k` for generator indices `k`.
    pub fn vector(coeffs: &[(usize, Rational)]) -> Self {
        let mut m = BTreeMap::new();
        for &(k, c) in coeffs {
            if !c.is_zero() {
                *m.entry(1u64 << k).or_insert_with(Rational::zero) += c;
            }
        }
        m.retain(|_, c: &mut Rational| !c.is_zero());
        Multivector(m)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coefficient(&self, blade: u64) -> Rational {
        self.0.get(&blade).copied().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, Rational)> + '_ {
        self.0.iter().map(|(&b, &c)| (b, c))
    }

    pub fn wedge(&self, other: &Multivector) -> Multivector {
        let mut out: BTreeMap<u64, Rational> = BTreeMap::new();
        for (&a, ca) in &self.0 {
            for (&b, cb) in &other.0 {
                if a & b != 0 {
                    continue;
                }
                let c = if blade_sign(a, b) { -(*ca * cb) } else { *ca * cb };
                *out.entry(a | b).or_insert_with(Rational::zero) += c;
            }
        }
        out.retain(|_, c| !c.is_zero());
        Multivector(out)
    }
}

/// Whether reordering `A ^ B` into sorted generator order flips the sign: the
/// parity of pairs `(i in A, j in B)` with `i > j`.
fn blade_sign(a: u64, b: u64) -> bool {
    let mut inversions = 0u32;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        inversions += (a >> (j + 1)).count_ones();
        rest &= rest - 1;
    }
    inversions % 2 == 1
}

/// Generator index of `e_i` and `f_i` in the interleaved order.
fn e(i: usize) -> usize {
    2 * i
}
fn f(i: usize) -> usize {
    2 * i + 1
}

/// `v_x` for a point with labels in `1..=m`.
pub fn wedge_vector(labels: &[i128]) -> Multivector {
    labels.iter().enumerate().fold(Multivector::scalar(Rational::one()), |acc, (i, &x)| {
        acc.wedge(&Multivector::vector(&[(e(i), Rational::one()), (f(i), Rational::from_integer(x))]))
    })
}

/// Coordinates of `v_x` in the blades `g_1 ^ .. ^ g_d`, indexed by the subset `T`
/// of positions taking `f_i` (bit `i` of the index).
pub fn blade_coordinates(v: &Multivector, d: usize) -> Vec<Rational> {
    (0..1u64 << d)
        .map(|t| {
            let blade = (0..d).fold(0u64, |m, i| m | 1 << if t >> i & 1 == 1 { f(i) } else { e(i) });
            v.coefficient(blade)
        })
        .collect()
}

/// Compresses each coordinate's values to ranks `1..=m` (order preserving).
pub fn relabel(points: &[&Point]) -> Vec<Vec<i128>> {
    let d = points.first().map_or(0, |p| p.dim());
    let mut out = vec![vec![0i128; d]; points.len()];
    for i in 0..d {
        let mut vals: Vec<&Rational> = points.iter().map(|p| &p[i]).collect();
        vals.sort();
        vals.dedup();
        for (k, p) in points.iter().enumerate() {
            out[k][i] = vals.binary_search(&&p[i]).unwrap() as i128 + 1;
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExteriorCertificate {
    /// The `2t` vectors `v_x` are linearly independent.
    pub independent: bool,
    pub rank: usize,
    pub vectors: usize,
    /// Dimension `2^d` of the span they live in.
    pub ambient: usize,
    /// `v_x ^ v_y = 0` exactly when `x`, `y` intersect, over all point pairs.
    pub intersection_matrix_consistent: bool,
}

pub fn exterior_certificate(family: &PairFamily) -> Result<ExteriorCertificate> {
    if let Some(v) = verify_cross_intersecting(family) {
        return Err(Error::Precondition(format!("family is not cross-intersecting: {v:?}")));
    }
    let d = family.dim();
    if d > 12 {
        return Err(Error::Domain(format!("d = {d} is too large for the exterior certificate")));
    }
    let points = family.points();
    let labels = relabel(&points);
    let vectors: Vec<Multivector> = labels.iter().map(|l| wedge_vector(l)).collect();
    for (k, v) in vectors.iter().enumerate() {
        if v.terms().any(|(b, _)| b.count_ones() as usize != d) || v.is_zero() {
            return Err(Error::Internal(format!("wedge vector {k} is not a nonzero {d}-vector")));
        }
    }
    let rows: Vec<Vec<Rational>> = vectors.iter().map(|v| blade_coordinates(v, d)).collect();
    let r = rank(&rows);
    let consistent = (0..points.len()).all(|x| {
        (x + 1..points.len()).all(|y| vectors[x].wedge(&vectors[y]).is_zero() == points[x].intersects(points[y]))
    });
    Ok(ExteriorCertificate {
        independent: r == points.len(),
        rank: r,
        vectors: points.len(),
        ambient: 1 << d,
        intersection_matrix_consistent: consistent,
    })
}
