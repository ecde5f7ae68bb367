use crate::{Error, Result};

/// A point of the grid `{0, .., m-1}^d`.
pub type GridPoint = Vec<u32>;

/// Partition of `{0, .., m-1}^d` into the translates of the diagonal
/// `{(k, .., k)}` under coordinatewise addition mod `m`.
///
/// Classes are listed by their representative with first coordinate 0, in
/// lexicographic order; each class is listed as `r + k * (1,..,1)` for `k = 0..m`.
/// There are `m^(d-1)` classes of size `m`, and an intersecting subset of the grid
/// meets each class at most once.
pub fn diagonal_partition(m: u32, d: usize) -> Result<Vec<Vec<GridPoint>>> {
    if m == 0 || d == 0 {
        return Err(Error::Domain("diagonal_partition needs m >= 1 and d >= 1".into()));
    }
    let classes = (m as u64)
        .checked_pow(d as u32 - 1)
        .filter(|&c| c.saturating_mul(m as u64) <= 1 << 24)
        .ok_or_else(|| Error::Domain(format!("grid {m}^{d} is too large")))?;
    Ok((0..classes)
        .map(|mut k| {
            let mut rep = vec![0u32; d];
            for i in (1..d).rev() {
                rep[i] = (k % m as u64) as u32;
                k /= m as u64;
            }
            (0..m).map(|s| rep.iter().map(|&r| (r + s) % m).collect()).collect()
        })
        .collect())
}

/// Index of the diagonal class containing `x`, consistent with [`diagonal_partition`].
pub fn diagonal_class(m: u32, x: &[u32]) -> u64 {
    let base = x[0];
    x[1..].iter().fold(0u64, |acc, &v| acc * m as u64 + ((v + m - base) % m) as u64)
}

/// Whether `subset` has at most one point in each diagonal class.
pub fn meets_classes_at_most_once(m: u32, subset: &[GridPoint]) -> bool {
    let mut seen = std::collections::HashSet::new();
    subset.iter().all(|x| seen.insert(diagonal_class(m, x)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two() {
        let p = diagonal_partition(2, 2).unwrap();
        assert_eq!(p, vec![vec![vec![0, 0], vec![1, 1]], vec![vec![0, 1], vec![1, 0]]]);
    }

    #[test]
    fn trivial_alphabet() {
        let p = diagonal_partition(1, 3).unwrap();
        assert_eq!(p, vec![vec![vec![0, 0, 0]]]);
    }

    #[test]
    fn classes_partition_the_grid() {
        for (m, d) in [(2, 3), (3, 3), (4, 2), (3, 1)] {
            let p = diagonal_partition(m, d).unwrap();
            assert_eq!(p.len() as u64, (m as u64).pow(d as u32 - 1));
            assert!(p.iter().all(|c| c.len() == m as usize));
            let mut all: Vec<&GridPoint> = p.iter().flatten().collect();
            all.sort();
            all.dedup();
            assert_eq!(all.len() as u64, (m as u64).pow(d as u32));
            for (k, class) in p.iter().enumerate() {
                assert!(class.iter().all(|x| diagonal_class(m, x) == k as u64));
            }
        }
    }
}
