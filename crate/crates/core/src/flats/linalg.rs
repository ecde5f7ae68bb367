use num_traits::Zero;

use crate::Rational;

/// Exact rank by Gaussian elimination over the rationals.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let lead = m[rank][col];
        let (top, rest) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in rest.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col] / lead;
            for (x, p) in row[col..cols].iter_mut().zip(&pivot_row[col..cols]) {
                *x -= *p * factor;
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}
