//! Small exact linear algebra over the integers.

/// Rank over the rationals of an integer matrix, by fraction-free elimination.
///
/// Entries here are tiny (signed permutation matrices and root vectors), so
/// `i128` intermediates stay far from overflow for any rank we enumerate.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let nrows = m.len();
    let mut rank = 0;
    let mut prev_pivot: i128 = 1;
    for col in 0..cols {
        if rank == nrows {
            break;
        }
        let Some(pivot_row) = (rank..nrows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let pivot = m[rank][col];
        let (top, bottom) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in bottom {
            let factor = row[col];
            for (x, &p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                // Bareiss step: exact division by the previous pivot.
                *x = (pivot * *x - factor * p) / prev_pivot;
            }
        }
        prev_pivot = pivot;
        rank += 1;
    }
    rank
}
