//! Parametrized constructions that show how far apart solutions can be.
//!
//! All coordinates are 1-based with row 1 on top, so the sets can be rendered
//! directly as grid files.

use crate::error::{Error, Result};
use crate::grid::{Frame, GridPoint, GridSet};
use crate::neighbour::column_order;
use crate::ryser::{identity_order, unique_set};

fn fill(set: &mut GridSet, row: usize, cols: impl IntoIterator<Item = usize>) {
    for c in cols {
        set.insert(GridPoint::new(row as i64, c as i64));
    }
}

/// Two sets with equal line sums that differ in `2mn` points, plus the
/// neighbour `F1` of both. Returns `(F1, F2, F3)`.
///
/// Row `i` (of `n`) has sum `(n − i + 1)m`; there are `(n + 1)m` columns.
pub fn example_one(m: usize, n: usize) -> Result<(GridSet, GridSet, GridSet)> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidParameter("m and n must be positive".into()));
    }
    let mut f2 = GridSet::new();
    let mut f3 = GridSet::new();
    for i in 1..=n {
        fill(&mut f2, i, 1..=(n - i) * m);
        fill(&mut f2, i, (n - i + 1) * m + 1..=(n - i + 2) * m);
        if i < n {
            fill(&mut f3, i, 1..=(n - i + 1) * m);
        } else {
            fill(&mut f3, i, n * m + 1..=(n + 1) * m);
        }
    }
    let sums = Frame::unit(n, (n + 1) * m).line_sums(&f2)?;
    let f1 = unique_set(&sums.rows, &column_order(&sums.cols))?;
    Ok((f1, f2, f3))
}

/// Two uniquely determined sets at distance `n` that differ in `3n − 2`
/// points. Returns `(F1, F1')`.
///
/// `F1` has row and column sums `n − 1, n − 2, …, 0`; `F1'` moves the last
/// row up to `n`, with the same sequence for its columns.
pub fn example_two(n: usize) -> Result<(GridSet, GridSet)> {
    if n < 2 {
        return Err(Error::InvalidParameter("n must exceed 1".into()));
    }
    let rows: Vec<usize> = (1..=n).map(|i| n - i).collect();
    let f1 = unique_set(&rows, &identity_order(n))?;

    let mut rows_prime = rows;
    rows_prime[n - 1] = n;
    // Largest column is the last one, then 1, 2, …, n − 1.
    let order: Vec<usize> = std::iter::once(n).chain(1..n).collect();
    let f1_prime = unique_set(&rows_prime, &order)?;
    Ok((f1, f1_prime))
}

/// Two sets with different line sums, each at distance 1 from its neighbour
/// and with neighbours at distance 1 from each other. Returns `(F2, F3)`.
pub fn example_three(n: usize) -> Result<(GridSet, GridSet)> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    let mut f2 = GridSet::new();
    let mut f3 = GridSet::new();
    for i in 1..=n {
        let w = 2 * (n - i);
        fill(&mut f2, i, 1..=w);
        fill(&mut f2, i, [w + 2, w + 3]);
        fill(&mut f3, i, 1..=w + 1);
        fill(&mut f3, i, [w + 4]);
    }
    fill(&mut f2, n + 1, [1]);
    Ok((f2, f3))
}
