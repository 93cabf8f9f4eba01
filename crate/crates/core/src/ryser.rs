//! Feasibility, canonical reconstruction and uniqueness of line sums.

use crate::error::{Error, Result};
use crate::grid::{conjugate_unchecked, sorted_desc, trim_zeros, GridPoint, GridSet, LineSums};

/// Gale–Ryser: equal totals and the sorted rows are dominated by the
/// conjugate of the column sums.
pub fn is_consistent(sums: &LineSums) -> bool {
    if sums.row_total() != sums.col_total() {
        return false;
    }
    let rows = sorted_desc(&sums.rows);
    let conj = conjugate_unchecked(&sums.cols);
    let mut lhs = 0;
    let mut rhs = 0;
    for (k, &r) in rows.iter().enumerate() {
        lhs += r;
        rhs += conj.get(k).copied().unwrap_or(0);
        if lhs > rhs {
            return false;
        }
    }
    true
}

/// A deterministic realization of `sums`.
///
/// Rows are filled in order of decreasing sum (lower index first on ties);
/// each row takes the columns with the largest outstanding demand, again
/// preferring lower indices. Returned points are 1-based.
pub fn reconstruct(sums: &LineSums) -> Result<GridSet> {
    if !is_consistent(sums) {
        return Err(Error::Infeasible);
    }
    let mut order: Vec<usize> = (0..sums.rows.len()).collect();
    order.sort_by(|&a, &b| sums.rows[b].cmp(&sums.rows[a]).then(a.cmp(&b)));

    let mut demand = sums.cols.clone();
    let mut out = GridSet::new();
    let mut cols: Vec<usize> = (0..demand.len()).collect();
    for i in order {
        let need = sums.rows[i];
        if need == 0 {
            continue;
        }
        cols.sort_by(|&a, &b| demand[b].cmp(&demand[a]).then(a.cmp(&b)));
        for &j in &cols[..need] {
            // Gale–Ryser guarantees the chosen columns still have demand.
            debug_assert!(demand[j] > 0);
            demand[j] -= 1;
            out.insert(GridPoint::new(i as i64 + 1, j as i64 + 1));
        }
    }
    Ok(out)
}

/// True when exactly one binary image has these line sums.
pub fn is_unique(sums: &LineSums) -> Result<bool> {
    if !is_consistent(sums) {
        return Err(Error::Infeasible);
    }
    let cols = sorted_desc(&sums.cols);
    let conj = conjugate_unchecked(&sums.rows);
    Ok(trim_zeros(&cols) == conj.as_slice())
}

/// Column sums of the uniquely determined set with row sums `rows`, where
/// column `col_order[j]` (1-based) receives the `j`-th largest value.
pub fn unique_col_sums(rows: &[usize], col_order: &[usize]) -> Result<Vec<usize>> {
    let n = col_order.len();
    let mut seen = vec![false; n];
    for &c in col_order {
        if c == 0 || c > n || std::mem::replace(&mut seen[c - 1], true) {
            return Err(Error::BadPermutation { len: n });
        }
    }
    if let Some((k, &r)) = rows.iter().enumerate().find(|(_, &r)| r > n) {
        return Err(Error::RowExceedsWidth {
            row: k + 1,
            sum: r,
            width: n,
        });
    }
    let conj = conjugate_unchecked(rows);
    let mut cols = vec![0; n];
    for (j, &c) in col_order.iter().enumerate() {
        cols[c - 1] = conj.get(j).copied().unwrap_or(0);
    }
    Ok(cols)
}

/// The uniquely determined set with row sums `rows` whose column sums are
/// the conjugate of the rows, laid out in the order `col_order`.
///
/// Membership follows the characterization `(x,y) ∈ F ⇔ r_x ≥ #{l : c_l ≥ c_y}`.
pub fn unique_set(rows: &[usize], col_order: &[usize]) -> Result<GridSet> {
    let cols = unique_col_sums(rows, col_order)?;
    let mut out = GridSet::new();
    for (y, &cy) in cols.iter().enumerate() {
        if cy == 0 {
            continue;
        }
        let rank = cols.iter().filter(|&&cl| cl >= cy).count();
        for (x, &rx) in rows.iter().enumerate() {
            if rx >= rank {
                out.insert(GridPoint::new(x as i64 + 1, y as i64 + 1));
            }
        }
    }
    Ok(out)
}

/// `1..=n`, the order that makes the column sums non-increasing.
pub fn identity_order(n: usize) -> Vec<usize> {
    (1..=n).collect()
}
