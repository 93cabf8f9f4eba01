//! Uniquely determined neighbours and the minimal distance to uniqueness.
//!
//! For line sums `(r, c)` the neighbour keeps the row sums and gives the
//! columns the conjugate of the rows, assigned in the order of decreasing
//! `c`. Among all uniquely determined sets it minimizes the line-sum
//! distance `alpha`, and that minimum is `alpha0`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{alpha, check_sorted, conjugate_unchecked, sorted_desc, GridSet, LineSums};
use crate::ryser::{is_consistent, unique_col_sums, unique_set};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NeighbourSummary {
    /// 1-based column order: `sigma[0]` is the column with the largest sum.
    pub sigma: Vec<usize>,
    pub neighbour_sums: LineSums,
    pub alpha0: usize,
}

impl NeighbourSummary {
    /// The neighbour itself, in the 1-based coordinates of the input sums.
    pub fn unique_set(&self) -> GridSet {
        unique_set(&self.neighbour_sums.rows, &self.sigma)
            .expect("neighbour sums are always realizable")
    }
}

/// Stable descending order of the column sums.
pub fn column_order(cols: &[usize]) -> Vec<usize> {
    let mut sigma: Vec<usize> = (1..=cols.len()).collect();
    sigma.sort_by(|&a, &b| cols[b - 1].cmp(&cols[a - 1]));
    sigma
}

pub fn neighbour(sums: &LineSums) -> Result<NeighbourSummary> {
    if !is_consistent(sums) {
        return Err(Error::Infeasible);
    }
    let sigma = column_order(&sums.cols);
    let cols = unique_col_sums(&sums.rows, &sigma)?;
    let neighbour_sums = LineSums::new(sums.rows.clone(), cols);
    let alpha0 = alpha(sums, &neighbour_sums)?;
    Ok(NeighbourSummary {
        sigma,
        neighbour_sums,
        alpha0,
    })
}

fn nonzero_len(seq: &[usize]) -> usize {
    seq.iter().take_while(|&&x| x > 0).count()
}

fn sandwich(reference: &[usize], actual: &[usize], candidate: &[usize]) -> bool {
    let n = nonzero_len(actual);
    let len = n.max(candidate.len());
    (0..len).all(|k| {
        let v = candidate.get(k).copied().unwrap_or(0);
        if k < n {
            let a = reference.get(k).copied().unwrap_or(0);
            let c = actual[k];
            a.min(c) <= v && v <= a.max(c)
        } else {
            v == 0
        }
    })
}

fn require_sorted(sums: &LineSums, candidate: &[usize]) -> Result<()> {
    check_sorted(&sums.rows)?;
    check_sorted(&sums.cols)?;
    check_sorted(candidate)
}

/// Column-side characterization of a closest uniquely determined set:
/// `min(a_j, c_j) ≤ v_j ≤ max(a_j, c_j)` for the `n` non-zero columns and
/// `v_j = 0` beyond, where `a` is the conjugate of the rows.
pub fn check_condition_cols(sums: &LineSums, v: &[usize]) -> Result<bool> {
    require_sorted(sums, v)?;
    let a = conjugate_unchecked(&sums.rows);
    Ok(sandwich(&a, &sums.cols, v))
}

/// Row-side counterpart of [`check_condition_cols`], with `b` the conjugate
/// of the columns.
pub fn check_condition_rows(sums: &LineSums, u: &[usize]) -> Result<bool> {
    require_sorted(sums, u)?;
    let b = conjugate_unchecked(&sums.cols);
    Ok(sandwich(&b, &sums.rows, u))
}

/// Strict prefix-dominance of the neighbour's sorted line sums over the
/// input's, evaluated separately on each axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForcedOnesCondition {
    pub col_axis: bool,
    pub row_axis: bool,
}

impl ForcedOnesCondition {
    pub fn both(&self) -> bool {
        self.col_axis && self.row_axis
    }
}

/// `Σ_{j≤l} v_j > Σ_{j≤l} c_j` for every `l = 1..n-1`, where `n` counts the
/// non-zero entries of `actual`. A non-empty single line is always fully
/// forced, so that case reports `false` instead of the vacuous `true`.
fn strictly_dominates(neighbour: &[usize], actual: &[usize]) -> bool {
    let n = nonzero_len(actual);
    if n == 1 {
        return false;
    }
    let mut lhs = 0;
    let mut rhs = 0;
    for (l, &c) in actual.iter().enumerate().take(n.saturating_sub(1)) {
        lhs += neighbour.get(l).copied().unwrap_or(0);
        rhs += c;
        if lhs <= rhs {
            return false;
        }
    }
    true
}

pub fn no_forced_ones_condition(sums: &LineSums) -> Result<ForcedOnesCondition> {
    let summary = neighbour(sums)?;
    let cols = sorted_desc(&sums.cols);
    let v = sorted_desc(&summary.neighbour_sums.cols);
    let rows = sorted_desc(&sums.rows);
    let u = conjugate_unchecked(&sums.cols);
    Ok(ForcedOnesCondition {
        col_axis: strictly_dominates(&v, &cols),
        row_axis: strictly_dominates(&u, &rows),
    })
}
