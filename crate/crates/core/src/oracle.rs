//! Brute-force ground truth for small instances.
//!
//! Realizations are enumerated by backtracking over rows, top to bottom.
//! A row is a bitmask (bit `j` is column `j + 1`), candidate masks are tried
//! in ascending order, and a branch is cut as soon as the residual row and
//! column demands fail simple counting tests. The resulting order is
//! lexicographic in the sequence of row masks.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{alpha, conjugate_unchecked, trim_zeros, GridPoint, GridSet, LineSums};

pub const DEFAULT_CAP: usize = 1_000_000;

/// Widest instance the mask representation supports.
pub const MAX_COLS: usize = 64;

/// One realization as row bitmasks.
pub type RowMasks = Vec<u64>;

/// Necessary conditions on the residual demands only; the search must not
/// depend on the Gale–Ryser test it is used to check.
fn feasible_residual(rows: &[usize], demand: &[usize]) -> bool {
    let total: usize = rows.iter().sum();
    if total != demand.iter().sum::<usize>() {
        return false;
    }
    let open = demand.iter().filter(|&&d| d > 0).count();
    demand.iter().all(|&d| d <= rows.len()) && rows.iter().all(|&r| r <= open)
}

/// Scatter the low bits of `idx` onto the set bits of `allowed`, in order.
fn deposit(mut idx: u64, mut allowed: u64) -> u64 {
    let mut out = 0;
    while idx != 0 && allowed != 0 {
        let low = allowed & allowed.wrapping_neg();
        if idx & 1 == 1 {
            out |= low;
        }
        idx >>= 1;
        allowed &= allowed - 1;
    }
    out
}

/// Masks with exactly `k` bits drawn from `allowed`, ascending.
fn masks_with_popcount(allowed: u64, k: usize) -> Vec<u64> {
    let p = allowed.count_ones() as usize;
    if k > p {
        return Vec::new();
    }
    if k == 0 {
        return vec![0];
    }
    let mut out = Vec::new();
    let mut idx: u64 = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
    let limit = if p == 64 { u64::MAX } else { (1u64 << p) - 1 };
    loop {
        out.push(deposit(idx, allowed));
        if idx == limit || p == k {
            break;
        }
        // Gosper's hack: next integer with the same popcount.
        let c = idx & idx.wrapping_neg();
        let r = match idx.checked_add(c) {
            Some(r) if r <= limit => r,
            _ => break,
        };
        idx = (((r ^ idx) >> 2) / c) | r;
        if idx > limit {
            break;
        }
    }
    out
}

struct Search<'a> {
    rows: &'a [usize],
    forbidden: Option<(usize, usize)>,
    cap: usize,
    stop_at_first: bool,
    out: Vec<RowMasks>,
}

impl Search<'_> {
    fn run(&mut self, i: usize, demand: &mut [usize], cur: &mut RowMasks) -> Result<bool> {
        if i == self.rows.len() {
            if self.out.len() == self.cap {
                return Err(Error::CapExceeded { cap: self.cap });
            }
            self.out.push(cur.clone());
            return Ok(self.stop_at_first);
        }
        let mut allowed = 0u64;
        for (j, &d) in demand.iter().enumerate() {
            if d > 0 {
                allowed |= 1 << j;
            }
        }
        if let Some((fi, fj)) = self.forbidden {
            if fi == i {
                allowed &= !(1u64 << fj);
            }
        }
        for mask in masks_with_popcount(allowed, self.rows[i]) {
            for (j, d) in demand.iter_mut().enumerate() {
                if mask >> j & 1 == 1 {
                    *d -= 1;
                }
            }
            if feasible_residual(&self.rows[i + 1..], demand) {
                cur.push(mask);
                let done = self.run(i + 1, demand, cur)?;
                cur.pop();
                if done {
                    return Ok(true);
                }
            }
            for (j, d) in demand.iter_mut().enumerate() {
                if mask >> j & 1 == 1 {
                    *d += 1;
                }
            }
        }
        Ok(false)
    }
}

fn search(
    sums: &LineSums,
    cap: usize,
    forbidden: Option<GridPoint>,
    stop_at_first: bool,
) -> Result<Vec<RowMasks>> {
    if sums.cols.len() > MAX_COLS {
        return Err(Error::InvalidParameter(format!(
            "oracle handles at most {MAX_COLS} columns"
        )));
    }
    if sums.row_total() != sums.col_total() {
        return Ok(Vec::new());
    }
    let forbidden = match forbidden {
        None => None,
        Some(p)
            if p.row >= 1
                && p.col >= 1
                && p.row as usize <= sums.rows.len()
                && p.col as usize <= sums.cols.len() =>
        {
            Some((p.row as usize - 1, p.col as usize - 1))
        }
        // A point outside the window is never occupied.
        Some(_) => return search(sums, cap, None, stop_at_first),
    };
    let mut s = Search {
        rows: &sums.rows,
        forbidden,
        cap,
        stop_at_first,
        out: Vec::new(),
    };
    let mut demand = sums.cols.clone();
    s.run(0, &mut demand, &mut Vec::with_capacity(sums.rows.len()))?;
    Ok(s.out)
}

/// All realizations as row masks, in canonical order.
pub fn enumerate_masks(sums: &LineSums, cap: Option<usize>) -> Result<Vec<RowMasks>> {
    search(sums, cap.unwrap_or(DEFAULT_CAP), None, false)
}

pub fn masks_to_set(masks: &[u64]) -> GridSet {
    let mut out = GridSet::new();
    for (i, &m) in masks.iter().enumerate() {
        for j in 0..64 {
            if m >> j & 1 == 1 {
                out.insert(GridPoint::new(i as i64 + 1, j as i64 + 1));
            }
        }
    }
    out
}

/// Every binary image with line sums `sums` (1-based), in canonical order.
pub fn enumerate_realizations(sums: &LineSums, cap: Option<usize>) -> Result<Vec<GridSet>> {
    Ok(enumerate_masks(sums, cap)?
        .iter()
        .map(|m| masks_to_set(m))
        .collect())
}

/// Points shared by every realization.
pub fn forced_ones(sums: &LineSums, cap: Option<usize>) -> Result<GridSet> {
    let all = enumerate_masks(sums, cap)?;
    let first = all.first().ok_or(Error::Infeasible)?;
    let mut common = first.clone();
    for m in &all[1..] {
        for (c, &x) in common.iter_mut().zip(m) {
            *c &= x;
        }
    }
    Ok(masks_to_set(&common))
}

/// Whether some realization of `sums` leaves `point` empty.
pub fn realizable_avoiding(sums: &LineSums, point: GridPoint) -> Result<bool> {
    Ok(!search(sums, usize::MAX, Some(point), true)?.is_empty())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalPair {
    pub first: GridSet,
    pub second: GridSet,
    pub max_symm_diff: usize,
    /// Some two realizations (possibly the same one, when empty) are disjoint.
    pub disjoint_exists: bool,
}

fn xor_count(a: &[u64], b: &[u64]) -> usize {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x ^ y).count_ones() as usize)
        .sum()
}

fn disjoint(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & y == 0)
}

/// A pair of realizations with the largest symmetric difference.
pub fn extremal_pair(sums: &LineSums, cap: Option<usize>) -> Result<ExtremalPair> {
    let all = enumerate_masks(sums, cap)?;
    if all.is_empty() {
        return Err(Error::Infeasible);
    }
    let mut best = (0, 0, 0);
    let mut disjoint_exists = false;
    for (x, a) in all.iter().enumerate() {
        for (y, b) in all.iter().enumerate().skip(x) {
            let d = xor_count(a, b);
            if d > best.2 {
                best = (x, y, d);
            }
            disjoint_exists |= disjoint(a, b);
        }
    }
    Ok(ExtremalPair {
        first: masks_to_set(&all[best.0]),
        second: masks_to_set(&all[best.1]),
        max_symm_diff: best.2,
        disjoint_exists,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinAlpha {
    pub alpha_min: usize,
    /// Sorted line sums of every minimizing uniquely determined set.
    pub witnesses: Vec<LineSums>,
}

fn non_increasing_sequences(len: usize, max_val: usize) -> Vec<Vec<usize>> {
    fn go(len: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in (0..=cap).rev() {
            cur.push(v);
            go(len, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(len, max_val, &mut Vec::with_capacity(len), &mut out);
    out
}

/// Uniquely determined line sums with non-increasing column sums in the box
/// `values ≤ max_val`, `length ≤ max_len`; the column sums determine the
/// rows as their conjugate.
pub fn unique_candidates(max_val: usize, max_len: usize) -> Vec<LineSums> {
    non_increasing_sequences(max_len, max_val)
        .into_iter()
        .map(|v| {
            let u = conjugate_unchecked(&v);
            LineSums::new(u, trim_zeros(&v).to_vec())
        })
        .collect()
}

/// Exhaustive minimum of `alpha(sums, F)` over uniquely determined `F` in
/// the search box. Both sides are compared in sorted order, which is where
/// the minimum over all line orders is attained.
pub fn min_alpha_unique_bruteforce(
    sums: &LineSums,
    max_val: usize,
    max_len: usize,
) -> Result<MinAlpha> {
    let target = sums.sorted();
    let mut best: Option<usize> = None;
    let mut witnesses = Vec::new();
    for cand in unique_candidates(max_val, max_len) {
        let a = alpha(&target, &cand)?;
        match best {
            Some(b) if a > b => {}
            Some(b) if a == b => witnesses.push(cand),
            _ => {
                best = Some(a);
                witnesses = vec![cand];
            }
        }
    }
    Ok(MinAlpha {
        alpha_min: best.unwrap_or(0),
        witnesses,
    })
}
