//! Decomposition of a symmetric difference into staircases.
//!
//! A staircase is a chain of points alternating between `F1 \ F2` and
//! `F2 \ F1`, where consecutive points share a row or a column and the
//! shared axis alternates. When `F1` is uniquely determined, `F1 △ F2`
//! splits into exactly `alpha(F1, F2)` of them.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{line_sums, GridPoint, GridSet};
use crate::ryser::is_unique;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    /// In the first set only.
    FirstOnly,
    /// In the second set only.
    SecondOnly,
}

impl Side {
    pub fn flipped(self) -> Side {
        match self {
            Side::FirstOnly => Side::SecondOnly,
            Side::SecondOnly => Side::FirstOnly,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Staircase {
    points: Vec<GridPoint>,
    tags: Vec<Side>,
}

impl Staircase {
    /// Build from raw parts; no validation is done, see [`validate`].
    pub fn from_parts(points: Vec<GridPoint>, tags: Vec<Side>) -> Self {
        Staircase { points, tags }
    }

    pub fn points(&self) -> &[GridPoint] {
        &self.points
    }

    pub fn tags(&self) -> &[Side] {
        &self.tags
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (GridPoint, Side)> + '_ {
        self.points.iter().copied().zip(self.tags.iter().copied())
    }

    /// Distinct rows touched by the chain.
    pub fn rows(&self) -> BTreeSet<i64> {
        self.points.iter().map(|p| p.row).collect()
    }

    pub fn cols(&self) -> BTreeSet<i64> {
        self.points.iter().map(|p| p.col).collect()
    }

    /// Rows (in chain order) of the points that lie in the first set only.
    pub fn first_only_rows(&self) -> Vec<i64> {
        self.iter()
            .filter(|(_, s)| *s == Side::FirstOnly)
            .map(|(p, _)| p.row)
            .collect()
    }
}

#[derive(Default, Clone, Copy)]
struct Links {
    row: Option<usize>,
    col: Option<usize>,
}

/// Pair first-only with second-only points, `k`-th with `k`-th, inside each
/// group (a row or a column). Groups must be keyed so iteration is ordered.
fn pair_within<K: Ord>(
    groups: BTreeMap<K, (Vec<usize>, Vec<usize>)>,
    mut link: impl FnMut(usize, usize),
) {
    for (_, (first, second)) in groups {
        for (&a, &b) in first.iter().zip(second.iter()) {
            link(a, b);
        }
    }
}

/// Split `f1 △ f2` into `alpha(f1, f2)` pairwise disjoint staircases.
///
/// Within each row the first-only and second-only points are paired in
/// column order; within each column they are paired in row order. Every
/// point then has at most one partner per axis and following the links
/// yields paths. Each column link joins a point of `f1` to a point outside
/// `f1` in a row of strictly smaller `f1`-row sum, so no link cycle exists.
/// Chains are oriented so those row sums decrease along the first-only
/// points.
pub fn decompose(f1: &GridSet, f2: &GridSet) -> Result<Vec<Staircase>> {
    if !is_unique(&line_sums(f1).0)? {
        return Err(Error::NotUnique);
    }

    let diff: Vec<(GridPoint, Side)> = f1
        .symm_diff(f2)
        .iter()
        .map(|&p| {
            let side = if f1.contains(&p) {
                Side::FirstOnly
            } else {
                Side::SecondOnly
            };
            (p, side)
        })
        .collect();

    let mut by_row: BTreeMap<i64, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
    let mut by_col: BTreeMap<i64, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
    // `diff` is in row-major order, so each row bucket is column-sorted and
    // each column bucket is row-sorted.
    for (k, &(p, side)) in diff.iter().enumerate() {
        let r = by_row.entry(p.row).or_default();
        let c = by_col.entry(p.col).or_default();
        match side {
            Side::FirstOnly => {
                r.0.push(k);
                c.0.push(k);
            }
            Side::SecondOnly => {
                r.1.push(k);
                c.1.push(k);
            }
        }
    }

    let mut links = vec![Links::default(); diff.len()];
    pair_within(by_row, |a, b| {
        links[a].row = Some(b);
        links[b].row = Some(a);
    });
    pair_within(by_col, |a, b| {
        links[a].col = Some(b);
        links[b].col = Some(a);
    });

    let mut visited = vec![false; diff.len()];
    let mut chains = Vec::new();
    for start in 0..diff.len() {
        let l = links[start];
        if visited[start] || (l.row.is_some() && l.col.is_some()) {
            continue;
        }
        let mut chain = vec![start];
        visited[start] = true;
        let mut via_row = l.row.is_some();
        let mut cur = start;
        loop {
            let next = if via_row {
                links[cur].row
            } else {
                links[cur].col
            };
            match next {
                Some(nx) => {
                    visited[nx] = true;
                    chain.push(nx);
                    cur = nx;
                    via_row = !via_row;
                }
                None => break,
            }
        }
        chains.push(chain);
    }
    assert!(
        visited.iter().all(|&v| v),
        "link cycle found; first set is not uniquely determined"
    );

    let mut out: Vec<Staircase> = chains
        .into_iter()
        .map(|mut chain| {
            // Orient so the first column link runs from a first-only point.
            let first_col_link = chain
                .windows(2)
                .find(|w| diff[w[0]].0.col == diff[w[1]].0.col);
            if let Some(w) = first_col_link {
                if diff[w[0]].1 == Side::SecondOnly {
                    chain.reverse();
                }
            }
            Staircase {
                points: chain.iter().map(|&k| diff[k].0).collect(),
                tags: chain.iter().map(|&k| diff[k].1).collect(),
            }
        })
        .collect();
    out.sort_by_key(|s| s.points[0]);
    Ok(out)
}

/// True when `s` is a staircase of `f1 △ f2` with correct membership tags.
pub fn validate(s: &Staircase, f1: &GridSet, f2: &GridSet) -> bool {
    if s.points.is_empty() || s.points.len() != s.tags.len() {
        return false;
    }
    let distinct: BTreeSet<_> = s.points.iter().collect();
    if distinct.len() != s.points.len() {
        return false;
    }
    let tags_ok = s.iter().all(|(p, side)| match side {
        Side::FirstOnly => f1.contains(&p) && !f2.contains(&p),
        Side::SecondOnly => f2.contains(&p) && !f1.contains(&p),
    });
    if !tags_ok || s.tags.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    // true = shared row, false = shared column
    let mut axes = Vec::with_capacity(s.points.len());
    for w in s.points.windows(2) {
        if w[0].row == w[1].row {
            axes.push(true);
        } else if w[0].col == w[1].col {
            axes.push(false);
        } else {
            return false;
        }
    }
    axes.windows(2).all(|w| w[0] != w[1])
}

/// `⌊k²/2⌋`, the least total row-sum gap over the `k` rows of a staircase
/// between two uniquely determined sets.
pub fn row_gap_floor(k: usize) -> usize {
    k * k / 2
}

/// Sum of `|a_k − b_k|` over the line indices in `lines`, with sums keyed
/// by absolute index (see [`sums_by_index`]).
pub fn gap_over(
    lines: &BTreeSet<i64>,
    sums_a: &HashMap<i64, usize>,
    sums_b: &HashMap<i64, usize>,
) -> usize {
    lines
        .iter()
        .map(|k| {
            let a = sums_a.get(k).copied().unwrap_or(0);
            let b = sums_b.get(k).copied().unwrap_or(0);
            a.abs_diff(b)
        })
        .sum()
}

/// Absolute-index row sums and column sums of `set`.
pub fn sums_by_index(set: &GridSet) -> (HashMap<i64, usize>, HashMap<i64, usize>) {
    let mut rows = HashMap::new();
    let mut cols = HashMap::new();
    for p in set {
        *rows.entry(p.row).or_insert(0) += 1;
        *cols.entry(p.col).or_insert(0) += 1;
    }
    (rows, cols)
}
