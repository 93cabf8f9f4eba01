//! Lattice point sets, their projections and the line-sum distance.
//!
//! Coordinates follow matrix convention: `row` grows downward, `col` grows
//! to the right, and every sequence exposed here is 1-based when it leaves
//! the crate (index `k` of a [`LineSums`] vector is line `k + 1`).

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GridPoint {
    pub row: i64,
    pub col: i64,
}

impl GridPoint {
    pub const fn new(row: i64, col: i64) -> Self {
        GridPoint { row, col }
    }
}

impl From<(i64, i64)> for GridPoint {
    fn from((row, col): (i64, i64)) -> Self {
        GridPoint { row, col }
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A finite subset of the integer lattice, i.e. a binary image.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GridSet {
    points: BTreeSet<GridPoint>,
}

impl GridSet {
    pub fn new() -> Self {
        GridSet::default()
    }

    pub fn insert(&mut self, p: GridPoint) -> bool {
        self.points.insert(p)
    }

    pub fn remove(&mut self, p: &GridPoint) -> bool {
        self.points.remove(p)
    }

    pub fn contains(&self, p: &GridPoint) -> bool {
        self.points.contains(p)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Points in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = &GridPoint> + '_ {
        self.points.iter()
    }

    pub fn symm_diff(&self, other: &GridSet) -> GridSet {
        self.points
            .symmetric_difference(&other.points)
            .copied()
            .collect()
    }

    pub fn intersect(&self, other: &GridSet) -> GridSet {
        self.points.intersection(&other.points).copied().collect()
    }

    pub fn is_subset(&self, other: &GridSet) -> bool {
        self.points.is_subset(&other.points)
    }

    pub fn is_disjoint(&self, other: &GridSet) -> bool {
        self.points.is_disjoint(&other.points)
    }

    /// Smallest and largest row and column, as `(top_left, bottom_right)`.
    pub fn bounding_box(&self) -> Option<(GridPoint, GridPoint)> {
        let first = self.points.iter().next()?;
        let mut lo = *first;
        let mut hi = *first;
        for p in &self.points {
            lo.row = lo.row.min(p.row);
            lo.col = lo.col.min(p.col);
            hi.row = hi.row.max(p.row);
            hi.col = hi.col.max(p.col);
        }
        Some((lo, hi))
    }

    pub fn translated(&self, drow: i64, dcol: i64) -> GridSet {
        self.points
            .iter()
            .map(|p| GridPoint::new(p.row + drow, p.col + dcol))
            .collect()
    }

    pub fn transposed(&self) -> GridSet {
        self.points
            .iter()
            .map(|p| GridPoint::new(p.col, p.row))
            .collect()
    }
}

impl FromIterator<GridPoint> for GridSet {
    fn from_iter<I: IntoIterator<Item = GridPoint>>(iter: I) -> Self {
        GridSet {
            points: iter.into_iter().collect(),
        }
    }
}

impl FromIterator<(i64, i64)> for GridSet {
    fn from_iter<I: IntoIterator<Item = (i64, i64)>>(iter: I) -> Self {
        iter.into_iter().map(GridPoint::from).collect()
    }
}

impl<'a> IntoIterator for &'a GridSet {
    type Item = &'a GridPoint;
    type IntoIter = std::collections::btree_set::Iter<'a, GridPoint>;

    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

/// Symmetric difference `a △ b`.
pub fn symm_diff(a: &GridSet, b: &GridSet) -> GridSet {
    a.symm_diff(b)
}

pub fn intersect(a: &GridSet, b: &GridSet) -> GridSet {
    a.intersect(b)
}

/// Row and column sums. Entries past the stored length are zero, so two
/// values compare equal when they differ only by trailing zeros.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct LineSums {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl LineSums {
    pub fn new(rows: Vec<usize>, cols: Vec<usize>) -> Self {
        LineSums { rows, cols }
    }

    /// Sum of row `i` (1-based).
    pub fn row(&self, i: usize) -> usize {
        i.checked_sub(1)
            .and_then(|k| self.rows.get(k))
            .copied()
            .unwrap_or(0)
    }

    /// Sum of column `j` (1-based).
    pub fn col(&self, j: usize) -> usize {
        j.checked_sub(1)
            .and_then(|k| self.cols.get(k))
            .copied()
            .unwrap_or(0)
    }

    pub fn row_total(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn col_total(&self) -> usize {
        self.cols.iter().sum()
    }

    pub fn is_balanced(&self) -> bool {
        self.row_total() == self.col_total()
    }

    pub fn transposed(&self) -> LineSums {
        LineSums::new(self.cols.clone(), self.rows.clone())
    }

    /// Both sequences sorted non-increasingly.
    pub fn sorted(&self) -> LineSums {
        LineSums::new(sorted_desc(&self.rows), sorted_desc(&self.cols))
    }

    pub fn trimmed(&self) -> LineSums {
        LineSums::new(
            trim_zeros(&self.rows).to_vec(),
            trim_zeros(&self.cols).to_vec(),
        )
    }
}

impl PartialEq for LineSums {
    fn eq(&self, other: &Self) -> bool {
        trim_zeros(&self.rows) == trim_zeros(&other.rows)
            && trim_zeros(&self.cols) == trim_zeros(&other.cols)
    }
}

impl Eq for LineSums {}

pub(crate) fn trim_zeros(seq: &[usize]) -> &[usize] {
    let end = seq.iter().rposition(|&x| x != 0).map_or(0, |k| k + 1);
    &seq[..end]
}

/// A rectangular window of the lattice. Line index `k` (1-based) inside the
/// frame is absolute row `row_offset + k`, likewise for columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Frame {
    pub row_offset: i64,
    pub col_offset: i64,
    pub rows: usize,
    pub cols: usize,
}

impl Frame {
    /// The `rows × cols` window whose top-left point is `(1,1)`.
    pub fn unit(rows: usize, cols: usize) -> Self {
        Frame {
            row_offset: 0,
            col_offset: 0,
            rows,
            cols,
        }
    }

    /// Bounding box of the union of `sets`; the empty frame when all are empty.
    pub fn bounding<'a, I>(sets: I) -> Self
    where
        I: IntoIterator<Item = &'a GridSet>,
    {
        let mut bbox: Option<(GridPoint, GridPoint)> = None;
        for s in sets {
            if let Some((lo, hi)) = s.bounding_box() {
                bbox = Some(match bbox {
                    None => (lo, hi),
                    Some((a, b)) => (
                        GridPoint::new(a.row.min(lo.row), a.col.min(lo.col)),
                        GridPoint::new(b.row.max(hi.row), b.col.max(hi.col)),
                    ),
                });
            }
        }
        match bbox {
            None => Frame::unit(0, 0),
            Some((lo, hi)) => Frame {
                row_offset: lo.row - 1,
                col_offset: lo.col - 1,
                rows: (hi.row - lo.row + 1) as usize,
                cols: (hi.col - lo.col + 1) as usize,
            },
        }
    }

    pub fn contains(&self, p: &GridPoint) -> bool {
        let r = p.row - self.row_offset;
        let c = p.col - self.col_offset;
        r >= 1 && c >= 1 && r as usize <= self.rows && c as usize <= self.cols
    }

    /// Line sums of `set` measured inside this frame, full frame length.
    pub fn line_sums(&self, set: &GridSet) -> Result<LineSums> {
        let mut rows = vec![0; self.rows];
        let mut cols = vec![0; self.cols];
        for p in set {
            if !self.contains(p) {
                return Err(Error::InvalidParameter(format!(
                    "point {p} lies outside the frame"
                )));
            }
            rows[(p.row - self.row_offset - 1) as usize] += 1;
            cols[(p.col - self.col_offset - 1) as usize] += 1;
        }
        Ok(LineSums { rows, cols })
    }

    /// Map a set given in frame coordinates (1-based) to absolute coordinates.
    pub fn to_absolute(&self, local: &GridSet) -> GridSet {
        local.translated(self.row_offset, self.col_offset)
    }

    pub fn to_local(&self, absolute: &GridSet) -> GridSet {
        absolute.translated(-self.row_offset, -self.col_offset)
    }
}

/// Row and column sums of `set` over its bounding box, together with the
/// frame that maps the 1-based indices back to absolute coordinates.
pub fn line_sums(set: &GridSet) -> (LineSums, Frame) {
    let frame = Frame::bounding([set]);
    let sums = frame
        .line_sums(set)
        .expect("bounding frame contains every point");
    (sums, frame)
}

/// Half the L1 distance between two pairs of projections, aligned by index.
pub fn alpha(a: &LineSums, b: &LineSums) -> Result<usize> {
    for s in [a, b] {
        if !s.is_balanced() {
            return Err(Error::Unbalanced {
                rows: s.row_total(),
                cols: s.col_total(),
            });
        }
    }
    let double = l1_padded(&a.rows, &b.rows) + l1_padded(&a.cols, &b.cols);
    if !double.is_multiple_of(2) {
        return Err(Error::OddDistance { double });
    }
    Ok(double / 2)
}

/// `Σ |x_k − y_k|` with the shorter sequence padded by zeros.
pub fn l1_padded(x: &[usize], y: &[usize]) -> usize {
    let len = x.len().max(y.len());
    (0..len)
        .map(|k| {
            let p = x.get(k).copied().unwrap_or(0);
            let q = y.get(k).copied().unwrap_or(0);
            p.abs_diff(q)
        })
        .sum()
}

pub fn sorted_desc(seq: &[usize]) -> Vec<usize> {
    let mut v = seq.to_vec();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

pub fn is_non_increasing(seq: &[usize]) -> bool {
    seq.windows(2).all(|w| w[0] >= w[1])
}

pub(crate) fn check_sorted(seq: &[usize]) -> Result<()> {
    match seq.windows(2).position(|w| w[0] < w[1]) {
        Some(k) => Err(Error::NotSorted { position: k + 2 }),
        None => Ok(()),
    }
}

/// Conjugate partition: `b_i = #{ j : a_j ≥ i }` for `i = 1..=max(a)`.
pub fn conjugate(a: &[usize]) -> Result<Vec<usize>> {
    check_sorted(a)?;
    Ok(conjugate_unchecked(a))
}

/// Conjugate of the multiset `a`; order of `a` is irrelevant.
pub(crate) fn conjugate_unchecked(a: &[usize]) -> Vec<usize> {
    let top = a.iter().copied().max().unwrap_or(0);
    let mut b = vec![0usize; top];
    for &x in a {
        for slot in &mut b[..x] {
            *slot += 1;
        }
    }
    b
}
