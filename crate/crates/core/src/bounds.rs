//! Closed-form bounds on symmetric differences and intersections, and a
//! report comparing them with what two concrete sets actually do.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{alpha, Frame, GridSet, LineSums};
use crate::neighbour::neighbour;
use crate::staircase::decompose;

/// Slack allowed when comparing an integer count against a real bound.
pub const EVAL_TOLERANCE: f64 = 1e-9;

/// Per-row baseline: a row with sum `a` in a width-`n` window can differ in
/// at most `2·min(a, n − a)` places, summed over all rows.
pub fn baseline_rowwise(sums: &LineSums, n_cols: usize) -> Result<usize> {
    let mut total = 0;
    for (k, &r) in sums.rows.iter().enumerate() {
        if r > n_cols {
            return Err(Error::RowExceedsWidth {
                row: k + 1,
                sum: r,
                width: n_cols,
            });
        }
        total += 2 * r.min(n_cols - r);
    }
    Ok(total)
}

/// `|F1 △ F2| ≤ α√(8N+1) − α` for uniquely determined `F1` of size `N`;
/// with `weak`, the looser `2α√(2N)`.
pub fn bound_unique_vs_any(alpha: usize, size: usize, weak: bool) -> f64 {
    let a = alpha as f64;
    let n = size as f64;
    if weak {
        2.0 * a * (2.0 * n).sqrt()
    } else {
        a * (8.0 * n + 1.0).sqrt() - a
    }
}

/// Two sets with equal line sums: `|F2 △ F3| ≤ 2α√(8N+1) − 2α`.
pub fn bound_equal_linesums(alpha: usize, size: usize) -> f64 {
    2.0 * bound_unique_vs_any(alpha, size, false)
}

fn ratio_bound(scale: f64, alpha: usize, size: usize) -> Result<f64> {
    if alpha == 0 {
        return Ok(1.0);
    }
    if size == 0 {
        return Err(Error::InvalidParameter(
            "ratio bound needs a non-empty set".into(),
        ));
    }
    Ok(1.0 - scale * std::f64::consts::SQRT_2 * alpha as f64 / (size as f64).sqrt())
}

/// Lower bound on `|F2 ∩ F1| / |F2|` for the neighbour `F1`:
/// `1 − √2·α/√N`.
pub fn ratio_vs_neighbour(alpha: usize, size: usize) -> Result<f64> {
    ratio_bound(1.0, alpha, size)
}

/// Lower bound on `|F2 ∩ F3| / |F2|` for equal line sums: `1 − 2√2·α/√N`.
pub fn ratio_same_linesums(alpha: usize, size: usize) -> Result<f64> {
    ratio_bound(2.0, alpha, size)
}

/// Two disjoint sets with equal line sums have at most `8α²` points each.
pub fn disjoint_size_bound(alpha: usize) -> usize {
    8 * alpha * alpha
}

/// Two uniquely determined sets: `|F1 △ F1'| ≤ 2α₁√(2α₁+1) − α₁`.
pub fn bound_two_unique(alpha1: usize) -> f64 {
    let a = alpha1 as f64;
    2.0 * a * (2.0 * a + 1.0).sqrt() - a
}

/// Arbitrary pair: neighbour distances on both sides plus the distance
/// between the neighbours.
pub fn bound_general(
    alpha1: usize,
    alpha2: usize,
    alpha3: usize,
    size2: usize,
    size3: usize,
) -> f64 {
    bound_unique_vs_any(alpha2, size2, false)
        + bound_unique_vs_any(alpha3, size3, false)
        + bound_two_unique(alpha1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    /// `actual ≤ value`
    Upper,
    /// `actual ≥ value`
    Lower,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundEntry {
    pub name: String,
    pub kind: BoundKind,
    pub value: f64,
    pub actual: f64,
    pub applicable: bool,
    /// Always true when the bound does not apply.
    pub satisfied: bool,
    /// `value − actual` for upper bounds, `actual − value` for lower ones;
    /// absent when the bound does not apply.
    pub slack: Option<f64>,
}

impl BoundEntry {
    fn new(name: &str, kind: BoundKind, value: f64, actual: f64, applicable: bool) -> Self {
        let slack = match kind {
            BoundKind::Upper => value - actual,
            BoundKind::Lower => actual - value,
        };
        BoundEntry {
            name: name.to_string(),
            kind,
            value,
            actual,
            applicable,
            satisfied: !applicable || slack >= -EVAL_TOLERANCE,
            slack: applicable.then_some(slack),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StaircaseStats {
    pub count: usize,
    pub max_len: usize,
    pub points: usize,
}

impl StaircaseStats {
    fn of(first: &GridSet, second: &GridSet) -> Result<Self> {
        let chains = decompose(first, second)?;
        Ok(StaircaseStats {
            count: chains.len(),
            max_len: chains.iter().map(|s| s.len()).max().unwrap_or(0),
            points: chains.iter().map(|s| s.len()).sum(),
        })
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StaircaseSummary {
    /// Neighbour of the first set against the first set.
    pub neighbour_f2: StaircaseStats,
    pub neighbour_f3: StaircaseStats,
    /// Neighbour of the first set against the neighbour of the second.
    pub neighbour_pair: StaircaseStats,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub alpha_f2: usize,
    pub alpha_f3: usize,
    pub alpha_unique_pair: usize,
    pub size_f2: usize,
    pub size_f3: usize,
    pub equal_line_sums: bool,
    pub actual_symm_diff: usize,
    pub actual_intersection: usize,
    pub neighbour_symm_diff_f2: usize,
    pub neighbour_symm_diff_f3: usize,
    pub neighbour_intersection_f2: usize,
    pub neighbour_intersection_f3: usize,
    pub bounds: Vec<BoundEntry>,
    pub staircases: StaircaseSummary,
}

impl BoundReport {
    pub fn bound(&self, name: &str) -> Option<&BoundEntry> {
        self.bounds.iter().find(|b| b.name == name)
    }

    pub fn all_satisfied(&self) -> bool {
        self.bounds.iter().all(|b| b.satisfied)
    }
}

/// Compare two sets through their uniquely determined neighbours and
/// evaluate every bound that applies to the pair.
pub fn analyze_pair(f2: &GridSet, f3: &GridSet) -> Result<BoundReport> {
    let frame = Frame::bounding([f2, f3]);
    let l2 = frame.line_sums(f2)?;
    let l3 = frame.line_sums(f3)?;
    let nb2 = neighbour(&l2)?;
    let nb3 = neighbour(&l3)?;
    let n2 = frame.to_absolute(&nb2.unique_set());
    let n3 = frame.to_absolute(&nb3.unique_set());
    let alpha1 = alpha(&nb2.neighbour_sums, &nb3.neighbour_sums)?;
    let (a2, a3) = (nb2.alpha0, nb3.alpha0);
    let (s2, s3) = (f2.len(), f3.len());

    let symm = f2.symm_diff(f3).len();
    let inter = f2.intersect(f3).len();
    let nsd2 = n2.symm_diff(f2).len();
    let nsd3 = n3.symm_diff(f3).len();
    let ni2 = n2.intersect(f2).len();
    let ni3 = n3.intersect(f3).len();
    let equal = l2 == l3;

    use BoundKind::{Lower, Upper};
    let ratio = |num: usize, den: usize| {
        if den == 0 {
            0.0
        } else {
            num as f64 / den as f64
        }
    };
    let mut bounds = vec![
        BoundEntry::new(
            "unique_vs_any_f2",
            Upper,
            bound_unique_vs_any(a2, s2, false),
            nsd2 as f64,
            true,
        ),
        BoundEntry::new(
            "unique_vs_any_weak_f2",
            Upper,
            bound_unique_vs_any(a2, s2, true),
            nsd2 as f64,
            true,
        ),
        BoundEntry::new(
            "unique_vs_any_f3",
            Upper,
            bound_unique_vs_any(a3, s3, false),
            nsd3 as f64,
            true,
        ),
        BoundEntry::new(
            "unique_vs_any_weak_f3",
            Upper,
            bound_unique_vs_any(a3, s3, true),
            nsd3 as f64,
            true,
        ),
        BoundEntry::new(
            "ratio_vs_neighbour_f2",
            Lower,
            ratio_vs_neighbour(a2, s2).unwrap_or(1.0),
            ratio(ni2, s2),
            s2 > 0,
        ),
        BoundEntry::new(
            "ratio_vs_neighbour_f3",
            Lower,
            ratio_vs_neighbour(a3, s3).unwrap_or(1.0),
            ratio(ni3, s3),
            s3 > 0,
        ),
    ];
    let n_cols = frame.cols;
    bounds.extend([
        BoundEntry::new(
            "baseline_rowwise",
            Upper,
            baseline_rowwise(&l2, n_cols)? as f64,
            symm as f64,
            equal,
        ),
        BoundEntry::new(
            "equal_linesums",
            Upper,
            bound_equal_linesums(a2, s2),
            symm as f64,
            equal,
        ),
        BoundEntry::new(
            "ratio_same_linesums",
            Lower,
            ratio_same_linesums(a2, s2).unwrap_or(1.0),
            ratio(inter, s2),
            equal && s2 > 0,
        ),
        BoundEntry::new(
            "disjoint_size",
            Upper,
            disjoint_size_bound(a2) as f64,
            s2 as f64,
            equal && s2 > 0 && inter == 0,
        ),
        BoundEntry::new(
            "two_unique",
            Upper,
            bound_two_unique(alpha1),
            n2.symm_diff(&n3).len() as f64,
            true,
        ),
        BoundEntry::new(
            "general",
            Upper,
            bound_general(alpha1, a2, a3, s2, s3),
            symm as f64,
            true,
        ),
    ]);

    let staircases = StaircaseSummary {
        neighbour_f2: StaircaseStats::of(&n2, f2)?,
        neighbour_f3: StaircaseStats::of(&n3, f3)?,
        neighbour_pair: StaircaseStats::of(&n2, &n3)?,
    };

    Ok(BoundReport {
        alpha_f2: a2,
        alpha_f3: a3,
        alpha_unique_pair: alpha1,
        size_f2: s2,
        size_f3: s3,
        equal_line_sums: equal,
        actual_symm_diff: symm,
        actual_intersection: inter,
        neighbour_symm_diff_f2: nsd2,
        neighbour_symm_diff_f3: nsd3,
        neighbour_intersection_f2: ni2,
        neighbour_intersection_f3: ni3,
        bounds,
        staircases,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn baseline_examples() {
        let l = LineSums::new(vec![3, 0], vec![1, 1, 1]);
        assert_eq!(baseline_rowwise(&l, 3).unwrap(), 0);
        let l = LineSums::new(vec![1, 1], vec![1, 1]);
        assert_eq!(baseline_rowwise(&l, 2).unwrap(), 4);
        let l = LineSums::new(vec![2, 1, 1], vec![2, 2]);
        assert_eq!(baseline_rowwise(&l, 2).unwrap(), 4);
        assert_eq!(
            baseline_rowwise(&l, 1),
            Err(Error::RowExceedsWidth {
                row: 1,
                sum: 2,
                width: 1
            })
        );
    }

    #[test]
    fn unique_vs_any_values() {
        assert_eq!(bound_unique_vs_any(0, 17, false), 0.0);
        assert!(close(bound_unique_vs_any(1, 3, false), 4.0, 1e-12));
        assert!(close(bound_unique_vs_any(3, 45, false), 54.0, 1e-12));
        for n in 1..200 {
            assert!(bound_unique_vs_any(2, n, true) >= bound_unique_vs_any(2, n, false));
        }
    }

    #[test]
    fn equal_linesums_values() {
        assert_eq!(bound_equal_linesums(0, 9), 0.0);
        assert!(close(bound_equal_linesums(3, 45), 108.0, 1e-9));
        assert!(close(
            bound_equal_linesums(1, 2),
            2.0 * 17f64.sqrt() - 2.0,
            1e-12
        ));
        assert!(close(bound_equal_linesums(1, 2), 6.246, 1e-3));
    }

    #[test]
    fn ratio_values() {
        assert_eq!(ratio_vs_neighbour(0, 5).unwrap(), 1.0);
        assert!(close(ratio_vs_neighbour(1, 2).unwrap(), 0.0, 1e-12));
        assert!(close(ratio_vs_neighbour(3, 45).unwrap(), 0.3675, 1e-4));
        assert_eq!(ratio_same_linesums(0, 5).unwrap(), 1.0);
        assert!(close(ratio_same_linesums(1, 31).unwrap(), 0.4920, 1e-4));
        assert!(close(ratio_same_linesums(3, 45).unwrap(), -0.2649, 1e-4));
        assert!(ratio_same_linesums(1, 0).is_err());
    }

    #[test]
    fn disjoint_and_two_unique_values() {
        assert_eq!(disjoint_size_bound(0), 0);
        assert_eq!(disjoint_size_bound(1), 8);
        assert_eq!(disjoint_size_bound(3), 72);
        assert_eq!(bound_two_unique(0), 0.0);
        assert!(close(bound_two_unique(1), 2.0 * 3f64.sqrt() - 1.0, 1e-12));
        assert!(close(bound_two_unique(1), 2.464, 1e-3));
        assert!(close(bound_two_unique(7), 14.0 * 15f64.sqrt() - 7.0, 1e-12));
        assert!(close(bound_two_unique(7), 47.22, 1e-2));
    }

    #[test]
    fn general_values() {
        assert_eq!(bound_general(0, 0, 0, 10, 10), 0.0);
        let v = bound_general(1, 1, 1, 31, 30);
        assert!(close(
            v,
            249f64.sqrt() + 241f64.sqrt() + 2.0 * 3f64.sqrt() - 3.0,
            1e-12
        ));
        assert!(close(v, 31.77, 1e-2));
        assert!(close(bound_general(1, 1, 1, 2, 2), 8.71, 1e-2));
    }

    #[test]
    fn monotone_in_alpha_and_size() {
        for a in 0..12 {
            for n in 0..60 {
                assert!(bound_unique_vs_any(a + 1, n, false) >= bound_unique_vs_any(a, n, false));
                assert!(bound_unique_vs_any(a, n + 1, false) >= bound_unique_vs_any(a, n, false));
                assert!(bound_unique_vs_any(a, n + 1, true) >= bound_unique_vs_any(a, n, true));
                assert!(bound_equal_linesums(a + 1, n) >= bound_equal_linesums(a, n));
                assert!(bound_equal_linesums(a, n + 1) >= bound_equal_linesums(a, n));
                assert!(disjoint_size_bound(a + 1) >= disjoint_size_bound(a));
                for b in 0..4 {
                    let g = bound_general(b, a, 2, n, 7);
                    assert!(bound_general(b + 1, a, 2, n, 7) >= g);
                    assert!(bound_general(b, a + 1, 2, n, 7) >= g);
                    assert!(bound_general(b, a, 3, n, 7) >= g);
                    assert!(bound_general(b, a, 2, n + 1, 7) >= g);
                    assert!(bound_general(b, a, 2, n, 8) >= g);
                }
            }
            assert!(bound_two_unique(a + 1) >= bound_two_unique(a));
        }
        // The ratio bounds are lower bounds: more distance loosens them, a
        // larger set tightens them.
        for a in 0..12 {
            for n in 1..60 {
                assert!(ratio_vs_neighbour(a + 1, n).unwrap() <= ratio_vs_neighbour(a, n).unwrap());
                assert!(ratio_vs_neighbour(a, n + 1).unwrap() >= ratio_vs_neighbour(a, n).unwrap());
                assert!(
                    ratio_same_linesums(a + 1, n).unwrap() <= ratio_same_linesums(a, n).unwrap()
                );
            }
        }
    }

    #[test]
    fn analyze_identical_sets() {
        let f: GridSet = [(1, 1), (1, 2), (2, 1), (3, 3)].into_iter().collect();
        let r = analyze_pair(&f, &f).unwrap();
        assert_eq!(r.actual_symm_diff, 0);
        assert_eq!(r.actual_intersection, f.len());
        assert!(r.equal_line_sums);
        assert!(r.all_satisfied());
    }

    #[test]
    fn analyze_switching_pair() {
        let a: GridSet = [(1, 1), (2, 2)].into_iter().collect();
        let b: GridSet = [(1, 2), (2, 1)].into_iter().collect();
        let r = analyze_pair(&a, &b).unwrap();
        assert_eq!(r.alpha_f2, 1);
        assert_eq!(r.actual_symm_diff, 4);
        let eq = r.bound("equal_linesums").unwrap();
        assert!(eq.applicable && eq.satisfied);
        assert!(close(eq.value, 6.246, 1e-3));
        assert!(r.bound("disjoint_size").unwrap().applicable);
        assert!(r.all_satisfied());
        assert_eq!(r.staircases.neighbour_f2.count, 1);
    }

    #[test]
    fn analyze_empty_pair() {
        let e = GridSet::new();
        let r = analyze_pair(&e, &e).unwrap();
        assert_eq!(r.actual_symm_diff, 0);
        assert!(r.all_satisfied());
    }
}
