use std::collections::BTreeSet;

use proptest::prelude::*;
use tomodiff::bounds::{
    analyze_pair, bound_equal_linesums, bound_general, bound_two_unique, bound_unique_vs_any,
    disjoint_size_bound, ratio_same_linesums, ratio_vs_neighbour,
};
use tomodiff::grid::{conjugate, sorted_desc};
use tomodiff::ryser::unique_col_sums;
use tomodiff::staircase::{gap_over, row_gap_floor, sums_by_index, validate};
use tomodiff::{
    alpha, decompose, is_unique, line_sums, neighbour, reconstruct, unique_set, Frame, GridPoint,
    GridSet, LineSums, Side,
};

fn partition() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0usize..20, 0..12).prop_map(|v| sorted_desc(&v))
}

fn grid_set(m: i64, n: i64) -> impl Strategy<Value = GridSet> {
    prop::collection::vec((1..=m, 1..=n), 0..(m * n) as usize)
        .prop_map(|pts| pts.into_iter().collect())
}

fn unique_grid_set(m: usize, n: usize) -> impl Strategy<Value = GridSet> {
    (
        prop::collection::vec(0..=n, m),
        Just((1..=n).collect::<Vec<_>>()).prop_shuffle(),
    )
        .prop_map(|(rows, order)| unique_set(&rows, &order).unwrap())
}

fn sums8(f: &GridSet) -> LineSums {
    Frame::unit(8, 8).line_sums(f).unwrap()
}

fn trimmed(v: &[usize]) -> Vec<usize> {
    let end = v.iter().rposition(|&x| x != 0).map_or(0, |k| k + 1);
    v[..end].to_vec()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn conjugate_is_an_involution(a in partition()) {
        let b = conjugate(&a).unwrap();
        prop_assert_eq!(conjugate(&b).unwrap(), trimmed(&a));
        prop_assert_eq!(b.iter().sum::<usize>(), a.iter().sum::<usize>());
    }

    #[test]
    fn projections_account_for_every_point(f in grid_set(8, 8)) {
        let (l, frame) = line_sums(&f);
        prop_assert_eq!(l.row_total(), f.len());
        prop_assert_eq!(l.col_total(), f.len());
        prop_assert_eq!(frame.to_absolute(&frame.to_local(&f)), f);
    }

    #[test]
    fn alpha_is_a_pseudometric(a in grid_set(8, 8), b in grid_set(8, 8), c in grid_set(8, 8)) {
        let (la, lb, lc) = (sums8(&a), sums8(&b), sums8(&c));
        prop_assert_eq!(alpha(&la, &la).unwrap(), 0);
        let ab = alpha(&la, &lb).unwrap();
        prop_assert_eq!(ab, alpha(&lb, &la).unwrap());
        prop_assert!(alpha(&la, &lc).unwrap() <= ab + alpha(&lb, &lc).unwrap());
        prop_assert!(ab <= a.symm_diff(&b).len());
    }

    #[test]
    fn reconstruction_reproduces_line_sums(f in grid_set(8, 8)) {
        let l = sums8(&f);
        let r = reconstruct(&l).unwrap();
        prop_assert_eq!(sums8(&r), l);
    }

    #[test]
    fn unique_sets_satisfy_the_membership_rule(f in unique_grid_set(8, 8)) {
        let l = sums8(&f);
        prop_assert!(is_unique(&l).unwrap());
        let conj = conjugate(&sorted_desc(&l.rows)).unwrap();
        prop_assert_eq!(trimmed(&sorted_desc(&l.cols)), conj);
        for p in &f {
            for i2 in 1..=8 {
                if !f.contains(&GridPoint::new(i2, p.col)) {
                    prop_assert!(l.row(p.row as usize) > l.row(i2 as usize));
                }
            }
        }
    }

    #[test]
    fn neighbour_is_unique_and_tie_order_is_irrelevant(
        f in grid_set(6, 6),
        seed in any::<u64>(),
    ) {
        let l = Frame::unit(6, 6).line_sums(&f).unwrap();
        let nb = neighbour(&l).unwrap();
        prop_assert!(is_unique(&nb.neighbour_sums).unwrap());
        prop_assert_eq!(&nb.neighbour_sums.rows, &l.rows);
        if nb.alpha0 == 0 {
            prop_assert!(is_unique(&l).unwrap());
        }
        // Any other descending column order gives the same distance.
        let mut keyed: Vec<(usize, u64, usize)> = (1..=6)
            .map(|j| (l.col(j), seed.rotate_left(j as u32 * 7) ^ j as u64, j))
            .collect();
        keyed.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let order: Vec<usize> = keyed.iter().map(|k| k.2).collect();
        let cols = unique_col_sums(&l.rows, &order).unwrap();
        let other = LineSums::new(l.rows.clone(), cols);
        prop_assert_eq!(alpha(&l, &other).unwrap(), nb.alpha0);
    }

    #[test]
    fn bounds_are_monotone(a in 0usize..40, n in 1usize..2000, da in 0usize..5, dn in 0usize..50) {
        let (a2, n2) = (a + da, n + dn);
        prop_assert!(bound_unique_vs_any(a2, n2, false) >= bound_unique_vs_any(a, n, false));
        prop_assert!(bound_unique_vs_any(a2, n2, true) >= bound_unique_vs_any(a, n, true));
        prop_assert!(bound_equal_linesums(a2, n2) >= bound_equal_linesums(a, n));
        prop_assert!(bound_two_unique(a2) >= bound_two_unique(a));
        prop_assert!(disjoint_size_bound(a2) >= disjoint_size_bound(a));
        prop_assert!(bound_general(a2, a2, a2, n2, n2) >= bound_general(a, a, a, n, n));
        prop_assert!(bound_unique_vs_any(a, n, true) >= bound_unique_vs_any(a, n, false));
        // Ratio bounds loosen with α and tighten with size.
        prop_assert!(ratio_vs_neighbour(a2, n).unwrap() <= ratio_vs_neighbour(a, n).unwrap() + 1e-12);
        prop_assert!(ratio_same_linesums(a, n2).unwrap() + 1e-12 >= ratio_same_linesums(a, n).unwrap());
    }

    #[test]
    fn two_unique_bound_on_five_by_five(f in unique_grid_set(5, 5), g in unique_grid_set(5, 5)) {
        let frame = Frame::unit(5, 5);
        let a1 = alpha(&frame.line_sums(&f).unwrap(), &frame.line_sums(&g).unwrap()).unwrap();
        prop_assert!(f.symm_diff(&g).len() as f64 <= bound_two_unique(a1) + 1e-9);
    }

    #[test]
    fn every_bound_holds_on_random_pairs(a in grid_set(6, 6), b in grid_set(6, 6)) {
        let r = analyze_pair(&a, &b).unwrap();
        for entry in &r.bounds {
            prop_assert!(entry.satisfied, "{} failed: {:?}", entry.name, entry);
        }
    }
}

fn check_decomposition(f1: &GridSet, f2: &GridSet) -> Result<(), TestCaseError> {
    let (l1, frame) = line_sums(f1);
    let stairs = decompose(f1, f2).unwrap();
    let joint = Frame::bounding([f1, f2]);
    let a = alpha(&joint.line_sums(f1).unwrap(), &joint.line_sums(f2).unwrap()).unwrap();
    prop_assert_eq!(stairs.len(), a);

    let mut union = BTreeSet::new();
    for s in &stairs {
        prop_assert!(validate(s, f1, f2));
        for p in s.points() {
            prop_assert!(union.insert(*p), "staircases overlap at {}", p);
        }
        let row_sum = |r: i64| l1.row((r - frame.row_offset) as usize);
        let sums: Vec<usize> = s.first_only_rows().into_iter().map(row_sum).collect();
        prop_assert!(sums.windows(2).all(|w| w[0] > w[1]), "row sums {:?}", sums);
    }
    let diff: BTreeSet<GridPoint> = f1.symm_diff(f2).iter().copied().collect();
    prop_assert_eq!(union, diff);

    let distinct_positive: BTreeSet<usize> = l1.rows.iter().copied().filter(|&r| r > 0).collect();
    for s in &stairs {
        let rows: BTreeSet<i64> = s
            .iter()
            .filter(|(_, t)| *t == Side::FirstOnly)
            .map(|(p, _)| p.row)
            .collect();
        prop_assert!(rows.len() <= distinct_positive.len());
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn decomposition_against_neighbour(f2 in grid_set(8, 8)) {
        let l2 = sums8(&f2);
        let f1 = neighbour(&l2).unwrap().unique_set();
        check_decomposition(&f1, &f2)?;
    }

    #[test]
    fn decomposition_between_unique_sets(f1 in unique_grid_set(8, 8), g in unique_grid_set(8, 8)) {
        check_decomposition(&f1, &g)?;
        let stairs = decompose(&f1, &g).unwrap();
        let (r1, c1) = sums_by_index(&f1);
        let (r2, c2) = sums_by_index(&g);
        for s in &stairs {
            let rows = s.rows();
            let cols = s.cols();
            prop_assert!(gap_over(&rows, &r1, &r2) >= row_gap_floor(rows.len()));
            prop_assert!(gap_over(&cols, &c1, &c2) >= row_gap_floor(cols.len()));
        }
        let a1 = alpha(&sums8(&f1), &sums8(&g)).unwrap();
        prop_assert!(f1.symm_diff(&g).len() as f64 <= bound_two_unique(a1) + 1e-9);
    }
}
