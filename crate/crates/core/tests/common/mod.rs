#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use tomodiff::{GridPoint, GridSet, LineSums};

/// Every `(rows, cols)` pair on an `m × n` window with equal totals.
/// Row entries range over `0..=n`, column entries over `0..=m`.
pub fn balanced_margins(m: usize, n: usize) -> Vec<LineSums> {
    let rows = vectors(m, n);
    let cols = vectors(n, m);
    let mut out = Vec::new();
    for r in &rows {
        let tr: usize = r.iter().sum();
        for c in &cols {
            if c.iter().sum::<usize>() == tr {
                out.push(LineSums::new(r.clone(), c.clone()));
            }
        }
    }
    out
}

fn vectors(len: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=max).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// Margins of every 0-1 matrix on an `m × n` window, found by listing all
/// `2^(mn)` matrices. Independent of any feasibility theory.
#[allow(clippy::needless_range_loop)]
pub fn realizable_margins(
    m: usize,
    n: usize,
) -> std::collections::BTreeMap<(Vec<usize>, Vec<usize>), usize> {
    let mut out = std::collections::BTreeMap::new();
    for bits in 0u64..(1u64 << (m * n)) {
        let mut rows = vec![0; m];
        let mut cols = vec![0; n];
        for i in 0..m {
            for j in 0..n {
                if bits >> (i * n + j) & 1 == 1 {
                    rows[i] += 1;
                    cols[j] += 1;
                }
            }
        }
        *out.entry((rows, cols)).or_insert(0) += 1;
    }
    out
}

pub fn random_set<R: Rng>(rng: &mut R, m: usize, n: usize) -> GridSet {
    let density: f64 = rng.gen_range(0.1..0.9);
    let mut s = GridSet::new();
    for i in 1..=m as i64 {
        for j in 1..=n as i64 {
            if rng.gen_bool(density) {
                s.insert(GridPoint::new(i, j));
            }
        }
    }
    s
}

/// Random non-increasing sequence of at most `len` parts, each `≤ max`.
pub fn random_partition<R: Rng>(rng: &mut R, len: usize, max: usize) -> Vec<usize> {
    let k = rng.gen_range(0..=len);
    let mut v: Vec<usize> = (0..k).map(|_| rng.gen_range(0..=max)).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// Random uniquely determined set inside an `m × n` window.
pub fn random_unique_set<R: Rng>(rng: &mut R, m: usize, n: usize) -> GridSet {
    let rows: Vec<usize> = (0..m).map(|_| rng.gen_range(0..=n)).collect();
    let mut order: Vec<usize> = (1..=n).collect();
    order.shuffle(rng);
    tomodiff::unique_set(&rows, &order).unwrap()
}
