//! Two images with identical line sums that still differ in `2mn` points,
//! against the bound for equal line sums.
//!
//! ```bash
//! cargo run --example equal_sums -- 3 5
//! ```

use tomodiff::bounds::{bound_equal_linesums, ratio_vs_neighbour};
use tomodiff::families::example_one;
use tomodiff::format::{origin_frame, render_grid};
use tomodiff::{line_sums, neighbour};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let m: usize = args.next().map_or(Ok(3), |s| s.parse())?;
    let n: usize = args.next().map_or(Ok(5), |s| s.parse())?;

    let (f1, f2, f3) = example_one(m, n)?;
    let frame = origin_frame([&f1, &f2, &f3]);
    for (name, set) in [("F1", &f1), ("F2", &f2), ("F3", &f3)] {
        println!("{name} ({} points)", set.len());
        print!("{}", render_grid(set, &frame)?);
        println!();
    }

    let a0 = neighbour(&line_sums(&f2).0)?.alpha0;
    let size = f2.len();
    println!("alpha0 = {a0}, |F2| = {size}");
    println!(
        "|F2 △ F3| = {} ≤ {:.3}",
        f2.symm_diff(&f3).len(),
        bound_equal_linesums(a0, size)
    );
    println!(
        "|F1 ∩ F2| / |F2| = {:.4} ≥ {:.4}",
        f1.intersect(&f2).len() as f64 / size as f64,
        ratio_vs_neighbour(a0, size)?
    );
    Ok(())
}
