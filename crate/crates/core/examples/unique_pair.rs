//! Two uniquely determined images at distance `n` that differ in `3n − 2`
//! points.
//!
//! ```bash
//! cargo run --example unique_pair -- 7
//! ```

use tomodiff::bounds::bound_two_unique;
use tomodiff::families::example_two;
use tomodiff::format::{origin_frame, render_grid};
use tomodiff::{alpha, is_unique, line_sums};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args().nth(1).map_or(Ok(7), |s| s.parse())?;
    let (f1, f1p) = example_two(n)?;
    let frame = origin_frame([&f1, &f1p]);
    for (name, set) in [("F1", &f1), ("F1'", &f1p)] {
        println!("{name}: unique = {}", is_unique(&line_sums(set).0)?);
        print!("{}", render_grid(set, &frame)?);
        println!();
    }
    let a1 = alpha(&frame.line_sums(&f1)?, &frame.line_sums(&f1p)?)?;
    println!("alpha1 = {a1}");
    println!(
        "|F1 △ F1'| = {} ≤ {:.3}",
        f1.symm_diff(&f1p).len(),
        bound_two_unique(a1)
    );
    Ok(())
}
