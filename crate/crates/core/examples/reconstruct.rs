//! Check a pair of line sums and print the canonical realization.
//!
//! ```bash
//! cargo run --example reconstruct
//! ```

use tomodiff::format::render_grid;
use tomodiff::{is_consistent, is_unique, reconstruct, Frame, LineSums};

fn show(rows: &[usize], cols: &[usize]) -> tomodiff::Result<()> {
    let sums = LineSums::new(rows.to_vec(), cols.to_vec());
    println!("rows {rows:?}, cols {cols:?}");
    if !is_consistent(&sums) {
        println!("  infeasible\n");
        return Ok(());
    }
    println!("  uniquely determined: {}", is_unique(&sums)?);
    let set = reconstruct(&sums)?;
    for line in render_grid(&set, &Frame::unit(rows.len(), cols.len()))?.lines() {
        println!("  {line}");
    }
    println!();
    Ok(())
}

fn main() -> tomodiff::Result<()> {
    show(&[3, 2, 1], &[3, 2, 1])?;
    show(&[2, 2, 1], &[2, 2, 1])?;
    show(&[2, 2], &[3, 1])
}
