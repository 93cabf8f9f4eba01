//! The closest uniquely determined set to a given pair of line sums.
//!
//! ```bash
//! cargo run --example neighbour
//! ```

use tomodiff::format::render_grid;
use tomodiff::{neighbour, no_forced_ones_condition, Frame, LineSums};

fn main() -> tomodiff::Result<()> {
    let sums = LineSums::new(vec![3, 2, 2, 1], vec![1, 3, 2, 2]);
    let nb = neighbour(&sums)?;
    println!("input        rows {:?} cols {:?}", sums.rows, sums.cols);
    println!("column order {:?}", nb.sigma);
    println!(
        "neighbour    rows {:?} cols {:?}",
        nb.neighbour_sums.rows, nb.neighbour_sums.cols
    );
    println!("alpha0       {}", nb.alpha0);
    print!("{}", render_grid(&nb.unique_set(), &Frame::unit(4, 4))?);

    // Strict dominance on both axes rules out forced points.
    let flags = no_forced_ones_condition(&sums)?;
    println!(
        "no forced ones: columns {} rows {}",
        flags.col_axis, flags.row_axis
    );
    Ok(())
}
