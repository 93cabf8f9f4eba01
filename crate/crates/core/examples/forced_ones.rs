//! Brute-force ground truth: realization counts, forced points and the
//! most distant pair of realizations.
//!
//! ```bash
//! cargo run --example forced_ones
//! ```

use tomodiff::format::render_grid;
use tomodiff::oracle::{enumerate_realizations, extremal_pair, forced_ones};
use tomodiff::{no_forced_ones_condition, Frame, LineSums};

fn main() -> tomodiff::Result<()> {
    for (rows, cols) in [(vec![2, 1, 1], vec![2, 2]), (vec![2, 2, 2], vec![2, 2, 2])] {
        let sums = LineSums::new(rows, cols);
        let frame = Frame::unit(sums.rows.len(), sums.cols.len());
        let all = enumerate_realizations(&sums, None)?;
        let forced = forced_ones(&sums, None)?;
        let flags = no_forced_ones_condition(&sums)?;
        let far = extremal_pair(&sums, None)?;
        println!("rows {:?} cols {:?}", sums.rows, sums.cols);
        let forced: Vec<String> = forced.iter().map(|p| p.to_string()).collect();
        println!(
            "  {} realizations, forced [{}]",
            all.len(),
            forced.join(", ")
        );
        println!(
            "  dominance: columns {} rows {}",
            flags.col_axis, flags.row_axis
        );
        println!(
            "  largest difference {} (disjoint pair: {})",
            far.max_symm_diff, far.disjoint_exists
        );
        print!("{}", render_grid(&far.first, &frame)?);
        println!("  vs");
        print!("{}", render_grid(&far.second, &frame)?);
        println!();
    }
    Ok(())
}
