//! Full bound report for two images whose line sums differ slightly.
//!
//! ```bash
//! cargo run --example different_sums -- 5
//! ```

use tomodiff::families::example_three;
use tomodiff::format::{origin_frame, render_grid};
use tomodiff::{analyze_pair, BoundKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args().nth(1).map_or(Ok(5), |s| s.parse())?;
    let (f2, f3) = example_three(n)?;
    let frame = origin_frame([&f2, &f3]);
    print!(
        "{}\n{}\n",
        render_grid(&f2, &frame)?,
        render_grid(&f3, &frame)?
    );

    let report = analyze_pair(&f2, &f3)?;
    println!(
        "alpha(F2, N2) = {}, alpha(F3, N3) = {}, alpha(N2, N3) = {}",
        report.alpha_f2, report.alpha_f3, report.alpha_unique_pair
    );
    for b in report.bounds.iter().filter(|b| b.applicable) {
        let op = match b.kind {
            BoundKind::Upper => "≤",
            BoundKind::Lower => "≥",
        };
        let mark = if b.satisfied { "ok" } else { "VIOLATED" };
        println!(
            "{:<24} {:>10.3} {op} {:>10.3}  {mark}",
            b.name, b.actual, b.value
        );
    }
    Ok(())
}
