//! Split the difference between an image and its neighbour into staircases.
//!
//! ```bash
//! cargo run --example staircases
//! ```

use tomodiff::{alpha, decompose, line_sums, neighbour, Frame, GridSet, Side};

fn main() -> tomodiff::Result<()> {
    let f2: GridSet = [(1, 1), (1, 3), (2, 2), (2, 4), (3, 1), (3, 2), (4, 4)]
        .into_iter()
        .collect();
    let (sums, frame) = line_sums(&f2);
    let f1 = frame.to_absolute(&neighbour(&sums)?.unique_set());

    let joint = Frame::bounding([&f1, &f2]);
    let a = alpha(&joint.line_sums(&f1)?, &joint.line_sums(&f2)?)?;
    let stairs = decompose(&f1, &f2)?;
    println!(
        "alpha = {a}, {} staircases, {} points differ",
        stairs.len(),
        f1.symm_diff(&f2).len()
    );
    for (k, s) in stairs.iter().enumerate() {
        let chain: Vec<String> = s
            .iter()
            .map(|(p, side)| match side {
                Side::FirstOnly => format!("+{p}"),
                Side::SecondOnly => format!("-{p}"),
            })
            .collect();
        println!("  {}: {}", k + 1, chain.join(" "));
    }
    Ok(())
}
