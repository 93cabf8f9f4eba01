//! Discrete tomography with two projections: how much can two binary images
//! with equal, or nearly equal, row and column sums differ?
//!
//! The central quantity is the line-sum distance [`alpha`] between an image
//! and its closest uniquely determined image (its [neighbour](neighbour)).
//! From it, closed-form [bounds] limit the symmetric difference of any two
//! reconstructions. The [`oracle`] module enumerates realizations by brute
//! force so every bound can be checked on small instances.
//!
//! ```
//! use tomodiff::{neighbour, LineSums};
//!
//! // The 2x2 switching component: two disjoint realizations.
//! let sums = LineSums::new(vec![1, 1], vec![1, 1]);
//! let nb = neighbour(&sums).unwrap();
//! assert_eq!(nb.alpha0, 1);
//! assert_eq!(nb.neighbour_sums.cols, vec![2, 0]);
//! ```

pub mod bounds;
pub mod cli;
pub mod error;
pub mod families;
pub mod format;
pub mod grid;
pub mod neighbour;
pub mod oracle;
pub mod ryser;
pub mod staircase;

pub use bounds::{analyze_pair, BoundEntry, BoundKind, BoundReport};
pub use error::{Error, Result};
pub use grid::{
    alpha, conjugate, intersect, line_sums, symm_diff, Frame, GridPoint, GridSet, LineSums,
};
pub use neighbour::{neighbour, no_forced_ones_condition, ForcedOnesCondition, NeighbourSummary};
pub use ryser::{is_consistent, is_unique, reconstruct, unique_set};
pub use staircase::{decompose, Side, Staircase};
