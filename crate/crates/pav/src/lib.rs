//! Permutation patterns: avoidance classes, longest pattern-avoiding
//! subsequences, and seeded Monte Carlo growth experiments.
//!
//! The crate has four layers:
//!
//! - [`perm`]: permutations in one-line notation, the pattern map, the
//!   involvement order, and the construction operators (sums, rotations,
//!   symmetries).
//! - [`class`]: pattern avoidance classes given by a finite basis or built
//!   with union / direct sum / juxtaposition / merge / rotation, with exact
//!   enumeration and growth-rate estimates.
//! - [`solve`]: exact longest-subsequence solvers for a menu of classes,
//!   cross-validated against a brute-force oracle.
//! - [`mc`]: reproducible Monte Carlo experiments over uniform random
//!   permutations, estimating the constant relating the expected longest
//!   length to `2 sqrt(c n)`.
//!
//! The `pav` binary in this workspace exposes all of it on the command line.

pub mod class;
mod error;
pub mod perm;

pub use class::{count_avoiders, sw_estimate, CountSequence, Limits, PatternClass, SwEstimate};
pub use error::{Error, Result};
pub use perm::{DistinctSequence, Permutation, Symmetries};
