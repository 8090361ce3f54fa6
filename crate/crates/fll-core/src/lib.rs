//! Combinatorics of the fixed-length Levenshtein (FLL) metric over `Z_m^n`.
//!
//! Two words of the same length `n` are at FLL distance `t` when `t` is the
//! smallest number of deletions that must be applied to *each* of them so that
//! the resulting deletion spheres intersect.  Equivalently,
//! `d(x, y) = n - llcs(x, y)` where `llcs` is the length of a longest common
//! subsequence.  This crate implements that metric together with the
//! surrounding combinatorial toolkit:
//!
//! - [`words`]: words, alphabets, run counts and maximal alternating segments;
//! - [`lcs`]: longest-common-subsequence lengths and the distance itself;
//! - [`spheres`]: deletion / insertion / deletion-then-insertion spheres;
//! - [`balls`]: Hamming and FLL balls, plus a closed form for the size of a
//!   radius-one FLL ball in terms of the center's segment structure;
//! - [`extremal`]: minimal and maximal radius-one ball sizes and the centers
//!   that attain them;
//! - [`average`]: exact rational expectations of ball sizes and segment
//!   statistics over a uniformly random center;
//! - [`anticodes`]: maximal diameter-`t` anticodes via maximal-clique
//!   enumeration;
//! - [`codes`]: deletion/insertion-correcting-code predicates for explicit
//!   codebooks;
//! - [`verify`]: self-checking suites that compare every closed form in the
//!   crate against brute-force enumeration and emit machine-readable reports.
//!
//! Everything that enumerates a word space is bounded by an explicit capacity
//! so that a typo in `n` or `m` fails fast instead of allocating the universe.
//! Enumeration sweeps run through [`space::fold_space`], which parallelizes
//! with rayon when the `parallel` feature (on by default) is enabled and runs
//! sequentially otherwise; both paths produce identical results.

pub mod anticodes;
pub mod average;
pub mod balls;
pub mod codes;
pub mod error;
pub mod extremal;
pub mod lcs;
pub mod report;
pub mod space;
pub mod spheres;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
pub use words::{Alphabet, SegmentProfile, Word};

/// Default cap on the number of words any single enumeration may visit.
pub const DEFAULT_MAX_SPACE: u64 = 1 << 24;
