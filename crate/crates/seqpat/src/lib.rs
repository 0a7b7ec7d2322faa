//! Hamming distance of sequence patterns.
//!
//! A sequence of length `n` and level `l` is a list of `n` symbols drawn from
//! `1..=l`. Relabeling the symbols by a permutation (without moving them)
//! leaves the sequence's *pattern* intact, and a pattern is exactly such an
//! equivalence class: a rhyme scheme, in verse terms, or a set partition of
//! the positions into at most `l` blocks. This crate makes patterns concrete
//! and computes exact distances between them:
//!
//! - [`core`]: sequences, permutations, standard-order canonical forms,
//!   patterns, sequence sets and cross sections.
//! - [`enumeration`]: exact pattern counting by orbit counting, Stirling
//!   sums, and direct enumeration, plus Bell numbers.
//! - [`assignment`]: the confusion-matrix reduction and an exact
//!   maximum-trace solver (Kuhn-Munkres) for the two-pattern distance.
//! - [`metric`]: the Hamming distance of `k` sequences, its minimum over
//!   independent relabelings of each pattern, and witness construction.
//! - [`extremal`]: the closed-form maximal distance, constructions attaining
//!   it, links, and completeness checks.
//! - [`cli`]: the text input format and the `seqpat` command-line front end.
//!
//! The distance of a set of sequences is the number of positions where their
//! symbols are not all identical. The distance of a set of *patterns* is the
//! minimum of that count over all per-sequence relabelings; on pairs it is a
//! metric. Both computations here are exact: assignment for pairs, and a
//! maximum-weight-clique search over connected cross sections for any `k`.
//!
//! Runnable walkthroughs live in `examples/`; start with
//! `cargo run --example pair_distance`.

pub mod assignment;
pub mod cli;
pub mod core;
pub mod enumeration;
pub mod error;
pub mod extremal;
pub mod metric;

pub use crate::core::{CrossSection, Pattern, Permutation, Sequence, SequenceSet};
pub use crate::error::{Error, Result};
