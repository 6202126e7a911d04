//! Solvers for gapless minimum error correction (MEC).
//!
//! An instance is an `n × m` matrix over `{0, 1, -}` where each row's binary
//! entries are consecutive. A solution is a pair of binary strings plus an
//! assignment of every row to one of them; its cost is the number of matrix
//! entries that disagree with the assigned string. This crate provides
//!
//! * the instance/solution data model and per-column majority completion
//!   ([`matrix`]),
//! * exact brute-force solvers used as ground truth ([`oracle`]),
//! * the sampling-based voting core: trisections, subdivisions, weighted and
//!   generalized majority votes ([`swc`]),
//! * layered dynamic programs over blocks, chunks and selections ([`dp`]),
//! * a solver for subinterval-free instances built from rooted sub-solves,
//!   q-sequences and dominance regions ([`subinterval`]),
//! * the length-class decomposition and a general-instance solver
//!   ([`length_class`]),
//! * a seeded instance generator with planted ground truth ([`gen`]).
//!
//! The crate is `no_std` compatible (requires `alloc`); file formats, CLI and
//! benchmarking live in the companion `mec-cli` crate.

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod dp;
pub mod error;
pub mod gen;
pub mod length_class;
pub mod matrix;
pub mod oracle;
pub mod params;
pub mod solver;
pub mod subinterval;
pub mod swc;

pub use error::Error;
pub use matrix::{Assignment, FragmentMatrix, Label, Row, SolutionPair, Symbol};
pub use params::Precision;
