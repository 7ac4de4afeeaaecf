//! Exact enumeration of permutations with a prescribed number of occurrences
//! of forbidden patterns.
//!
//! The crate is organised bottom-up:
//!
//! - [`arith`]: big integers, rationals, binomials and univariate polynomials.
//! - [`perm`]: permutations, pattern counting, weight profiles and the
//!   brute-force oracle that every fast evaluator is checked against.
//! - [`engines`]: memoized polynomial-time recurrences for each pattern family,
//!   assembled into [`engines::TableGrid`]s.
//! - [`closed_forms`]: binomial closed forms and conjectured formulas, with
//!   verifiers against the engines.
//! - [`guesser`]: fitting linear recurrences with polynomial coefficients to
//!   exact integer sequences.
//!
//! Brute-force sweeps run on rayon when the `parallel` feature is enabled
//! (the default); see [`exec`].

#![allow(clippy::needless_range_loop)]

pub mod arith;
pub mod closed_forms;
pub mod engines;
mod error;
pub mod exec;
pub mod guesser;
pub mod perm;

pub use error::{Error, Result};
