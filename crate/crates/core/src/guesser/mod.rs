//! Fitting linear recurrences with polynomial coefficients to exact integer
//! sequences.
//!
//! For each order `r` and degree `d` (order-major, degree-minor) the unknown
//! coefficients of `p_0, ..., p_r` are solved for exactly on a fitting window,
//! and every candidate is then checked on held-out terms that took no part in
//! the fit. The first `(r, d)` cell with a surviving candidate wins.

mod linalg;
mod recurrence;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

pub use recurrence::{equivalent, PRecurrence};

use crate::arith::UniPoly;
use crate::exec::Exec;
use crate::{Error, Result};

pub const DEFAULT_HOLDOUT: usize = 4;

/// Search bounds for [`guess`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GuessConfig {
    pub max_order: usize,
    pub max_degree: usize,
    /// Trailing terms kept out of the fit and used only for validation.
    pub holdout: usize,
}

impl GuessConfig {
    pub fn new(max_order: usize, max_degree: usize) -> Self {
        GuessConfig { max_order, max_degree, holdout: DEFAULT_HOLDOUT }
    }

    pub fn with_holdout(self, holdout: usize) -> Self {
        GuessConfig { holdout, ..self }
    }

    /// Terms needed: enough fitting equations for the largest cell, plus
    /// the held-out terms.
    pub fn required_terms(&self) -> usize {
        (self.max_order + 1) * (self.max_degree + 1) + self.max_order + self.holdout
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GuessReport {
    pub input_len: usize,
    pub start_index: i64,
    pub max_order: usize,
    pub max_degree: usize,
    pub holdout: usize,
    /// `(order, degree)` cells solved, in search order.
    pub searched: Vec<(usize, usize)>,
    #[serde(serialize_with = "found_as_text")]
    pub found: Option<PRecurrence>,
    /// Held-out terms the recurrence reproduces (all of them when found).
    pub validated_terms: usize,
}

fn found_as_text<S: serde::Serializer>(found: &Option<PRecurrence>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match found {
        Some(r) => s.serialize_some(&r.to_string()),
        None => s.serialize_none(),
    }
}

/// Fits the smallest recurrence (by order, then degree) to `seq`, where
/// `seq[k]` is `a(start_index + k)`.
pub fn guess(seq: &[BigInt], start_index: i64, config: GuessConfig) -> Result<GuessReport> {
    guess_with(seq, start_index, config, Exec::Sequential)
}

/// [`guess`], solving the `(order, degree)` cells of each order in parallel
/// when `exec` allows. The order-major, degree-minor priority is applied
/// when the results are collected.
pub fn guess_with(seq: &[BigInt], start_index: i64, config: GuessConfig, exec: Exec) -> Result<GuessReport> {
    if config.max_order == 0 {
        return Err(Error::InvalidInput("max order must be at least 1".into()));
    }
    let required = config.required_terms();
    if seq.len() < required {
        return Err(Error::InsufficientTerms { required, got: seq.len() });
    }
    let mut report = GuessReport {
        input_len: seq.len(),
        start_index,
        max_order: config.max_order,
        max_degree: config.max_degree,
        holdout: config.holdout,
        searched: Vec::new(),
        found: None,
        validated_terms: 0,
    };
    for order in 1..=config.max_order {
        let degrees: Vec<usize> = (0..=config.max_degree).collect();
        let results = exec.map(&degrees, |&d| solve_cell(seq, start_index, order, d, config.holdout));
        for (d, found) in degrees.into_iter().zip(results) {
            report.searched.push((order, d));
            if let Some(rec) = found {
                report.validated_terms = config.holdout;
                report.found = Some(rec);
                return Ok(report);
            }
        }
    }
    Ok(report)
}

/// Row of the linear system for the window starting at `n`: the coefficient
/// of unknown `i * (d + 1) + k` is `n^k * a(n + i)`.
fn equation(seq: &[BigInt], start: i64, n: i64, order: usize, degree: usize) -> Vec<BigInt> {
    let base = (n - start) as usize;
    let n = BigInt::from(n);
    let mut row = Vec::with_capacity((order + 1) * (degree + 1));
    for i in 0..=order {
        let mut power = BigInt::from(1);
        for _ in 0..=degree {
            row.push(&power * &seq[base + i]);
            power *= &n;
        }
    }
    row
}

fn to_recurrence(v: &[BigInt], order: usize, degree: usize) -> Option<PRecurrence> {
    let polys: Vec<UniPoly> = v.chunks(degree + 1).map(UniPoly::from_bigints).collect();
    debug_assert_eq!(polys.len(), order + 1);
    PRecurrence::new(polys).ok()
}

fn solve_cell(seq: &[BigInt], start: i64, order: usize, degree: usize, holdout: usize) -> Option<PRecurrence> {
    let windows = seq.len() - order;
    let fit = windows - holdout;
    let unknowns = (order + 1) * (degree + 1);
    let rows = (0..fit).map(|k| equation(seq, start, start + k as i64, order, degree)).collect();
    let basis = linalg::kernel(rows, unknowns);
    let checks: Vec<Vec<BigInt>> =
        (fit..windows).map(|k| equation(seq, start, start + k as i64, order, degree)).collect();
    let mut candidates: Vec<(usize, Vec<Vec<BigInt>>, PRecurrence)> = basis
        .iter()
        .filter(|v| checks.iter().all(|row| row.iter().zip(v.iter()).map(|(a, b)| a * b).sum::<BigInt>().is_zero()))
        .filter_map(|v| {
            let rec = to_recurrence(v, order, degree)?;
            let nonzeros = v.iter().filter(|x| !x.is_zero()).count();
            Some((nonzeros, rec.integer_coeffs(), rec))
        })
        .collect();
    candidates.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| lex(&a.1, &b.1)));
    candidates.into_iter().next().map(|(_, _, rec)| rec)
}

fn lex(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> std::cmp::Ordering {
    a.iter().flatten().cmp(b.iter().flatten())
}

/// Extends `initial` = `a(0), ..., a(r-1)` by `count` terms.
pub fn apply(rec: &PRecurrence, initial: &[BigInt], count: usize) -> Result<Vec<BigInt>> {
    rec.apply(0, initial, count)
}

/// Reads a sequence of decimal integers separated by whitespace or commas.
/// Lines starting with `#` are skipped.
pub fn parse_sequence(text: &str) -> Result<Vec<BigInt>> {
    text.lines()
        .filter(|line| !line.trim_start().starts_with('#'))
        .flat_map(|line| line.split(|c: char| c.is_whitespace() || c == ','))
        .filter(|tok| !tok.is_empty())
        .map(|tok| tok.parse::<BigInt>().map_err(|_| Error::Parse(format!("{tok:?} is not an integer"))))
        .collect()
}
