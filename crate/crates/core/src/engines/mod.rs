//! Memoized evaluators for the integer recurrences of each pattern family.
//!
//! Every recurrence refers only to `(n, I + 1)` and `(n - 1, ...)`, so each
//! family is built as a grid in increasing `n` and, within a row, decreasing
//! `I`. Single-value functions ([`abc_p`], [`abcd_p`], ...) build the grid up
//! to their `n` and read one cell; use [`build_table`] when many cells are
//! needed.

mod abc;
mod abcd;
mod cab;
mod grid;
mod multi;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

pub use abc::{abc_p, abc_p1, abc_p2};
pub use abcd::abcd_p;
pub use cab::{cab_p, cab_p1};
pub use grid::TableGrid;
pub use multi::abc_bac_p;

use crate::exec::Exec;
use crate::perm::Family;
use crate::{Error, Result};

/// Rows of a two-index grid: `rows[n][I]` for `0 <= I <= n`.
pub(crate) type Rows = Vec<Vec<BigInt>>;

pub(crate) fn check_cell(n: usize, index: &[usize]) -> Result<()> {
    match index.iter().find(|&&i| i > n) {
        Some(i) => Err(Error::Domain(format!("index {i} exceeds n = {n}"))),
        None => Ok(()),
    }
}

/// The grids [`build_table`] can produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GridFamily {
    /// `abc` avoiders, `P(n, I)`.
    Abc,
    /// Exactly one `abc`.
    AbcOne,
    /// Exactly two `abc`s.
    AbcTwo,
    /// `cab` avoiders.
    Cab,
    /// Exactly one `cab`.
    CabOne,
    /// `abcd` avoiders, all of `P(n, I1, I2)`.
    Abcd,
    /// `abcd` avoiders with `I2 = 1`: `P(n, I, 1)`.
    AbcdI1,
    /// `abcd` avoiders with `I1 = 1`: `P(n, 1, I)`.
    AbcdI2,
    /// Joint `abc` and `bac` avoiders.
    AbcBac,
}

impl GridFamily {
    pub const ALL: [GridFamily; 9] = [
        GridFamily::Abc,
        GridFamily::AbcOne,
        GridFamily::AbcTwo,
        GridFamily::Cab,
        GridFamily::CabOne,
        GridFamily::Abcd,
        GridFamily::AbcdI1,
        GridFamily::AbcdI2,
        GridFamily::AbcBac,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GridFamily::Abc => "abc",
            GridFamily::AbcOne => "abc-one",
            GridFamily::AbcTwo => "abc-two",
            GridFamily::Cab => "cab",
            GridFamily::CabOne => "cab-one",
            GridFamily::Abcd => "abcd",
            GridFamily::AbcdI1 => "abcd-I1",
            GridFamily::AbcdI2 => "abcd-I2",
            GridFamily::AbcBac => "abc+bac",
        }
    }

    /// Index dimensions besides `n`: 2 for the full `abcd` grid, 1 otherwise.
    pub fn index_arity(self) -> usize {
        if self == GridFamily::Abcd { 2 } else { 1 }
    }

    /// The recurrence a grid of this family is computed from.
    pub fn provenance(self) -> &'static str {
        match self {
            GridFamily::Abc | GridFamily::Cab => {
                "P(n,I) = P(n,I+1) + P(n-1,I-1); P(n,n) = 1; P(n,0) = P(n,1)"
            }
            GridFamily::AbcOne => {
                "P1(n,I) = P1(n,I+1) + P1(n-1,I-1) + P(n-I,2); P1(n,n-2) = n-2; 0 for I > n-2"
            }
            GridFamily::AbcTwo => {
                "P2(n,I) = P2(n-1,I-1) + P2(n,I+1) + P1(n-I,2) + P(n-I-1,2) + I*P(n-I,3) \
                 + [I>1]*P(n-I+1,3); P2(n,n-2) = n-3; 0 for I > n-2 or n <= 3"
            }
            GridFamily::CabOne => {
                "C1(n,I) = C1(n,I+1) + C1(n-1,I-1) + P(n-2,I); C1(n,n-2) = n-2; 0 for I > n-2"
            }
            GridFamily::Abcd | GridFamily::AbcdI1 | GridFamily::AbcdI2 => {
                "P(n,I1,I2) = sum_{i=I2+1..I1} P(n-1,I1-1,i-1) + sum_{i=I1+1..n} P(n-1,i-1,I2) \
                 + P(n-1,I1-1,I2-1); P(n,n,n) = 1; P(n,I1,I2) = P(n,I2,I2) for I1 < I2"
            }
            GridFamily::AbcBac => "P(n,1) = sum_{i=1..n} P(n-1,i-1); P(n,I) = 0 for I > 1",
        }
    }

    /// The brute-force query answering the same question as cell
    /// `(n, index)`: `(family, occurrence counts, thresholds)`.
    pub fn oracle_query(self, n: usize, index: &[usize]) -> (Family, Vec<u64>, Vec<usize>) {
        let one = 1.min(n);
        match self {
            GridFamily::Abc => (Family::Abc, vec![0], vec![index[0]]),
            GridFamily::AbcOne => (Family::Abc, vec![1], vec![index[0]]),
            GridFamily::AbcTwo => (Family::Abc, vec![2], vec![index[0]]),
            GridFamily::Cab => (Family::Cab, vec![0], vec![index[0]]),
            GridFamily::CabOne => (Family::Cab, vec![1], vec![index[0]]),
            GridFamily::Abcd => (Family::Abcd, vec![0], index.to_vec()),
            GridFamily::AbcdI1 => (Family::Abcd, vec![0], vec![index[0], one]),
            GridFamily::AbcdI2 => (Family::Abcd, vec![0], vec![one, index[0]]),
            GridFamily::AbcBac => (Family::AbcBac, vec![0, 0], vec![index[0]]),
        }
    }
}

impl fmt::Display for GridFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GridFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        GridFamily::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown table family {s:?}")))
    }
}

/// Every cell `0 <= I (, I2) <= n <= n_max` of `family`.
pub fn build_table(family: GridFamily, n_max: usize) -> TableGrid {
    grid::build(family, n_max)
}

/// Builds several independent grids, possibly in parallel; output order
/// follows `families`.
pub fn build_tables(families: &[GridFamily], n_max: usize, exec: Exec) -> Vec<TableGrid> {
    exec.map(families, |&f| build_table(f, n_max))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_names_round_trip() {
        for f in GridFamily::ALL {
            assert_eq!(f.name().parse::<GridFamily>().unwrap(), f);
        }
        assert!("abc-three".parse::<GridFamily>().is_err());
    }

    #[test]
    fn parallel_build_matches_sequential() {
        let seq = build_tables(&GridFamily::ALL, 12, Exec::Sequential);
        let par = build_tables(&GridFamily::ALL, 12, Exec::Parallel);
        assert_eq!(seq, par);
    }
}
