//! Permutations with zero, one or two `abc` occurrences and no `aj` pattern
//! for `j <= I`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{check_cell, Rows};
use crate::Result;

/// `P(n, I)` for `0 <= I <= n <= n_max`: `abc` avoiders.
pub(crate) fn avoiders(n_max: usize) -> Rows {
    let mut p: Rows = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut row = vec![BigInt::zero(); n + 1];
        row[n] = BigInt::from(1);
        for i in (1..n).rev() {
            row[i] = &row[i + 1] + &p[n - 1][i - 1];
        }
        if n > 0 {
            row[0] = row[1].clone();
        }
        p.push(row);
    }
    p
}

/// `P1(n, I)`: exactly one `abc`. Needs the avoider grid up to `n_max`.
pub(crate) fn one_occurrence(n_max: usize, p: &Rows) -> Rows {
    let mut p1: Rows = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut row = vec![BigInt::zero(); n + 1];
        if n >= 3 {
            row[n - 2] = BigInt::from(n - 2);
            for i in (1..n - 2).rev() {
                row[i] = &row[i + 1] + &p1[n - 1][i - 1] + &p[n - i][2];
            }
            row[0] = row[1].clone();
        }
        p1.push(row);
    }
    p1
}

/// `P2(n, I)`: exactly two `abc`s.
///
/// The recurrence carries a `P(n-I-1, 2)` term; for `n <= 3` every value is 0.
pub(crate) fn two_occurrences(n_max: usize, p: &Rows, p1: &Rows) -> Rows {
    let mut p2: Rows = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut row = vec![BigInt::zero(); n + 1];
        if n >= 4 {
            row[n - 2] = BigInt::from(n - 3);
            for i in (1..n - 2).rev() {
                let mut v = &p2[n - 1][i - 1] + &row[i + 1];
                v += &p1[n - i][2];
                v += &p[n - i - 1][2];
                v += &p[n - i][3] * BigInt::from(i);
                if i > 1 {
                    v += &p[n - i + 1][3];
                }
                row[i] = v;
            }
            row[0] = row[1].clone();
        }
        p2.push(row);
    }
    p2
}

/// Permutations of length `n` with no `abc` and no `aj` for `j <= i`.
pub fn abc_p(n: usize, i: usize) -> Result<BigInt> {
    check_cell(n, &[i])?;
    Ok(avoiders(n)[n][i].clone())
}

/// As [`abc_p`] but with exactly one `abc`.
pub fn abc_p1(n: usize, i: usize) -> Result<BigInt> {
    check_cell(n, &[i])?;
    let p = avoiders(n);
    Ok(one_occurrence(n, &p)[n][i].clone())
}

/// As [`abc_p`] but with exactly two `abc`s.
pub fn abc_p2(n: usize, i: usize) -> Result<BigInt> {
    check_cell(n, &[i])?;
    let p = avoiders(n);
    let p1 = one_occurrence(n, &p);
    Ok(two_occurrences(n, &p, &p1)[n][i].clone())
}
