//! Permutations with zero or one `cab` occurrence and no `aj` pattern for
//! `j <= I`.
//!
//! Avoiders obey the same recurrence and boundaries as the `abc` avoiders, so
//! their grid is shared with [`super::abc`].

use num_bigint::BigInt;
use num_traits::Zero;

use super::abc::avoiders;
use super::{check_cell, Rows};
use crate::Result;

/// `C1(n, I)`: exactly one `cab`. Needs the avoider grid up to `n_max`.
pub(crate) fn one_occurrence(n_max: usize, p: &Rows) -> Rows {
    let mut c1: Rows = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut row = vec![BigInt::zero(); n + 1];
        if n >= 3 {
            row[n - 2] = BigInt::from(n - 2);
            for i in (1..n - 2).rev() {
                row[i] = &row[i + 1] + &c1[n - 1][i - 1] + &p[n - 2][i];
            }
            row[0] = row[1].clone();
        }
        c1.push(row);
    }
    c1
}

/// Permutations of length `n` with no `cab` and no `aj` for `j <= i`.
pub fn cab_p(n: usize, i: usize) -> Result<BigInt> {
    check_cell(n, &[i])?;
    Ok(avoiders(n)[n][i].clone())
}

/// As [`cab_p`] but with exactly one `cab`.
pub fn cab_p1(n: usize, i: usize) -> Result<BigInt> {
    check_cell(n, &[i])?;
    let p = avoiders(n);
    Ok(one_occurrence(n, &p)[n][i].clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(cab_p(5, 1).unwrap(), 42.into());
        assert_eq!(cab_p(6, 6).unwrap(), 1.into());
        assert_eq!(cab_p(8, 0).unwrap(), 1430.into());
        assert_eq!(cab_p1(8, 3).unwrap(), 405.into());
        assert_eq!(cab_p1(10, 1).unwrap(), 19448.into());
        assert_eq!(cab_p1(4, 2).unwrap(), 2.into());
    }

    #[test]
    fn zero_above_diagonal() {
        for n in 0..=12usize {
            for i in n.saturating_sub(1)..=n {
                assert!(cab_p1(n, i).unwrap().is_zero());
            }
        }
        assert!(cab_p1(3, 4).is_err());
    }
}
