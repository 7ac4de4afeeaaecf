//! Joint avoidance of `abc` and `bac`, with no `aj` and no `ja` for `j <= I`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::Rows;
use crate::{Error, Result};

/// `P(n, I)` for the pair. Letters 1 and 2 always form an `a2` or a `2a`, so
/// every `I > 1` column is zero; `(0, 0)` holds the empty permutation.
pub(crate) fn avoiders(n_max: usize) -> Rows {
    let mut p: Rows = Vec::with_capacity(n_max + 1);
    p.push(vec![BigInt::from(1)]);
    for n in 1..=n_max {
        let mut row = vec![BigInt::zero(); n + 1];
        row[1] = if n == 1 {
            BigInt::from(1)
        } else {
            (1..=n).filter_map(|i| p[n - 1].get(i - 1)).sum()
        };
        row[0] = row[1].clone();
        p.push(row);
    }
    p
}

/// Permutations of length `n >= 1` avoiding both `abc` and `bac`.
pub fn abc_bac_p(n: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::Domain("abc+bac count is defined for n >= 1".into()));
    }
    Ok(avoiders(n)[n][1].clone())
}
