//! Permutations with no `abcd`, no `abj` for `j <= I1` and no `aj` for
//! `j <= I2`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::check_cell;
use crate::Result;

/// `cube[n][i1][i2]` for `0 <= i1, i2 <= n <= n_max`.
pub(crate) type Cube = Vec<Vec<Vec<BigInt>>>;

/// Builds the full grid in `O(n_max^3)` cell updates.
///
/// Both sums in the recurrence run over a contiguous slice of row `n - 1`:
/// one along `i2` at fixed `i1 - 1`, one along `i1` at fixed `i2`. Prefix
/// sums of the previous layer turn each into a single subtraction.
pub(crate) fn avoiders(n_max: usize) -> Cube {
    let mut cube: Cube = Vec::with_capacity(n_max + 1);
    cube.push(vec![vec![BigInt::from(1)]]);
    for n in 1..=n_max {
        let prev = &cube[n - 1];
        // along_i2[a][b] = sum_{t < b} prev[a][t]
        let along_i2: Vec<Vec<BigInt>> = prev
            .iter()
            .map(|row| {
                let mut acc = vec![BigInt::zero(); n + 1];
                for t in 0..n {
                    acc[t + 1] = &acc[t] + &row[t];
                }
                acc
            })
            .collect();
        // along_i1[a][b] = sum_{t >= a} prev[t][b]
        let mut along_i1 = vec![vec![BigInt::zero(); n]; n + 1];
        for a in (0..n).rev() {
            for b in 0..n {
                along_i1[a][b] = &along_i1[a + 1][b] + &prev[a][b];
            }
        }

        let mut layer = vec![vec![BigInt::zero(); n + 1]; n + 1];
        for i1 in 1..=n {
            for i2 in 1..=i1 {
                layer[i1][i2] = if i1 == n && i2 == n {
                    BigInt::from(1)
                } else {
                    &along_i2[i1 - 1][i1] - &along_i2[i1 - 1][i2]
                        + &along_i1[i1][i2]
                        + &prev[i1 - 1][i2 - 1]
                };
            }
        }
        for i1 in 1..=n {
            for i2 in i1 + 1..=n {
                layer[i1][i2] = layer[i2][i2].clone();
            }
        }
        for i1 in 1..=n {
            layer[i1][0] = layer[i1][1].clone();
        }
        for i2 in 0..=n {
            layer[0][i2] = layer[1][i2].clone();
        }
        cube.push(layer);
    }
    cube
}

/// Permutations of length `n` with no `abcd`, no `abj` for `j <= i1` and no
/// `aj` for `j <= i2`.
pub fn abcd_p(n: usize, i1: usize, i2: usize) -> Result<BigInt> {
    check_cell(n, &[i1, i2])?;
    Ok(avoiders(n)[n][i1][i2].clone())
}
