//! Exact null spaces of integer matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x))
}

/// Divides `v` by the gcd of its entries (no-op on the zero vector).
pub(crate) fn make_primitive(v: &mut [BigInt]) {
    let g = content(v);
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
}

/// Reduced row echelon form, computed fraction-free: each elimination step
/// cross-multiplies two rows and then divides the result by its content, so
/// entries stay integral and small. Returns the nonzero rows and their pivot
/// columns; every pivot column is zero outside its own row.
pub(crate) fn row_reduce(mut rows: Vec<Vec<BigInt>>, ncols: usize) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(found) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, found);
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x = &*x * &pivot_row[col] - &factor * p;
            }
            make_primitive(row);
        }
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    (rows, pivots)
}

/// A basis of `{x : A x = 0}`, one primitive integer vector per free column,
/// in increasing order of that column. Each basis vector is positive at its
/// free column and zero at every other free column.
pub(crate) fn kernel(rows: Vec<Vec<BigInt>>, ncols: usize) -> Vec<Vec<BigInt>> {
    let (reduced, pivots) = row_reduce(rows, ncols);
    let free = (0..ncols).filter(|c| !pivots.contains(c));
    free.map(|f| {
        let mut v = vec![BigRational::zero(); ncols];
        v[f] = BigRational::one();
        for (row, &p) in reduced.iter().zip(&pivots) {
            v[p] = -BigRational::new(row[f].clone(), row[p].clone());
        }
        let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let mut ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
        make_primitive(&mut ints);
        if ints[f].is_negative() {
            ints.iter_mut().for_each(|x| *x = -&*x);
        }
        ints
    })
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    fn apply(a: &[Vec<BigInt>], x: &[BigInt]) -> Vec<BigInt> {
        a.iter().map(|r| r.iter().zip(x).map(|(p, q)| p * q).sum()).collect()
    }

    #[test]
    fn kernel_of_rank_one() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = kernel(a.clone(), 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(apply(&a, v).iter().all(Zero::is_zero));
        }
        assert_eq!(k[0], m(&[&[-2, 1, 0]])[0]);
    }

    #[test]
    fn full_rank_has_trivial_kernel() {
        assert!(kernel(m(&[&[1, 0], &[0, 1], &[1, 1]]), 2).is_empty());
    }

    #[test]
    fn fractional_pivots() {
        // 2x + 3y = 0  ->  (-3, 2)
        assert_eq!(kernel(m(&[&[2, 3]]), 2), m(&[&[-3, 2]]));
    }

    #[test]
    fn empty_matrix() {
        assert_eq!(kernel(Vec::new(), 2).len(), 2);
    }
}
