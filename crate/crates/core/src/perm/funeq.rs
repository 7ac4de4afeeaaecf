//! Brute-force checks of the functional equations satisfied by the
//! multivariate weight enumerators `P_n`.
//!
//! `P_n` is the sum of weight monomials over `S_n`. Deleting one entry of a
//! permutation expresses `P_n` as a sum over the deleted value `i` of a
//! monomial multiplier times `P_{n-1}` with its variables substituted by
//! monomials. Both sides are built here as explicit polynomials and compared
//! exactly; nothing is manipulated symbolically.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use super::brute::Oracle;
use super::profile::profile_of;
use super::{Family, QPolynomial};
use crate::{Error, Result};

/// Which weight enumerator and which deletion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FunctionalEquation {
    /// `q^abc * prod q_j^aj`, deleting the last entry.
    Abc,
    /// `q^cab * prod q_j^aj`, deleting the first entry.
    Cab,
    /// `q^abcd * prod q_j^abj * prod xi_j^aj`, deleting the last entry.
    Abcd,
}

impl FunctionalEquation {
    pub const ALL: [FunctionalEquation; 3] =
        [FunctionalEquation::Abc, FunctionalEquation::Cab, FunctionalEquation::Abcd];

    pub fn family(self) -> Family {
        match self {
            FunctionalEquation::Abc => Family::Abc,
            FunctionalEquation::Cab => Family::Cab,
            FunctionalEquation::Abcd => Family::Abcd,
        }
    }
}

impl fmt::Display for FunctionalEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.family().name())
    }
}

impl FromStr for FunctionalEquation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.parse::<Family>()? {
            Family::Abc => Ok(FunctionalEquation::Abc),
            Family::Cab => Ok(FunctionalEquation::Cab),
            Family::Abcd => Ok(FunctionalEquation::Abcd),
            Family::AbcBac => Err(Error::Parse("no functional equation check for abc+bac".into())),
        }
    }
}

/// Variable positions inside exponent vectors for a given `n`.
#[derive(Clone, Copy)]
struct Layout {
    eq: FunctionalEquation,
    n: usize,
}

impl Layout {
    fn nvars(self) -> usize {
        match self.eq {
            FunctionalEquation::Abc | FunctionalEquation::Cab => self.n.max(1),
            FunctionalEquation::Abcd => {
                if self.n >= 2 { 2 * self.n - 2 } else { 1 }
            }
        }
    }

    /// `q_j`: the `aj` variable for abc/cab (j >= 2), the `abj` variable for
    /// abcd (j >= 3).
    fn aux(self, j: usize) -> usize {
        match self.eq {
            FunctionalEquation::Abc | FunctionalEquation::Cab => j - 1,
            FunctionalEquation::Abcd => j - 2,
        }
    }

    /// `xi_j`: the `aj` variable for abcd (j >= 2).
    fn xi(self, j: usize) -> usize {
        self.n + j - 3
    }

    fn unit(self, idx: usize) -> Vec<u32> {
        let mut v = vec![0; self.nvars()];
        v[idx] = 1;
        v
    }

    fn monomial(self, xs: &[usize]) -> Vec<u32> {
        let p = profile_of(xs, self.eq.family());
        let mut e = vec![0u32; self.nvars()];
        e[0] = p.main as u32;
        match self.eq {
            FunctionalEquation::Abc | FunctionalEquation::Cab => {
                for j in 2..=self.n {
                    e[self.aux(j)] = p.aj[j] as u32;
                }
            }
            FunctionalEquation::Abcd => {
                let abj = p.abj.as_ref().unwrap();
                for j in 3..=self.n {
                    e[self.aux(j)] = abj[j] as u32;
                }
                for j in 2..=self.n {
                    e[self.xi(j)] = p.aj[j] as u32;
                }
            }
        }
        e
    }
}

fn add(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn weight_enumerator(oracle: &Oracle, layout: Layout) -> QPolynomial {
    let nvars = layout.nvars();
    oracle.sweep(
        layout.n,
        || QPolynomial::zero(nvars),
        |acc, xs| acc.add_term(layout.monomial(xs), BigInt::from(1)),
        |mut a, b| {
            a.add_assign(&b);
            a
        },
    )
}

/// The contribution of permutations whose deleted entry has value `i`.
fn deletion_term(prev: &QPolynomial, eq: FunctionalEquation, n: usize, i: usize) -> QPolynomial {
    let src = Layout { eq, n: n - 1 };
    let dst = Layout { eq, n };
    let q = dst.unit(0);
    let mut images = vec![Vec::new(); src.nvars()];
    images[0] = q.clone();
    let mut multiplier = vec![0u32; dst.nvars()];

    match eq {
        FunctionalEquation::Abc | FunctionalEquation::Cab => {
            for k in 2..n {
                images[src.aux(k)] = if k < i {
                    add(&q, &dst.unit(dst.aux(k)))
                } else {
                    dst.unit(dst.aux(k + 1))
                };
            }
            if eq == FunctionalEquation::Abc {
                // last entry i completes i-1 new aj patterns with j = i
                if i >= 2 {
                    multiplier[dst.aux(i)] = (i - 1) as u32;
                }
            } else {
                // first entry i is an `a` for every larger letter
                for j in i + 1..=n {
                    multiplier[dst.aux(j)] = 1;
                }
            }
        }
        FunctionalEquation::Abcd => {
            for k in 3..n {
                images[src.aux(k)] = if k < i {
                    add(&q, &dst.unit(dst.aux(k)))
                } else {
                    dst.unit(dst.aux(k + 1))
                };
            }
            for k in 2..n {
                images[src.xi(k)] = if k < i {
                    add(&dst.unit(dst.aux(i)), &dst.unit(dst.xi(k)))
                } else {
                    dst.unit(dst.xi(k + 1))
                };
            }
            if i >= 2 {
                multiplier[dst.xi(i)] = (i - 1) as u32;
            }
        }
    }
    prev.substitute(&images, dst.nvars()).mul_monomial(&multiplier)
}

/// Builds `(P_n, sum over i of multiplier_i * P_{n-1}(substituted))` by brute
/// force. Requires `1 <= n <= oracle.multivariate_ceiling`.
pub fn functional_equation_sides(
    n: usize,
    eq: FunctionalEquation,
    oracle: &Oracle,
) -> Result<(QPolynomial, QPolynomial)> {
    if n == 0 {
        return Err(Error::Domain("functional equations relate n >= 1 to n - 1".into()));
    }
    if n > oracle.multivariate_ceiling {
        return Err(Error::CeilingExceeded { n, ceiling: oracle.multivariate_ceiling });
    }
    let lhs = weight_enumerator(oracle, Layout { eq, n });
    let prev = weight_enumerator(oracle, Layout { eq, n: n - 1 });
    let mut rhs = QPolynomial::zero(Layout { eq, n }.nvars());
    for i in 1..=n {
        rhs.add_assign(&deletion_term(&prev, eq, n, i));
    }
    Ok((lhs, rhs))
}

/// Whether `P_n` equals the deletion expansion in terms of `P_{n-1}`.
pub fn check_functional_equation(n: usize, eq: FunctionalEquation, oracle: &Oracle) -> Result<bool> {
    let (lhs, rhs) = functional_equation_sides(n, eq, oracle)?;
    Ok(lhs == rhs)
}
