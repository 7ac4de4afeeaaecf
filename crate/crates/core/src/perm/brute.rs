//! Brute-force sweeps over `S_n`: generating polynomials, constrained counts
//! and the per-family histograms the engines are checked against.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;

use super::count::count_occurrences;
use super::iter::{for_each_with_prefix, permutation_chunks};
use super::profile::profile_of;
use super::{Family, OccurrenceProfile, Pattern, QPolynomial};
use crate::arith::binomial;
use crate::exec::Exec;
use crate::{Error, Result};

pub const DEFAULT_CEILING: usize = 10;
pub const DEFAULT_MULTIVARIATE_CEILING: usize = 7;
pub const CEILING_ENV: &str = "PERMPAT_BRUTE_CEILING";

/// Resource limits and execution strategy for brute-force work.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Oracle {
    /// Largest `n` for univariate sweeps (`gen_poly`, `brute_count`).
    pub ceiling: usize,
    /// Largest `n` for multivariate functional-equation checks.
    pub multivariate_ceiling: usize,
    pub exec: Exec,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            ceiling: DEFAULT_CEILING,
            multivariate_ceiling: DEFAULT_MULTIVARIATE_CEILING,
            exec: Exec::default(),
        }
    }
}

impl Oracle {
    /// Default limits, with the univariate ceiling taken from
    /// `PERMPAT_BRUTE_CEILING` when it is set to a positive integer.
    pub fn from_env() -> Result<Self> {
        let mut oracle = Oracle::default();
        if let Ok(raw) = std::env::var(CEILING_ENV) {
            oracle.ceiling = raw
                .trim()
                .parse()
                .ok()
                .filter(|&c: &usize| c > 0)
                .ok_or_else(|| Error::Parse(format!("{CEILING_ENV}={raw:?} is not a positive integer")))?;
        }
        Ok(oracle)
    }

    pub fn with_exec(self, exec: Exec) -> Self {
        Oracle { exec, ..self }
    }

    pub fn with_ceiling(self, ceiling: usize) -> Self {
        Oracle { ceiling, ..self }
    }

    pub(crate) fn check(&self, n: usize) -> Result<()> {
        if n > self.ceiling {
            Err(Error::CeilingExceeded { n, ceiling: self.ceiling })
        } else {
            Ok(())
        }
    }

    /// Folds `visit` over every permutation of `S_n`, one accumulator per
    /// chunk, and merges the chunk results.
    pub(crate) fn sweep<A, V, M>(&self, n: usize, init: impl Fn() -> A + Sync + Send, visit: V, merge: M) -> A
    where
        A: Send,
        V: Fn(&mut A, &[usize]) + Sync + Send,
        M: Fn(A, A) -> A + Sync + Send,
    {
        let chunks = permutation_chunks(n);
        self.exec.map_reduce(
            &chunks,
            |prefix| {
                let mut acc = init();
                for_each_with_prefix(n, prefix, |xs| visit(&mut acc, xs));
                acc
            },
            &init,
            merge,
        )
    }

    /// `F_n(q)`: the coefficient of `q^i` counts permutations of `S_n` with
    /// exactly `i` occurrences of `pi`.
    pub fn gen_poly(&self, n: usize, pi: &Pattern) -> Result<QPolynomial> {
        self.check(n)?;
        let p = pi.entries();
        let hist = self.sweep(
            n,
            BTreeMap::<u64, u64>::new,
            |acc, xs| *acc.entry(count_occurrences(xs, p)).or_default() += 1,
            merge_counts,
        );
        let mut out = QPolynomial::zero(1);
        for (k, v) in hist {
            out.add_term(vec![k as u32], BigInt::from(v));
        }
        Ok(out)
    }

    /// Permutations of `S_n` whose profile satisfies
    /// [`OccurrenceProfile::satisfies`] with the given counts and thresholds.
    pub fn brute_count(
        &self,
        n: usize,
        family: Family,
        occurrences: &[u64],
        thresholds: &[usize],
    ) -> Result<BigInt> {
        check_query(n, family, occurrences, thresholds)?;
        self.check(n)?;
        let count = self.sweep(
            n,
            || 0u64,
            |acc, xs| *acc += u64::from(profile_of(xs, family).satisfies(occurrences, thresholds)),
            |a, b| a + b,
        );
        Ok(BigInt::from(count))
    }

    /// One sweep of `S_n` recording every permutation's signature, from
    /// which any `brute_count` query for this `(n, family)` can be answered.
    pub fn brute_table(&self, n: usize, family: Family) -> Result<BruteTable> {
        self.check(n)?;
        let counts = self.sweep(
            n,
            HashMap::<Signature, u64>::new,
            |acc, xs| *acc.entry(Signature::of(&profile_of(xs, family))).or_default() += 1,
            |mut a, b| {
                for (k, v) in b {
                    *a.entry(k).or_default() += v;
                }
                a
            },
        );
        Ok(BruteTable { n, family, counts })
    }
}

fn merge_counts(mut a: BTreeMap<u64, u64>, b: BTreeMap<u64, u64>) -> BTreeMap<u64, u64> {
    for (k, v) in b {
        *a.entry(k).or_default() += v;
    }
    a
}

fn check_query(n: usize, family: Family, occurrences: &[u64], thresholds: &[usize]) -> Result<()> {
    if occurrences.len() != family.occurrence_arity() {
        return Err(Error::InvalidInput(format!(
            "family {family} takes {} occurrence count(s), got {}",
            family.occurrence_arity(),
            occurrences.len()
        )));
    }
    if thresholds.len() != family.threshold_arity() {
        return Err(Error::InvalidInput(format!(
            "family {family} takes {} threshold(s), got {}",
            family.threshold_arity(),
            thresholds.len()
        )));
    }
    if let Some(t) = thresholds.iter().find(|&&t| t > n) {
        return Err(Error::Domain(format!("threshold {t} exceeds n = {n}")));
    }
    Ok(())
}

/// What a query needs to know about one permutation: its main and secondary
/// counts and the smallest letters carrying a forbidden auxiliary pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct Signature {
    main: u64,
    secondary: u64,
    first: usize,
    second: usize,
}

impl Signature {
    fn of(p: &OccurrenceProfile) -> Self {
        match p.family {
            Family::Abc | Family::Cab => {
                Signature { main: p.main, secondary: 0, first: p.first_aj(), second: 0 }
            }
            Family::Abcd => Signature {
                main: p.main,
                secondary: 0,
                first: p.first_abj(),
                second: p.first_aj(),
            },
            Family::AbcBac => Signature {
                main: p.main,
                secondary: p.secondary.unwrap_or(0),
                first: p.first_aj().min(p.first_ja()),
                second: 0,
            },
        }
    }

    fn satisfies(&self, family: Family, occurrences: &[u64], thresholds: &[usize]) -> bool {
        match family {
            Family::Abc | Family::Cab => occurrences[0] == self.main && thresholds[0] < self.first,
            Family::Abcd => {
                occurrences[0] == self.main && thresholds[0] < self.first && thresholds[1] < self.second
            }
            Family::AbcBac => {
                occurrences[0] == self.main
                    && occurrences[1] == self.secondary
                    && thresholds[0] < self.first
            }
        }
    }
}

/// Histogram of permutation signatures for one `(n, family)`.
#[derive(Clone, Debug)]
pub struct BruteTable {
    n: usize,
    family: Family,
    counts: HashMap<Signature, u64>,
}

impl BruteTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Same contract as [`Oracle::brute_count`].
    pub fn count(&self, occurrences: &[u64], thresholds: &[usize]) -> Result<BigInt> {
        check_query(self.n, self.family, occurrences, thresholds)?;
        Ok(self
            .counts
            .iter()
            .filter(|(sig, _)| sig.satisfies(self.family, occurrences, thresholds))
            .map(|(_, &v)| BigInt::from(v))
            .sum())
    }

    /// Number of permutations with each main-pattern count, ignoring the
    /// auxiliary constraints.
    pub fn main_distribution(&self) -> BTreeMap<u64, BigInt> {
        let mut out = BTreeMap::new();
        for (sig, &v) in &self.counts {
            *out.entry(sig.main).or_insert_with(BigInt::zero) += v;
        }
        out
    }
}

/// [`Oracle::gen_poly`] with default limits.
pub fn gen_poly(n: usize, pi: &Pattern) -> Result<QPolynomial> {
    Oracle::default().gen_poly(n, pi)
}

/// [`Oracle::brute_count`] with default limits.
pub fn brute_count(n: usize, family: Family, occurrences: &[u64], thresholds: &[usize]) -> Result<BigInt> {
    Oracle::default().brute_count(n, family, occurrences, thresholds)
}

/// Coefficients `b_i` of `f(q) = sum b_i (q - 1)^i`.
pub fn expand_at_one(f: &QPolynomial) -> Result<Vec<BigInt>> {
    let c = f.univariate_coeffs()?;
    if c.is_empty() {
        return Ok(vec![BigInt::zero()]);
    }
    Ok((0..c.len())
        .map(|i| {
            c.iter()
                .enumerate()
                .skip(i)
                .map(|(k, ck)| ck * binomial(k as i64, i as i64))
                .sum()
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::factorial;

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn gen_poly_examples() {
        let abc = Pattern::abc();
        assert_eq!(gen_poly(3, &abc).unwrap().univariate_coeffs().unwrap(), ints(&[5, 1]));
        assert_eq!(gen_poly(4, &abc).unwrap().univariate_coeffs().unwrap(), ints(&[14, 6, 3, 0, 1]));
        assert_eq!(gen_poly(1, &abc).unwrap().univariate_coeffs().unwrap(), ints(&[1]));
        assert_eq!(gen_poly(1, &Pattern::cab()).unwrap().univariate_coeffs().unwrap(), ints(&[1]));
    }

    #[test]
    fn gen_poly_ceiling() {
        let err = gen_poly(11, &Pattern::abc()).unwrap_err();
        assert_eq!(err, Error::CeilingExceeded { n: 11, ceiling: 10 });
        let small = Oracle::default().with_ceiling(4);
        assert!(small.gen_poly(5, &Pattern::abc()).is_err());
    }

    #[test]
    fn gen_poly_sums_to_factorial() {
        for n in 0..=8 {
            for pi in [Pattern::abc(), Pattern::cab(), Pattern::abcd(), Pattern::bac()] {
                let f = gen_poly(n, &pi).unwrap();
                assert_eq!(f.coefficient_sum(), factorial(n as u64));
                assert!(f.terms().all(|(_, c)| *c > BigInt::zero()));
            }
        }
    }

    #[test]
    fn brute_count_examples() {
        assert_eq!(brute_count(5, Family::Abc, &[0], &[2]).unwrap(), 28.into());
        assert_eq!(brute_count(6, Family::Abc, &[1], &[2]).unwrap(), 55.into());
        assert_eq!(brute_count(7, Family::Abcd, &[0], &[1, 3]).unwrap(), 640.into());
        assert_eq!(brute_count(3, Family::AbcBac, &[0, 0], &[1]).unwrap(), 4.into());
    }

    #[test]
    fn brute_count_rejects_bad_queries() {
        assert!(brute_count(5, Family::Abcd, &[0], &[1]).is_err());
        assert!(brute_count(5, Family::AbcBac, &[0], &[1]).is_err());
        assert!(matches!(brute_count(5, Family::Abc, &[0], &[6]), Err(Error::Domain(_))));
        assert!(matches!(brute_count(11, Family::Abc, &[0], &[1]), Err(Error::CeilingExceeded { .. })));
    }

    #[test]
    fn table_agrees_with_direct_counts() {
        for family in Family::ALL {
            for n in 0..=6 {
                let table = Oracle::default().brute_table(n, family).unwrap();
                let occs: Vec<Vec<u64>> = match family {
                    Family::AbcBac => vec![vec![0, 0], vec![1, 0], vec![0, 1]],
                    _ => vec![vec![0], vec![1], vec![2]],
                };
                let thresholds: Vec<Vec<usize>> = match family {
                    Family::Abcd => (0..=n).flat_map(|a| (0..=n).map(move |b| vec![a, b])).collect(),
                    _ => (0..=n).map(|i| vec![i]).collect(),
                };
                for r in &occs {
                    for t in &thresholds {
                        assert_eq!(
                            table.count(r, t).unwrap(),
                            brute_count(n, family, r, t).unwrap(),
                            "{family} n={n} r={r:?} t={t:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let seq = Oracle::default().with_exec(Exec::Sequential);
        let par = Oracle::default().with_exec(Exec::Parallel);
        assert_eq!(seq.gen_poly(7, &Pattern::cab()).unwrap(), par.gen_poly(7, &Pattern::cab()).unwrap());
    }

    #[test]
    fn expansion_at_one() {
        let f4 = gen_poly(4, &Pattern::abc()).unwrap();
        let b = expand_at_one(&f4).unwrap();
        assert_eq!(b[0], BigInt::from(24));
        // b_1 is the total number of abc occurrences over S_4
        let total: BigInt = super::super::Permutations::new(4)
            .map(|s| super::super::count_pattern(&s, &Pattern::abc()))
            .sum();
        assert_eq!(b[1], total);
        assert_eq!(b[1], BigInt::from(16));
        assert_eq!(expand_at_one(&QPolynomial::from_univariate(&ints(&[7]))).unwrap(), ints(&[7]));
    }

    #[test]
    fn reverse_complement_symmetry() {
        for pi in [Pattern::abc(), Pattern::cab()] {
            let rc = pi.reverse_complement();
            for n in 0..=8 {
                let a = gen_poly(n, &pi).unwrap();
                let b = gen_poly(n, &rc).unwrap();
                assert_eq!(a.coefficient(&[0]), b.coefficient(&[0]), "{pi} n={n}");
            }
        }
    }
}
