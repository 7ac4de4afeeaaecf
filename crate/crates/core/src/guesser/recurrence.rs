use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::linalg::make_primitive;
use crate::arith::{to_integer, UniPoly};
use crate::{Error, Result};

/// `p_r(n) a(n+r) + ... + p_1(n) a(n+1) + p_0(n) a(n) = 0`.
///
/// Always stored normalized: integer coefficients with no common factor
/// across all `p_i`, and the leading coefficient of `p_r` positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PRecurrence {
    /// `coeffs[i]` multiplies `a(n+i)`.
    coeffs: Vec<UniPoly>,
}

#[derive(Serialize, Deserialize)]
struct RecurrenceDoc {
    order: usize,
    degree: usize,
    coeffs: Vec<Vec<String>>,
}

impl PRecurrence {
    /// Normalizes `coeffs` (`coeffs[i]` multiplies `a(n+i)`). Needs order at
    /// least 1 and a nonzero `p_r`.
    pub fn new(coeffs: Vec<UniPoly>) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::InvalidInput("a recurrence needs order >= 1".into()));
        }
        if coeffs.last().is_some_and(UniPoly::is_zero) {
            return Err(Error::InvalidInput("leading polynomial is zero".into()));
        }
        Ok(PRecurrence { coeffs: normalize(coeffs) })
    }

    /// From integer coefficient lists, lowest power first.
    pub fn from_integer_coeffs(coeffs: &[Vec<BigInt>]) -> Result<Self> {
        PRecurrence::new(coeffs.iter().map(|c| UniPoly::from_bigints(c)).collect())
    }

    /// From the solved form `a(n+r) = sum_{i<r} (num_i / den_i) a(n+i)`,
    /// multiplied through by the product of the denominators.
    pub fn from_rational_functions(terms: &[(UniPoly, UniPoly)]) -> Result<Self> {
        if terms.iter().any(|(_, den)| den.is_zero()) {
            return Err(Error::InvalidInput("zero denominator".into()));
        }
        let product = |skip: Option<usize>| {
            terms
                .iter()
                .enumerate()
                .filter(|(j, _)| Some(*j) != skip)
                .fold(UniPoly::constant(BigRational::one()), |acc, (_, (_, den))| &acc * den)
        };
        let mut coeffs: Vec<UniPoly> =
            terms.iter().enumerate().map(|(i, (num, _))| -&(num * &product(Some(i)))).collect();
        coeffs.push(product(None));
        PRecurrence::new(coeffs)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Largest degree among the coefficient polynomials.
    pub fn degree(&self) -> usize {
        self.coeffs.iter().filter_map(UniPoly::degree).max().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[UniPoly] {
        &self.coeffs
    }

    pub fn leading(&self) -> &UniPoly {
        self.coeffs.last().expect("order >= 1")
    }

    /// `coeffs[i][k]`: coefficient of `n^k` in `p_i`, padded to `degree + 1`.
    pub fn integer_coeffs(&self) -> Vec<Vec<BigInt>> {
        let width = self.degree() + 1;
        self.coeffs
            .iter()
            .map(|p| {
                let mut c = p.to_integer_coeffs().expect("normalized coefficients are integers");
                c.resize(width, BigInt::zero());
                c
            })
            .collect()
    }

    /// `sum_i p_i(n) * a(n+i)`, where `seq[k]` is `a(start + k)`.
    pub fn residual(&self, seq: &[BigInt], start: i64, n: i64) -> BigRational {
        let base = (n - start) as usize;
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, p)| p.eval_i64(n) * BigRational::from(seq[base + i].clone()))
            .sum()
    }

    /// Whether every window of `order + 1` consecutive terms satisfies the
    /// recurrence.
    pub fn annihilates(&self, seq: &[BigInt], start: i64) -> bool {
        let windows = (seq.len() + 1).saturating_sub(self.coeffs.len());
        (0..windows).all(|k| self.residual(seq, start, start + k as i64).is_zero())
    }

    /// Extends `initial` (the terms `a(start), ..., a(start + r - 1)`) by
    /// `count` further terms and returns all of them.
    ///
    /// Fails with [`Error::Singular`] where `p_r` vanishes and with
    /// [`Error::NonIntegral`] if a computed term is not an integer.
    pub fn apply(&self, start: i64, initial: &[BigInt], count: usize) -> Result<Vec<BigInt>> {
        let r = self.order();
        if initial.len() != r {
            return Err(Error::InvalidInput(format!(
                "order {r} recurrence needs {r} initial terms, got {}",
                initial.len()
            )));
        }
        let mut out = initial.to_vec();
        for k in 0..count {
            let n = start + k as i64;
            let lead = self.leading().eval_i64(n);
            if lead.is_zero() {
                return Err(Error::Singular(n));
            }
            let rest: BigRational = self.coeffs[..r]
                .iter()
                .enumerate()
                .map(|(i, p)| p.eval_i64(n) * BigRational::from(out[k + i].clone()))
                .sum();
            let next = -rest / lead;
            out.push(to_integer(&next).map_err(|_| Error::NonIntegral(format!("a({}) = {next}", n + r as i64)))?);
        }
        Ok(out)
    }

    /// Divides out the polynomial gcd of all coefficients; two recurrences
    /// are [`equivalent`] when their reduced forms are equal.
    pub fn reduced(&self) -> PRecurrence {
        let g = self.coeffs.iter().fold(UniPoly::zero(), |acc, p| acc.gcd(p));
        let coeffs = self.coeffs.iter().map(|p| p.div_rem(&g).0).collect();
        PRecurrence { coeffs: normalize(coeffs) }
    }

    pub fn to_json(&self) -> String {
        let doc = RecurrenceDoc {
            order: self.order(),
            degree: self.degree(),
            coeffs: self
                .integer_coeffs()
                .iter()
                .map(|p| p.iter().map(BigInt::to_string).collect())
                .collect(),
        };
        serde_json::to_string(&doc).expect("recurrences always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: RecurrenceDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if doc.coeffs.len() != doc.order + 1 {
            return Err(Error::Parse(format!(
                "order {} needs {} coefficient lists, got {}",
                doc.order,
                doc.order + 1,
                doc.coeffs.len()
            )));
        }
        let coeffs = doc
            .coeffs
            .iter()
            .map(|p| {
                p.iter()
                    .map(|c| c.trim().parse::<BigInt>().map_err(|_| Error::Parse(format!("{c:?} is not an integer"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        PRecurrence::from_integer_coeffs(&coeffs)
    }
}

/// Integer coefficients, primitive across all polynomials, with a positive
/// leading coefficient of the last nonzero polynomial.
fn normalize(coeffs: Vec<UniPoly>) -> Vec<UniPoly> {
    let lcm = coeffs
        .iter()
        .fold(BigInt::one(), |acc, p| num_integer::Integer::lcm(&acc, &p.denominator_lcm()));
    let widths: Vec<usize> = coeffs.iter().map(|p| p.coeffs().len()).collect();
    let mut flat: Vec<BigInt> = coeffs
        .iter()
        .flat_map(|p| p.coeffs().iter().map(|c| (c * &lcm).to_integer()))
        .collect();
    make_primitive(&mut flat);
    let negate = coeffs
        .iter()
        .rev()
        .find_map(UniPoly::leading)
        .is_some_and(|lead| lead.is_negative());
    if negate {
        flat.iter_mut().for_each(|x| *x = -&*x);
    }
    let mut it = flat.into_iter();
    widths
        .into_iter()
        .map(|w| UniPoly::from_bigints(&it.by_ref().take(w).collect::<Vec<_>>()))
        .collect()
}

/// Whether two recurrences agree after dividing out common polynomial
/// factors and normalizing.
pub fn equivalent(a: &PRecurrence, b: &PRecurrence) -> bool {
    a.order() == b.order() && a.reduced() == b.reduced()
}

/// `(n^2+8*n+16)*a(n+2) + (-10*n^2-42*n-41)*a(n+1) + (9*n^2+18*n+9)*a(n) = 0`,
/// highest shift first; zero coefficients are omitted.
impl fmt::Display for PRecurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, p)| !p.is_zero())
            .map(|(i, p)| {
                let shift = if i == 0 { "a(n)".to_string() } else { format!("a(n+{i})") };
                format!("({p})*{shift}")
            })
            .collect();
        write!(f, "{} = 0", terms.join(" + "))
    }
}
