use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::{Error, Result};

/// Sparse polynomial with integer coefficients in `nvars` variables.
///
/// Variable 0 is always `q`, the main-pattern variable; the rest are
/// family-specific auxiliary variables. Keys are exponent vectors of length
/// `nvars`; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPolynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl QPolynomial {
    pub fn zero(nvars: usize) -> Self {
        QPolynomial { nvars, terms: BTreeMap::new() }
    }

    /// Univariate polynomial in `q` from ascending coefficients.
    pub fn from_univariate(coeffs: &[BigInt]) -> Self {
        let mut p = QPolynomial::zero(1);
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(vec![i as u32], c.clone());
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, coeff: BigInt) {
        assert_eq!(exps.len(), self.nvars, "exponent vector has the wrong length");
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn coefficient(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn add_assign(&mut self, other: &QPolynomial) {
        assert_eq!(self.nvars, other.nvars);
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v.clone());
        }
    }

    /// Sum of all coefficients, i.e. the value at all variables equal to 1.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Multiplies by the monomial with exponent vector `exps`.
    pub fn mul_monomial(&self, exps: &[u32]) -> QPolynomial {
        assert_eq!(exps.len(), self.nvars);
        QPolynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.iter().zip(exps).map(|(a, b)| a + b).collect(), v.clone()))
                .collect(),
        }
    }

    /// Substitutes each variable by a monomial in a new set of `target_nvars`
    /// variables: variable `k` becomes the monomial `images[k]`.
    pub fn substitute(&self, images: &[Vec<u32>], target_nvars: usize) -> QPolynomial {
        assert_eq!(images.len(), self.nvars);
        let mut out = QPolynomial::zero(target_nvars);
        for (k, v) in &self.terms {
            let mut exps = vec![0u32; target_nvars];
            for (e, image) in k.iter().zip(images) {
                for (slot, x) in exps.iter_mut().zip(image) {
                    *slot += e * x;
                }
            }
            out.add_term(exps, v.clone());
        }
        out
    }

    /// Ascending coefficients in `q` of a univariate polynomial.
    pub fn univariate_coeffs(&self) -> Result<Vec<BigInt>> {
        if self.nvars != 1 {
            return Err(Error::InvalidInput(format!(
                "expected a polynomial in q alone, got {} variables",
                self.nvars
            )));
        }
        let degree = self.terms.keys().map(|k| k[0] as usize).max();
        let mut out = vec![BigInt::zero(); degree.map_or(0, |d| d + 1)];
        for (k, v) in &self.terms {
            out[k[0] as usize] = v.clone();
        }
        Ok(out)
    }
}

/// Univariate polynomials print as `14+6q+3q^2+q^4`; others as a sum of
/// monomials in `x0, x1, ...`.
impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, v) in &self.terms {
            let vars: Vec<String> = k
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    let name = if self.nvars == 1 { "q".to_string() } else { format!("x{i}") };
                    if e == 1 { name } else { format!("{name}^{e}") }
                })
                .collect();
            let coeff = if vars.is_empty() || (*v != BigInt::from(1) && *v != BigInt::from(-1)) {
                v.to_string()
            } else if *v == BigInt::from(-1) {
                "-".to_string()
            } else {
                String::new()
            };
            let body = format!("{coeff}{}", vars.join("*"));
            if !first && !body.starts_with('-') {
                f.write_str("+")?;
            }
            f.write_str(&body)?;
            first = false;
        }
        Ok(())
    }
}
