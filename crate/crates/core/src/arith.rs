//! Exact arithmetic substrate: big integers, rationals, binomials and
//! univariate polynomials with rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Binomial coefficient `C(n, k)`.
///
/// Out-of-range arguments (`k < 0`, `k > n`, or `n < 0`) give zero. Several
/// closed forms pass lower indices such as `n - I - 4` that go negative for
/// small `n`, and this convention makes them evaluate to the right boundary
/// values.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        // acc * (n - i) is always divisible by (i + 1) here
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Converts a rational with denominator one into an integer.
pub fn to_integer(value: &BigRational) -> Result<BigInt> {
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(Error::NonIntegral(value.to_string()))
    }
}

/// Polynomial in `n` with rational coefficients, lowest power first.
///
/// Trailing zero coefficients are always stripped, so the zero polynomial has
/// an empty coefficient list and [`UniPoly::degree`] returns `None` for it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<BigRational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        UniPoly::new(vec![c])
    }

    /// The polynomial `n`.
    pub fn var() -> Self {
        UniPoly::from_ints(&[0, 1])
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        UniPoly::new(coeffs.iter().cloned().map(BigRational::from_integer).collect())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    /// Horner evaluation at an integer point.
    pub fn eval(&self, n: &BigInt) -> BigRational {
        let x = BigRational::from_integer(n.clone());
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * &x + c)
    }

    pub fn eval_i64(&self, n: i64) -> BigRational {
        self.eval(&BigInt::from(n))
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        UniPoly::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(UniPoly::constant(BigRational::one()), |acc, _| &acc * self)
    }

    /// Euclidean division: returns `(quotient, remainder)`.
    pub fn div_rem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        let d_deg = divisor.degree().expect("division by the zero polynomial");
        let d_lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); self.coeffs.len().saturating_sub(d_deg)];
        while rem.len() > d_deg && !rem.is_empty() {
            let shift = rem.len() - 1 - d_deg;
            let factor = rem.last().unwrap() / &d_lead;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &factor * c;
            }
            quot[shift] = factor;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    /// Monic greatest common divisor. `gcd(0, 0)` is zero.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            Some(lead) => self.scale(&lead.recip()),
            None => UniPoly::zero(),
        }
    }

    /// Least common multiple of the denominators of the coefficients.
    pub fn denominator_lcm(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Gcd of the numerators, assuming integral coefficients.
    pub fn integer_content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c.numer()))
    }

    /// Coefficients as integers; fails if any coefficient is fractional.
    pub fn to_integer_coeffs(&self) -> Result<Vec<BigInt>> {
        self.coeffs.iter().map(to_integer).collect()
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigRational::zero();
        UniPoly::new(
            (0..len)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

/// Renders as e.g. `10*n^2+42*n+41`, highest power first; `0` for zero.
impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            let body = match power {
                0 => mag.to_string(),
                _ => {
                    let var = if power == 1 { "n".to_string() } else { format!("n^{power}") };
                    if mag.is_one() {
                        var
                    } else {
                        format!("{mag}*{var}")
                    }
                }
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(6, 4), BigInt::from(15));
        assert_eq!(binomial(5, 9), BigInt::zero());
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(binomial(-3, 1), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        // ballot value P(4,2) = 3/5 * C(6,4)
        let ballot = rational(3, 5) * BigRational::from_integer(binomial(2 * 4 - 2, 4));
        assert_eq!(ballot, BigRational::from_integer(9.into()));
    }

    #[test]
    fn pascal_and_symmetry_to_200() {
        for n in 1..=200i64 {
            for k in 0..=n {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
                assert_eq!(binomial(n, k), binomial(n, n - k));
            }
        }
    }

    #[test]
    fn binomial_beyond_u64() {
        assert_eq!(
            binomial(100, 50).to_string(),
            "100891344545564193334812497256"
        );
    }

    #[test]
    fn poly_eval_examples() {
        assert_eq!(UniPoly::from_ints(&[1, 1]).eval_i64(3), rational(4, 1));
        assert_eq!(UniPoly::from_ints(&[41, 42, 10]).eval_i64(0), rational(41, 1));
        assert_eq!(UniPoly::zero().eval_i64(17), BigRational::zero());
        assert_eq!(UniPoly::zero().degree(), None);
    }

    #[test]
    fn trailing_zeros_stripped() {
        let p = UniPoly::from_ints(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(p, UniPoly::from_ints(&[1, 2]));
    }

    #[test]
    fn rational_inverse_is_exact() {
        for a in -20i64..=20 {
            for b in -20i64..=20 {
                if a == 0 || b == 0 {
                    continue;
                }
                assert!((rational(a, b) * rational(b, a)).is_one());
            }
        }
    }

    #[test]
    fn division_and_gcd() {
        // (n+4)^2 and (n+4)(n+1) share n+4
        let a = UniPoly::from_ints(&[16, 8, 1]);
        let b = UniPoly::from_ints(&[4, 5, 1]);
        assert_eq!(a.gcd(&b), UniPoly::from_ints(&[4, 1]));
        let (q, r) = a.div_rem(&UniPoly::from_ints(&[4, 1]));
        assert_eq!(q, UniPoly::from_ints(&[4, 1]));
        assert!(r.is_zero());
        let (q, r) = UniPoly::from_ints(&[1, 0, 1]).div_rem(&UniPoly::from_ints(&[1, 1]));
        assert_eq!(q, UniPoly::from_ints(&[-1, 1]));
        assert_eq!(r, UniPoly::from_ints(&[2]));
    }

    #[test]
    fn display() {
        assert_eq!(UniPoly::from_ints(&[41, 42, 10]).to_string(), "10*n^2+42*n+41");
        assert_eq!(UniPoly::from_ints(&[-2, -4]).to_string(), "-4*n-2");
        assert_eq!(UniPoly::from_ints(&[0, 1]).to_string(), "n");
        assert_eq!(UniPoly::zero().to_string(), "0");
    }

    #[test]
    fn non_integral_rejected() {
        assert!(to_integer(&rational(3, 2)).is_err());
        assert_eq!(to_integer(&rational(6, 2)).unwrap(), BigInt::from(3));
    }
}
