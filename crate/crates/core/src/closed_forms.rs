//! Explicit binomial formulas for some of the engine grids, and verifiers
//! that compare them cell by cell.
//!
//! Two of the formulas are proved identities (the ballot numbers and `g`,
//! with its `I = 1` specialisation); the others are conjectures fitted to
//! data and are reported as such.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::arith::{binomial, to_integer};
use crate::engines::{build_table, GridFamily};
use crate::exec::Exec;
use crate::{Error, Result};

fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> BigRational {
    BigRational::new(num.into(), den.into())
}

fn binom(n: usize, k: i64) -> BigInt {
    binomial(n as i64, k)
}

/// `(I + 1)/(n + 1) * C(2n - I, n)`, with `I = 0` read as `I = 1`.
pub fn ballot(n: usize, i: usize) -> Result<BigInt> {
    if i > n {
        return Err(Error::Domain(format!("ballot({n}, {i}) needs I <= n")));
    }
    to_integer(&ballot_exact(n, i))
}

fn ballot_exact(n: usize, i: usize) -> BigRational {
    let i = if i == 0 && n > 0 { 1 } else { i };
    ratio(i + 1, n + 1) * BigRational::from(binom(2 * n - i, n as i64))
}

/// Six-binomial expression for the one-`abc` counts; out-of-range binomials
/// are zero.
pub fn g(n: usize, i: usize) -> BigInt {
    let (n, i) = (n as i64, i as i64);
    binomial(2 * n - i - 1, n) - binomial(2 * n - i - 1, n + 3) + binomial(2 * n - 2 * i - 2, n - i - 4)
        - binomial(2 * n - 2 * i - 2, n - i - 1)
        + binomial(2 * n - 2 * i - 3, n - i - 4)
        - binomial(2 * n - 2 * i - 3, n - i - 2)
}

/// Permutations of length `n >= 1` with exactly one `abc`: `3/n * C(2n, n+3)`.
pub fn a1_abc(n: usize) -> Result<BigInt> {
    to_integer(&ClosedForm::OneAbc.exact(n, 1)?)
}

/// Conjectured count with exactly two `abc`s, for `n >= 1`:
/// `(59n^2 + 117n + 100) / (2n(2n-1)(n+5)) * C(2n, n-4)`.
pub fn a2_abc(n: usize) -> Result<BigInt> {
    to_integer(&ClosedForm::TwoAbc.exact(n, 1)?)
}

/// Conjectured count with exactly one `cab`, for `n >= 2`:
/// `(n-2)/(2n) * C(2n-2, n-1)`.
pub fn a1_cab(n: usize) -> Result<BigInt> {
    to_integer(&ClosedForm::OneCab.exact(n, 1)?)
}

/// Whether `seq[0..]` (read as `a(0), a(1), ...`) satisfies
/// `(n+4)^2 a(n+2) = (10n^2 + 42n + 41) a(n+1) - 9(n+1)^2 a(n)` at every `n`
/// where all three terms are present.
pub fn abcd_recurrence_holds(seq: &[BigInt]) -> bool {
    seq.windows(3).enumerate().all(|(n, w)| {
        let n = BigInt::from(n);
        let lead = (&n + 4) * (&n + 4);
        let mid = BigInt::from(10) * &n * &n + BigInt::from(42) * &n + 41;
        let low = BigInt::from(9) * (&n + 1) * (&n + 1);
        lead * &w[2] == mid * &w[1] - low * &w[0]
    })
}

/// Checks the conjectured recurrence on the engine sequence
/// `abcd_p(n, 1, 1)` for `0 <= n <= n_max`.
pub fn a1234_recurrence_check(n_max: usize) -> Result<bool> {
    if n_max < 2 {
        return Err(Error::Domain("the recurrence needs n_max >= 2".into()));
    }
    let (start, seq) = build_table(GridFamily::AbcdI2, n_max).column(&[1])?;
    debug_assert_eq!(start, 0);
    Ok(seq[..2] == [BigInt::from(1), BigInt::from(1)] && abcd_recurrence_holds(&seq))
}

/// Whether a formula has been proved or only fitted to data.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Proved,
    Conjecture,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Proved => "proved",
            Status::Conjecture => "conjecture",
        })
    }
}

/// Status of the `abcd` avoider recurrence checked by
/// [`a1234_recurrence_check`].
pub const ABCD_RECURRENCE_STATUS: Status = Status::Conjecture;

/// The formulas [`verify`] can check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClosedForm {
    /// [`ballot`], against every cell.
    Ballot,
    /// [`g`], against every cell.
    G,
    /// [`a1_abc`], against column `I = 1`.
    OneAbc,
    /// [`a2_abc`], against column `I = 1`.
    TwoAbc,
    /// [`a1_cab`], against column `I = 1`.
    OneCab,
}

impl ClosedForm {
    pub const ALL: [ClosedForm; 5] =
        [ClosedForm::Ballot, ClosedForm::G, ClosedForm::OneAbc, ClosedForm::TwoAbc, ClosedForm::OneCab];

    pub fn name(self) -> &'static str {
        match self {
            ClosedForm::Ballot => "ballot",
            ClosedForm::G => "g",
            ClosedForm::OneAbc => "a1_abc",
            ClosedForm::TwoAbc => "a2_abc",
            ClosedForm::OneCab => "a1_cab",
        }
    }

    pub fn status(self) -> Status {
        match self {
            ClosedForm::Ballot | ClosedForm::G | ClosedForm::OneAbc => Status::Proved,
            ClosedForm::TwoAbc | ClosedForm::OneCab => Status::Conjecture,
        }
    }

    /// The grid this formula describes.
    pub fn family(self) -> GridFamily {
        match self {
            ClosedForm::Ballot => GridFamily::Abc,
            ClosedForm::G | ClosedForm::OneAbc => GridFamily::AbcOne,
            ClosedForm::TwoAbc => GridFamily::AbcTwo,
            ClosedForm::OneCab => GridFamily::CabOne,
        }
    }

    /// Whether the formula takes `(n, I)`; otherwise it is a function of `n`
    /// compared against column `I = 1`.
    pub fn is_indexed(self) -> bool {
        matches!(self, ClosedForm::Ballot | ClosedForm::G)
    }

    /// Smallest `n` of the claimed domain.
    pub fn min_n(self) -> usize {
        match self {
            ClosedForm::Ballot | ClosedForm::G => 0,
            ClosedForm::OneAbc | ClosedForm::TwoAbc => 1,
            ClosedForm::OneCab => 2,
        }
    }

    /// The exact rational value, before any integrality check. `i` is
    /// ignored by the single-variable forms.
    pub fn exact(self, n: usize, i: usize) -> Result<BigRational> {
        if n < self.min_n() {
            return Err(Error::Domain(format!("{} needs n >= {}", self.name(), self.min_n())));
        }
        if self.is_indexed() && i > n {
            return Err(Error::Domain(format!("{} needs I <= n", self.name())));
        }
        let n_i = n as i64;
        Ok(match self {
            ClosedForm::Ballot => ballot_exact(n, i),
            ClosedForm::G => BigRational::from(g(n, i)),
            ClosedForm::OneAbc => ratio(3, n) * BigRational::from(binom(2 * n, n_i + 3)),
            ClosedForm::TwoAbc => {
                let num = 59 * n_i * n_i + 117 * n_i + 100;
                let den = 2 * n_i * (2 * n_i - 1) * (n_i + 5);
                ratio(num, den) * BigRational::from(binom(2 * n, n_i - 4))
            }
            ClosedForm::OneCab => ratio(n_i - 2, 2 * n_i) * BigRational::from(binom(2 * n - 2, n_i - 1)),
        })
    }

    /// [`ClosedForm::exact`], which must be an integer.
    pub fn value(self, n: usize, i: usize) -> Result<BigInt> {
        to_integer(&self.exact(n, i)?)
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClosedForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClosedForm::ALL
            .into_iter()
            .find(|c| c.name() == s.trim())
            .ok_or_else(|| Error::Parse(format!("unknown closed form {s:?}")))
    }
}

/// One cell where the formula and the grid disagree. `formula` holds the
/// error text when the formula fails to produce an integer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub n: usize,
    #[serde(rename = "I")]
    pub index: usize,
    pub engine: String,
    pub formula: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub form: String,
    pub family: String,
    pub n_max: usize,
    pub status: Status,
    /// Cells compared.
    #[serde(skip)]
    pub checked: usize,
    pub mismatches: Vec<Mismatch>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports always serialize")
    }
}

/// Compares `form` with the `family` grid at every cell of the claimed domain
/// with `n <= n_max`.
pub fn verify(form: ClosedForm, family: GridFamily, n_max: usize) -> Result<VerifyReport> {
    verify_with(form, family, n_max, Exec::default())
}

/// [`verify`] with an explicit execution strategy; rows are checked
/// independently and merged in order of `n`.
pub fn verify_with(form: ClosedForm, family: GridFamily, n_max: usize, exec: Exec) -> Result<VerifyReport> {
    if family.index_arity() != 1 {
        return Err(Error::InvalidInput(format!("{family} is not a single-index grid")));
    }
    let grid = build_table(family, n_max);
    let rows: Vec<usize> = (form.min_n()..=n_max).collect();
    let per_row = exec.map(&rows, |&n| {
        let indices: Vec<usize> = if form.is_indexed() { (0..=n).collect() } else { vec![1.min(n)] };
        let mut out = Vec::new();
        for i in indices {
            let engine = grid.get(n, &[i]).expect("index within row");
            let formula = form.value(n, i);
            if formula.as_ref() != Ok(engine) {
                out.push(Mismatch {
                    n,
                    index: i,
                    engine: engine.to_string(),
                    formula: formula.map_or_else(|e| e.to_string(), |v| v.to_string()),
                });
            }
        }
        (out, if form.is_indexed() { n + 1 } else { 1 })
    });
    let checked = per_row.iter().map(|(_, c)| c).sum();
    let mismatches = per_row.into_iter().flat_map(|(m, _)| m).collect();
    Ok(VerifyReport {
        form: form.name().to_string(),
        family: family.name().to_string(),
        n_max,
        status: form.status(),
        checked,
        mismatches,
    })
}

/// The zero-mismatch check of every form against its own grid.
pub fn verify_all(n_max: usize, exec: Exec) -> Vec<VerifyReport> {
    ClosedForm::ALL
        .iter()
        .map(|&f| verify_with(f, f.family(), n_max, exec).expect("own grids are single-index"))
        .collect()
}

/// Catalan number `C(2n, n)/(n+1)`.
pub fn catalan(n: usize) -> BigInt {
    binom(2 * n, n as i64) / BigInt::from(n + 1)
}
