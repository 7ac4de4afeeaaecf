//! Weight-monomial exponents of a permutation for each pattern family.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::count::count_occurrences;
use super::Permutation;
use crate::{Error, Result};

/// The pattern families with a weight function and an engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// `abc` occurrences, auxiliary `aj` counts.
    Abc,
    /// `cab` occurrences, auxiliary `aj` counts.
    Cab,
    /// `abcd` occurrences, auxiliary `abj` and `aj` counts.
    Abcd,
    /// `abc` and `bac` occurrences, auxiliary `aj` and `ja` counts.
    AbcBac,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Abc, Family::Cab, Family::Abcd, Family::AbcBac];

    pub fn name(self) -> &'static str {
        match self {
            Family::Abc => "abc",
            Family::Cab => "cab",
            Family::Abcd => "abcd",
            Family::AbcBac => "abc+bac",
        }
    }

    /// How many occurrence counts a query carries (1, or 2 for abc+bac).
    pub fn occurrence_arity(self) -> usize {
        if self == Family::AbcBac { 2 } else { 1 }
    }

    /// How many thresholds a query carries (1, or 2 for abcd).
    pub fn threshold_arity(self) -> usize {
        if self == Family::Abcd { 2 } else { 1 }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "abc" | "123" => Ok(Family::Abc),
            "cab" | "312" => Ok(Family::Cab),
            "abcd" | "1234" => Ok(Family::Abcd),
            "abc+bac" | "123+213" => Ok(Family::AbcBac),
            other => Err(Error::Parse(format!("unknown family {other:?}"))),
        }
    }
}

/// Exponents of the weight monomial of one permutation.
///
/// The per-letter vectors are indexed by the letter itself and have length
/// `n + 1`; entries below the first meaningful letter (`j = 2` for `aj`/`ja`,
/// `j = 3` for `abj`) are always zero. Counts are `u64`, which is exact for
/// any permutation small enough to be scanned pattern by pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OccurrenceProfile {
    pub family: Family,
    /// Occurrences of the main pattern (`abc`, `cab` or `abcd`).
    pub main: u64,
    /// Occurrences of `bac` (abc+bac family only).
    pub secondary: Option<u64>,
    /// `aj[j]`: pairs `x ... j` with `x < j`.
    pub aj: Vec<u64>,
    /// `abj[j]`: increasing triples ending in `j` (abcd family only).
    pub abj: Option<Vec<u64>>,
    /// `ja[j]`: pairs `j ... x` with `x < j` (abc+bac family only).
    pub ja: Option<Vec<u64>>,
}

impl OccurrenceProfile {
    pub fn n(&self) -> usize {
        self.aj.len() - 1
    }

    fn first_positive(v: &[u64], from: usize) -> usize {
        (from..v.len()).find(|&j| v[j] > 0).unwrap_or(v.len())
    }

    /// Smallest `j` with an `aj` pattern, or `n + 1` if there is none. The
    /// permutation has no `aj` for `j <= I` exactly when `I` is below this.
    pub fn first_aj(&self) -> usize {
        Self::first_positive(&self.aj, 2)
    }

    pub fn first_abj(&self) -> usize {
        self.abj.as_deref().map_or(self.aj.len(), |v| Self::first_positive(v, 3))
    }

    pub fn first_ja(&self) -> usize {
        self.ja.as_deref().map_or(self.aj.len(), |v| Self::first_positive(v, 2))
    }

    /// Whether the permutation has exactly the given occurrence counts and no
    /// forbidden auxiliary patterns up to the given thresholds.
    ///
    /// - abc, cab: `occurrences = [r]`, `thresholds = [I]`: no `aj` for `j <= I`.
    /// - abcd: `[r]`, `[I1, I2]`: no `abj` for `j <= I1`, no `aj` for `j <= I2`.
    /// - abc+bac: `[r_abc, r_bac]`, `[I]`: no `aj` and no `ja` for `j <= I`.
    pub fn satisfies(&self, occurrences: &[u64], thresholds: &[usize]) -> bool {
        if occurrences[0] != self.main {
            return false;
        }
        match self.family {
            Family::Abc | Family::Cab => thresholds[0] < self.first_aj(),
            Family::Abcd => thresholds[0] < self.first_abj() && thresholds[1] < self.first_aj(),
            Family::AbcBac => {
                self.secondary == Some(occurrences[1])
                    && thresholds[0] < self.first_aj().min(self.first_ja())
            }
        }
    }
}

pub fn occurrence_profile(sigma: &Permutation, family: Family) -> OccurrenceProfile {
    profile_of(sigma.entries(), family)
}

pub(crate) fn profile_of(s: &[usize], family: Family) -> OccurrenceProfile {
    let n = s.len();
    // smaller_before[k]: entries before position k that are smaller than s[k]
    let smaller_before: Vec<u64> = (0..n)
        .map(|k| s[..k].iter().filter(|&&x| x < s[k]).count() as u64)
        .collect();
    let mut aj = vec![0u64; n + 1];
    for k in 0..n {
        aj[s[k]] = smaller_before[k];
    }

    // increasing pairs/triples ending at each position
    let pairs_ending = &smaller_before;
    let triples_ending: Vec<u64> = (0..n)
        .map(|k| (0..k).filter(|&i| s[i] < s[k]).map(|i| pairs_ending[i]).sum())
        .collect();

    let mut profile = OccurrenceProfile {
        family,
        main: 0,
        secondary: None,
        aj,
        abj: None,
        ja: None,
    };
    match family {
        Family::Abc => profile.main = triples_ending.iter().sum(),
        Family::Cab => profile.main = count_occurrences(s, &[3, 1, 2]),
        Family::Abcd => {
            profile.main = (0..n)
                .map(|k| (0..k).filter(|&i| s[i] < s[k]).map(|i| triples_ending[i]).sum::<u64>())
                .sum();
            let mut abj = vec![0u64; n + 1];
            for k in 0..n {
                abj[s[k]] = triples_ending[k];
            }
            profile.abj = Some(abj);
        }
        Family::AbcBac => {
            profile.main = triples_ending.iter().sum();
            profile.secondary = Some(count_occurrences(s, &[2, 1, 3]));
            let mut ja = vec![0u64; n + 1];
            for k in 0..n {
                ja[s[k]] = (s[k] - 1) as u64 - smaller_before[k];
            }
            profile.ja = Some(ja);
        }
    }
    profile
}
