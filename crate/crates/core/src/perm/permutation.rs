use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// A permutation of `{1..n}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    entries: Vec<usize>,
}

impl Permutation {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for &e in &entries {
            if e == 0 || e > n || seen[e] {
                return Err(Error::InvalidInput(format!(
                    "{entries:?} is not a permutation of 1..{n}"
                )));
            }
            seen[e] = true;
        }
        Ok(Permutation { entries })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { entries: (1..=n).collect() }
    }

    pub(crate) fn from_entries_unchecked(entries: Vec<usize>) -> Self {
        Permutation { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (pos, &v) in self.entries.iter().enumerate() {
            inv[v - 1] = pos + 1;
        }
        Permutation { entries: inv }
    }

    pub fn reverse(&self) -> Permutation {
        Permutation { entries: self.entries.iter().rev().copied().collect() }
    }

    pub fn complement(&self) -> Permutation {
        let n = self.len();
        Permutation { entries: self.entries.iter().map(|&v| n + 1 - v).collect() }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for e in &self.entries {
                write!(f, "{e}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

/// Accepts `2314` (single digits) or `10,2,1,...` (comma separated).
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let entries: Result<Vec<usize>> = if s.contains(',') {
            s.split(',')
                .map(|p| p.trim().parse().map_err(|_| Error::Parse(format!("bad entry {p:?}"))))
                .collect()
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad digit {c:?} in {s:?}")))
                })
                .collect()
        };
        Permutation::new(entries?)
    }
}

/// A pattern: a permutation of `{1..r}` searched for inside longer permutations.
///
/// Patterns parse from either alphabetic (`abc`, `cab`, `abcd`) or digit
/// (`123`, `312`) notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pattern(Permutation);

impl Pattern {
    pub fn new(perm: Permutation) -> Self {
        Pattern(perm)
    }

    pub fn abc() -> Self {
        Pattern(Permutation::identity(3))
    }

    pub fn cab() -> Self {
        Pattern(Permutation { entries: vec![3, 1, 2] })
    }

    pub fn bac() -> Self {
        Pattern(Permutation { entries: vec![2, 1, 3] })
    }

    pub fn abcd() -> Self {
        Pattern(Permutation::identity(4))
    }

    pub fn ba() -> Self {
        Pattern(Permutation { entries: vec![2, 1] })
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[usize] {
        self.0.entries()
    }

    pub fn as_permutation(&self) -> &Permutation {
        &self.0
    }

    pub fn is_increasing(&self) -> bool {
        self.entries().iter().enumerate().all(|(i, &e)| e == i + 1)
    }

    pub fn reverse_complement(&self) -> Pattern {
        Pattern(self.0.reverse().complement())
    }

    /// Alphabetic form, e.g. `cab`.
    pub fn letters(&self) -> String {
        self.entries()
            .iter()
            .map(|&e| char::from(b'a' + (e - 1) as u8))
            .collect()
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letters())
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s.len() > 26 {
            return Err(Error::Parse(format!("bad pattern {s:?}")));
        }
        let entries: Result<Vec<usize>> = if s.chars().all(|c| c.is_ascii_lowercase()) {
            Ok(s.bytes().map(|b| (b - b'a') as usize + 1).collect())
        } else if s.chars().all(|c| c.is_ascii_digit()) {
            Ok(s.bytes().map(|b| (b - b'0') as usize).collect())
        } else {
            Err(Error::Parse(format!("pattern {s:?} must be letters or digits")))
        };
        Ok(Pattern(Permutation::new(entries?)?))
    }
}

/// Order-isomorphic relabeling of distinct integers onto `{1..r}`.
pub fn reduce(word: &[i64]) -> Result<Pattern> {
    let mut sorted = word.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidInput(format!("{word:?} has repeated entries")));
    }
    let entries = word
        .iter()
        .map(|x| sorted.binary_search(x).unwrap() + 1)
        .collect();
    Ok(Pattern(Permutation { entries }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce(&[2, 5, 7, 3, 4]).unwrap().entries(), &[1, 4, 5, 2, 3]);
        assert_eq!(reduce(&[5, 7, 9]).unwrap(), Pattern::abc());
        assert_eq!(reduce(&[1, 2, 3, 4, 5]).unwrap().entries(), &[1, 2, 3, 4, 5]);
        assert!(reduce(&[3, 1, 3]).is_err());
        assert!(reduce(&[]).unwrap().is_empty());
    }

    #[test]
    fn pattern_parsing() {
        assert_eq!("abc".parse::<Pattern>().unwrap(), Pattern::abc());
        assert_eq!("123".parse::<Pattern>().unwrap(), Pattern::abc());
        assert_eq!("cab".parse::<Pattern>().unwrap(), "312".parse().unwrap());
        assert_eq!("bac".parse::<Pattern>().unwrap(), Pattern::bac());
        assert_eq!(Pattern::abcd().letters(), "abcd");
        assert!("abd".parse::<Pattern>().is_err());
        assert!("12a".parse::<Pattern>().is_err());
        assert!("".parse::<Pattern>().is_err());
    }

    #[test]
    fn permutation_parsing() {
        let p: Permutation = "2314".parse().unwrap();
        assert_eq!(p.entries(), &[2, 3, 1, 4]);
        assert_eq!(p.to_string(), "2314");
        let long: Permutation = "10,9,8,7,6,5,4,3,2,1".parse().unwrap();
        assert_eq!(long.len(), 10);
        assert_eq!(long.to_string(), "10,9,8,7,6,5,4,3,2,1");
        assert!("2214".parse::<Permutation>().is_err());
        assert!("2305".parse::<Permutation>().is_err());
    }

    #[test]
    fn symmetries() {
        let p: Permutation = "2314".parse().unwrap();
        assert_eq!(p.inverse().entries(), &[3, 1, 2, 4]);
        assert_eq!(p.reverse().entries(), &[4, 1, 3, 2]);
        assert_eq!(p.complement().entries(), &[3, 2, 4, 1]);
        assert_eq!(Pattern::cab().reverse_complement().entries(), &[2, 3, 1]);
        assert_eq!(Pattern::abc().reverse_complement(), Pattern::abc());
    }
}
