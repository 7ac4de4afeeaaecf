//! Counting occurrences of a pattern inside a permutation.

use num_bigint::BigInt;

use super::{Pattern, Permutation};

/// Number of index subsequences of `sigma` whose reduced form is `pi`.
///
/// Increasing patterns use a length-by-length DP over "increasing
/// subsequences ending here" (`O(n^2 r)`). Other patterns fix the positions of
/// entries `2..r` and count the admissible first entries with a prefix-count
/// table (`O(n^(r-1))`), which beats plain `C(n, r)` enumeration for the
/// short patterns used here.
pub fn count_pattern(sigma: &Permutation, pi: &Pattern) -> BigInt {
    BigInt::from(count_occurrences(sigma.entries(), pi.entries()))
}

/// Reference implementation: enumerate every `r`-subset of positions.
pub fn count_pattern_naive(sigma: &Permutation, pi: &Pattern) -> BigInt {
    let s = sigma.entries();
    let p = pi.entries();
    let (n, r) = (s.len(), p.len());
    if r > n {
        return BigInt::from(0);
    }
    let mut idx: Vec<usize> = (0..r).collect();
    let mut total = 0u64;
    loop {
        let matches = (0..r).all(|a| (0..r).all(|b| (p[a] < p[b]) == (s[idx[a]] < s[idx[b]])));
        total += u64::from(matches);
        // next r-combination of 0..n
        let Some(i) = (0..r).rev().find(|&i| idx[i] < n - r + i) else {
            break;
        };
        idx[i] += 1;
        for j in i + 1..r {
            idx[j] = idx[j - 1] + 1;
        }
    }
    BigInt::from(total)
}

/// Number of inversions via merge sort; independent of the pattern counters.
pub fn inversions(sigma: &Permutation) -> u64 {
    fn sort_count(xs: &mut [usize], buf: &mut Vec<usize>) -> u64 {
        let n = xs.len();
        if n < 2 {
            return 0;
        }
        let mid = n / 2;
        let mut count = sort_count(&mut xs[..mid], buf) + sort_count(&mut xs[mid..], buf);
        buf.clear();
        let (mut i, mut j) = (0, mid);
        while i < mid && j < n {
            if xs[i] <= xs[j] {
                buf.push(xs[i]);
                i += 1;
            } else {
                // xs[j] jumps over every remaining left element
                count += (mid - i) as u64;
                buf.push(xs[j]);
                j += 1;
            }
        }
        buf.extend_from_slice(&xs[i..mid]);
        buf.extend_from_slice(&xs[j..]);
        xs.copy_from_slice(buf);
        count
    }
    let mut xs = sigma.entries().to_vec();
    let mut buf = Vec::with_capacity(xs.len());
    sort_count(&mut xs, &mut buf)
}

pub(crate) fn count_occurrences(s: &[usize], p: &[usize]) -> u64 {
    let (n, r) = (s.len(), p.len());
    if r > n {
        return 0;
    }
    match r {
        0 => 1,
        1 => n as u64,
        _ if p.iter().enumerate().all(|(i, &e)| e == i + 1) => count_increasing(s, r),
        _ => count_by_prefix_table(s, p),
    }
}

pub(crate) fn count_increasing(s: &[usize], r: usize) -> u64 {
    let n = s.len();
    // ends[k] = increasing subsequences of length k+1 ending at each position
    let mut ends = vec![1u64; n];
    for _ in 1..r {
        let next: Vec<u64> = (0..n)
            .map(|k| (0..k).filter(|&i| s[i] < s[k]).map(|i| ends[i]).sum())
            .collect();
        ends = next;
    }
    ends.iter().sum()
}

fn count_by_prefix_table(s: &[usize], p: &[usize]) -> u64 {
    let n = s.len();
    // below[pos][v] = #{i < pos : s[i] < v}, for v in 0..=n+1
    let mut below = vec![vec![0u64; n + 2]; n + 1];
    for pos in 0..n {
        let (prev, cur) = below.split_at_mut(pos + 1);
        cur[0].copy_from_slice(&prev[pos]);
        for v in s[pos] + 1..=n + 1 {
            cur[0][v] += 1;
        }
    }

    struct Search<'a> {
        s: &'a [usize],
        p: &'a [usize],
        below: &'a [Vec<u64>],
        chosen: Vec<usize>,
    }

    impl Search<'_> {
        fn run(&mut self, t: usize, start: usize) -> u64 {
            let (s, p) = (self.s, self.p);
            let r = p.len();
            if t == r {
                let first = self.chosen[0];
                let (mut lo, mut hi) = (0, s.len() + 1);
                for (k, &pos) in self.chosen.iter().enumerate() {
                    let v = s[pos];
                    if p[k + 1] < p[0] {
                        lo = lo.max(v);
                    } else {
                        hi = hi.min(v);
                    }
                }
                if lo >= hi {
                    return 0;
                }
                let row = &self.below[first];
                return row[hi] - row[lo + 1];
            }
            let mut total = 0;
            for pos in start..s.len() - (r - 1 - t) {
                let v = s[pos];
                let consistent = self
                    .chosen
                    .iter()
                    .enumerate()
                    .all(|(k, &q)| (p[k + 1] < p[t]) == (s[q] < v));
                if consistent {
                    self.chosen.push(pos);
                    total += self.run(t + 1, pos + 1);
                    self.chosen.pop();
                }
            }
            total
        }
    }

    let mut search = Search { s, p, below: &below, chosen: Vec::with_capacity(p.len()) };
    // the first pattern entry needs at least one position before entry 2
    search.run(1, 1)
}

#[cfg(test)]
mod tests {
    use super::super::for_each_permutation;
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn abc_examples() {
        assert_eq!(count_pattern(&perm("4321"), &Pattern::abc()), 0.into());
        assert_eq!(count_pattern(&perm("1234"), &Pattern::abc()), 4.into());
        assert_eq!(count_pattern(&perm("2314"), &Pattern::abc()), 1.into());
    }

    #[test]
    fn pattern_longer_than_permutation() {
        assert_eq!(count_pattern(&perm("21"), &Pattern::abcd()), 0.into());
        assert_eq!(count_pattern_naive(&perm("21"), &Pattern::abcd()), 0.into());
    }

    #[test]
    fn fast_matches_naive_for_all_short_patterns() {
        let patterns: Vec<Pattern> = (1..=4)
            .flat_map(|r| super::super::Permutations::new(r).map(Pattern::new))
            .collect();
        for n in 0..=7 {
            for_each_permutation(n, |xs| {
                let sigma = Permutation::from_entries_unchecked(xs.to_vec());
                for pi in &patterns {
                    assert_eq!(
                        count_pattern(&sigma, pi),
                        count_pattern_naive(&sigma, pi),
                        "{sigma} {pi}"
                    );
                }
            });
        }
    }

    #[test]
    fn inversions_match_ba_count() {
        for n in 0..=8 {
            for_each_permutation(n, |xs| {
                let sigma = Permutation::from_entries_unchecked(xs.to_vec());
                assert_eq!(BigInt::from(inversions(&sigma)), count_pattern(&sigma, &Pattern::ba()));
            });
        }
    }
}
