//! Streaming enumeration of `S_n`.
//!
//! Nothing here materializes the full set: callers either pull permutations
//! one at a time from [`Permutations`] or visit them in place with
//! [`for_each_permutation`]. For parallel sweeps `S_n` is cut into
//! independent chunks by fixing a short prefix.

use super::Permutation;

/// Advances `xs` to the next permutation in lexicographic order. Returns
/// `false` (leaving `xs` sorted descending) once the last one is reached.
fn next_lexicographic(xs: &mut [usize]) -> bool {
    let Some(i) = xs.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = xs.iter().rposition(|&x| x > xs[i]).unwrap();
    xs.swap(i, j);
    xs[i + 1..].reverse();
    true
}

/// All permutations of `{1..n}` in lexicographic order.
pub struct Permutations {
    current: Vec<usize>,
    done: bool,
}

impl Permutations {
    pub fn new(n: usize) -> Self {
        Permutations { current: (1..=n).collect(), done: false }
    }
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let out = Permutation::from_entries_unchecked(self.current.clone());
        self.done = !next_lexicographic(&mut self.current);
        Some(out)
    }
}

/// Visits every permutation of `{1..n}` without allocating per item.
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut xs: Vec<usize> = (1..=n).collect();
    loop {
        f(&xs);
        if !next_lexicographic(&mut xs) {
            break;
        }
    }
}

/// Splits `S_n` into disjoint chunks, one per choice of the first two
/// entries (a single chunk when `n < 2`). Each chunk is given by its prefix.
pub fn permutation_chunks(n: usize) -> Vec<Vec<usize>> {
    if n < 2 {
        return vec![Vec::new()];
    }
    let mut out = Vec::with_capacity(n * (n - 1));
    for a in 1..=n {
        for b in (1..=n).filter(|&b| b != a) {
            out.push(vec![a, b]);
        }
    }
    out
}

/// Visits every permutation of `{1..n}` that starts with `prefix`.
pub(crate) fn for_each_with_prefix(n: usize, prefix: &[usize], mut f: impl FnMut(&[usize])) {
    let mut xs = prefix.to_vec();
    xs.extend((1..=n).filter(|v| !prefix.contains(v)));
    let k = prefix.len();
    loop {
        f(&xs);
        if !next_lexicographic(&mut xs[k..]) {
            break;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn counts_and_order() {
        assert_eq!(Permutations::new(0).count(), 1);
        assert_eq!(Permutations::new(1).count(), 1);
        assert_eq!(Permutations::new(5).count(), 120);
        let all: Vec<String> = Permutations::new(3).map(|p| p.to_string()).collect();
        assert_eq!(all, ["123", "132", "213", "231", "312", "321"]);
    }

    #[test]
    fn chunks_partition_sn() {
        for n in 0..=6 {
            let mut seen = HashSet::new();
            for prefix in permutation_chunks(n) {
                for_each_with_prefix(n, &prefix, |xs| {
                    assert!(xs.starts_with(&prefix));
                    assert!(seen.insert(xs.to_vec()));
                });
            }
            let mut total = 0;
            for_each_permutation(n, |_| total += 1);
            assert_eq!(seen.len(), total);
            assert_eq!(total, (1..=n).product::<usize>());
        }
    }
}
