//! Integer partitions, Dyson's rank, and exhaustive enumeration.
//!
//! Everything else in the crate is checked against the brute-force counts
//! produced here, so this module is deliberately plain.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// A finite non-increasing sequence of positive integers.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition { parts })
        } else {
            Err(Error::InvalidPartition(parts))
        }
    }

    /// Sorts and wraps an arbitrary multiset of positive parts.
    pub fn from_multiset(mut parts: Vec<u32>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// Largest part, 0 for the empty partition.
    pub fn largest(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Smallest part, `None` for the empty partition.
    pub fn smallest(&self) -> Option<u32> {
        self.parts.last().copied()
    }

    /// 1-based part access with zero padding past the end.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Order used by every enumerator: lexicographically decreasing.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("()");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// Constraints on the parts produced by [`partitions_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PartBounds {
    pub min: u32,
    pub max: u32,
    pub odd_only: bool,
}

impl PartBounds {
    pub fn new(min: u32, max: u32, odd_only: bool) -> Self {
        PartBounds { min: min.max(1), max, odd_only }
    }

    pub fn unbounded(n: u64) -> Self {
        PartBounds::new(1, u32::try_from(n).unwrap_or(u32::MAX), false)
    }

    fn admits(&self, p: u32) -> bool {
        p >= self.min && p <= self.max && (!self.odd_only || p % 2 == 1)
    }
}

/// All partitions of `n` whose parts satisfy `bounds`, lexicographically decreasing.
pub fn partitions_with(n: u64, bounds: PartBounds) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fill(n, bounds.max, bounds, &mut stack, &mut out);
    out
}

fn fill(rest: u64, cap: u32, bounds: PartBounds, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition::from_sorted_unchecked(stack.clone()));
        return;
    }
    let top = u64::from(cap).min(rest) as u32;
    for p in (bounds.min..=top).rev() {
        if !bounds.admits(p) {
            continue;
        }
        stack.push(p);
        fill(rest - u64::from(p), p, bounds, stack, out);
        stack.pop();
    }
}

/// Every partition of `n`, lexicographically decreasing.
pub fn enumerate_partitions(n: u64) -> Vec<Partition> {
    partitions_with(n, PartBounds::unbounded(n))
}

/// Dyson's rank: largest part minus number of parts (0 for the empty partition).
pub fn rank(p: &Partition) -> i64 {
    i64::from(p.largest()) - p.len() as i64
}

pub fn conjugate(p: &Partition) -> Partition {
    let cols = p.largest() as usize;
    let parts = (1..=cols)
        .map(|c| p.parts.iter().take_while(|&&x| x as usize >= c).count() as u32)
        .collect();
    Partition::from_sorted_unchecked(parts)
}

/// Side of the Durfee square.
pub fn durfee_side(p: &Partition) -> u32 {
    p.parts.iter().enumerate().take_while(|&(i, &x)| x as usize > i).count() as u32
}

/// Rank distribution of all partitions of a fixed `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankTable {
    n: u64,
    counts: BTreeMap<i64, u64>,
}

impl RankTable {
    pub fn new(n: u64) -> Self {
        let mut counts = BTreeMap::new();
        for p in enumerate_partitions(n) {
            *counts.entry(rank(&p)).or_insert(0u64) += 1;
        }
        RankTable { n, counts }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn get(&self, m: i64) -> u64 {
        self.counts.get(&m).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.counts.iter().map(|(&m, &c)| (m, c))
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }
}

/// N(m; n) by exhaustive enumeration.
pub fn count_rank(m: i64, n: u64) -> u64 {
    enumerate_partitions(n).iter().filter(|p| rank(p) == m).count() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// p(n) through Euler's pentagonal recurrence, independent of the enumerator.
    fn pentagonal_counts(max: usize) -> Vec<u64> {
        let mut pc = vec![0i64; max + 1];
        pc[0] = 1;
        for n in 1..=max as i64 {
            let mut s = 0i64;
            for k in 1.. {
                let g1 = k * (3 * k - 1) / 2;
                if g1 > n {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                s += sign * pc[(n - g1) as usize];
                let g2 = k * (3 * k + 1) / 2;
                if g2 <= n {
                    s += sign * pc[(n - g2) as usize];
                }
            }
            pc[n as usize] = s;
        }
        pc.into_iter().map(|x| x as u64).collect()
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::new(vec![]).is_ok());
    }

    #[test]
    fn enumerates_small_cases() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        let four: Vec<_> = enumerate_partitions(4);
        assert_eq!(
            four,
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
        assert_eq!(enumerate_partitions(10).len(), 42);
    }

    #[test]
    fn counts_match_pentagonal_recurrence() {
        let pc = pentagonal_counts(30);
        for n in 0..=30u64 {
            assert_eq!(enumerate_partitions(n).len() as u64, pc[n as usize], "n={n}");
        }
    }

    #[test]
    fn enumeration_is_canonical_and_distinct() {
        for n in 0..=15 {
            let all = enumerate_partitions(n);
            for w in all.windows(2) {
                assert_eq!(w[0].canonical_cmp(&w[1]), Ordering::Less);
            }
            assert!(all.iter().all(|q| q.weight() == n));
        }
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&p(&[2, 2])), 0);
        assert_eq!(rank(&Partition::empty()), 0);
        assert_eq!(rank(&p(&[4])), 3);
    }

    #[test]
    fn count_rank_examples() {
        assert_eq!(count_rank(0, 4), 1);
        assert_eq!(count_rank(-3, 4), 1);
        assert_eq!(count_rank(5, 4), 0);
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(conjugate(&p(&[3, 1])), p(&[2, 1, 1]));
        assert_eq!(conjugate(&Partition::empty()), Partition::empty());
        assert_eq!(conjugate(&p(&[2, 2])), p(&[2, 2]));
    }

    #[test]
    fn durfee_side_examples() {
        assert_eq!(durfee_side(&p(&[4, 3, 1])), 2);
        assert_eq!(durfee_side(&p(&[1, 1, 1])), 1);
        assert_eq!(durfee_side(&Partition::empty()), 0);
    }

    #[test]
    fn rank_distribution_sums_and_is_symmetric() {
        for n in 0..=30 {
            let table = RankTable::new(n);
            assert_eq!(table.total(), enumerate_partitions(n).len() as u64);
            for (m, c) in table.iter() {
                assert_eq!(table.get(-m), c, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn conjugation_is_an_involution_negating_rank() {
        for n in 0..=20 {
            for q in enumerate_partitions(n) {
                let c = conjugate(&q);
                assert_eq!(conjugate(&c), q);
                assert_eq!(rank(&c), -rank(&q));
                assert_eq!(durfee_side(&c), durfee_side(&q));
            }
        }
    }

    #[test]
    fn odd_bounded_partitions() {
        let got = partitions_with(6, PartBounds::new(1, 3, true));
        assert_eq!(got, vec![p(&[3, 3]), p(&[3, 1, 1, 1]), p(&[1, 1, 1, 1, 1, 1])]);
        let got = partitions_with(5, PartBounds::new(2, 3, false));
        assert_eq!(got, vec![p(&[3, 2])]);
    }
}
