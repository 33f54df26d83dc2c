//! k-marked Durfee symbols (ordinary and odd), their ranks, balanced parts and
//! exhaustive enumeration.
//!
//! Vector `i` of a symbol is stored at `vectors[i - 1]`; the conventional
//! display order is vector k first.
//!
//! Validity follows the row-ordering form of the definition: reading the top
//! row (and the bottom row) from vector k down to vector 1 gives a
//! non-increasing sequence, and every bottom part of vector i lies between
//! the largest top parts of vectors i-1 and i. In terms of the pairs:
//!
//! 1. `alpha^i` is non-empty for `i < k`;
//! 2. `beta^{i-1}_1 <= alpha^{i-1}_1 <= min beta^i` (vacuous when `beta^i` is
//!    empty) and `alpha^{i-1}_1 <= min alpha^i` (`<= cap` when `alpha^k` is
//!    empty);
//! 3. every part of vector k is at most the cap (`d`, or `2d+1` for odd).

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::durfee::{DurfeeSymbol, Flavor};
use crate::error::{Error, Result};
use crate::partition::{partitions_with, PartBounds, Partition};

/// A two-line array `(alpha / beta)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PartitionPair {
    pub alpha: Partition,
    pub beta: Partition,
}

impl PartitionPair {
    pub fn new(alpha: Partition, beta: Partition) -> Self {
        PartitionPair { alpha, beta }
    }

    pub fn weight(&self) -> u64 {
        self.alpha.weight() + self.beta.weight()
    }

    pub fn length_difference(&self) -> i64 {
        self.alpha.len() as i64 - self.beta.len() as i64
    }
}

impl fmt::Display for PartitionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} / {}", self.alpha, self.beta)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Row {
    Top,
    Bottom,
}

impl fmt::Display for Row {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Row::Top => "alpha",
            Row::Bottom => "beta",
        })
    }
}

/// First violated condition found by [`KMarkedSymbol::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NoVectors,
    ZeroSubscript,
    /// Condition (1).
    EmptyTopRow { vector: usize },
    EvenPart { vector: usize, row: Row, part: u32 },
    /// Condition (3) for vector k, or the top-row ordering when alpha^k is empty.
    CapExceeded { vector: usize, row: Row, part: u32, cap: u32 },
    /// Condition (2), left inequality.
    BottomAboveTop { vector: usize, bottom: u32, top: u32 },
    /// Condition (2), right inequality: alpha^{i-1}_1 > min beta^i.
    BottomBelowPrevious { vector: usize, smallest: u32, bound: u32 },
    /// Top-row ordering: alpha^{i-1}_1 > min alpha^i.
    TopRowOrder { vector: usize, smallest: u32, previous_largest: u32 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::NoVectors => write!(f, "symbol has no vectors (k = 0)"),
            Violation::ZeroSubscript => write!(f, "ordinary symbols need subscript d >= 1"),
            Violation::EmptyTopRow { vector } => {
                write!(f, "condition (1): alpha^{vector} must be non-empty")
            }
            Violation::EvenPart { vector, row, part } => {
                write!(f, "odd flavor: {row}^{vector} has even part {part}")
            }
            Violation::CapExceeded { vector, row, part, cap } => {
                write!(f, "condition (3): {row}^{vector} has part {part} > {cap}")
            }
            Violation::BottomAboveTop { vector, bottom, top } => write!(
                f,
                "condition (2): beta^{vector}_1 = {bottom} > alpha^{vector}_1 = {top}"
            ),
            Violation::BottomBelowPrevious { vector, smallest, bound } => write!(
                f,
                "condition (2): min beta^{vector} = {smallest} < alpha^{}_1 = {bound}",
                vector - 1
            ),
            Violation::TopRowOrder { vector, smallest, previous_largest } => write!(
                f,
                "top row order: min alpha^{vector} = {smallest} < alpha^{}_1 = {previous_largest}",
                vector - 1
            ),
        }
    }
}

/// Ranks `(m_1, ..., m_k)`.
pub type RankVector = Vec<i64>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KMarkedSymbol {
    vectors: Vec<PartitionPair>,
    d: u32,
    flavor: Flavor,
}

impl KMarkedSymbol {
    pub fn new(vectors: Vec<PartitionPair>, d: u32, flavor: Flavor) -> Result<Self> {
        let s = KMarkedSymbol { vectors, d, flavor };
        s.validate().map_err(Error::InvalidSymbol)?;
        Ok(s)
    }

    /// Builds a symbol without checking; use [`validate`](Self::validate) to inspect it.
    pub fn new_unchecked(vectors: Vec<PartitionPair>, d: u32, flavor: Flavor) -> Self {
        KMarkedSymbol { vectors, d, flavor }
    }

    pub fn k(&self) -> usize {
        self.vectors.len()
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn cap(&self) -> u32 {
        self.flavor.cap(self.d)
    }

    pub fn vectors(&self) -> &[PartitionPair] {
        &self.vectors
    }

    pub fn into_vectors(self) -> Vec<PartitionPair> {
        self.vectors
    }

    /// Vector `i`, 1-based.
    pub fn vector(&self, i: usize) -> Result<&PartitionPair> {
        if i == 0 || i > self.k() {
            return Err(Error::IndexOutOfRange { index: i, k: self.k() });
        }
        Ok(&self.vectors[i - 1])
    }

    pub(crate) fn with_vectors(&self, vectors: Vec<PartitionPair>) -> Self {
        KMarkedSymbol { vectors, d: self.d, flavor: self.flavor }
    }

    pub fn weight(&self) -> u64 {
        self.vectors.iter().map(PartitionPair::weight).sum::<u64>() + self.flavor.base_weight(self.d)
    }

    pub fn validate(&self) -> std::result::Result<(), Violation> {
        let k = self.k();
        if k == 0 {
            return Err(Violation::NoVectors);
        }
        if self.flavor == Flavor::Ordinary && self.d == 0 {
            return Err(Violation::ZeroSubscript);
        }
        let cap = self.cap();
        for (idx, v) in self.vectors.iter().enumerate() {
            let vector = idx + 1;
            if vector < k && v.alpha.is_empty() {
                return Err(Violation::EmptyTopRow { vector });
            }
            if self.flavor == Flavor::Odd {
                for (row, part) in [(Row::Top, &v.alpha), (Row::Bottom, &v.beta)] {
                    if let Some(&x) = part.parts().iter().find(|&&x| x % 2 == 0) {
                        return Err(Violation::EvenPart { vector, row, part: x });
                    }
                }
            }
        }
        let last = &self.vectors[k - 1];
        for (row, part) in [(Row::Top, &last.alpha), (Row::Bottom, &last.beta)] {
            if part.largest() > cap {
                return Err(Violation::CapExceeded { vector: k, row, part: part.largest(), cap });
            }
        }
        for i in 2..=k {
            let prev = &self.vectors[i - 2];
            let cur = &self.vectors[i - 1];
            let top = prev.alpha.largest();
            if prev.beta.largest() > top {
                return Err(Violation::BottomAboveTop {
                    vector: i - 1,
                    bottom: prev.beta.largest(),
                    top,
                });
            }
            if let Some(smallest) = cur.beta.smallest() {
                if smallest < top {
                    return Err(Violation::BottomBelowPrevious { vector: i, smallest, bound: top });
                }
            }
            match cur.alpha.smallest() {
                Some(smallest) if smallest < top => {
                    return Err(Violation::TopRowOrder { vector: i, smallest, previous_largest: top });
                }
                None if top > cap => {
                    return Err(Violation::CapExceeded { vector: i - 1, row: Row::Top, part: top, cap });
                }
                _ => {}
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// The i-th rank, 1-based.
    pub fn ith_rank(&self, i: usize) -> Result<i64> {
        let v = self.vector(i)?;
        let shift = if i < self.k() { 1 } else { 0 };
        Ok(v.length_difference() - shift)
    }

    pub fn ranks(&self) -> RankVector {
        let k = self.k();
        self.vectors
            .iter()
            .enumerate()
            .map(|(idx, v)| v.length_difference() - i64::from(idx + 1 < k))
            .collect()
    }

    /// View of a 1-marked symbol as a Durfee symbol.
    pub fn as_durfee(&self) -> Option<DurfeeSymbol> {
        match self.vectors.as_slice() {
            [v] => Some(DurfeeSymbol {
                alpha: v.alpha.clone(),
                beta: v.beta.clone(),
                d: self.d,
                flavor: self.flavor,
            }),
            _ => None,
        }
    }

    /// Ascending `d`, then vectors 1..k, each top row before its bottom row.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.d.cmp(&other.d).then_with(|| {
            for (a, b) in self.vectors.iter().zip(&other.vectors) {
                let o = a.alpha.canonical_cmp(&b.alpha).then_with(|| a.beta.canonical_cmp(&b.beta));
                if o != Ordering::Equal {
                    return o;
                }
            }
            self.k().cmp(&other.k())
        })
    }

    /// Two-row display with subscripts, vector k leftmost, e.g.
    /// `4₃ 4₃ 3₂ 3₂ 2₂ 2₁ / 5₃ 3₂ 2₂ 2₁ _5`.
    pub fn pretty(&self) -> String {
        let row = |pick: fn(&PartitionPair) -> &Partition| {
            let cells: Vec<String> = self
                .vectors
                .iter()
                .enumerate()
                .rev()
                .flat_map(|(idx, v)| {
                    pick(v)
                        .parts()
                        .iter()
                        .map(move |x| format!("{x}{}", subscript(idx + 1)))
                })
                .collect();
            if cells.is_empty() {
                "-".to_string()
            } else {
                cells.join(" ")
            }
        };
        format!("{} / {} _{}", row(|v| &v.alpha), row(|v| &v.beta), self.d)
    }
}

fn subscript(i: usize) -> String {
    const DIGITS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    i.to_string().chars().map(|c| DIGITS[c as usize - '0' as usize]).collect()
}

impl fmt::Display for KMarkedSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

impl From<&DurfeeSymbol> for KMarkedSymbol {
    fn from(s: &DurfeeSymbol) -> Self {
        s.to_marked()
    }
}

/// Memoized bounded partition lists; enumeration hits the same
/// `(weight, bounds)` cells many times.
struct PartitionCache {
    cells: HashMap<(u64, PartBounds), Vec<Partition>>,
}

impl PartitionCache {
    fn new() -> Self {
        PartitionCache { cells: HashMap::new() }
    }

    fn get(&mut self, n: u64, bounds: PartBounds) -> &[Partition] {
        self.cells.entry((n, bounds)).or_insert_with(|| partitions_with(n, bounds))
    }
}

/// Every valid k-marked symbol of weight `n`, sorted by [`KMarkedSymbol::canonical_cmp`].
///
/// Top rows are generated from vector k down to vector 1 so each row can be
/// bounded by the smallest part above it; bottom rows follow, each confined
/// to the interval its neighbours' largest top parts allow.
pub fn enumerate_kmarked(n: u64, k: usize, flavor: Flavor) -> Vec<KMarkedSymbol> {
    assert!(k >= 1, "k must be at least 1");
    let mut out = Vec::new();
    let mut cache = PartitionCache::new();
    for d in flavor.subscripts_up_to(n) {
        let mut gen = Generator {
            k,
            flavor,
            d,
            cap: flavor.cap(d),
            tops: vec![Partition::empty(); k],
            bottoms: vec![Partition::empty(); k],
            out: &mut out,
        };
        gen.top(k, n - flavor.base_weight(d), &mut cache);
    }
    out.sort_by(KMarkedSymbol::canonical_cmp);
    out
}

struct Generator<'a> {
    k: usize,
    flavor: Flavor,
    d: u32,
    cap: u32,
    tops: Vec<Partition>,
    bottoms: Vec<Partition>,
    out: &'a mut Vec<KMarkedSymbol>,
}

impl Generator<'_> {
    /// Choose alpha^i, then recurse to alpha^{i-1}.
    fn top(&mut self, i: usize, budget: u64, cache: &mut PartitionCache) {
        if i == 0 {
            self.bottom(1, budget, cache);
            return;
        }
        let max = if i == self.k {
            self.cap
        } else {
            self.tops[i].smallest().unwrap_or(self.cap)
        };
        // alpha^1..alpha^{i-1} each need at least one part.
        let reserve = (i - 1) as u64;
        if budget < reserve {
            return;
        }
        let min_weight = u64::from(i < self.k);
        for w in min_weight..=budget - reserve {
            let candidates = cache.get(w, self.flavor.bounds(1, max)).to_vec();
            for alpha in candidates {
                self.tops[i - 1] = alpha;
                self.top(i - 1, budget - w, cache);
            }
        }
        self.tops[i - 1] = Partition::empty();
    }

    /// Choose beta^i, then recurse to beta^{i+1}.
    fn bottom(&mut self, i: usize, budget: u64, cache: &mut PartitionCache) {
        if i > self.k {
            if budget == 0 {
                let vectors = self
                    .tops
                    .iter()
                    .zip(&self.bottoms)
                    .map(|(a, b)| PartitionPair::new(a.clone(), b.clone()))
                    .collect();
                self.out.push(KMarkedSymbol { vectors, d: self.d, flavor: self.flavor });
            }
            return;
        }
        let min = if i == 1 { 1 } else { self.tops[i - 2].largest().max(1) };
        let max = if i == self.k { self.cap } else { self.tops[i - 1].largest() };
        if i == self.k {
            // Last row absorbs the remaining weight exactly.
            let candidates = cache.get(budget, self.flavor.bounds(min, max)).to_vec();
            for beta in candidates {
                self.bottoms[i - 1] = beta;
                self.bottom(i + 1, 0, cache);
            }
        } else {
            for w in 0..=budget {
                let candidates = cache.get(w, self.flavor.bounds(min, max)).to_vec();
                for beta in candidates {
                    self.bottoms[i - 1] = beta;
                    self.bottom(i + 1, budget - w, cache);
                }
            }
        }
        self.bottoms[i - 1] = Partition::empty();
    }
}

/// Distribution of rank vectors over the k-marked symbols of `n`.
pub fn kmarked_rank_table(n: u64, k: usize, flavor: Flavor) -> BTreeMap<RankVector, u64> {
    let mut counts = BTreeMap::new();
    for s in enumerate_kmarked(n, k, flavor) {
        *counts.entry(s.ranks()).or_insert(0u64) += 1;
    }
    counts
}

pub fn count_kmarked(m: &[i64], n: u64, flavor: Flavor) -> u64 {
    assert!(!m.is_empty(), "rank vector must be non-empty");
    enumerate_kmarked(n, m.len(), flavor)
        .iter()
        .filter(|s| s.ranks() == m)
        .count() as u64
}

/// Deficiencies `d_j` of every bottom part, together with the balanced verdicts.
fn balance_scan(p: &PartitionPair) -> (Vec<i64>, Vec<bool>) {
    let top = p.alpha.parts();
    let mut unbalanced_before = 0i64;
    let mut deficiencies = Vec::with_capacity(p.beta.len());
    let mut balanced = Vec::with_capacity(p.beta.len());
    for (idx, &b) in p.beta.parts().iter().enumerate() {
        let j = idx + 1;
        let larger = top.iter().skip(1).filter(|&&a| a > b).count() as i64;
        let dj = larger - unbalanced_before;
        let ok = p.alpha.part(j + 1) <= b && dj == 0;
        if !ok {
            unbalanced_before += 1;
        }
        deficiencies.push(dj);
        balanced.push(ok);
    }
    (deficiencies, balanced)
}

/// 1-based indices of the balanced parts of `beta`.
pub fn balanced_parts(p: &PartitionPair) -> Vec<usize> {
    let (_, balanced) = balance_scan(p);
    balanced
        .iter()
        .enumerate()
        .filter_map(|(idx, &b)| b.then_some(idx + 1))
        .collect()
}

pub fn deficiencies(p: &PartitionPair) -> Vec<i64> {
    balance_scan(p).0
}

/// `nb_i` for i = 1..k; `nb_k` is always 0.
pub fn balanced_numbers(s: &KMarkedSymbol) -> Vec<usize> {
    let k = s.k();
    s.vectors
        .iter()
        .enumerate()
        .map(|(idx, v)| if idx + 1 < k { balanced_parts(v).len() } else { 0 })
        .collect()
}

pub fn is_strict_shifted_pair(p: &PartitionPair) -> bool {
    p.alpha.len() > p.beta.len()
        && p.beta.parts().iter().enumerate().all(|(idx, &b)| p.alpha.part(idx + 2) > b)
}

pub fn is_strict_shifted_symbol(s: &KMarkedSymbol) -> bool {
    let k = s.k();
    s.vectors[..k - 1].iter().all(is_strict_shifted_pair)
}
