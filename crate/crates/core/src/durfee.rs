//! Durfee symbols in the ordinary and odd flavors, and the Durfee-square
//! dissection that puts ordinary symbols in bijection with partitions.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::marked::{KMarkedSymbol, PartitionPair};
use crate::partition::{conjugate, durfee_side, partitions_with, PartBounds, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    Ordinary,
    Odd,
}

impl Flavor {
    /// Largest admissible part for subscript `d`.
    pub fn cap(self, d: u32) -> u32 {
        match self {
            Flavor::Ordinary => d,
            Flavor::Odd => 2 * d + 1,
        }
    }

    /// Weight contributed by the subscript alone.
    pub fn base_weight(self, d: u32) -> u64 {
        let d = u64::from(d);
        match self {
            Flavor::Ordinary => d * d,
            Flavor::Odd => 2 * d * d + 2 * d + 1,
        }
    }

    pub fn min_subscript(self) -> u32 {
        match self {
            Flavor::Ordinary => 1,
            Flavor::Odd => 0,
        }
    }

    pub fn odd_parts(self) -> bool {
        self == Flavor::Odd
    }

    /// Subscripts whose base weight does not exceed `n`.
    pub fn subscripts_up_to(self, n: u64) -> impl Iterator<Item = u32> {
        (self.min_subscript()..).take_while(move |&d| self.base_weight(d) <= n)
    }

    pub(crate) fn bounds(self, min: u32, max: u32) -> PartBounds {
        PartBounds::new(min, max, self.odd_parts())
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Flavor::Ordinary => "ordinary",
            Flavor::Odd => "odd",
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Flavor {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "ordinary" => Ok(Flavor::Ordinary),
            "odd" => Ok(Flavor::Odd),
            other => Err(format!("unknown flavor {other:?} (expected ordinary|odd)")),
        }
    }
}

/// A two-row array `(alpha / beta)_d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DurfeeSymbol {
    pub alpha: Partition,
    pub beta: Partition,
    pub d: u32,
    pub flavor: Flavor,
}

impl DurfeeSymbol {
    pub fn new(alpha: Partition, beta: Partition, d: u32, flavor: Flavor) -> Result<Self> {
        let s = DurfeeSymbol { alpha, beta, d, flavor };
        s.to_marked().validate().map_err(Error::InvalidSymbol)?;
        Ok(s)
    }

    pub fn weight(&self) -> u64 {
        self.alpha.weight() + self.beta.weight() + self.flavor.base_weight(self.d)
    }

    pub fn rank(&self) -> i64 {
        self.alpha.len() as i64 - self.beta.len() as i64
    }

    /// The same data viewed as a 1-marked symbol.
    pub fn to_marked(&self) -> KMarkedSymbol {
        KMarkedSymbol::new_unchecked(
            vec![PartitionPair::new(self.alpha.clone(), self.beta.clone())],
            self.d,
            self.flavor,
        )
    }

    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.d
            .cmp(&other.d)
            .then_with(|| self.alpha.canonical_cmp(&other.alpha))
            .then_with(|| self.beta.canonical_cmp(&other.beta))
    }
}

impl fmt::Display for DurfeeSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} / {})_{}", self.alpha, self.beta, self.d)
    }
}

/// Durfee-square dissection: the strip right of the square, conjugated, becomes
/// the top row; the rows below the square become the bottom row.
pub fn to_durfee(p: &Partition) -> Result<DurfeeSymbol> {
    if p.is_empty() {
        return Err(Error::NoDurfeeSquare);
    }
    let d = durfee_side(p);
    let strip: Vec<u32> = p.parts()[..d as usize]
        .iter()
        .map(|&x| x - d)
        .filter(|&x| x > 0)
        .collect();
    let alpha = conjugate(&Partition::from_sorted_unchecked(strip));
    let beta = Partition::from_sorted_unchecked(p.parts()[d as usize..].to_vec());
    Ok(DurfeeSymbol { alpha, beta, d, flavor: Flavor::Ordinary })
}

pub fn from_durfee(s: &DurfeeSymbol) -> Result<Partition> {
    if s.flavor == Flavor::Odd {
        return Err(Error::NoPartitionPreimage);
    }
    s.to_marked().validate().map_err(Error::InvalidSymbol)?;
    let strip = conjugate(&s.alpha);
    let mut parts: Vec<u32> = (1..=s.d as usize).map(|i| s.d + strip.part(i)).collect();
    parts.extend_from_slice(s.beta.parts());
    Ok(Partition::from_sorted_unchecked(parts))
}

/// All Durfee symbols of weight `n`: ascending `d`, then top row, then bottom row
/// (rows in lexicographically decreasing order).
pub fn enumerate_durfee(n: u64, flavor: Flavor) -> Vec<DurfeeSymbol> {
    let mut out = Vec::new();
    for d in flavor.subscripts_up_to(n) {
        let rest = n - flavor.base_weight(d);
        let bounds = flavor.bounds(1, flavor.cap(d));
        for a in 0..=rest {
            let betas = partitions_with(rest - a, bounds);
            for alpha in partitions_with(a, bounds) {
                for beta in &betas {
                    out.push(DurfeeSymbol { alpha: alpha.clone(), beta: beta.clone(), d, flavor });
                }
            }
        }
    }
    out.sort_by(DurfeeSymbol::canonical_cmp);
    out
}

/// Rank distribution of the Durfee symbols of `n`.
pub fn durfee_rank_table(n: u64, flavor: Flavor) -> BTreeMap<i64, u64> {
    let mut counts = BTreeMap::new();
    for s in enumerate_durfee(n, flavor) {
        *counts.entry(s.rank()).or_insert(0u64) += 1;
    }
    counts
}

pub fn count_durfee_rank(m: i64, n: u64, flavor: Flavor) -> u64 {
    durfee_rank_table(n, flavor).get(&m).copied().unwrap_or(0)
}
