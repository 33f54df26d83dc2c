//! Rank moments, symmetrized moments, and the counting identities that tie
//! k-marked symbols back to ordinary rank counts.

use std::collections::BTreeMap;

use crate::durfee::{durfee_rank_table, Flavor};
use crate::error::{Error, Result};
use crate::marked::enumerate_kmarked;
use crate::partition::RankTable;

/// `a (a-1) ... (a-b+1) / b!`, defined for negative `a`.
pub fn binom(a: i64, b: u32) -> i128 {
    let mut out: i128 = 1;
    for i in 0..i128::from(b) {
        out = out * (i128::from(a) - i) / (i + 1);
    }
    out
}

/// Rank distribution used by the moment formulas: partitions for the
/// ordinary flavor, odd Durfee symbols for the odd one.
pub fn rank_counts(n: u64, flavor: Flavor) -> BTreeMap<i64, u64> {
    match flavor {
        Flavor::Ordinary => RankTable::new(n).iter().collect(),
        Flavor::Odd => durfee_rank_table(n, flavor),
    }
}

/// `N_k(n) = sum_m m^k N(m; n)`.
pub fn rank_moment(k: u32, n: u64) -> i128 {
    RankTable::new(n)
        .iter()
        .map(|(m, c)| i128::from(m).pow(k) * i128::from(c))
        .sum()
}

/// `sum_m binom(m + floor((k-1)/2), k) count(m; n)`.
pub fn sym_moment(k: u32, n: u64, flavor: Flavor) -> i128 {
    let shift = (i64::from(k) - 1).div_euclid(2);
    rank_counts(n, flavor)
        .into_iter()
        .map(|(m, c)| binom(m + shift, k) * i128::from(c))
        .sum()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentCheck {
    pub k: u32,
    pub n: u64,
    pub flavor: Flavor,
    /// Number of (k+1)-marked symbols of `n`.
    pub marked: u64,
    /// `sym_moment(2k, n, flavor)`.
    pub moment: i128,
}

impl MomentCheck {
    pub fn holds(&self) -> bool {
        i128::from(self.marked) == self.moment
    }
}

/// Compares the number of (k+1)-marked symbols of `n` with the 2k-th
/// symmetrized moment.
pub fn check_moment_identity(k: u32, n: u64, flavor: Flavor) -> MomentCheck {
    MomentCheck {
        k,
        n,
        flavor,
        marked: enumerate_kmarked(n, k as usize + 1, flavor).len() as u64,
        moment: sym_moment(2 * k, n, flavor),
    }
}

/// Number of `(m_1..m_{k+1}, t_1..t_k)` with `sum |m_i| + 2 sum t_j = n`, in closed form.
pub fn solution_count(n: u64, k: u32) -> i128 {
    let (n, k) = (n as i64, 2 * k);
    binom(i64::from(k) + n, k) + binom(i64::from(k) + n - 1, k)
}

/// [`solution_count`] by direct enumeration.
pub fn solution_count_brute(n: u64, k: u32) -> u64 {
    // Each m_i is a signed value of absolute value a, each t_j contributes 2t.
    fn go(rest: u64, ms: u32, ts: u32) -> u64 {
        if ms > 0 {
            (0..=rest)
                .map(|a| if a == 0 { 1 } else { 2 } * go(rest - a, ms - 1, ts))
                .sum()
        } else if ts > 0 {
            (0..=rest / 2).map(|t| go(rest - 2 * t, 0, ts - 1)).sum()
        } else {
            u64::from(rest == 0)
        }
    }
    go(n, k + 1, k)
}

/// `sum_{j>=0} binom(j+k-2, k-2) count(sum |m_i| + 2j + k - 1; n)`.
pub fn main_identity_rhs(m: &[i64], n: u64, flavor: Flavor) -> Result<u64> {
    main_identity_with(m, &rank_counts(n, flavor))
}

/// [`main_identity_rhs`] against a precomputed rank distribution.
pub fn main_identity_with(m: &[i64], counts: &BTreeMap<i64, u64>) -> Result<u64> {
    let k = m.len();
    if k < 2 {
        return Err(Error::KTooSmall { k, min: 2 });
    }
    let base = m.iter().map(|x| x.abs()).sum::<i64>() + k as i64 - 1;
    let top = counts.keys().next_back().copied().unwrap_or(0);
    let mut total = 0u64;
    for j in 0.. {
        let r = base + 2 * j;
        if r > top {
            break;
        }
        let c = counts.get(&r).copied().unwrap_or(0);
        total += binom(j + k as i64 - 2, k as u32 - 2) as u64 * c;
    }
    Ok(total)
}
