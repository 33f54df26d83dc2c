//! The four constructive maps between k-marked symbols and Durfee symbols:
//!
//! * `phi`   strict-shifted k-marked symbol -> Durfee symbol (erase the marks),
//!   inverted by greedy splitting;
//! * `psi`   pair -> strict-shifted pair (move balanced bottom parts up),
//!   inverted through the subscript sequence;
//! * `psi_lift` / `psi_lift_inverse`  `psi` applied to vectors 1..k-1;
//! * `theta` flips the sign of one rank.
//!
//! `symmetry_map` composes them to permute the rank vector of a symbol.

use crate::durfee::DurfeeSymbol;
use crate::error::{Error, Result};
use crate::marked::{
    balanced_numbers, balanced_parts, is_strict_shifted_pair, KMarkedSymbol, PartitionPair,
};
use crate::partition::Partition;

fn checked(s: &KMarkedSymbol) -> Result<()> {
    s.validate().map_err(Error::InvalidSymbol)
}

fn merge_sorted(a: &[u32], b: &[u32]) -> Partition {
    let mut parts = Vec::with_capacity(a.len() + b.len());
    parts.extend_from_slice(a);
    parts.extend_from_slice(b);
    parts.sort_unstable_by(|x, y| y.cmp(x));
    Partition::from_sorted_unchecked(parts)
}

/// Erases the vector marks of a strict-shifted symbol.
pub fn phi(s: &KMarkedSymbol) -> Result<DurfeeSymbol> {
    checked(s)?;
    let k = s.k();
    if let Some(bad) = s.vectors()[..k - 1].iter().position(|v| !is_strict_shifted_pair(v)) {
        return Err(Error::NotStrictShifted { vector: bad + 1 });
    }
    let mut top = Vec::new();
    let mut bottom = Vec::new();
    for v in s.vectors() {
        top.extend_from_slice(v.alpha.parts());
        bottom.extend_from_slice(v.beta.parts());
    }
    Ok(DurfeeSymbol {
        alpha: merge_sorted(&top, &[]),
        beta: merge_sorted(&bottom, &[]),
        d: s.d(),
        flavor: s.flavor(),
    })
}

/// Splits a Durfee symbol of rank `sum(m) + k - 1` into a strict-shifted
/// k-marked symbol with ranks `m`.
///
/// Vector k takes `m_k + j` top parts and `j` bottom parts, `j` the largest
/// index with `delta_j >= gamma_{m_k + j + 1}`; vectors k-1..2 repeat this on
/// the remainder with one extra top part; vector 1 keeps what is left.
pub fn phi_inverse(ds: &DurfeeSymbol, m: &[i64]) -> Result<KMarkedSymbol> {
    let k = m.len();
    if k == 0 {
        return Err(Error::KTooSmall { k, min: 1 });
    }
    if m.iter().any(|&x| x < 0) {
        return Err(Error::NegativeRank(m.to_vec()));
    }
    ds.to_marked().validate().map_err(Error::InvalidSymbol)?;
    let expected = m.iter().sum::<i64>() + k as i64 - 1;
    if ds.rank() != expected {
        return Err(Error::RankMismatch { expected, found: ds.rank() });
    }

    let mut gamma = ds.alpha.parts();
    let mut delta = ds.beta.parts();
    let mut vectors = vec![PartitionPair::default(); k];
    for i in (2..=k).rev() {
        let extra = usize::from(i < k);
        let base = m[i - 1] as usize + extra;
        let pad = |idx: usize| gamma.get(idx).copied().unwrap_or(0);
        let j = (1..=delta.len())
            .rev()
            .find(|&j| delta[j - 1] >= pad(base + j))
            .unwrap_or(0);
        let take = base + j;
        debug_assert!(take <= gamma.len());
        vectors[i - 1] = PartitionPair::new(
            Partition::from_sorted_unchecked(gamma[..take].to_vec()),
            Partition::from_sorted_unchecked(delta[..j].to_vec()),
        );
        gamma = &gamma[take..];
        delta = &delta[j..];
    }
    vectors[0] = PartitionPair::new(
        Partition::from_sorted_unchecked(gamma.to_vec()),
        Partition::from_sorted_unchecked(delta.to_vec()),
    );
    KMarkedSymbol::new(vectors, ds.d, ds.flavor)
}

/// Subscripts `g_i` attached to the top row of a strict-shifted pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubscriptSeq {
    g: Vec<usize>,
}

impl SubscriptSeq {
    pub fn values(&self) -> &[usize] {
        &self.g
    }

    /// `t_v`: 1-based position of the smallest top part carrying subscript `v`.
    pub fn smallest_with(&self, v: usize) -> Option<usize> {
        self.g.iter().rposition(|&x| x == v).map(|p| p + 1)
    }

    /// Whether every value `0..=top` occurs.
    pub fn covers(&self, top: usize) -> bool {
        (0..=top).all(|v| self.g.contains(&v))
    }
}

/// `g_1 = 0` and `g_i = (i - 2) - #{parts of beta >= alpha_i}` for `i >= 2`.
pub fn subscripts(p: &PartitionPair) -> Result<SubscriptSeq> {
    if !is_strict_shifted_pair(p) {
        return Err(Error::PairNotStrictShifted);
    }
    let beta = p.beta.parts();
    let g = p
        .alpha
        .parts()
        .iter()
        .enumerate()
        .map(|(idx, &a)| {
            if idx == 0 {
                return 0;
            }
            let before = idx - 1;
            let at_least = beta.iter().filter(|&&b| b >= a).count();
            debug_assert!(before >= at_least, "negative subscript in {p}");
            before - at_least
        })
        .collect();
    Ok(SubscriptSeq { g })
}

/// Moves the balanced parts of `beta` into `alpha`.
pub fn psi(p: &PartitionPair) -> Result<PartitionPair> {
    if p.beta.largest() > p.alpha.largest() {
        return Err(Error::BottomExceedsTop { alpha: p.alpha.largest(), beta: p.beta.largest() });
    }
    let balanced = balanced_parts(p);
    let mut moved = Vec::with_capacity(balanced.len());
    let mut kept = Vec::with_capacity(p.beta.len() - balanced.len());
    let mut it = balanced.iter().peekable();
    for (idx, &b) in p.beta.parts().iter().enumerate() {
        if it.peek() == Some(&&(idx + 1)) {
            moved.push(b);
            it.next();
        } else {
            kept.push(b);
        }
    }
    Ok(PartitionPair::new(
        merge_sorted(p.alpha.parts(), &moved),
        Partition::from_sorted_unchecked(kept),
    ))
}

/// Moves the `r` parts `alpha_{t_0}, ..., alpha_{t_{r-1}}` back to the bottom row.
///
/// Subscripts `0..=M-2` always occur, so any `r <= M - 1` works; the result
/// may then have a negative length difference.
pub fn psi_inverse(p: &PartitionPair, r: usize) -> Result<PartitionPair> {
    if !is_strict_shifted_pair(p) {
        return Err(Error::PairNotStrictShifted);
    }
    let length_difference = p.length_difference();
    if r > 0 && length_difference < r as i64 + 1 {
        return Err(Error::InsufficientLengthDifference { length_difference, r });
    }
    if r == 0 {
        return Ok(p.clone());
    }
    let g = subscripts(p)?;
    let mut take = vec![false; p.alpha.len()];
    for v in 0..r {
        let pos = g
            .smallest_with(v)
            .expect("subscripts 0..m+2r-2 exist for strict-shifted pairs");
        take[pos - 1] = true;
    }
    let mut kept = Vec::new();
    let mut moved = Vec::new();
    for (&a, &t) in p.alpha.parts().iter().zip(&take) {
        if t {
            moved.push(a);
        } else {
            kept.push(a);
        }
    }
    Ok(PartitionPair::new(
        Partition::from_sorted_unchecked(kept),
        merge_sorted(p.beta.parts(), &moved),
    ))
}

/// `psi` on every vector except the last.
pub fn psi_lift(s: &KMarkedSymbol) -> Result<KMarkedSymbol> {
    checked(s)?;
    let k = s.k();
    let vectors = s
        .vectors()
        .iter()
        .enumerate()
        .map(|(idx, v)| if idx + 1 < k { psi(v) } else { Ok(v.clone()) })
        .collect::<Result<Vec<_>>>()?;
    Ok(s.with_vectors(vectors))
}

/// Undo [`psi_lift`], restoring `t_i` balanced parts in vector `i`.
pub fn psi_lift_inverse(s: &KMarkedSymbol, t: &[usize]) -> Result<KMarkedSymbol> {
    checked(s)?;
    let k = s.k();
    if t.len() != k || t[k - 1] != 0 {
        return Err(Error::BadBalancedVector { k, t: t.to_vec() });
    }
    let vectors = s
        .vectors()
        .iter()
        .enumerate()
        .map(|(idx, v)| {
            if idx + 1 == k {
                return Ok(v.clone());
            }
            psi_inverse(v, t[idx])
                .map_err(|e| Error::Vector { vector: idx + 1, source: Box::new(e) })
        })
        .collect::<Result<Vec<_>>>()?;
    KMarkedSymbol::new(vectors, s.d(), s.flavor())
}

/// Negates the `p`-th rank. An involution.
pub fn theta(s: &KMarkedSymbol, p: usize) -> Result<KMarkedSymbol> {
    checked(s)?;
    let k = s.k();
    if p == 0 || p > k {
        return Err(Error::IndexOutOfRange { index: p, k });
    }
    let mut vectors = s.vectors().to_vec();
    let v = &mut vectors[p - 1];
    if p == k {
        std::mem::swap(&mut v.alpha, &mut v.beta);
    } else {
        let top = v.alpha.parts();
        let alpha = merge_sorted(v.beta.parts(), &top[..1]);
        let beta = Partition::from_sorted_unchecked(top[1..].to_vec());
        *v = PartitionPair::new(alpha, beta);
    }
    Ok(s.with_vectors(vectors))
}

/// Rebuilds `s` with rank vector `(m_{perm(1)}, ..., m_{perm(k)})`.
///
/// `perm` is 1-based. Signs are cleared with `theta`, the symbol is folded to a
/// Durfee symbol through `psi_lift` and `phi`, split again with the permuted
/// ranks, unfolded with the same balanced vector, and the signs are restored.
pub fn symmetry_map(s: &KMarkedSymbol, perm: &[usize]) -> Result<KMarkedSymbol> {
    checked(s)?;
    let k = s.k();
    let mut seen = vec![false; k];
    let ok = perm.len() == k
        && perm.iter().all(|&p| {
            let fresh = p >= 1 && p <= k && !seen[p - 1];
            if fresh {
                seen[p - 1] = true;
            }
            fresh
        });
    if !ok {
        return Err(Error::BadPermutation(perm.to_vec(), k));
    }

    let m = s.ranks();
    let mut cur = s.clone();
    for (idx, &mi) in m.iter().enumerate() {
        if mi < 0 {
            cur = theta(&cur, idx + 1)?;
        }
    }
    let t = balanced_numbers(&cur);
    let folded = phi(&psi_lift(&cur)?)?;

    let target: Vec<i64> = (0..k)
        .map(|i| m[perm[i] - 1].abs() + 2 * t[i] as i64)
        .collect();
    let split = phi_inverse(&folded, &target)?;
    let mut out = psi_lift_inverse(&split, &t)?;
    for i in 0..k {
        if m[perm[i] - 1] < 0 {
            out = theta(&out, i + 1)?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::durfee::Flavor;
    use crate::marked::fixtures::*;
    use crate::marked::{enumerate_kmarked, is_strict_shifted_symbol};

    fn ds(alpha: &[u32], beta: &[u32], d: u32) -> DurfeeSymbol {
        DurfeeSymbol::new(part(alpha), part(beta), d, Flavor::Ordinary).unwrap()
    }

    /// The 3-marked strict-shifted symbol of 86 produced by splitting.
    fn symbol_86() -> KMarkedSymbol {
        symbol(
            &[(&[1, 1], &[]), (&[3, 3, 3, 2, 2, 1], &[2, 1, 1, 1]), (&[6, 6, 3], &[5, 5, 4])],
            6,
        )
    }

    fn durfee_86() -> DurfeeSymbol {
        ds(&[6, 6, 3, 3, 3, 3, 2, 2, 1, 1, 1], &[5, 5, 4, 2, 1, 1, 1], 6)
    }

    #[test]
    fn phi_inverse_splits_the_86_example() {
        let got = phi_inverse(&durfee_86(), &[1, 1, 0]).unwrap();
        assert_eq!(got, symbol_86());
        assert_eq!(phi(&got).unwrap(), durfee_86());
        assert_eq!(durfee_86().rank(), 4);
    }

    #[test]
    fn phi_inverse_errors() {
        assert!(matches!(
            phi_inverse(&durfee_86(), &[1, 1, 1]),
            Err(Error::RankMismatch { expected: 5, found: 4 })
        ));
        assert!(matches!(phi_inverse(&durfee_86(), &[-1, 4, 0]), Err(Error::NegativeRank(_))));
        assert!(phi_inverse(&durfee_86(), &[]).is_err());
    }

    #[test]
    fn phi_rejects_non_strict_shifted() {
        assert_eq!(phi(&symbol_55()), Err(Error::NotStrictShifted { vector: 1 }));
    }

    #[test]
    fn one_marked_maps_are_identities() {
        let d = ds(&[1, 1], &[1], 1);
        let s = KMarkedSymbol::from(&d);
        assert_eq!(phi(&s).unwrap(), d);
        assert_eq!(phi_inverse(&d, &[1]).unwrap(), s);
        assert_eq!(psi_lift(&s).unwrap(), s);
    }

    #[test]
    fn subscript_example() {
        let p = pair(&[6, 5, 5, 5, 3, 3, 3, 2, 1], &[4, 4, 3]);
        let g = subscripts(&p).unwrap();
        assert_eq!(g.values(), &[0, 0, 1, 2, 0, 1, 2, 3, 4]);
        let smallest: Vec<u32> =
            (0..=4).map(|v| p.alpha.part(g.smallest_with(v).unwrap())).collect();
        assert_eq!(smallest, vec![3, 3, 3, 2, 1]);
        assert_eq!(subscripts(&pair(&[2, 1], &[])).unwrap().values(), &[0, 0]);
        assert_eq!(subscripts(&pair(&[2, 2], &[2])), Err(Error::PairNotStrictShifted));
    }

    #[test]
    fn psi_examples() {
        let p = pair(&[6, 5, 5, 3, 3, 2], &[5, 4, 4, 3]);
        let q = pair(&[6, 5, 5, 5, 3, 3, 3, 2], &[4, 4]);
        assert_eq!(psi(&p).unwrap(), q);
        assert_eq!(psi_inverse(&q, 2).unwrap(), p);

        let empty_bottom = pair(&[3, 1], &[]);
        assert_eq!(psi(&empty_bottom).unwrap(), empty_bottom);

        let p = pair(&[4, 3, 3, 1, 1], &[3, 2, 2]);
        let q = pair(&[4, 3, 3, 3, 1, 1], &[2, 2]);
        assert_eq!(psi(&p).unwrap(), q);
        assert_eq!(psi_inverse(&q, 1).unwrap(), p);

        assert!(matches!(psi(&pair(&[2], &[3])), Err(Error::BottomExceedsTop { .. })));
    }

    #[test]
    fn psi_inverse_example() {
        let p = pair(&[6, 5, 5, 5, 3, 3, 3, 2, 1], &[4, 4, 3]);
        let got = psi_inverse(&p, 2).unwrap();
        assert_eq!(got, pair(&[6, 5, 5, 5, 3, 2, 1], &[4, 4, 3, 3, 3]));
        assert_eq!(balanced_parts(&got).len(), 2);
        assert_eq!(psi(&got).unwrap(), p);
        assert_eq!(psi_inverse(&p, 0).unwrap(), p);
        assert!(matches!(
            psi_inverse(&p, 6),
            Err(Error::InsufficientLengthDifference { length_difference: 6, r: 6 })
        ));
    }

    #[test]
    fn theta_examples() {
        let s = symbol(&[(&[1, 1], &[]), (&[1], &[1])], 1);
        assert_eq!(theta(&s, 2).unwrap(), s);
        assert_eq!(theta(&s, 1).unwrap().ranks(), vec![-1, 0]);
        assert!(theta(&s, 3).is_err());
    }

    #[test]
    fn symmetry_identity_permutation_is_identity() {
        for s in enumerate_kmarked(9, 3, Flavor::Ordinary) {
            assert_eq!(symmetry_map(&s, &[1, 2, 3]).unwrap(), s);
        }
        let s = symbol_55();
        assert!(symmetry_map(&s, &[1, 1, 3]).is_err());
        assert!(symmetry_map(&s, &[1, 2]).is_err());
    }

    #[test]
    fn lifted_symbols_are_strict_shifted() {
        for n in 0..=10 {
            for s in enumerate_kmarked(n, 3, Flavor::Ordinary) {
                let lifted = psi_lift(&s).unwrap();
                assert!(is_strict_shifted_symbol(&lifted), "{s}");
                assert!(lifted.is_valid());
            }
        }
    }

    mod chain {
        use super::*;

        pub fn eta() -> KMarkedSymbol {
            symbol(&[(&[1], &[1, 1]), (&[3, 3, 2, 2, 1], &[3, 3, 1]), (&[6], &[5])], 6)
        }
        pub fn eta1() -> KMarkedSymbol {
            symbol(&[(&[1, 1, 1], &[]), (&[3, 3, 2, 2, 1], &[3, 3, 1]), (&[6], &[5])], 6)
        }
        pub fn eta2() -> KMarkedSymbol {
            symbol(&[(&[1, 1, 1], &[]), (&[3, 3, 3, 3, 2, 2, 1], &[1]), (&[6], &[5])], 6)
        }
        pub fn eta3() -> DurfeeSymbol {
            ds(&[6, 3, 3, 3, 3, 2, 2, 1, 1, 1, 1], &[5, 1], 6)
        }
        pub fn bar2() -> KMarkedSymbol {
            symbol(&[(&[1, 1], &[]), (&[3, 3, 3, 3, 2, 2, 1, 1], &[1]), (&[6], &[5])], 6)
        }
        pub fn bar1() -> KMarkedSymbol {
            symbol(&[(&[1, 1], &[]), (&[3, 3, 2, 2, 1, 1], &[3, 3, 1]), (&[6], &[5])], 6)
        }
        pub fn bar() -> KMarkedSymbol {
            symbol(&[(&[1, 1], &[]), (&[3, 3, 3, 1], &[3, 2, 2, 1, 1]), (&[6], &[5])], 6)
        }
    }

    #[test]
    fn transposition_chain_step_by_step() {
        use chain::*;
        assert_eq!(eta().weight(), 68);
        assert_eq!(eta().ranks(), vec![-2, 1, 0]);
        assert_eq!(theta(&eta(), 1).unwrap(), eta1());
        assert_eq!(eta1().ranks(), vec![2, 1, 0]);
        assert_eq!(balanced_numbers(&eta1()), vec![0, 2, 0]);
        assert_eq!(psi_lift(&eta1()).unwrap(), eta2());
        assert_eq!(eta2().ranks(), vec![2, 5, 0]);
        assert_eq!(phi(&eta2()).unwrap(), eta3());
        assert_eq!(eta3().rank(), 9);
        assert_eq!(phi_inverse(&eta3(), &[1, 6, 0]).unwrap(), bar2());
        assert_eq!(psi_lift_inverse(&bar2(), &[0, 2, 0]).unwrap(), bar1());
        assert_eq!(bar1().ranks(), vec![1, 2, 0]);
        assert_eq!(theta(&bar1(), 2).unwrap(), bar());
        assert_eq!(bar().ranks(), vec![1, -2, 0]);
        assert_eq!(symmetry_map(&eta(), &[2, 1, 3]).unwrap(), bar());
        assert_eq!(symmetry_map(&bar(), &[2, 1, 3]).unwrap(), eta());
    }

    fn pairs_up_to(w: u64) -> Vec<PartitionPair> {
        use crate::partition::enumerate_partitions;
        let mut out = Vec::new();
        for total in 0..=w {
            for a in 0..=total {
                for alpha in enumerate_partitions(a) {
                    for beta in enumerate_partitions(total - a) {
                        out.push(PartitionPair::new(alpha.clone(), beta));
                    }
                }
            }
        }
        out
    }

    #[test]
    fn psi_round_trips_both_ways() {
        for p in pairs_up_to(12).into_iter().filter(|p| !p.alpha.is_empty()) {
            if p.beta.largest() > p.alpha.largest() {
                assert!(psi(&p).is_err());
                continue;
            }
            let r = balanced_parts(&p).len();
            let q = psi(&p).unwrap();
            assert!(is_strict_shifted_pair(&q), "{p}");
            assert_eq!(q.length_difference(), p.length_difference() + 2 * r as i64);
            assert_eq!(psi_inverse(&q, r).unwrap(), p, "{p}");
        }
        for p in pairs_up_to(12).into_iter().filter(is_strict_shifted_pair) {
            for r in 0..p.length_difference() as usize {
                let back = psi_inverse(&p, r).unwrap();
                assert_eq!(balanced_parts(&back).len(), r, "{p} r={r}");
                assert!(back.beta.largest() <= back.alpha.largest());
                assert_eq!(psi(&back).unwrap(), p, "{p} r={r}");
            }
        }
    }

    #[test]
    fn subscript_law() {
        for p in pairs_up_to(12).into_iter().filter(is_strict_shifted_pair) {
            let g = subscripts(&p).unwrap();
            let m = p.length_difference() as usize;
            if m < 2 {
                continue;
            }
            assert!(g.covers(m - 2), "{p}");
            let smallest: Vec<u32> =
                (0..=m - 2).map(|v| p.alpha.part(g.smallest_with(v).unwrap())).collect();
            assert!(smallest.windows(2).all(|w| w[0] >= w[1]), "{p}");
        }
    }

    #[test]
    fn theta_and_psi_lift_on_corpora() {
        for flavor in [Flavor::Ordinary, Flavor::Odd] {
            for n in 0..=10 {
                for s in enumerate_kmarked(n, 2, flavor) {
                    let m = s.ranks();
                    for p in 1..=2 {
                        let once = theta(&s, p).unwrap();
                        assert!(once.is_valid());
                        assert_eq!(once.ranks()[p - 1], -m[p - 1]);
                        assert_eq!(theta(&once, p).unwrap(), s);
                    }
                    let t = balanced_numbers(&s);
                    let lifted = psi_lift(&s).unwrap();
                    assert_eq!(lifted.ranks(), vec![m[0] + 2 * t[0] as i64, m[1]]);
                    assert_eq!(psi_lift_inverse(&lifted, &t).unwrap(), s);
                }
            }
        }
    }

    #[test]
    fn phi_round_trips_on_corpora() {
        for flavor in [Flavor::Ordinary, Flavor::Odd] {
            for k in 2..=3 {
                for n in 0..=10 {
                    for s in enumerate_kmarked(n, k, flavor) {
                        let m = s.ranks();
                        if !is_strict_shifted_symbol(&s) || m.iter().any(|&x| x < 0) {
                            continue;
                        }
                        let ds = phi(&s).unwrap();
                        assert_eq!(ds.weight(), n);
                        assert_eq!(ds.rank(), m.iter().sum::<i64>() + k as i64 - 1);
                        assert_eq!(phi_inverse(&ds, &m).unwrap(), s);
                    }
                }
            }
        }
    }

    #[test]
    fn symmetry_map_permutes_ranks() {
        for flavor in [Flavor::Ordinary, Flavor::Odd] {
            for n in 0..=9 {
                for s in enumerate_kmarked(n, 3, flavor) {
                    let m = s.ranks();
                    for perm in [[2, 1, 3], [1, 3, 2], [3, 1, 2]] {
                        let out = symmetry_map(&s, &perm).unwrap();
                        assert!(out.is_valid());
                        assert_eq!(out.weight(), n);
                        let want: Vec<i64> = perm.iter().map(|&p| m[p - 1]).collect();
                        assert_eq!(out.ranks(), want, "{s} {perm:?}");
                        let mut inv = [0; 3];
                        for (i, &p) in perm.iter().enumerate() {
                            inv[p - 1] = i + 1;
                        }
                        assert_eq!(symmetry_map(&out, &inv).unwrap(), s);
                    }
                }
            }
        }
    }
}
