//! Exhaustive verification sweeps behind the `verify` command.
//!
//! Every suite walks a finite corpus, compares two independently computed
//! quantities, and reports the number of cases and the first counterexample
//! in a fixed order, so reports are reproducible byte for byte.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::bijections::{
    phi, phi_inverse, psi, psi_inverse, psi_lift, psi_lift_inverse, subscripts, symmetry_map,
    theta,
};
use crate::durfee::{enumerate_durfee, Flavor};
use crate::marked::{
    balanced_numbers, balanced_parts, deficiencies, enumerate_kmarked, is_strict_shifted_pair,
    is_strict_shifted_symbol, KMarkedSymbol, PartitionPair, RankVector,
};
use crate::moments::{main_identity_with, rank_counts, solution_count, solution_count_brute, sym_moment};
use crate::partition::enumerate_partitions;
use crate::qseries::{rk_lhs, rk_rhs_product, rk_rhs_partialfraction, EvalPoint};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Main,
    Cor13,
    Cor11,
    Thm7,
    Psi,
    Phi,
    Subscripts,
    Symmetry,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Main,
        Suite::Cor13,
        Suite::Cor11,
        Suite::Thm7,
        Suite::Psi,
        Suite::Phi,
        Suite::Subscripts,
        Suite::Symmetry,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Main => "main",
            Suite::Cor13 => "cor13",
            Suite::Cor11 => "cor11",
            Suite::Thm7 => "thm7",
            Suite::Psi => "psi",
            Suite::Phi => "phi",
            Suite::Subscripts => "subscripts",
            Suite::Symmetry => "symmetry",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// Corpus limits shared by all suites.
#[derive(Clone, Debug)]
pub struct Bounds {
    /// Largest weight of k-marked symbols.
    pub n: u64,
    /// Largest number of marks (at least 2).
    pub k: usize,
    /// Largest `|alpha| + |beta|` for pair suites.
    pub pair_weight: u64,
    /// Truncation order of series suites.
    pub order: usize,
    pub x: EvalPoint,
    pub flavors: Vec<Flavor>,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            n: 12,
            k: 3,
            pair_weight: 12,
            order: 12,
            x: EvalPoint::from_integers(&[2, 3]).expect("non-zero point"),
            flavors: vec![Flavor::Ordinary, Flavor::Odd],
        }
    }
}

impl Bounds {
    /// Applies `key=value` settings separated by commas: `n`, `k`, `pairs`, `order`.
    pub fn apply(&mut self, bounds: &str) -> Result<(), String> {
        for item in bounds.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| format!("bound {item:?} is not key=value"))?;
            let parse = |v: &str| v.parse::<u64>().map_err(|e| format!("bound {key}: {e}"));
            match key {
                "n" => self.n = parse(value)?,
                "k" => self.k = parse(value)? as usize,
                "pairs" => self.pair_weight = parse(value)?,
                "order" | "q" => self.order = parse(value)? as usize,
                _ => return Err(format!("unknown bound {key:?} (expected n, k, pairs, order)")),
            }
        }
        if self.k < 2 {
            return Err("bound k must be at least 2".into());
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub identity: String,
    pub bound: String,
    pub cases: u64,
    pub counterexample: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let verdict = if c.passed() { "PASS" } else { "FAIL" };
            write!(f, "{verdict}\t{}\t{}\tcases={}", c.identity, c.bound, c.cases)?;
            if let Some(ce) = &c.counterexample {
                write!(f, "\tcounterexample: {ce}")?;
            }
            writeln!(f)?;
        }
        let failed = self.checks.iter().filter(|c| !c.passed()).count();
        writeln!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}

/// Source of k-marked symbols; swapped out in tests to make sure a broken
/// corpus is caught.
pub type Corpus = dyn Fn(u64, usize, Flavor) -> Vec<KMarkedSymbol> + Send + Sync;

/// Outcome of one cell of a sweep: cases examined and the first failure.
type Cell = (u64, Option<String>);

fn gather(cells: Vec<Cell>) -> Cell {
    let cases = cells.iter().map(|c| c.0).sum();
    let first = cells.into_iter().find_map(|c| c.1);
    (cases, first)
}

fn fmt_vec<T: fmt::Display>(v: &[T]) -> String {
    let s: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", s.join(","))
}

/// Rank vectors of length `k` with `sum |m_i| <= total`.
fn rank_vectors(k: usize, total: i64) -> Vec<RankVector> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in -total..=total {
        for mut rest in rank_vectors(k - 1, total - first.abs()) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Non-negative vectors of length `k` summing to `total`.
fn compositions(total: i64, k: usize) -> Vec<RankVector> {
    if k == 1 {
        return vec![vec![total]];
    }
    (0..=total)
        .flat_map(|first| {
            compositions(total - first, k - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k);
            out.push(q);
        }
    }
    out.sort();
    out
}

fn pairs_up_to(w: u64) -> Vec<PartitionPair> {
    let mut out = Vec::new();
    for total in 0..=w {
        for a in 0..=total {
            let betas = enumerate_partitions(total - a);
            for alpha in enumerate_partitions(a) {
                for beta in &betas {
                    out.push(PartitionPair::new(alpha.clone(), beta.clone()));
                }
            }
        }
    }
    out
}

pub struct Verifier {
    bounds: Bounds,
    corpus: Box<Corpus>,
}

impl Verifier {
    pub fn new(bounds: Bounds) -> Self {
        Verifier { bounds, corpus: Box::new(enumerate_kmarked) }
    }

    pub fn with_corpus(bounds: Bounds, corpus: Box<Corpus>) -> Self {
        Verifier { bounds, corpus }
    }

    pub fn bounds(&self) -> &Bounds {
        &self.bounds
    }

    pub fn run(&self, suites: &[Suite]) -> Report {
        let mut checks = Vec::new();
        for &suite in suites {
            checks.extend(self.suite(suite));
        }
        Report { checks }
    }

    pub fn run_all(&self) -> Report {
        self.run(&Suite::ALL)
    }

    pub fn suite(&self, suite: Suite) -> Vec<Check> {
        match suite {
            Suite::Main => self.main(),
            Suite::Cor13 => self.cor13(),
            Suite::Cor11 => self.cor11(),
            Suite::Thm7 => self.thm7(),
            Suite::Psi => self.psi(),
            Suite::Phi => self.phi(),
            Suite::Subscripts => self.subscripts(),
            Suite::Symmetry => self.symmetry(),
        }
    }

    fn cells(&self, k_min: usize) -> Vec<(usize, u64)> {
        (k_min..=self.bounds.k)
            .flat_map(|k| (0..=self.bounds.n).map(move |n| (k, n)))
            .collect()
    }

    fn bound_nk(&self, k_min: usize) -> String {
        format!("k={}..{},n<={}", k_min, self.bounds.k, self.bounds.n)
    }

    fn table(&self, n: u64, k: usize, flavor: Flavor) -> BTreeMap<RankVector, u64> {
        let mut t = BTreeMap::new();
        for s in (self.corpus)(n, k, flavor) {
            *t.entry(s.ranks()).or_insert(0u64) += 1;
        }
        t
    }

    fn main(&self) -> Vec<Check> {
        self.bounds
            .flavors
            .iter()
            .map(|&flavor| {
                let cells: Vec<Cell> = self
                    .cells(2)
                    .par_iter()
                    .map(|&(k, n)| {
                        let table = self.table(n, k, flavor);
                        let counts = rank_counts(n, flavor);
                        let mut ms = rank_vectors(k, n as i64);
                        let outside = |m: &&RankVector| m.iter().map(|x| x.abs()).sum::<i64>() > n as i64;
                        ms.extend(table.keys().filter(outside).cloned());
                        let mut bad = None;
                        for m in &ms {
                            let lhs = table.get(m).copied().unwrap_or(0);
                            let rhs = main_identity_with(m, &counts).unwrap_or(0);
                            if lhs != rhs {
                                bad = Some(format!(
                                    "m={} n={n}: symbols={lhs} rank-sum={rhs}",
                                    fmt_vec(m)
                                ));
                                break;
                            }
                        }
                        (ms.len() as u64, bad)
                    })
                    .collect();
                let (cases, counterexample) = gather(cells);
                Check {
                    identity: format!("main/{flavor}"),
                    bound: self.bound_nk(2),
                    cases,
                    counterexample,
                }
            })
            .collect()
    }

    fn cor13(&self) -> Vec<Check> {
        let mut checks: Vec<Check> = self
            .bounds
            .flavors
            .iter()
            .map(|&flavor| {
                let cells: Vec<Cell> = self
                    .cells(2)
                    .par_iter()
                    .map(|&(k, n)| {
                        let half = k as u32 - 1;
                        let marked = (self.corpus)(n, k, flavor).len() as i128;
                        let moment = sym_moment(2 * half, n, flavor);
                        let bad = (marked != moment).then(|| {
                            format!("k={half} n={n}: marked={marked} moment={moment}")
                        });
                        (1, bad)
                    })
                    .collect();
                let (cases, counterexample) = gather(cells);
                Check {
                    identity: format!("cor13/{flavor}"),
                    bound: self.bound_nk(2),
                    cases,
                    counterexample,
                }
            })
            .collect();
        let mut cases = 0;
        let mut counterexample = None;
        'outer: for k in 1..=3 {
            for n in 0..=12 {
                cases += 1;
                let (closed, brute) = (solution_count(n, k), solution_count_brute(n, k));
                if closed != i128::from(brute) {
                    counterexample = Some(format!("k={k} n={n}: closed={closed} brute={brute}"));
                    break 'outer;
                }
            }
        }
        checks.push(Check {
            identity: "cor13/solution-count".into(),
            bound: "k<=3,n<=12".into(),
            cases,
            counterexample,
        });
        checks
    }

    fn series_bound(&self) -> String {
        format!("x={},Q={}", self.bounds.x, self.bounds.order)
    }

    fn cor11(&self) -> Vec<Check> {
        let (x, q) = (&self.bounds.x, self.bounds.order);
        self.bounds
            .flavors
            .par_iter()
            .map(|&flavor| {
                let lhs = rk_lhs(x, q, flavor);
                let rhs = rk_rhs_product(x, q, flavor);
                let counterexample = (0..=q).find(|&i| lhs.coeff(i) != rhs.coeff(i)).map(|i| {
                    format!("q^{i}: symbols={} product={}", lhs.coeff(i), rhs.coeff(i))
                });
                Check {
                    identity: format!("cor11/{flavor}"),
                    bound: self.series_bound(),
                    cases: q as u64 + 1,
                    counterexample,
                }
            })
            .collect()
    }

    fn thm7(&self) -> Vec<Check> {
        let (x, q) = (&self.bounds.x, self.bounds.order);
        self.bounds
            .flavors
            .par_iter()
            .map(|&flavor| {
                let lhs = rk_lhs(x, q, flavor);
                let counterexample = match rk_rhs_partialfraction(x, q, flavor) {
                    Err(e) => Some(e.to_string()),
                    Ok(rhs) => (0..=q).find(|&i| lhs.coeff(i) != rhs.coeff(i)).map(|i| {
                        format!("q^{i}: symbols={} partial-fraction={}", lhs.coeff(i), rhs.coeff(i))
                    }),
                };
                Check {
                    identity: format!("thm7/{flavor}"),
                    bound: self.series_bound(),
                    cases: q as u64 + 1,
                    counterexample,
                }
            })
            .collect()
    }

    fn psi(&self) -> Vec<Check> {
        let w = self.bounds.pair_weight;
        let pairs = pairs_up_to(w);
        let pair_bound = format!("|alpha|+|beta|<={w}");

        let forward: Vec<Cell> = pairs
            .par_iter()
            .filter(|p| !p.alpha.is_empty() && p.beta.largest() <= p.alpha.largest())
            .map(|p| {
                let r = balanced_parts(p).len();
                let bad = match psi(p) {
                    Err(e) => Some(format!("{p}: {e}")),
                    Ok(q) if !is_strict_shifted_pair(&q) => Some(format!("{p} -> {q} not strict shifted")),
                    Ok(q) => match psi_inverse(&q, r) {
                        Ok(back) if &back == p => None,
                        Ok(back) => Some(format!("{p} -> {q} -> {back}")),
                        Err(e) => Some(format!("{p} -> {q}: {e}")),
                    },
                };
                (1, bad)
            })
            .collect();
        let backward: Vec<Cell> = pairs
            .par_iter()
            .filter(|p| is_strict_shifted_pair(p))
            .map(|p| {
                let rs = 0..p.length_difference() as usize;
                let bad = rs.clone().find_map(|r| match psi_inverse(p, r) {
                    Err(e) => Some(format!("{p} r={r}: {e}")),
                    Ok(back) if balanced_parts(&back).len() != r => {
                        Some(format!("{p} r={r} -> {back} has {} balanced parts", balanced_parts(&back).len()))
                    }
                    Ok(back) => match psi(&back) {
                        Ok(q) if &q == p => None,
                        other => Some(format!("{p} r={r} -> {back} -> {other:?}")),
                    },
                });
                (rs.len() as u64, bad)
            })
            .collect();
        let deficiency: Vec<Cell> = pairs
            .par_iter()
            .filter(|p| p.beta.largest() <= p.alpha.largest())
            .map(|p| {
                let d = deficiencies(p);
                let bad = d.iter().any(|&x| x < 0).then(|| format!("{p}: d={}", fmt_vec(&d)));
                (d.len() as u64, bad)
            })
            .collect();

        let mut checks = vec![
            named("psi/forward-round-trip", &pair_bound, gather(forward)),
            named("psi/inverse-round-trip", &pair_bound, gather(backward)),
            named("psi/deficiency-nonnegative", &pair_bound, gather(deficiency)),
        ];

        for &flavor in &self.bounds.flavors {
            let cells: Vec<Cell> = self
                .cells(2)
                .par_iter()
                .map(|&(k, n)| {
                    let corpus = (self.corpus)(n, k, flavor);
                    let bad = corpus.iter().find_map(lift_failure);
                    (corpus.len() as u64, bad)
                })
                .collect();
            checks.push(named(&format!("psi-lift+theta/{flavor}"), &self.bound_nk(2), gather(cells)));
        }
        checks
    }

    fn phi(&self) -> Vec<Check> {
        let mut checks = Vec::new();
        for &flavor in &self.bounds.flavors {
            let cells: Vec<Cell> = self
                .cells(2)
                .par_iter()
                .map(|&(k, n)| {
                    let counts = rank_counts(n, flavor);
                    let mut ss: BTreeMap<RankVector, u64> = BTreeMap::new();
                    let mut cases = 0;
                    for s in (self.corpus)(n, k, flavor) {
                        let m = s.ranks();
                        if !is_strict_shifted_symbol(&s) || m.iter().any(|&x| x < 0) {
                            continue;
                        }
                        cases += 1;
                        *ss.entry(m.clone()).or_insert(0) += 1;
                        let back = phi(&s).and_then(|ds| phi_inverse(&ds, &m));
                        if back.as_ref() != Ok(&s) {
                            return (cases, Some(format!("{s} m={} -> {back:?}", fmt_vec(&m))));
                        }
                    }
                    for m in compositions(n as i64, k).into_iter().chain(
                        (0..n as i64).flat_map(|t| compositions(t, k)),
                    ) {
                        cases += 1;
                        let r = m.iter().sum::<i64>() + k as i64 - 1;
                        let want = counts.get(&r).copied().unwrap_or(0);
                        let got = ss.get(&m).copied().unwrap_or(0);
                        if want != got {
                            return (cases, Some(format!("m={} n={n}: strict-shifted={got} rank-count={want}", fmt_vec(&m))));
                        }
                    }
                    for ds in enumerate_durfee(n, flavor) {
                        let total = ds.rank() - (k as i64 - 1);
                        if total < 0 {
                            continue;
                        }
                        for m in compositions(total, k) {
                            cases += 1;
                            let back = phi_inverse(&ds, &m).and_then(|s| phi(&s));
                            if back.as_ref() != Ok(&ds) {
                                return (cases, Some(format!("{ds} m={} -> {back:?}", fmt_vec(&m))));
                            }
                        }
                    }
                    (cases, None)
                })
                .collect();
            checks.push(named(&format!("phi/{flavor}"), &self.bound_nk(2), gather(cells)));
        }
        checks
    }

    fn subscripts(&self) -> Vec<Check> {
        let w = self.bounds.pair_weight;
        let cells: Vec<Cell> = pairs_up_to(w)
            .par_iter()
            .filter(|p| is_strict_shifted_pair(p))
            .map(|p| {
                let bad = match subscripts(p) {
                    Err(e) => Some(format!("{p}: {e}")),
                    Ok(g) => {
                        let m = p.length_difference();
                        let vals = g.values();
                        if vals.len() >= 2 && (vals[0] != 0 || vals[1] != 0) {
                            Some(format!("{p}: g={}", fmt_vec(vals)))
                        } else if m >= 2 && !g.covers(m as usize - 2) {
                            Some(format!("{p}: g={} misses a value below {}", fmt_vec(vals), m - 1))
                        } else {
                            let smallest: Vec<u32> = (0..(m - 1).max(0) as usize)
                                .map(|v| p.alpha.part(g.smallest_with(v).unwrap_or(0)))
                                .collect();
                            (!smallest.windows(2).all(|x| x[0] >= x[1])).then(|| {
                                format!("{p}: smallest parts {} increase", fmt_vec(&smallest))
                            })
                        }
                    }
                };
                (1, bad)
            })
            .collect();
        vec![named("subscripts/law", &format!("|alpha|+|beta|<={w}"), gather(cells))]
    }

    fn symmetry(&self) -> Vec<Check> {
        let mut checks = Vec::new();
        for &flavor in &self.bounds.flavors {
            let cells: Vec<Cell> = self
                .cells(2)
                .par_iter()
                .map(|&(k, n)| {
                    let corpus = (self.corpus)(n, k, flavor);
                    let table = self.table(n, k, flavor);
                    let perms = permutations(k);
                    let mut cases = 0;
                    for (m, &c) in &table {
                        for perm in &perms {
                            for signs in 0..1u32 << k {
                                cases += 1;
                                let image: RankVector = perm
                                    .iter()
                                    .enumerate()
                                    .map(|(i, &p)| if signs >> i & 1 == 1 { -m[p - 1] } else { m[p - 1] })
                                    .collect();
                                let other = table.get(&image).copied().unwrap_or(0);
                                if other != c {
                                    return (cases, Some(format!(
                                        "n={n}: count{}={c} but count{}={other}",
                                        fmt_vec(m),
                                        fmt_vec(&image)
                                    )));
                                }
                            }
                        }
                    }
                    for s in &corpus {
                        for i in 1..k {
                            cases += 1;
                            let mut perm: Vec<usize> = (1..=k).collect();
                            perm.swap(i - 1, i);
                            let m = s.ranks();
                            let ok = symmetry_map(s, &perm).and_then(|out| {
                                let back = symmetry_map(&out, &perm)?;
                                let want: RankVector = perm.iter().map(|&p| m[p - 1]).collect();
                                Ok(out.ranks() == want && out.weight() == n && back == *s)
                            });
                            if ok != Ok(true) {
                                return (cases, Some(format!("{s} perm={} -> {ok:?}", fmt_vec(&perm))));
                            }
                        }
                    }
                    (cases, None)
                })
                .collect();
            checks.push(named(&format!("symmetry/{flavor}"), &self.bound_nk(2), gather(cells)));
        }
        checks
    }
}

fn named(identity: &str, bound: &str, (cases, counterexample): Cell) -> Check {
    Check { identity: identity.to_string(), bound: bound.to_string(), cases, counterexample }
}

/// Theta involution and Psi round trip for one symbol.
fn lift_failure(s: &KMarkedSymbol) -> Option<String> {
    let m = s.ranks();
    for p in 1..=s.k() {
        match theta(s, p).and_then(|t| Ok((t.ranks(), theta(&t, p)?))) {
            Ok((ranks, back)) if back == *s && ranks[p - 1] == -m[p - 1] => {}
            other => return Some(format!("theta p={p} on {s}: {other:?}")),
        }
    }
    let t = balanced_numbers(s);
    let back = psi_lift(s).and_then(|l| {
        if !is_strict_shifted_symbol(&l) {
            return Ok(None);
        }
        psi_lift_inverse(&l, &t).map(Some)
    });
    match back {
        Ok(Some(b)) if b == *s => None,
        other => Some(format!("psi-lift on {s} t={}: {other:?}", fmt_vec(&t))),
    }
}
