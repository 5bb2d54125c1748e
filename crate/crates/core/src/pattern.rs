//! Consecutive pattern occurrences, avoidance classes, and clusters.
//!
//! A cluster on a word of length `n` is a set of marked occurrences whose
//! windows form an overlapping chain: the first mark starts at position 1,
//! some mark ends at position `n`, and every gap between adjacent positions
//! lies strictly inside some marked window.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::perm::{inverse_of, value_order, window_matches, DescentStats, Permutation, Symmetry};
use crate::poly::Poly;

/// A nonempty set of consecutive patterns, each of length at least 2.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PatternSet {
    patterns: Vec<Permutation>,
    orders: Vec<Vec<usize>>,
}

impl PatternSet {
    pub fn new(patterns: impl IntoIterator<Item = Permutation>) -> Result<Self> {
        let mut patterns: Vec<Permutation> = patterns.into_iter().collect();
        if patterns.is_empty() {
            return Err(Error::EmptyPatternSet);
        }
        if let Some(p) = patterns.iter().find(|p| p.len() < 2) {
            return Err(Error::PatternTooShort(p.to_string()));
        }
        patterns.sort();
        patterns.dedup();
        Ok(PatternSet::from_sorted(patterns))
    }

    /// The empty set, for which every permutation is an avoider. Only
    /// avoidance and occurrence queries accept it.
    pub fn none() -> Self {
        PatternSet::from_sorted(Vec::new())
    }

    fn from_sorted(patterns: Vec<Permutation>) -> Self {
        let orders = patterns.iter().map(|p| value_order(p.letters())).collect();
        PatternSet { patterns, orders }
    }

    pub fn single(p: Permutation) -> Result<Self> {
        PatternSet::new([p])
    }

    pub fn patterns(&self) -> &[Permutation] {
        &self.patterns
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn max_len(&self) -> usize {
        self.patterns.iter().map(|p| p.len()).max().unwrap_or(0)
    }

    pub fn min_len(&self) -> usize {
        self.patterns.iter().map(|p| p.len()).min().unwrap_or(0)
    }

    pub fn symmetry(&self, kind: Symmetry) -> PatternSet {
        let mut ps: Vec<Permutation> = self.patterns.iter().map(|p| p.symmetry(kind)).collect();
        ps.sort();
        PatternSet::from_sorted(ps)
    }

    /// Comma-separated patterns in sorted order, e.g. `132,231`.
    pub fn canonical_string(&self) -> String {
        let parts: Vec<String> = self.patterns.iter().map(|p| p.to_string()).collect();
        parts.join(",")
    }

    /// Parses a comma-separated list of patterns written as digit strings.
    pub fn parse(spec: &str) -> Result<Self> {
        let patterns = spec
            .split([',', ' ', ';'])
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<Permutation>())
            .collect::<Result<Vec<_>>>()?;
        PatternSet::new(patterns)
    }

    /// Indices of patterns matching the window of `w` that starts at `start`.
    pub(crate) fn matches_at<'a, T: Ord>(
        &'a self,
        w: &'a [T],
        start: usize,
    ) -> impl Iterator<Item = usize> + 'a {
        self.orders.iter().enumerate().filter_map(move |(i, o)| {
            (start + o.len() <= w.len() && window_matches(&w[start..start + o.len()], o))
                .then_some(i)
        })
    }

    /// Indices of patterns matching a window that ends at index `end` (inclusive).
    fn matches_ending_at<'a>(
        &'a self,
        w: &'a [u32],
        end: usize,
    ) -> impl Iterator<Item = usize> + 'a {
        self.orders.iter().enumerate().filter_map(move |(i, o)| {
            let l = o.len();
            (l <= end + 1 && window_matches(&w[end + 1 - l..=end], o)).then_some(i)
        })
    }
}

impl fmt::Display for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.canonical_string())
    }
}

impl fmt::Debug for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PatternSet{self}")
    }
}

/// A window starting at 1-based `start` that standardizes to `pattern`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarkedOccurrence {
    pub start: usize,
    pub pattern: Permutation,
}

impl MarkedOccurrence {
    /// Last covered position, 1-based.
    pub fn end(&self) -> usize {
        self.start + self.pattern.len() - 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cluster {
    pub base: Permutation,
    pub marks: Vec<MarkedOccurrence>,
}

impl Cluster {
    pub fn mk(&self) -> usize {
        self.marks.len()
    }
}

/// All occurrences, sorted by start and then pattern length.
pub fn occurrences(p: &Permutation, set: &PatternSet) -> Vec<MarkedOccurrence> {
    let w = p.letters();
    let mut out = Vec::new();
    for start in 0..w.len() {
        for i in set.matches_at(w, start) {
            out.push(MarkedOccurrence {
                start: start + 1,
                pattern: set.patterns[i].clone(),
            });
        }
    }
    out.sort_by_key(|o| (o.start, o.pattern.len()));
    out
}

/// Number of occurrences of patterns from `set` in the word `w`.
pub fn occurrence_count<T: Ord>(w: &[T], set: &PatternSet) -> u32 {
    (0..w.len())
        .map(|s| set.matches_at(w, s).count() as u32)
        .sum()
}

/// Half-open windows `[start, end)` of the occurrences, sorted by `(start, len)`.
fn occurrence_windows<T: Ord>(w: &[T], set: &PatternSet) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for start in 0..w.len() {
        for i in set.matches_at(w, start) {
            out.push((start, start + set.orders[i].len()));
        }
    }
    out.sort_by_key(|&(s, e)| (s, e - s));
    out
}

/// Counts covering chains among `windows` (sorted by `(start, len)`) on a
/// word of length `n`, by number of marks: entry `k` counts clusters with `k` marks.
///
/// Taking a mark is allowed when it starts at 0 (first mark) or strictly
/// before the furthest end reached so far, so the state is just that reach.
pub(crate) fn chain_counts(windows: &[(usize, usize)], n: usize) -> Vec<u64> {
    // state key: reach (0 = nothing chosen yet)
    let mut states: HashMap<usize, Vec<u64>> = HashMap::new();
    states.insert(0, vec![1]);
    for &(s, e) in windows {
        let mut add: Vec<(usize, Vec<u64>)> = Vec::new();
        for (&reach, counts) in &states {
            let ok = if reach == 0 { s == 0 } else { s < reach };
            if ok {
                let mut shifted = vec![0u64; counts.len() + 1];
                shifted[1..].copy_from_slice(counts);
                add.push((reach.max(e), shifted));
            }
        }
        for (r, c) in add {
            let slot = states.entry(r).or_default();
            if slot.len() < c.len() {
                slot.resize(c.len(), 0);
            }
            for (a, b) in slot.iter_mut().zip(&c) {
                *a += b;
            }
        }
    }
    if n == 0 {
        return Vec::new();
    }
    states.remove(&n).unwrap_or_default()
}

/// Enumerates covering chains by depth-first extension; each subset once.
pub(crate) fn chain_subsets(windows: &[(usize, usize)], n: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(
        windows: &[(usize, usize)],
        n: usize,
        i: usize,
        reach: usize,
        chosen: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]),
    ) {
        if i == windows.len() {
            if reach == n && !chosen.is_empty() {
                f(chosen);
            }
            return;
        }
        let (s, e) = windows[i];
        if reach != n && !chosen.is_empty() && s >= reach {
            return;
        }
        if chosen.is_empty() && s > 0 {
            return;
        }
        let ok = if chosen.is_empty() { s == 0 } else { s < reach };
        if ok {
            chosen.push(i);
            rec(windows, n, i + 1, reach.max(e), chosen, f);
            chosen.pop();
        }
        rec(windows, n, i + 1, reach, chosen, f);
    }
    if n == 0 {
        return;
    }
    rec(windows, n, 0, 0, &mut Vec::new(), f);
}

/// Whether the marked windows form a cluster on a word of length `n`.
pub(crate) fn is_chain(windows: &[(usize, usize)], n: usize) -> bool {
    if windows.is_empty() || n == 0 {
        return false;
    }
    let mut sorted = windows.to_vec();
    sorted.sort_by_key(|&(s, e)| (s, e - s));
    if sorted[0].0 != 0 {
        return false;
    }
    let mut reach = sorted[0].1;
    for &(s, e) in &sorted[1..] {
        if s >= reach {
            return false;
        }
        reach = reach.max(e);
    }
    reach == n
}

/// All clusters on `p`.
pub fn clusters(p: &Permutation, set: &PatternSet) -> Vec<Cluster> {
    let occ = occurrences(p, set);
    let windows: Vec<(usize, usize)> = occ.iter().map(|o| (o.start - 1, o.end())).collect();
    let mut out = Vec::new();
    chain_subsets(&windows, p.len(), &mut |idx| {
        out.push(Cluster {
            base: p.clone(),
            marks: idx.iter().map(|&i| occ[i].clone()).collect(),
        });
    });
    out
}

/// `Σ_{c ∈ C_{Γ,π}} s^{mk(c)}`.
pub fn cluster_mk_polynomial(p: &Permutation, set: &PatternSet) -> Poly {
    mk_poly_of(p.letters(), set)
}

fn mk_poly_of(w: &[u32], set: &PatternSet) -> Poly {
    let counts = chain_counts(&occurrence_windows(w, set), w.len());
    Poly::from_terms(
        counts
            .iter()
            .enumerate()
            .map(|(k, c)| ([k as u32, 0, 0], BigInt::from(*c))),
    )
}

/// Statistic refinement carried by a cluster polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClusterStat {
    None,
    Inv,
    Ides,
    IdesIcomaj,
    Ipk,
    Ilpk,
}

impl ClusterStat {
    /// `[t-exponent, q-exponent]` of the weight attached to `p`.
    pub fn weight(self, p: &[u32]) -> [u32; 2] {
        match self {
            ClusterStat::None => [0, 0],
            ClusterStat::Inv => [0, crate::perm::inversions(p)],
            _ => {
                let d = DescentStats::of(&inverse_of(p));
                match self {
                    ClusterStat::Ides => [d.des + 1, 0],
                    ClusterStat::IdesIcomaj => [d.des + 1, d.comaj],
                    ClusterStat::Ipk => [d.pk + 1, 0],
                    ClusterStat::Ilpk => [d.lpk, 0],
                    ClusterStat::None | ClusterStat::Inv => unreachable!(),
                }
            }
        }
    }
}

/// A refined cluster polynomial `R_{Γ,n}` in `(s, t, q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClusterPolynomial {
    pub patterns: PatternSet,
    pub n: usize,
    pub stat: ClusterStat,
    pub poly: Poly,
}

/// Brute-force refined cluster polynomial over `𝔖_n`.
pub fn cluster_polynomial(
    set: &PatternSet,
    n: usize,
    stat: ClusterStat,
) -> Result<ClusterPolynomial> {
    if set.is_empty() {
        return Err(Error::EmptyPatternSet);
    }
    let mut acc: HashMap<[u32; 3], u64> = HashMap::new();
    cluster_candidates(n, set, &mut |w| {
        let counts = chain_counts(&occurrence_windows(w, set), n);
        if counts.iter().all(|&c| c == 0) {
            return;
        }
        let [te, qe] = stat.weight(w);
        for (k, c) in counts.iter().enumerate() {
            if *c > 0 {
                *acc.entry([k as u32, te, qe]).or_default() += c;
            }
        }
    });
    Ok(ClusterPolynomial {
        patterns: set.clone(),
        n,
        stat,
        poly: Poly::from_terms(acc.into_iter().map(|(e, c)| (e, BigInt::from(c)))),
    })
}

/// Visits every permutation of length `n` whose occurrence windows could
/// support a cluster: one starts at 1, one ends at `n`, and every gap is
/// straddled. Built letter by letter on standardized prefixes, so windows
/// are tested as soon as they are complete.
pub fn cluster_candidates(n: usize, set: &PatternSet, f: &mut dyn FnMut(&[u32])) {
    if n == 0 || set.is_empty() || set.min_len() > n {
        return;
    }
    let lmax = set.max_len();
    let mut st = Search {
        prefix: Vec::with_capacity(n),
        straddle: vec![0u32; n + 1],
        start_hits: 0,
        last_hits: Vec::with_capacity(n),
    };
    fn rec(st: &mut Search, n: usize, lmax: usize, set: &PatternSet, f: &mut dyn FnMut(&[u32])) {
        let len = st.prefix.len();
        if len == n {
            let ends_at_n = *st.last_hits.last().unwrap_or(&0) > 0;
            if st.start_hits > 0 && ends_at_n && (1..n).all(|b| st.straddle[b] > 0) {
                f(&st.prefix);
            }
            return;
        }
        for v in 1..=(len as u32 + 1) {
            st.push(v, set);
            let new_len = len + 1;
            let mut alive = true;
            if new_len + 1 >= lmax {
                let b = new_len + 1 - lmax;
                if b >= 1 && b < n && st.straddle[b] == 0 {
                    alive = false;
                }
            }
            if new_len == lmax.min(n) && st.start_hits == 0 {
                alive = false;
            }
            if alive {
                rec(st, n, lmax, set, f);
            }
            st.pop(set);
        }
    }
    rec(&mut st, n, lmax, set, f);
}

struct Search {
    prefix: Vec<u32>,
    straddle: Vec<u32>,
    start_hits: u32,
    /// Number of windows ending at each prefix position.
    last_hits: Vec<u32>,
}

impl Search {
    fn push(&mut self, v: u32, set: &PatternSet) {
        for x in self.prefix.iter_mut() {
            if *x >= v {
                *x += 1;
            }
        }
        self.prefix.push(v);
        let end = self.prefix.len() - 1;
        let mut hits = 0;
        for i in set.matches_ending_at(&self.prefix, end) {
            let l = set.orders[i].len();
            let start = end + 1 - l;
            for b in start + 1..=end {
                self.straddle[b] += 1;
            }
            if start == 0 {
                self.start_hits += 1;
            }
            hits += 1;
        }
        self.last_hits.push(hits);
    }

    fn pop(&mut self, set: &PatternSet) {
        let end = self.prefix.len() - 1;
        for i in set.matches_ending_at(&self.prefix, end) {
            let l = set.orders[i].len();
            let start = end + 1 - l;
            for b in start + 1..=end {
                self.straddle[b] -= 1;
            }
            if start == 0 {
                self.start_hits -= 1;
            }
        }
        self.last_hits.pop();
        let v = self.prefix.pop().unwrap();
        for x in self.prefix.iter_mut() {
            if *x > v {
                *x -= 1;
            }
        }
    }
}

/// Lazy lexicographic-by-insertion enumeration of `𝔖_n(Γ)`, pruning any
/// prefix that already contains an occurrence.
pub struct Avoiders {
    n: usize,
    set: PatternSet,
    prefix: Vec<u32>,
    descend: bool,
    done: bool,
}

impl Avoiders {
    fn push(&mut self, v: u32) -> bool {
        for x in self.prefix.iter_mut() {
            if *x >= v {
                *x += 1;
            }
        }
        self.prefix.push(v);
        let end = self.prefix.len() - 1;
        self.set
            .matches_ending_at(&self.prefix, end)
            .next()
            .is_none()
    }

    fn pop(&mut self) -> u32 {
        let v = self.prefix.pop().unwrap();
        for x in self.prefix.iter_mut() {
            if *x > v {
                *x -= 1;
            }
        }
        v
    }
}

impl Iterator for Avoiders {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        loop {
            if self.done {
                return None;
            }
            if self.descend {
                if self.prefix.len() == self.n {
                    self.descend = false;
                    return Some(
                        Permutation::new(self.prefix.clone()).expect("prefix is a permutation"),
                    );
                }
                self.descend = self.push(1);
            } else {
                if self.prefix.is_empty() {
                    self.done = true;
                    return None;
                }
                let len = self.prefix.len();
                let v = self.pop();
                if v < len as u32 {
                    self.descend = self.push(v + 1);
                }
            }
        }
    }
}

pub fn avoiders(n: usize, set: &PatternSet) -> Avoiders {
    Avoiders {
        n,
        set: set.clone(),
        prefix: Vec::with_capacity(n),
        descend: true,
        done: false,
    }
}

pub fn count_avoiders(n: usize, set: &PatternSet) -> u64 {
    avoiders(n, set).count() as u64
}

/// `O_σ = {i ∈ [m−1] : std(σ_{i+1}⋯σ_m) = std(σ_1⋯σ_{m−i})}`.
pub fn overlap_set(sigma: &Permutation) -> Vec<usize> {
    let w = sigma.letters();
    let m = w.len();
    (1..m)
        .filter(|&i| crate::perm::standardize(&w[i..]) == crate::perm::standardize(&w[..m - i]))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{permutations, permutations_up_to};

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn set(s: &str) -> PatternSet {
        PatternSet::parse(s).unwrap()
    }

    #[test]
    fn occurrence_examples() {
        let occ = occurrences(&p("315497628"), &set("213"));
        let starts: Vec<usize> = occ.iter().map(|o| o.start).collect();
        assert_eq!(starts, vec![1, 3, 7]);
        assert!(occurrences(&p("137258469"), &set("213")).is_empty());
        assert!(occurrences(&Permutation::identity(7), &set("21")).is_empty());
    }

    #[test]
    fn pattern_set_validation() {
        assert!(matches!(
            PatternSet::new(Vec::new()),
            Err(Error::EmptyPatternSet)
        ));
        assert!(matches!(
            PatternSet::parse("1"),
            Err(Error::PatternTooShort(_))
        ));
        assert_eq!(set("231,132,132").canonical_string(), "132,231");
    }

    /// Oracle: filter all of 𝔖_n by direct standardization of every window.
    fn avoider_oracle(n: usize, s: &PatternSet) -> u64 {
        permutations(n)
            .filter(|q| {
                s.patterns().iter().all(|pat| {
                    let l = pat.len();
                    l > n
                        || (0..=n - l)
                            .all(|i| crate::perm::standardize(&q.letters()[i..i + l]) != *pat)
                })
            })
            .count() as u64
    }

    #[test]
    fn avoider_counts() {
        assert_eq!(count_avoiders(3, &set("123")), 5);
        assert_eq!(count_avoiders(4, &set("1234")), 23);
        assert_eq!(count_avoiders(4, &set("123")), 17);
        for n in 0..=5 {
            assert_eq!(
                count_avoiders(n, &PatternSet::none()),
                crate::perm::factorial(n)
            );
        }
        for s in ["123", "132,231", "21", "1342", "12435"] {
            for n in 0..=7 {
                assert_eq!(
                    count_avoiders(n, &set(s)),
                    avoider_oracle(n, &set(s)),
                    "{s} n={n}"
                );
            }
        }
    }

    #[test]
    fn avoiders_are_distinct_and_avoid() {
        let s = set("132");
        let all: Vec<Permutation> = avoiders(6, &s).collect();
        let mut dedup = all.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), all.len());
        assert!(all.iter().all(|q| occurrences(q, &s).is_empty()));
    }

    #[test]
    fn cluster_examples() {
        let c = clusters(&p("1234"), &set("1234"));
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].mk(), 1);
        assert!(clusters(&p("21"), &set("123")).is_empty());
        let poly = cluster_mk_polynomial(&Permutation::identity(7), &set("1234"));
        let want = Poly::s().pow(2) + Poly::s().pow(3).scale(&BigInt::from(2)) + Poly::s().pow(4);
        assert_eq!(poly, want);
    }

    #[test]
    fn enumeration_and_counting_agree() {
        for s in ["123", "132,231", "21", "12,21", "1324"] {
            let s = set(s);
            for q in permutations_up_to(7) {
                let listed = clusters(&q, &s);
                let mut counts: HashMap<usize, u64> = HashMap::new();
                for c in &listed {
                    assert!(is_chain(
                        &c.marks
                            .iter()
                            .map(|m| (m.start - 1, m.end()))
                            .collect::<Vec<_>>(),
                        q.len()
                    ));
                    *counts.entry(c.mk()).or_default() += 1;
                }
                let poly = cluster_mk_polynomial(&q, &s);
                let from_list = Poly::from_terms(
                    counts
                        .into_iter()
                        .map(|(k, c)| ([k as u32, 0, 0], BigInt::from(c))),
                );
                assert_eq!(poly, from_list, "{q}");
            }
        }
    }

    /// Oracle: every subset of occurrences, tested against the straddling definition.
    fn subset_oracle(q: &Permutation, s: &PatternSet) -> u64 {
        let occ = occurrences(q, s);
        let n = q.len();
        let mut total = 0;
        for mask in 1u32..(1 << occ.len()) {
            let chosen: Vec<&MarkedOccurrence> = (0..occ.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| &occ[i])
                .collect();
            let covers_start = chosen.iter().any(|m| m.start == 1);
            let covers_end = chosen.iter().any(|m| m.end() == n);
            let straddled = (1..n).all(|b| chosen.iter().any(|m| m.start <= b && b < m.end()));
            if covers_start && covers_end && straddled {
                total += 1;
            }
        }
        total
    }

    #[test]
    fn chain_rule_matches_straddling_definition() {
        for s in ["123", "132,231", "21", "12,123", "2143"] {
            let s = set(s);
            for q in permutations_up_to(6) {
                assert_eq!(clusters(&q, &s).len() as u64, subset_oracle(&q, &s), "{q}");
            }
        }
    }

    #[test]
    fn cluster_polynomial_examples() {
        let r = cluster_polynomial(&set("123"), 5, ClusterStat::Ides).unwrap();
        let want = (Poly::s().pow(2) + Poly::s().pow(3)).shift([0, 1, 0]);
        assert_eq!(r.poly, want);
        let r = cluster_polynomial(&set("13245"), 9, ClusterStat::Ides).unwrap();
        assert_eq!(r.poly, Poly::monomial([2, 3, 0], 1));
        let r = cluster_polynomial(&set("1234"), 3, ClusterStat::Ides).unwrap();
        assert!(r.poly.is_zero());
    }

    #[test]
    fn candidates_cover_every_clustered_permutation() {
        for s in ["123", "132,231", "21", "2143", "12435"] {
            let s = set(s);
            for n in 1..=7 {
                let mut seen = Vec::new();
                cluster_candidates(n, &s, &mut |w| {
                    seen.push(Permutation::new(w.to_vec()).unwrap())
                });
                seen.sort();
                let want: Vec<Permutation> = permutations(n)
                    .filter(|q| !cluster_mk_polynomial(q, &s).is_zero())
                    .collect();
                assert_eq!(seen, want, "{s} n={n}");
            }
        }
    }

    #[test]
    fn unrefined_cluster_totals() {
        for s in ["123", "132,231", "2143"] {
            let s = set(s);
            for n in 0..=7 {
                let r = cluster_polynomial(&s, n, ClusterStat::IdesIcomaj).unwrap();
                let plain = cluster_polynomial(&s, n, ClusterStat::None).unwrap();
                assert_eq!(r.poly.eval_var(1, 1).eval_var(2, 1), plain.poly);
                let brute: Poly = permutations(n)
                    .fold(Poly::zero(), |acc, q| acc + cluster_mk_polynomial(&q, &s));
                assert_eq!(plain.poly, brute);
            }
        }
    }

    #[test]
    fn overlap_examples() {
        assert_eq!(overlap_set(&p("1234")), vec![1, 2, 3]);
        assert_eq!(overlap_set(&p("12435")), vec![3, 4]);
        assert_eq!(overlap_set(&p("132")), vec![2]);
    }

    #[test]
    fn monotone_and_transpositional_cluster_bases() {
        for n in 1..=8 {
            cluster_candidates(n, &set("123"), &mut |w| {
                assert_eq!(w, Permutation::identity(n).letters());
            });
            cluster_candidates(n, &set("12435"), &mut |w| {
                assert_eq!(inverse_of(w), w);
            });
        }
    }

    #[test]
    fn occurrences_transport_under_symmetries() {
        for pat in permutations_up_to(4).filter(|x| x.len() >= 2) {
            let s = PatternSet::single(pat.clone()).unwrap();
            for kind in Symmetry::ALL {
                let sk = s.symmetry(kind);
                for q in permutations_up_to(7) {
                    assert_eq!(
                        occurrence_count(q.letters(), &s),
                        occurrence_count(q.symmetry(kind).letters(), &sk)
                    );
                }
            }
        }
    }
}
