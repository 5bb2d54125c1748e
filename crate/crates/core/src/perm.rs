//! Permutations in one-line notation and the statistics read off them.
//!
//! Letters are stored 1-based. The empty permutation is a valid value; it is
//! the identity element of the Malvenuto–Reutenauer algebra.
//!
//! Words with repeated letters are plain `&[u32]` slices; [`standardize`] is
//! the only way to turn one into a [`Permutation`].

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A bijective word on `{1, …, n}`.
///
/// Ordering is by length first, then lexicographic, so maps keyed by
/// permutations iterate degree by degree.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        let n = letters.len();
        let mut seen = vec![false; n];
        for &l in &letters {
            let i = l as usize;
            if i == 0 || i > n || seen[i - 1] {
                return Err(Error::InvalidPermutation(letters));
            }
            seen[i - 1] = true;
        }
        Ok(Permutation(letters))
    }

    pub fn empty() -> Self {
        Permutation(Vec::new())
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    /// The decreasing permutation `n ⋯ 2 1`.
    pub fn decreasing(n: usize) -> Self {
        Permutation((1..=n as u32).rev().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<u32> {
        self.0
    }

    pub fn inverse(&self) -> Permutation {
        Permutation(inverse_of(&self.0))
    }

    pub fn reverse(&self) -> Permutation {
        Permutation(self.0.iter().rev().copied().collect())
    }

    pub fn complement(&self) -> Permutation {
        let n1 = self.0.len() as u32 + 1;
        Permutation(self.0.iter().map(|&l| n1 - l).collect())
    }

    pub fn reverse_complement(&self) -> Permutation {
        let n1 = self.0.len() as u32 + 1;
        Permutation(self.0.iter().rev().map(|&l| n1 - l).collect())
    }

    pub fn symmetry(&self, kind: Symmetry) -> Permutation {
        match kind {
            Symmetry::Reverse => self.reverse(),
            Symmetry::Complement => self.complement(),
            Symmetry::ReverseComplement => self.reverse_complement(),
        }
    }

    /// Composition `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Option<Permutation> {
        if self.len() != other.len() {
            return None;
        }
        Some(Permutation(
            other.0.iter().map(|&i| self.0[i as usize - 1]).collect(),
        ))
    }

    pub fn descent_set(&self) -> Vec<usize> {
        descent_positions(&self.0)
    }

    pub fn descent_composition(&self) -> Composition {
        descent_composition(&self.0)
    }

    pub fn inversions(&self) -> u32 {
        inversions(&self.0)
    }

    pub fn stats(&self) -> StatRecord {
        StatRecord::of(self)
    }

    /// Whether the window of `self` starting at 0-based `start` standardizes to `pattern`.
    pub fn window_matches(&self, start: usize, pattern: &Permutation) -> bool {
        window_matches(
            &self.0[start..start + pattern.len()],
            &value_order(&pattern.0),
        )
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Permutation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// Digits run together for `n ≤ 9`, comma separated from `n = 10` on.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() <= 9 {
            for l in &self.0 {
                write!(f, "{l}")?;
            }
        } else {
            let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
            write!(f, "{}", parts.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `"42153"`, `"10,2,3,…"`, and the empty string / `"e"` for the
    /// empty permutation.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "e" || s == "ε" {
            return Ok(Permutation::empty());
        }
        let letters: Vec<u32> = if s.contains(',') {
            s.split(',')
                .map(|p| p.trim().parse::<u32>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::ParsePermutation(s.to_string()))?
        } else {
            s.chars()
                .map(|c| c.to_digit(10))
                .collect::<Option<Vec<u32>>>()
                .ok_or_else(|| Error::ParsePermutation(s.to_string()))?
        };
        Permutation::new(letters)
    }
}

impl TryFrom<String> for Permutation {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Permutation> for String {
    fn from(p: Permutation) -> String {
        p.to_string()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symmetry {
    Reverse,
    Complement,
    ReverseComplement,
}

impl Symmetry {
    pub const ALL: [Symmetry; 3] = [
        Symmetry::Reverse,
        Symmetry::Complement,
        Symmetry::ReverseComplement,
    ];
}

/// A composition of `n`: a sequence of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidParameter(format!(
                "composition parts must be positive: {parts:?}"
            )));
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// Partial sums excluding the total.
    pub fn descent_set(&self) -> Vec<usize> {
        let mut acc = 0usize;
        let mut out = Vec::with_capacity(self.0.len().saturating_sub(1));
        for &p in self.0.iter().take(self.0.len().saturating_sub(1)) {
            acc += p as usize;
            out.push(acc);
        }
        out
    }

    /// A permutation of `1..=n` whose descent composition is `self`: the runs
    /// are blocks of consecutive values, with earlier blocks holding larger
    /// values.
    pub fn canonical_permutation(&self) -> Permutation {
        let n = self.size() as u32;
        let mut letters = Vec::with_capacity(n as usize);
        let mut top = n;
        for &p in &self.0 {
            let lo = top - p + 1;
            letters.extend(lo..=top);
            top = lo - 1;
        }
        Permutation(letters)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Every descent/peak statistic of a permutation together with the same
/// statistics of its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatRecord {
    pub n: usize,
    pub des_set: Vec<usize>,
    pub des: u32,
    pub maj: u32,
    pub comaj: u32,
    pub pk: u32,
    pub lpk: u32,
    pub inv: u32,
    pub comp: Composition,
    pub ides: u32,
    pub imaj: u32,
    pub icomaj: u32,
    pub ipk: u32,
    pub ilpk: u32,
}

impl StatRecord {
    pub fn of(p: &Permutation) -> StatRecord {
        let letters = p.letters();
        let n = letters.len();
        let d = DescentStats::of(letters);
        let inv_letters = inverse_of(letters);
        let id = DescentStats::of(&inv_letters);
        StatRecord {
            n,
            des_set: descent_positions(letters),
            des: d.des,
            maj: d.maj,
            comaj: d.comaj,
            pk: d.pk,
            lpk: d.lpk,
            inv: inversions(letters),
            comp: descent_composition(letters),
            ides: id.des,
            imaj: id.maj,
            icomaj: id.comaj,
            ipk: id.pk,
            ilpk: id.lpk,
        }
    }
}

/// Descent-based statistics of a single word of distinct letters.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub(crate) struct DescentStats {
    pub des: u32,
    pub maj: u32,
    pub comaj: u32,
    pub pk: u32,
    pub lpk: u32,
}

impl DescentStats {
    pub fn of<T: Ord>(w: &[T]) -> DescentStats {
        let n = w.len();
        let mut s = DescentStats::default();
        for i in 0..n.saturating_sub(1) {
            if w[i] > w[i + 1] {
                let pos = (i + 1) as u32;
                s.des += 1;
                s.maj += pos;
                s.comaj += n as u32 - pos;
                // left peak at position 1 when it is a descent
                if i == 0 || w[i - 1] < w[i] {
                    s.lpk += 1;
                    if i > 0 {
                        s.pk += 1;
                    }
                }
            }
        }
        s
    }
}

pub(crate) fn descent_positions<T: Ord>(w: &[T]) -> Vec<usize> {
    (0..w.len().saturating_sub(1))
        .filter(|&i| w[i] > w[i + 1])
        .map(|i| i + 1)
        .collect()
}

pub(crate) fn descent_composition<T: Ord>(w: &[T]) -> Composition {
    if w.is_empty() {
        return Composition::empty();
    }
    let mut parts = Vec::new();
    let mut run = 1u32;
    for i in 1..w.len() {
        if w[i - 1] > w[i] {
            parts.push(run);
            run = 1;
        } else {
            run += 1;
        }
    }
    parts.push(run);
    Composition(parts)
}

pub(crate) fn inversions<T: Ord>(w: &[T]) -> u32 {
    let mut c = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                c += 1;
            }
        }
    }
    c
}

/// Inverse of a 1-based permutation given as a slice.
pub(crate) fn inverse_of(w: &[u32]) -> Vec<u32> {
    let mut inv = vec![0u32; w.len()];
    for (i, &l) in w.iter().enumerate() {
        inv[l as usize - 1] = i as u32 + 1;
    }
    inv
}

/// Positions of the pattern's values in increasing order of value:
/// `order[j]` is the index holding value `j + 1`.
pub(crate) fn value_order(pattern: &[u32]) -> Vec<usize> {
    let mut order = vec![0usize; pattern.len()];
    for (i, &v) in pattern.iter().enumerate() {
        order[v as usize - 1] = i;
    }
    order
}

/// `window` standardizes to the pattern whose [`value_order`] is `order`.
#[inline]
pub(crate) fn window_matches<T: Ord>(window: &[T], order: &[usize]) -> bool {
    order.windows(2).all(|p| window[p[0]] < window[p[1]])
}

/// Relabels a word by rank; equal letters count as increasing left to right.
pub fn standardize(word: &[u32]) -> Permutation {
    let mut idx: Vec<usize> = (0..word.len()).collect();
    idx.sort_by_key(|&i| (word[i], i));
    let mut out = vec![0u32; word.len()];
    for (rank, &i) in idx.iter().enumerate() {
        out[i] = rank as u32 + 1;
    }
    Permutation(out)
}

/// All interleavings of two words with disjoint letters.
pub fn shuffles(a: &[u32], b: &[u32]) -> Result<Vec<Vec<u32>>> {
    if let Some(&l) = a.iter().find(|l| b.contains(l)) {
        return Err(Error::NotDisjoint(l));
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(a.len() + b.len());
    shuffle_rec(a, b, &mut cur, &mut out);
    Ok(out)
}

fn shuffle_rec(a: &[u32], b: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if a.is_empty() && b.is_empty() {
        out.push(cur.clone());
        return;
    }
    if let Some((&h, rest)) = a.split_first() {
        cur.push(h);
        shuffle_rec(rest, b, cur, out);
        cur.pop();
    }
    if let Some((&h, rest)) = b.split_first() {
        cur.push(h);
        shuffle_rec(a, rest, cur, out);
        cur.pop();
    }
}

/// Shifted concatenations `C(π, σ)`: the `τ ∈ 𝔖_{m+n}` whose first `m`
/// letters standardize to `π` and last `n` letters standardize to `σ`.
///
/// One `τ` per `m`-subset of values given to the left block.
pub fn shifted_concats(p: &Permutation, s: &Permutation) -> Vec<Permutation> {
    let (m, n) = (p.len(), s.len());
    let total = m + n;
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(m);
    subsets_rec(1, total as u32, m, &mut chosen, &mut |left| {
        let mut in_left = vec![false; total + 1];
        for &v in left {
            in_left[v as usize] = true;
        }
        let right: Vec<u32> = (1..=total as u32)
            .filter(|&v| !in_left[v as usize])
            .collect();
        let mut tau = Vec::with_capacity(total);
        tau.extend(p.letters().iter().map(|&l| left[l as usize - 1]));
        tau.extend(s.letters().iter().map(|&l| right[l as usize - 1]));
        out.push(Permutation(tau));
    });
    out
}

fn subsets_rec(next: u32, max: u32, k: usize, chosen: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
    if chosen.len() == k {
        f(chosen);
        return;
    }
    let need = (k - chosen.len()) as u32;
    let mut v = next;
    while v + need - 1 <= max {
        chosen.push(v);
        subsets_rec(v + 1, max, k, chosen, f);
        chosen.pop();
        v += 1;
    }
}

/// Lexicographic successor of a sequence in place; `false` once wrapped
/// around to the first permutation.
pub(crate) fn next_permutation<T: Ord>(w: &mut [T]) -> bool {
    let n = w.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && w[i - 1] >= w[i] {
        i -= 1;
    }
    if i == 0 {
        w.reverse();
        return false;
    }
    let mut j = n - 1;
    while w[j] <= w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

/// Iterator over `𝔖_n` in lexicographic order.
pub struct Permutations {
    cur: Vec<u32>,
    done: bool,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let out = Permutation(self.cur.clone());
        self.done = !next_permutation(&mut self.cur);
        Some(out)
    }
}

pub fn permutations(n: usize) -> Permutations {
    Permutations {
        cur: (1..=n as u32).collect(),
        done: false,
    }
}

/// All permutations of length at most `n`, shortest first.
pub fn permutations_up_to(n: usize) -> impl Iterator<Item = Permutation> {
    (0..=n).flat_map(permutations)
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Reading sequences: read `1, 2, …, n` left to right, wrapping back to the
/// start whenever the next value sits to the left of the current one.
pub fn reading_sequences(p: &Permutation) -> Vec<Vec<u32>> {
    let pos = inverse_of(p.letters());
    let mut out: Vec<Vec<u32>> = Vec::new();
    for v in 1..=p.len() as u32 {
        let starts_new = match out.last() {
            None => true,
            Some(seq) => pos[v as usize - 1] < pos[*seq.last().unwrap() as usize - 1],
        };
        if starts_new {
            out.push(vec![v]);
        } else {
            out.last_mut().unwrap().push(v);
        }
    }
    out
}
