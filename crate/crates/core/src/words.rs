//! The cluster method for words over a finite alphabet, at desk scale.
//!
//! Words are `&str` over single-character letters. The identity checked is
//! `(1 − Σ_a a − R_B(s−1)) · F_B(s) = 1` in the noncommutative algebra of
//! words, truncated at a maximum length, together with the mirrored product
//! `F_B(s) · (1 − Σ_a a − R_B(s−1)) = 1`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::pattern::{chain_counts, chain_subsets, is_chain};
use crate::poly::{Poly, S};

/// A marked occurrence in a word: 1-based start and the marked word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordMark {
    pub start: usize,
    pub word: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordCluster {
    pub word: String,
    pub marks: Vec<WordMark>,
}

fn check_marked_set(b: &[&str]) -> Result<()> {
    match b.iter().find(|w| w.chars().count() < 2) {
        Some(w) => Err(Error::WordTooShort(w.to_string())),
        None => Ok(()),
    }
}

/// Occurrences `(start, end)` as half-open 0-based windows, with the index of
/// the matching word, sorted by `(start, len)`.
fn windows(w: &[char], b: &[Vec<char>]) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for start in 0..w.len() {
        for (i, m) in b.iter().enumerate() {
            if w[start..].starts_with(m) {
                out.push((start, start + m.len(), i));
            }
        }
    }
    out.sort_by_key(|&(s, e, _)| (s, e - s));
    out
}

fn chars(b: &[&str]) -> Vec<Vec<char>> {
    b.iter().map(|w| w.chars().collect()).collect()
}

pub fn word_clusters(w: &str, b: &[&str]) -> Result<Vec<WordCluster>> {
    check_marked_set(b)?;
    let wc: Vec<char> = w.chars().collect();
    let bc = chars(b);
    let occ = windows(&wc, &bc);
    let spans: Vec<(usize, usize)> = occ.iter().map(|&(s, e, _)| (s, e)).collect();
    let mut out = Vec::new();
    chain_subsets(&spans, wc.len(), &mut |idx| {
        out.push(WordCluster {
            word: w.to_string(),
            marks: idx
                .iter()
                .map(|&i| WordMark {
                    start: occ[i].0 + 1,
                    word: b[occ[i].2].to_string(),
                })
                .collect(),
        });
    });
    Ok(out)
}

/// Whether the given marks are genuine occurrences forming a cluster on `w`.
pub fn is_word_cluster(w: &str, marks: &[WordMark]) -> bool {
    let wc: Vec<char> = w.chars().collect();
    let mut spans = Vec::with_capacity(marks.len());
    for m in marks {
        let mc: Vec<char> = m.word.chars().collect();
        if m.start == 0
            || m.start - 1 + mc.len() > wc.len()
            || wc[m.start - 1..m.start - 1 + mc.len()] != mc[..]
        {
            return false;
        }
        spans.push((m.start - 1, m.start - 1 + mc.len()));
    }
    is_chain(&spans, wc.len())
}

fn occ_count(w: &[char], b: &[Vec<char>]) -> u32 {
    windows(w, b).len() as u32
}

fn cluster_poly(w: &[char], b: &[Vec<char>]) -> Poly {
    let spans: Vec<(usize, usize)> = windows(w, b).iter().map(|&(s, e, _)| (s, e)).collect();
    let counts = chain_counts(&spans, w.len());
    Poly::from_terms(
        counts
            .iter()
            .enumerate()
            .map(|(k, c)| ([k as u32, 0, 0], (*c).into())),
    )
}

/// Outcome of checking the word identity on every word up to a length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordClusterReport {
    pub words_checked: usize,
    /// Words whose coefficient differs from the expected one, per side.
    pub failures: Vec<String>,
}

impl WordClusterReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks the word cluster identity coefficientwise on all words of length
/// at most `maxlen`, from both sides.
pub fn verify_word_cluster_method(
    alphabet: &[char],
    b: &[&str],
    maxlen: usize,
) -> Result<WordClusterReport> {
    check_marked_set(b)?;
    if maxlen > 12 {
        return Err(Error::InvalidParameter(format!(
            "maxlen {maxlen} exceeds 12"
        )));
    }
    let bc = chars(b);
    let mut all: Vec<Vec<char>> = vec![Vec::new()];
    let mut layer: Vec<Vec<char>> = vec![Vec::new()];
    for _ in 0..maxlen {
        let mut next = Vec::with_capacity(layer.len() * alphabet.len());
        for w in &layer {
            for &a in alphabet {
                let mut v = w.clone();
                v.push(a);
                next.push(v);
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    let s_minus_one = Poly::s() - Poly::one();
    let f: HashMap<&[char], Poly> = all
        .iter()
        .map(|w| (w.as_slice(), Poly::monomial([occ_count(w, &bc), 0, 0], 1)))
        .collect();
    let r: HashMap<&[char], Poly> = all
        .iter()
        .map(|w| {
            (
                w.as_slice(),
                cluster_poly(w, &bc).substitute(S, &s_minus_one),
            )
        })
        .collect();
    let mut failures = Vec::new();
    for w in &all {
        let n = w.len();
        let expected = if n == 0 { Poly::one() } else { Poly::zero() };
        let mut left = f[w.as_slice()].clone();
        let mut right = left.clone();
        if n >= 1 {
            left -= &f[&w[1..]];
            right -= &f[&w[..n - 1]];
        }
        for k in 2..=n {
            left -= &(&r[&w[..k]] * &f[&w[k..]]);
            right -= &(&f[&w[..n - k]] * &r[&w[n - k..]]);
        }
        let word: String = w.iter().collect();
        if left != expected {
            failures.push(format!("left {word}: {left}"));
        }
        if right != expected {
            failures.push(format!("right {word}: {right}"));
        }
    }
    Ok(WordClusterReport {
        words_checked: all.len(),
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mark(start: usize, word: &str) -> WordMark {
        WordMark {
            start,
            word: word.to_string(),
        }
    }

    #[test]
    fn cluster_recognition_examples() {
        assert!(!is_word_cluster(
            "cabcabbca",
            &[mark(1, "cab"), mark(3, "bc"), mark(7, "bc")]
        ));
        assert!(is_word_cluster(
            "bcabcab",
            &[mark(1, "bc"), mark(2, "cab"), mark(4, "bc"), mark(5, "cab")]
        ));
        assert!(is_word_cluster("cab", &[mark(1, "cab")]));
        assert!(!is_word_cluster("cab", &[mark(1, "bc")]));
    }

    #[test]
    fn single_word_cluster() {
        let c = word_clusters("cab", &["cab", "bc"]).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].marks.len(), 1);
        let c = word_clusters("bcabcab", &["cab", "bc"]).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].marks.len(), 4);
    }

    #[test]
    fn rejects_short_words() {
        assert!(matches!(
            word_clusters("ab", &["a"]),
            Err(Error::WordTooShort(_))
        ));
    }

    #[test]
    fn identity_small() {
        let rep = verify_word_cluster_method(&['a', 'b', 'c'], &["cab", "bc"], 6).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures);
        let rep = verify_word_cluster_method(&['a', 'b'], &["aa", "aba"], 7).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures);
    }
}
