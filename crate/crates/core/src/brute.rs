//! Exhaustive sweeps over `𝔖_n`, the ground truth for every distribution.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::pattern::{occurrence_count, PatternSet};
use crate::perm::{inverse_of, inversions, next_permutation, DescentStats};
use crate::poly::{Poly, S};

/// The polynomial families counted jointly with pattern occurrences.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `Σ s^occ t^{ides+1}`
    AIdes,
    /// `Σ s^occ t^{ides+1} q^{imaj}`
    AIdesImaj,
    /// `Σ s^occ t^{ides+1} q^{icomaj}`
    AIdesIcomaj,
    /// `Σ s^occ t^{ipk+1}`
    PIpk,
    /// `Σ s^occ t^{ilpk}`
    PIlpk,
    /// `Σ s^occ`
    FPlain,
    /// `Σ s^occ q^{inv}`
    FQ,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::AIdes,
        Family::AIdesImaj,
        Family::AIdesIcomaj,
        Family::PIpk,
        Family::PIlpk,
        Family::FPlain,
        Family::FQ,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::AIdes => "ides",
            Family::AIdesImaj => "ides-imaj",
            Family::AIdesIcomaj => "ides-icomaj",
            Family::PIpk => "ipk",
            Family::PIlpk => "ilpk",
            Family::FPlain => "plain",
            Family::FQ => "q",
        }
    }

    /// Largest possible exponent of `t` at length `n ≥ 1`.
    pub fn t_degree_bound(self, n: usize) -> usize {
        match self {
            Family::AIdes | Family::AIdesImaj | Family::AIdesIcomaj => n,
            Family::PIpk => n.div_ceil(2),
            Family::PIlpk => n / 2,
            Family::FPlain | Family::FQ => 0,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        let key = key
            .strip_prefix("a-")
            .or_else(|| key.strip_prefix("p-"))
            .or_else(|| key.strip_prefix("f-"))
            .unwrap_or(&key);
        Family::ALL
            .into_iter()
            .find(|f| f.name() == key)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown family {s:?}")))
    }
}

/// One member of a polynomial family: the distribution over `𝔖_n` for a
/// pattern set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistributionPolynomial {
    pub family: Family,
    pub patterns: PatternSet,
    pub n: usize,
    pub poly: Poly,
}

impl DistributionPolynomial {
    /// The polynomial with `s = 0`: the distribution over avoiders.
    pub fn avoiders(&self) -> Poly {
        self.poly.eval_var(S, 0)
    }

    /// Sum of all coefficients after setting `s` to `s_value`.
    pub fn total_at(&self, s_value: i64) -> BigInt {
        self.poly.eval([s_value, 1, 1])
    }
}

/// Statistics collected per permutation during a sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct Key {
    occ: u32,
    ides: u32,
    icomaj: u32,
    imaj: u32,
    ipk: u32,
    ilpk: u32,
    inv: u32,
}

/// The joint distribution of every tracked statistic over `𝔖_n`.
#[derive(Clone, Debug)]
pub struct Sweep {
    patterns: PatternSet,
    n: usize,
    counts: HashMap<Key, u64>,
}

impl Sweep {
    /// Visits all of `𝔖_n` in parallel, split by first letter.
    pub fn run(patterns: &PatternSet, n: usize) -> Sweep {
        let counts = (1..=n.max(1) as u32)
            .into_par_iter()
            .map(|first| sweep_block(patterns, n, first))
            .reduce(HashMap::new, |mut a, b| {
                for (k, v) in b {
                    *a.entry(k).or_default() += v;
                }
                a
            });
        Sweep {
            patterns: patterns.clone(),
            n,
            counts,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn patterns(&self) -> &PatternSet {
        &self.patterns
    }

    /// Number of permutations visited.
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn project(&self, family: Family) -> DistributionPolynomial {
        let poly = if self.n == 0 {
            Poly::one()
        } else {
            let mut acc: HashMap<[u32; 3], u64> = HashMap::new();
            for (k, c) in &self.counts {
                let e = match family {
                    Family::AIdes => [k.occ, k.ides + 1, 0],
                    Family::AIdesImaj => [k.occ, k.ides + 1, k.imaj],
                    Family::AIdesIcomaj => [k.occ, k.ides + 1, k.icomaj],
                    Family::PIpk => [k.occ, k.ipk + 1, 0],
                    Family::PIlpk => [k.occ, k.ilpk, 0],
                    Family::FPlain => [k.occ, 0, 0],
                    Family::FQ => [k.occ, 0, k.inv],
                };
                *acc.entry(e).or_default() += c;
            }
            Poly::from_terms(acc.into_iter().map(|(e, c)| (e, BigInt::from(c))))
        };
        DistributionPolynomial {
            family,
            patterns: self.patterns.clone(),
            n: self.n,
            poly,
        }
    }
}

fn sweep_block(patterns: &PatternSet, n: usize, first: u32) -> HashMap<Key, u64> {
    let mut out = HashMap::new();
    if n == 0 {
        out.insert(
            Key {
                occ: 0,
                ides: 0,
                icomaj: 0,
                imaj: 0,
                ipk: 0,
                ilpk: 0,
                inv: 0,
            },
            1,
        );
        return out;
    }
    let mut w: Vec<u32> = std::iter::once(first)
        .chain((1..=n as u32).filter(|&v| v != first))
        .collect();
    loop {
        let d = DescentStats::of(&inverse_of(&w));
        let key = Key {
            occ: occurrence_count(&w, patterns),
            ides: d.des,
            icomaj: d.comaj,
            imaj: d.maj,
            ipk: d.pk,
            ilpk: d.lpk,
            inv: inversions(&w),
        };
        *out.entry(key).or_default() += 1;
        if !next_permutation(&mut w) || w[0] != first {
            break;
        }
    }
    out
}

/// Brute-force distribution of one family over `𝔖_n`.
pub fn brute_distribution(
    patterns: &PatternSet,
    n: usize,
    family: Family,
) -> DistributionPolynomial {
    Sweep::run(patterns, n).project(family)
}

/// Brute-force distributions for `n = 0..=n_max`.
pub fn brute_sequence(
    patterns: &PatternSet,
    n_max: usize,
    family: Family,
) -> Vec<DistributionPolynomial> {
    (0..=n_max)
        .map(|n| brute_distribution(patterns, n, family))
        .collect()
}

/// `A_n(t, q) = Σ_{π∈𝔖_n} t^{des+1} q^{maj}`, computed on inverses.
pub fn euler_mahonian(n: usize) -> Poly {
    brute_distribution(&PatternSet::none(), n, Family::AIdesImaj).poly
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::T;

    fn set(s: &str) -> PatternSet {
        PatternSet::parse(s).unwrap()
    }

    fn t_poly(coeffs: &[i64]) -> Poly {
        let c: Vec<BigInt> = coeffs.iter().map(|&c| BigInt::from(c)).collect();
        Poly::from_coeffs(T, &c)
    }

    #[test]
    fn small_rows() {
        let a = brute_distribution(&set("123"), 3, Family::AIdes).avoiders();
        assert_eq!(a, t_poly(&[0, 0, 4, 1]));
        let a = brute_distribution(&set("1234"), 4, Family::AIdes).avoiders();
        assert_eq!(a, t_poly(&[0, 0, 11, 11, 1]));
        for f in Family::ALL {
            assert_eq!(brute_distribution(&set("123"), 0, f).poly, Poly::one());
        }
    }

    #[test]
    fn totals() {
        for n in 0..=6 {
            let d = brute_distribution(&set("132"), n, Family::AIdes);
            assert_eq!(d.total_at(1), BigInt::from(crate::perm::factorial(n)));
            assert_eq!(
                d.total_at(0),
                BigInt::from(crate::pattern::count_avoiders(n, &set("132")))
            );
        }
    }

    #[test]
    fn sweep_matches_serial_enumeration() {
        let p = set("213,1324");
        let sweep = Sweep::run(&p, 6);
        assert_eq!(sweep.total(), 720);
        let mut direct = Poly::zero();
        for pi in crate::perm::permutations(6) {
            let st = pi.stats();
            let occ = occurrence_count(pi.letters(), &p);
            direct.add_term([occ, st.ipk + 1, 0], BigInt::from(1));
        }
        assert_eq!(sweep.project(Family::PIpk).poly, direct);
    }

    #[test]
    fn imaj_family_at_two() {
        let p = euler_mahonian(2);
        assert_eq!(p, Poly::t() + Poly::monomial([0, 2, 1], 1));
    }

    #[test]
    fn family_names_parse() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert_eq!("A_ides".parse::<Family>().unwrap(), Family::AIdes);
        assert_eq!("P_ilpk".parse::<Family>().unwrap(), Family::PIlpk);
        assert!("bogus".parse::<Family>().is_err());
    }
}
