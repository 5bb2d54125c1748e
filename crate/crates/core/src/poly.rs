//! Sparse polynomials in `s`, `t`, `q` with arbitrary-precision integer
//! coefficients.
//!
//! Every distribution and cluster polynomial in the crate is one of these.
//! Exponent tuples are always ordered `[s, t, q]`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Exps = [u32; 3];

pub const S: usize = 0;
pub const T: usize = 1;
pub const Q: usize = 2;

const NAMES: [&str; 3] = ["s", "t", "q"];

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: BTreeMap<Exps, BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Poly::monomial([0, 0, 0], c)
    }

    pub fn monomial(e: Exps, c: impl Into<BigInt>) -> Self {
        let mut p = Poly::zero();
        p.add_term(e, c.into());
        p
    }

    /// The single variable with index `v` (`S`, `T` or `Q`).
    pub fn var(v: usize) -> Self {
        let mut e = [0; 3];
        e[v] = 1;
        Poly::monomial(e, 1)
    }

    pub fn s() -> Self {
        Poly::var(S)
    }

    pub fn t() -> Self {
        Poly::var(T)
    }

    pub fn q() -> Self {
        Poly::var(Q)
    }

    /// Univariate polynomial `Σ c_i v^i` from its coefficient list.
    pub fn from_coeffs(v: usize, coeffs: &[BigInt]) -> Self {
        let mut p = Poly::zero();
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = [0; 3];
            e[v] = i as u32;
            p.add_term(e, c.clone());
        }
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Exps, BigInt)>) -> Self {
        let mut p = Poly::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: Exps, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: Exps) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn degree(&self, v: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[v]).max()
    }

    pub fn min_degree(&self, v: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[v]).min()
    }

    /// Whether only the variables in `vars` occur.
    pub fn only_in(&self, vars: &[usize]) -> bool {
        self.terms
            .keys()
            .all(|e| (0..3).all(|v| vars.contains(&v) || e[v] == 0))
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Multiplies by the monomial with exponents `e`.
    pub fn shift(&self, e: Exps) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| ([k[0] + e[0], k[1] + e[1], k[2] + e[2]], c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut out = Poly::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Substitutes `v ↦ image` for a polynomial `image`.
    pub fn substitute(&self, v: usize, image: &Poly) -> Poly {
        let mut powers: Vec<Poly> = vec![Poly::one()];
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            let k = e[v] as usize;
            while powers.len() <= k {
                let next = powers.last().unwrap() * image;
                powers.push(next);
            }
            let mut rest = *e;
            rest[v] = 0;
            out += &powers[k].shift(rest).scale(c);
        }
        out
    }

    /// `s ↦ s − 1`, the shift that turns `R(s)` into `R(s − 1)`.
    pub fn shift_s_minus_one(&self) -> Poly {
        self.substitute(S, &(Poly::s() - Poly::one()))
    }

    /// Sets variable `v` to an integer value.
    pub fn eval_var(&self, v: usize, value: i64) -> Poly {
        self.substitute(v, &Poly::constant(value))
    }

    /// Sets every variable to an integer value.
    pub fn eval(&self, values: [i64; 3]) -> BigInt {
        let mut total = BigInt::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for v in 0..3 {
                term *= BigInt::from(values[v]).pow(e[v]);
            }
            total += term;
        }
        total
    }

    /// Applies an exponent map to every monomial.
    pub fn map_exps(&self, f: impl Fn(Exps) -> Exps) -> Poly {
        Poly::from_terms(self.terms.iter().map(|(e, c)| (f(*e), c.clone())))
    }

    /// Coefficient list in `v`, valid when `v` is the only variable present.
    pub fn univariate(&self, v: usize) -> Result<Vec<BigInt>> {
        if !self.only_in(&[v]) {
            return Err(Error::InvalidParameter(format!(
                "{self} is not a polynomial in {} alone",
                NAMES[v]
            )));
        }
        let deg = self.degree(v).map_or(0, |d| d as usize + 1);
        let mut out = vec![BigInt::zero(); deg];
        for (e, c) in &self.terms {
            out[e[v] as usize] = c.clone();
        }
        Ok(out)
    }

    /// Groups terms by the power of `v`: entry `k` is the coefficient of `v^k`.
    pub fn coeffs_in(&self, v: usize) -> Vec<Poly> {
        let deg = self.degree(v).map_or(0, |d| d as usize + 1);
        let mut out = vec![Poly::zero(); deg];
        for (e, c) in &self.terms {
            let mut rest = *e;
            rest[v] = 0;
            out[e[v] as usize].add_term(rest, c.clone());
        }
        out
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Sum of all coefficients, the value at `s = t = q = 1`.
    pub fn total(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn to_i64(&self, e: Exps) -> Option<i64> {
        self.coeff(e).to_i64()
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        self += &rhs;
        self
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(mut self, rhs: Poly) -> Poly {
        self -= &rhs;
        self
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term([a[0] + b[0], a[1] + b[1], a[2] + b[2]], x * y);
            }
        }
        out
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl One for Poly {
    fn one() -> Self {
        Poly::constant(1)
    }
}

impl Zero for Poly {
    fn zero() -> Self {
        Poly::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Canonical text: monomials by total degree, then lexicographically in
/// `(s, t, q)`, e.g. `4*t^2 + t^3`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Exps> = self.terms.keys().collect();
        keys.sort_by_key(|e| (e.iter().sum::<u32>(), **e));
        for (i, e) in keys.into_iter().enumerate() {
            let c = &self.terms[e];
            let mono = monomial_text(e, &NAMES);
            write_term(f, i == 0, c.is_negative(), &c.abs().to_string(), &mono)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

pub(crate) fn monomial_text(e: &[u32], names: &[&str]) -> String {
    let parts: Vec<String> = e
        .iter()
        .zip(names)
        .filter(|(k, _)| **k > 0)
        .map(|(k, n)| {
            if *k == 1 {
                n.to_string()
            } else {
                format!("{n}^{k}")
            }
        })
        .collect();
    parts.join("*")
}

pub(crate) fn write_term(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    negative: bool,
    abs_coeff: &str,
    mono: &str,
) -> fmt::Result {
    match (first, negative) {
        (true, true) => write!(f, "-")?,
        (false, true) => write!(f, " - ")?,
        (false, false) => write!(f, " + ")?,
        (true, false) => {}
    }
    if mono.is_empty() {
        write!(f, "{abs_coeff}")
    } else if abs_coeff == "1" {
        write!(f, "{mono}")
    } else {
        write!(f, "{abs_coeff}*{mono}")
    }
}

/// `[n]_q = 1 + q + ⋯ + q^{n−1}`.
pub fn q_integer(n: u32) -> Poly {
    Poly::from_terms((0..n).map(|i| ([0, 0, i], BigInt::one())))
}

/// `[n]_q! = [1]_q [2]_q ⋯ [n]_q`.
pub fn q_factorial(n: u32) -> Poly {
    (1..=n).fold(Poly::one(), |acc, i| &acc * &q_integer(i))
}

/// Gaussian binomial coefficient, built by the q-Pascal recurrence
/// `C(n,k) = C(n−1,k−1) + q^k C(n−1,k)`.
pub fn q_binomial(n: i64, k: i64) -> Result<Poly> {
    if n < 0 || k < 0 || k > n {
        return Err(Error::InvalidBinomial { n, k });
    }
    let (n, k) = (n as usize, k as usize);
    let mut row: Vec<Poly> = vec![Poly::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m + 1);
        for j in 0..=m.min(k) {
            let mut c = Poly::zero();
            if j >= 1 {
                c += &row[j - 1];
            }
            if j < row.len() && j < m {
                c += &row[j].shift([0, 0, j as u32]);
            }
            next.push(c);
        }
        row = next;
    }
    Ok(row[k].clone())
}

/// Ordinary binomial coefficient as a big integer; zero outside `0 ≤ k ≤ n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qpoly(c: &[i64]) -> Poly {
        Poly::from_coeffs(Q, &c.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>())
    }

    #[test]
    fn q_binomial_examples() {
        assert_eq!(q_binomial(4, 2).unwrap(), qpoly(&[1, 1, 2, 1, 1]));
        for n in 0..6 {
            assert_eq!(q_binomial(n, 0).unwrap(), Poly::one());
        }
        assert!(matches!(
            q_binomial(2, 3),
            Err(Error::InvalidBinomial { .. })
        ));
        assert!(q_binomial(-1, 0).is_err());
    }

    #[test]
    fn q_factorial_examples() {
        assert_eq!(q_factorial(3), qpoly(&[1, 2, 2, 1]));
        assert_eq!(q_factorial(0), Poly::one());
    }

    #[test]
    fn q_binomial_times_factorials() {
        for n in 0..8u32 {
            for k in 0..=n {
                let lhs = &q_binomial(n as i64, k as i64).unwrap()
                    * &(&q_factorial(k) * &q_factorial(n - k));
                assert_eq!(lhs, q_factorial(n), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn q_binomial_is_palindromic_with_degree() {
        for n in 0..=8i64 {
            for k in 0..=n {
                let c = q_binomial(n, k).unwrap().univariate(Q).unwrap();
                assert_eq!(c.len() as i64 - 1, k * (n - k));
                let mut r = c.clone();
                r.reverse();
                assert_eq!(c, r);
                assert!(c.iter().all(|x| !x.is_negative()));
                assert_eq!(q_binomial(n, k).unwrap().eval([1, 1, 1]), binomial(n, k));
            }
        }
    }

    #[test]
    fn display_canonical() {
        let p = Poly::monomial([0, 2, 0], 4) + Poly::monomial([0, 3, 0], 1);
        assert_eq!(p.to_string(), "4*t^2 + t^3");
        let p = Poly::s() - Poly::one();
        assert_eq!(p.to_string(), "-1 + s");
        assert_eq!(Poly::zero().to_string(), "0");
        let p = Poly::monomial([1, 2, 3], -2);
        assert_eq!(p.to_string(), "-2*s*t^2*q^3");
    }

    #[test]
    fn shift_s() {
        let p = Poly::s().pow(2);
        let shifted = p.shift_s_minus_one();
        assert_eq!(
            shifted,
            Poly::s().pow(2) - Poly::s().scale(&BigInt::from(2)) + Poly::one()
        );
        assert_eq!(shifted.eval_var(S, 1), Poly::zero());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(5, 6), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binomial(4, -1), BigInt::zero());
    }
}
