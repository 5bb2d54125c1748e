//! Truncated multivariate power series in `s`, `t`, `q`, `x` over exact
//! rationals.
//!
//! A series carries a truncation bound per variable. A bounded variable `v`
//! with bound `T` means the series is known modulo `v^{T+1}`; an unbounded
//! variable means the series is an exact polynomial in it. Arithmetic is
//! carried out in the quotient ring, so every stored coefficient is exact.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{self, Poly};

pub type Mono = [u32; 4];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    S = 0,
    T = 1,
    Q = 2,
    X = 3,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::S, Var::T, Var::Q, Var::X];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        NAMES[self as usize]
    }
}

const NAMES: [&str; 4] = ["s", "t", "q", "x"];
const UNBOUNDED: u32 = u32::MAX;

/// Per-variable truncation orders.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Truncation([u32; 4]);

impl Truncation {
    /// No variable is truncated: exact polynomials.
    pub fn exact() -> Self {
        Truncation([UNBOUNDED; 4])
    }

    /// Bounds `t` and `x`; `s` and `q` stay exact.
    pub fn tx(t: u32, x: u32) -> Self {
        Truncation::exact().with(Var::T, t).with(Var::X, x)
    }

    pub fn with(mut self, v: Var, bound: u32) -> Self {
        self.0[v.index()] = bound;
        self
    }

    pub fn unbounded(mut self, v: Var) -> Self {
        self.0[v.index()] = UNBOUNDED;
        self
    }

    pub fn get(&self, v: Var) -> Option<u32> {
        let b = self.0[v.index()];
        (b != UNBOUNDED).then_some(b)
    }

    pub fn is_bounded(&self, v: Var) -> bool {
        self.get(v).is_some()
    }

    pub fn meet(&self, other: &Truncation) -> Truncation {
        let mut out = [0; 4];
        for (i, o) in out.iter_mut().enumerate() {
            *o = self.0[i].min(other.0[i]);
        }
        Truncation(out)
    }

    pub fn contains(&self, m: &Mono) -> bool {
        (0..4).all(|i| m[i] <= self.0[i])
    }
}

impl fmt::Debug for Truncation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = Var::ALL
            .iter()
            .map(|v| match self.get(*v) {
                Some(b) => format!("{}≤{b}", v.name()),
                None => format!("{}:exact", v.name()),
            })
            .collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl fmt::Display for Truncation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

fn add_mono(a: &Mono, b: &Mono) -> Mono {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]]
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

#[derive(Clone, PartialEq, Eq)]
pub struct Series {
    terms: BTreeMap<Mono, BigRational>,
    trunc: Truncation,
}

impl Series {
    pub fn zero(trunc: Truncation) -> Self {
        Series {
            terms: BTreeMap::new(),
            trunc,
        }
    }

    pub fn one(trunc: Truncation) -> Self {
        Series::constant(BigRational::one(), trunc)
    }

    pub fn constant(c: BigRational, trunc: Truncation) -> Self {
        Series::monomial([0; 4], c, trunc)
    }

    pub fn integer(c: i64, trunc: Truncation) -> Self {
        Series::constant(rat(c), trunc)
    }

    pub fn monomial(m: Mono, c: BigRational, trunc: Truncation) -> Self {
        let mut s = Series::zero(trunc);
        s.add_term(m, c);
        s
    }

    pub fn var(v: Var, trunc: Truncation) -> Self {
        let mut m = [0; 4];
        m[v.index()] = 1;
        Series::monomial(m, BigRational::one(), trunc)
    }

    /// `Σ_{k=0}^{T_v} v^k`, the truncation of `1/(1−v)`.
    pub fn geometric(v: Var, trunc: Truncation) -> Result<Self> {
        let bound = trunc.get(v).ok_or(Error::Unbounded(v.name()))?;
        let mut s = Series::zero(trunc);
        for k in 0..=bound {
            let mut m = [0; 4];
            m[v.index()] = k;
            s.add_term(m, BigRational::one());
        }
        Ok(s)
    }

    /// Lifts an integer polynomial in `(s, t, q)`.
    pub fn from_poly(p: &Poly, trunc: Truncation) -> Self {
        let mut s = Series::zero(trunc);
        for (e, c) in p.terms() {
            s.add_term([e[0], e[1], e[2], 0], BigRational::from_integer(c.clone()));
        }
        s
    }

    /// Lifts an integer polynomial with `t` replaced by the series `t_image`.
    pub fn from_poly_t_image(p: &Poly, t_image: &Series, trunc: Truncation) -> Result<Self> {
        let lifted = Series::from_poly(p, trunc.unbounded(Var::T));
        lifted.substitute(Var::T, t_image)?.truncate(trunc)
    }

    pub fn trunc(&self) -> Truncation {
        self.trunc
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

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &BigRational)> {
        self.terms.iter()
    }

    /// Adds `c·m`, silently dropping monomials beyond the truncation.
    pub fn add_term(&mut self, m: Mono, c: BigRational) {
        if c.is_zero() || !self.trunc.contains(&m) {
            return;
        }
        match self.terms.entry(m) {
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

    /// Coefficient of a monomial; an error if it lies beyond the truncation.
    pub fn coeff(&self, m: Mono) -> Result<BigRational> {
        if !self.trunc.contains(&m) {
            return Err(Error::BeyondTruncation {
                monomial: mono_text(&m),
                truncation: self.trunc.to_string(),
            });
        }
        Ok(self
            .terms
            .get(&m)
            .cloned()
            .unwrap_or_else(BigRational::zero))
    }

    pub fn constant_term(&self) -> BigRational {
        self.terms
            .get(&[0; 4])
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Restricts to a smaller truncation box.
    pub fn truncate(&self, trunc: Truncation) -> Result<Series> {
        let t = self.trunc.meet(&trunc);
        Ok(Series {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| t.contains(m))
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
            trunc: t,
        })
    }

    /// Coefficient of `v^k` as a series in the remaining variables. The result
    /// is exact (unbounded) in `v`, since `v` no longer occurs.
    pub fn slice(&self, v: Var, k: u32) -> Result<Series> {
        if let Some(b) = self.trunc.get(v) {
            if k > b {
                let mut m = [0; 4];
                m[v.index()] = k;
                return Err(Error::BeyondTruncation {
                    monomial: mono_text(&m),
                    truncation: self.trunc.to_string(),
                });
            }
        }
        let mut out = Series::zero(self.trunc.unbounded(v));
        for (m, c) in &self.terms {
            if m[v.index()] == k {
                let mut r = *m;
                r[v.index()] = 0;
                out.terms.insert(r, c.clone());
            }
        }
        Ok(out)
    }

    pub fn x_slice(&self, n: u32) -> Result<Series> {
        self.slice(Var::X, n)
    }

    /// Sets `v = 0`.
    pub fn set_zero(&self, v: Var) -> Series {
        self.slice(v, 0)
            .expect("degree 0 is always within truncation")
    }

    pub fn scale(&self, c: &BigRational) -> Series {
        let mut out = Series::zero(self.trunc);
        if c.is_zero() {
            return out;
        }
        for (m, x) in &self.terms {
            out.terms.insert(*m, x * c);
        }
        out
    }

    pub fn scale_int(&self, c: i64) -> Series {
        self.scale(&rat(c))
    }

    /// Multiplies by a monomial.
    pub fn shift(&self, e: Mono) -> Series {
        let mut out = Series::zero(self.trunc);
        for (m, c) in &self.terms {
            out.add_term(add_mono(m, &e), c.clone());
        }
        out
    }

    pub fn pow(&self, k: u32) -> Series {
        let mut out = Series::one(self.trunc);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Multiplicative inverse. Needs a nonzero constant term, and every other
    /// term must involve a truncated variable so the geometric series stops.
    pub fn invert(&self) -> Result<Series> {
        let c = self.constant_term();
        if c.is_zero() {
            return Err(Error::NotInvertible);
        }
        let c_inv = c.recip();
        let mut h = self.clone();
        h.terms.remove(&[0; 4]);
        self.require_nilpotent(&h)?;
        let h = h.scale(&-c_inv.clone());
        let mut total = Series::one(self.trunc);
        let mut power = Series::one(self.trunc);
        loop {
            power = &power * &h;
            if power.is_zero() {
                break;
            }
            total = &total + &power;
        }
        Ok(total.scale(&c_inv))
    }

    fn require_nilpotent(&self, h: &Series) -> Result<()> {
        let ok = h.terms.keys().all(|m| {
            Var::ALL
                .iter()
                .any(|v| m[v.index()] > 0 && self.trunc.is_bounded(*v))
        });
        if ok {
            Ok(())
        } else {
            Err(Error::Unbounded(
                "a term that involves only untruncated variables",
            ))
        }
    }

    /// `√(1 + f)` on the principal branch, for `f = self` with zero constant term.
    pub fn sqrt_one_plus(&self) -> Result<Series> {
        if !self.constant_term().is_zero() {
            return Err(Error::SqrtConstantTerm);
        }
        self.require_nilpotent(self)?;
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let mut total = Series::one(self.trunc);
        let mut power = Series::one(self.trunc);
        let mut binom = BigRational::one();
        let mut k = 0i64;
        loop {
            k += 1;
            power = &power * self;
            if power.is_zero() {
                break;
            }
            binom = binom * (&half - rat(k - 1)) / rat(k);
            total = &total + &power.scale(&binom);
        }
        Ok(total)
    }

    /// Divides by `v`; every term must contain `v`.
    pub fn div_by_var(&self, v: Var) -> Result<Series> {
        let i = v.index();
        if let Some((m, _)) = self.terms.iter().find(|(m, _)| m[i] == 0) {
            return Err(Error::InvalidParameter(format!(
                "term {} is not divisible by {}",
                mono_text(m),
                v.name()
            )));
        }
        let trunc = match self.trunc.get(v) {
            Some(0) => {
                return Err(Error::InvalidParameter(format!(
                    "cannot divide by {}: nothing is known beyond degree 0",
                    v.name()
                )))
            }
            Some(b) => self.trunc.with(v, b - 1),
            None => self.trunc,
        };
        let mut out = Series::zero(trunc);
        for (m, c) in &self.terms {
            let mut r = *m;
            r[i] -= 1;
            out.add_term(r, c.clone());
        }
        Ok(out)
    }

    /// Formal composition `self|_{var ↦ g}`.
    ///
    /// If `self` is truncated in `var`, some truncated variable `w` must divide
    /// every term of `g`; the unknown tail of `self` then lies in degree
    /// `> T(var)` in `w`, and the result is truncated accordingly.
    pub fn substitute(&self, var: Var, g: &Series) -> Result<Series> {
        let vi = var.index();
        let mut trunc = self.trunc.meet(&g.trunc);
        trunc.0[vi] = g.trunc.0[vi];
        if let Some(tf) = self.trunc.get(var) {
            if !g.is_zero() {
                let best = Var::ALL
                    .iter()
                    .copied()
                    .filter(|w| {
                        let wi = w.index();
                        trunc.is_bounded(*w) && g.terms.keys().all(|m| m[wi] > 0)
                    })
                    .min_by_key(|w| trunc.0[w.index()].saturating_sub(tf))
                    .ok_or_else(|| {
                        Error::UnboundedSubstitution(format!(
                            "{} is truncated at degree {tf} and no truncated variable divides every term of the image",
                            var.name()
                        ))
                    })?;
                let bi = best.index();
                trunc.0[bi] = trunc.0[bi].min(tf);
            }
        }
        let g = g.truncate(trunc)?;
        let mut groups: BTreeMap<u32, Series> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut r = *m;
            let k = r[vi];
            r[vi] = 0;
            groups
                .entry(k)
                .or_insert_with(|| Series::zero(trunc))
                .add_term(r, c.clone());
        }
        let mut out = Series::zero(trunc);
        let mut power = Series::one(trunc);
        let mut at = 0u32;
        for (k, coeff) in groups {
            while at < k {
                power = &power * &g;
                at += 1;
            }
            if power.is_zero() {
                break;
            }
            out = &out + &(&coeff * &power);
        }
        Ok(out)
    }

    fn t_slices(&self) -> BTreeMap<u32, Vec<(Mono, &BigRational)>> {
        let mut out: BTreeMap<u32, Vec<(Mono, &BigRational)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m[1]).or_default().push((*m, c));
        }
        out
    }

    /// Hadamard product in `t`: slice-wise ordinary product of the
    /// coefficients of each power of `t`.
    pub fn hadamard_t(&self, other: &Series) -> Series {
        let trunc = self.trunc.meet(&other.trunc);
        let mut out = Series::zero(trunc);
        let right = other.t_slices();
        for (k, left) in self.t_slices() {
            let Some(r) = right.get(&k) else { continue };
            for (a, x) in &left {
                for (b, y) in r {
                    let mut m = add_mono(a, b);
                    m[1] = k;
                    out.add_term(m, *x * *y);
                }
            }
        }
        out
    }

    /// `Σ_{k ≤ T_t} t^k`, the Hadamard identity `1/(1−t)`.
    pub fn hadamard_identity(trunc: Truncation) -> Result<Series> {
        Series::geometric(Var::T, trunc)
    }

    pub fn hadamard_pow(&self, n: u32) -> Result<Series> {
        let mut out = Series::hadamard_identity(self.trunc)?;
        for _ in 0..n {
            out = out.hadamard_t(self);
        }
        Ok(out)
    }

    /// Hadamard inverse, slice by slice.
    pub fn hadamard_inv(&self) -> Result<Series> {
        let bound = self.trunc.get(Var::T).ok_or(Error::Unbounded("t"))?;
        let mut out = Series::zero(self.trunc);
        for k in 0..=bound {
            let slice = self
                .slice(Var::T, k)?
                .truncate(self.trunc.unbounded(Var::T))?;
            let inv = slice.invert().map_err(|e| match e {
                Error::NotInvertible => Error::HadamardNotInvertible(k),
                other => other,
            })?;
            for (m, c) in inv.terms {
                let mut r = m;
                r[1] = k;
                out.add_term(r, c);
            }
        }
        Ok(out)
    }

    /// `Σ_{n=0}^{N} f^{*⟨n⟩}`, by running accumulation.
    pub fn hadamard_geometric_sum(&self, n_max: u32) -> Result<Series> {
        let mut power = Series::hadamard_identity(self.trunc)?;
        let mut total = power.clone();
        for _ in 0..n_max {
            power = power.hadamard_t(self);
            total = &total + &power;
        }
        Ok(total)
    }

    /// The underlying integer polynomial in `(s, t, q)`; `x` must not occur
    /// and every coefficient must be an integer.
    pub fn to_poly(&self) -> Result<Poly> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            if m[3] != 0 {
                return Err(Error::InvalidParameter(format!(
                    "series still depends on x through {}",
                    mono_text(m)
                )));
            }
            if !c.is_integer() {
                return Err(Error::NonInteger(c.to_string()));
            }
            terms.push(([m[0], m[1], m[2]], c.to_integer()));
        }
        Ok(Poly::from_terms(terms))
    }

    /// Largest exponent of `v` that occurs.
    pub fn degree(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|m| m[v.index()]).max()
    }
}

impl Add<&Series> for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        let mut out = self.truncate(rhs.trunc).expect("truncate is infallible");
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub<&Series> for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        let mut out = self.truncate(rhs.trunc).expect("truncate is infallible");
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        self.scale(&-BigRational::one())
    }
}

impl Mul<&Series> for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        let trunc = self.trunc.meet(&rhs.trunc);
        let mut out = Series::zero(trunc);
        for (a, x) in &self.terms {
            if !trunc.contains(a) {
                continue;
            }
            for (b, y) in &rhs.terms {
                let m = add_mono(a, b);
                if trunc.contains(&m) {
                    out.add_term(m, x * y);
                }
            }
        }
        out
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for Series {
            type Output = Series;
            fn $f(self, rhs: Series) -> Series {
                (&self).$f(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

fn mono_text(m: &Mono) -> String {
    let t = poly::monomial_text(m, &NAMES);
    if t.is_empty() {
        "1".to_string()
    } else {
        t
    }
}

/// Canonical text: monomials by total degree then lexicographically in
/// `(s, t, q, x)`; rationals as `p/q`.
impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Mono> = self.terms.keys().collect();
        keys.sort_by_key(|m| (m.iter().sum::<u32>(), **m));
        for (i, m) in keys.into_iter().enumerate() {
            let c = &self.terms[m];
            let mono = poly::monomial_text(m, &NAMES);
            poly::write_term(f, i == 0, c.is_negative(), &c.abs().to_string(), &mono)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series({self} mod {})", self.trunc)
    }
}

/// `Π_{i=0}^{n} (1 − t q^i)` as an exact polynomial.
pub fn prod_one_minus_tq(n: u32, trunc: Truncation) -> Series {
    let mut out = Series::one(trunc);
    for i in 0..=n {
        let mut factor = Series::one(trunc);
        factor.add_term([0, 1, i, 0], -BigRational::one());
        out = &out * &factor;
    }
    out
}

/// `1/Π_{i=0}^{n}(1 − t q^i) = Σ_k C(n+k, k)_q t^k`, truncated in `t`.
pub fn inv_prod_one_minus_tq(n: u32, trunc: Truncation) -> Result<Series> {
    let bound = trunc.get(Var::T).ok_or(Error::Unbounded("t"))?;
    let mut out = Series::zero(trunc);
    for k in 0..=bound {
        let qb = poly::q_binomial((n + k) as i64, k as i64)?;
        for (e, c) in qb.terms() {
            out.add_term([0, k, e[2], 0], BigRational::from_integer(c.clone()));
        }
    }
    Ok(out)
}

/// `u = 4t/(1+t)^2`.
pub fn u_series(trunc: Truncation) -> Result<Series> {
    let one_plus_t = &Series::one(trunc) + &Series::var(Var::T, trunc);
    let inv = one_plus_t.pow(2).invert()?;
    Ok(Series::var(Var::T, trunc).scale_int(4).mul(inv))
}

/// `v = 2t^{-1}(1 − √(1−t)) − 1`, the compositional inverse of `u`.
pub fn v_series(trunc: Truncation) -> Result<Series> {
    let bound = trunc.get(Var::T).ok_or(Error::Unbounded("t"))?;
    let wide = trunc.with(Var::T, bound + 1);
    let sqrt = Series::var(Var::T, wide).scale_int(-1).sqrt_one_plus()?;
    let numer = &Series::one(wide) - &sqrt;
    let two_over = numer.div_by_var(Var::T)?.scale_int(2);
    Ok(&two_over - &Series::one(two_over.trunc()))
}
