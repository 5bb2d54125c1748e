//! The Malvenuto–Reutenauer algebra truncated at a degree cap, with
//! coefficients polynomial in `s`; its quotient onto quasisymmetric
//! functions; and the homomorphisms into power series.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::pattern::{cluster_candidates, cluster_mk_polynomial, occurrence_count, PatternSet};
use crate::perm::{
    factorial, permutations, shifted_concats, shuffles, Composition, DescentStats, Permutation,
};
use crate::poly::{q_factorial, Poly};
use crate::series::{inv_prod_one_minus_tq, Series, Truncation, Var};

/// A finite combination `Σ c_π G_π` with `|π| ≤ cap`.
#[derive(Clone, PartialEq, Eq)]
pub struct FqsymElement {
    terms: BTreeMap<Permutation, Poly>,
    cap: usize,
}

impl FqsymElement {
    pub fn zero(cap: usize) -> Self {
        FqsymElement {
            terms: BTreeMap::new(),
            cap,
        }
    }

    /// `G_ε`, the multiplicative identity.
    pub fn one(cap: usize) -> Self {
        FqsymElement::basis(Permutation::empty(), cap)
    }

    pub fn basis(p: Permutation, cap: usize) -> Self {
        let mut e = FqsymElement::zero(cap);
        e.add_term(p, Poly::one());
        e
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Adds `c·G_π`; terms above the cap are dropped.
    pub fn add_term(&mut self, p: Permutation, c: Poly) {
        if c.is_zero() || p.len() > self.cap {
            return;
        }
        match self.terms.entry(p) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Poly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, p: &Permutation) -> Poly {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    /// The homogeneous component of degree `n`.
    pub fn degree_part(&self, n: usize) -> FqsymElement {
        FqsymElement {
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.len() == n)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
            cap: self.cap,
        }
    }

    pub fn scale(&self, c: &Poly) -> FqsymElement {
        let mut out = FqsymElement::zero(self.cap);
        for (p, x) in &self.terms {
            out.add_term(p.clone(), x * c);
        }
        out
    }

    pub fn add(&self, other: &FqsymElement) -> FqsymElement {
        let mut out = FqsymElement::zero(self.cap.min(other.cap));
        for (p, c) in self.terms.iter().chain(other.terms.iter()) {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &FqsymElement) -> FqsymElement {
        self.add(&other.scale(&Poly::constant(-1)))
    }

    /// Applies `s ↦ s − 1` to every coefficient.
    pub fn shift_s_minus_one(&self) -> FqsymElement {
        let mut out = FqsymElement::zero(self.cap);
        for (p, c) in &self.terms {
            out.add_term(p.clone(), c.shift_s_minus_one());
        }
        out
    }
}

impl fmt::Display for FqsymElement {
    /// One line per term, `coeff * G[π]`, by degree then lexicographically.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (p, c) in &self.terms {
            writeln!(f, "{c} * G[{p}]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for FqsymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FqsymElement(cap {}, {} terms)",
            self.cap,
            self.terms.len()
        )
    }
}

/// `G_π G_σ = Σ_{τ ∈ C(π,σ)} G_τ`, extended bilinearly and truncated at the
/// smaller cap.
pub fn g_product(f: &FqsymElement, g: &FqsymElement) -> FqsymElement {
    let cap = f.cap.min(g.cap);
    let left: Vec<(&Permutation, &Poly)> = f.terms.iter().collect();
    let parts: Vec<FqsymElement> = left
        .par_iter()
        .map(|(p, a)| {
            let mut out = FqsymElement::zero(cap);
            for (s, b) in &g.terms {
                if p.len() + s.len() > cap {
                    continue;
                }
                let c = *a * b;
                for tau in shifted_concats(p, s) {
                    out.add_term(tau, c.clone());
                }
            }
            out
        })
        .collect();
    parts
        .iter()
        .fold(FqsymElement::zero(cap), |acc, e| acc.add(e))
}

/// `F̄_Γ(s) = Σ_{|π| ≤ cap} s^{occ_Γ(π)} G_π`.
pub fn f_bar(set: &PatternSet, cap: usize) -> FqsymElement {
    let mut out = FqsymElement::zero(cap);
    for n in 0..=cap {
        for p in permutations(n) {
            let occ = occurrence_count(p.letters(), set);
            out.add_term(p, Poly::monomial([occ, 0, 0], 1));
        }
    }
    out
}

/// `R̄_Γ(s) = Σ_π G_π Σ_c s^{mk(c)}`, optionally with `s ↦ s − 1`.
pub fn r_bar(set: &PatternSet, cap: usize, shift: bool) -> FqsymElement {
    let mut out = FqsymElement::zero(cap);
    for n in 2..=cap {
        cluster_candidates(n, set, &mut |w| {
            let p = Permutation::new(w.to_vec()).expect("candidates are permutations");
            let mk = cluster_mk_polynomial(&p, set);
            out.add_term(p, if shift { mk.shift_s_minus_one() } else { mk });
        });
    }
    out
}

/// Outcome of checking the cluster identity in one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeReport {
    pub degree: usize,
    /// Basis elements compared on each side.
    pub checked: usize,
    pub mismatches: Vec<String>,
}

/// Outcome of [`verify_cluster_identity`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClusterIdentityReport {
    pub patterns: PatternSet,
    pub cap: usize,
    pub degrees: Vec<DegreeReport>,
}

impl ClusterIdentityReport {
    pub fn passed(&self) -> bool {
        self.degrees.iter().all(|d| d.mismatches.is_empty())
    }
}

/// Largest degree cap accepted by [`verify_cluster_identity`].
pub const MAX_IDENTITY_CAP: usize = 8;

/// Checks `(1 − G_1 − R̄_Γ(s−1)) · F̄_Γ(s) = 1` and the mirrored product
/// coefficient by coefficient on every basis element of degree `≤ cap`.
pub fn verify_cluster_identity(set: &PatternSet, cap: usize) -> Result<ClusterIdentityReport> {
    if set.is_empty() {
        return Err(Error::EmptyPatternSet);
    }
    if cap > MAX_IDENTITY_CAP {
        return Err(Error::SafetyCap {
            n: cap,
            cap: MAX_IDENTITY_CAP,
        });
    }
    let f = f_bar(set, cap);
    let kernel = FqsymElement::one(cap)
        .sub(&FqsymElement::basis(Permutation::identity(1), cap))
        .sub(&r_bar(set, cap, true));
    let left = g_product(&kernel, &f);
    let right = g_product(&f, &kernel);
    let one = FqsymElement::one(cap);
    let mut degrees = Vec::with_capacity(cap + 1);
    for n in 0..=cap {
        let mut mismatches = Vec::new();
        for p in permutations(n) {
            let expect = one.coeff(&p);
            for (side, prod) in [("left", &left), ("right", &right)] {
                let got = prod.coeff(&p);
                if got != expect {
                    mismatches.push(format!("{side} G[{p}]: {got}"));
                }
            }
        }
        degrees.push(DegreeReport {
            degree: n,
            checked: factorial(n) as usize,
            mismatches,
        });
    }
    Ok(ClusterIdentityReport {
        patterns: set.clone(),
        cap,
        degrees,
    })
}

/// A finite combination `Σ c_L F_L` of fundamental quasisymmetric functions
/// with `|L| ≤ cap`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSymElement {
    terms: BTreeMap<Composition, Poly>,
    cap: usize,
}

impl QSymElement {
    pub fn zero(cap: usize) -> Self {
        QSymElement {
            terms: BTreeMap::new(),
            cap,
        }
    }

    pub fn basis(l: Composition, cap: usize) -> Self {
        let mut e = QSymElement::zero(cap);
        e.add_term(l, Poly::one());
        e
    }

    pub fn add_term(&mut self, l: Composition, c: Poly) {
        if c.is_zero() || l.size() > self.cap {
            return;
        }
        let slot = self.terms.entry(l).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Composition, &Poly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, l: &Composition) -> Poly {
        self.terms.get(l).cloned().unwrap_or_default()
    }
}

impl fmt::Display for QSymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (l, c) in &self.terms {
            writeln!(f, "{c} * F{l}")?;
        }
        Ok(())
    }
}

/// `ρ(G_π) = F_{Comp(π^{-1})}`.
pub fn rho(f: &FqsymElement) -> QSymElement {
    let mut out = QSymElement::zero(f.cap);
    for (p, c) in &f.terms {
        out.add_term(p.inverse().descent_composition(), c.clone());
    }
    out
}

/// `F_L F_K = Σ_{τ ∈ S(π,σ)} F_{Comp(τ)}` with `π` on `{1..m}` of
/// composition `L` and `σ` on `{m+1..m+n}` of composition `K`.
pub fn qsym_product(f: &QSymElement, g: &QSymElement) -> QSymElement {
    let cap = f.cap.min(g.cap);
    let mut out = QSymElement::zero(cap);
    for (l, a) in &f.terms {
        for (k, b) in &g.terms {
            if l.size() + k.size() > cap {
                continue;
            }
            let pi = l.canonical_permutation();
            let shift = l.size() as u32;
            let sigma: Vec<u32> = k
                .canonical_permutation()
                .letters()
                .iter()
                .map(|v| v + shift)
                .collect();
            let c = a * b;
            for tau in shuffles(pi.letters(), &sigma).expect("disjoint by construction") {
                out.add_term(crate::perm::descent_composition(&tau), c.clone());
            }
        }
    }
    out
}

/// The ribbon element `r_L = Σ_{Comp(π) = L} G_π`.
pub fn embed_ribbon(l: &Composition, cap: usize) -> FqsymElement {
    let mut out = FqsymElement::zero(cap);
    for p in permutations(l.size()) {
        if p.descent_composition() == *l {
            out.add_term(p, Poly::one());
        }
    }
    out
}

/// Homomorphisms from the truncated algebra into power series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Hom {
    /// `G_π ↦ x^n/n!`
    Psi,
    /// `G_π ↦ q^{inv(π)} x^n/[n]_q!`
    PsiQ,
    /// `G_π ↦ t^{ides+1} q^{icomaj} x^n / Π_{i=0}^{n}(1 − t q^i)`
    PsiIdesIcomaj,
    /// `G_π ↦ 2^{2 ipk+1} t^{ipk+1} (1+t)^{n−2 ipk−1} x^n / (1−t)^{n+1}`
    PsiIpk,
    /// `G_π ↦ 2^{2 ilpk} t^{ilpk} (1+t)^{n−2 ilpk} x^n / (1−t)^{n+1}`
    PsiIlpk,
}

impl Hom {
    pub const ALL: [Hom; 5] = [
        Hom::Psi,
        Hom::PsiQ,
        Hom::PsiIdesIcomaj,
        Hom::PsiIpk,
        Hom::PsiIlpk,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Hom::Psi => "psi",
            Hom::PsiQ => "psi-q",
            Hom::PsiIdesIcomaj => "psi-ides-icomaj",
            Hom::PsiIpk => "psi-ipk",
            Hom::PsiIlpk => "psi-ilpk",
        }
    }

    /// Whether the target multiplies by Hadamard product in `t`.
    pub fn hadamard(self) -> bool {
        matches!(self, Hom::PsiIdesIcomaj | Hom::PsiIpk | Hom::PsiIlpk)
    }

    /// A truncation large enough to hold images of degree `≤ cap` exactly in
    /// every coefficient below it.
    pub fn truncation(self, cap: usize) -> Truncation {
        let c = cap as u32;
        let q = (c * c.saturating_sub(1) / 2).max(1);
        match self {
            Hom::Psi => Truncation::exact().with(Var::X, c),
            Hom::PsiQ => Truncation::exact().with(Var::X, c).with(Var::Q, q),
            Hom::PsiIdesIcomaj => Truncation::tx(c + 2, c).with(Var::Q, q),
            Hom::PsiIpk | Hom::PsiIlpk => Truncation::tx(c + 2, c),
        }
    }
}

impl fmt::Display for Hom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Hom {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        Hom::ALL
            .into_iter()
            .find(|h| h.name() == key)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown homomorphism {s:?}")))
    }
}

/// Image of a single basis element.
pub fn hom_image(p: &Permutation, hom: Hom, tr: Truncation) -> Result<Series> {
    let n = p.len() as u32;
    let x_n = Series::monomial([0, 0, 0, n], BigRational::one(), tr);
    let one = Series::one(tr);
    let t = Series::var(Var::T, tr);
    let peak = |two_pow: u32, t_pow: u32, plus_pow: u32| -> Result<Series> {
        let coeff = Series::monomial(
            [0, t_pow, 0, n],
            BigRational::from_integer(BigInt::from(2).pow(two_pow)),
            tr,
        );
        let inv = Series::geometric(Var::T, tr)?.pow(n + 1);
        Ok(&(&coeff * &(&one + &t).pow(plus_pow)) * &inv)
    };
    match hom {
        Hom::Psi => Ok(x_n.scale(&BigRational::new(
            BigInt::one(),
            BigInt::from(factorial(p.len())),
        ))),
        Hom::PsiQ => {
            let num = Series::monomial([0, 0, p.inversions(), n], BigRational::one(), tr);
            Ok(&num * &Series::from_poly(&q_factorial(n), tr).invert()?)
        }
        _ if n == 0 => Series::geometric(Var::T, tr),
        Hom::PsiIdesIcomaj => {
            let d = DescentStats::of(p.inverse().letters());
            let num = Series::monomial([0, d.des + 1, d.comaj, n], BigRational::one(), tr);
            Ok(&num * &inv_prod_one_minus_tq(n, tr)?)
        }
        Hom::PsiIpk => {
            let k = DescentStats::of(p.inverse().letters()).pk;
            peak(2 * k + 1, k + 1, n - 2 * k - 1)
        }
        Hom::PsiIlpk => {
            let k = DescentStats::of(p.inverse().letters()).lpk;
            peak(2 * k, k, n - 2 * k)
        }
    }
}

/// Linear extension of [`hom_image`].
pub fn apply_hom(f: &FqsymElement, hom: Hom, tr: Truncation) -> Result<Series> {
    let mut out = Series::zero(tr);
    for (p, c) in &f.terms {
        out = &out + &(&hom_image(p, hom, tr)? * &Series::from_poly(c, tr));
    }
    Ok(out)
}

/// Product in the target algebra of a homomorphism.
pub fn target_product(hom: Hom, a: &Series, b: &Series) -> Series {
    if hom.hadamard() {
        a.hadamard_t(b)
    } else {
        a * b
    }
}

/// Outcome of [`hom_is_multiplicative_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomReport {
    pub hom: Hom,
    pub cap: usize,
    pub pairs_checked: usize,
    pub failures: Vec<String>,
}

impl HomReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `hom(G_π G_σ) = hom(G_π) · hom(G_σ)` for every pair of basis
/// elements with `|π| + |σ| ≤ cap`.
pub fn hom_is_multiplicative_check(hom: Hom, cap: usize) -> Result<HomReport> {
    if cap > MAX_IDENTITY_CAP {
        return Err(Error::SafetyCap {
            n: cap,
            cap: MAX_IDENTITY_CAP,
        });
    }
    let tr = hom.truncation(cap);
    let all: Vec<Permutation> = (0..=cap).flat_map(permutations).collect();
    let images: HashMap<Permutation, Series> = all
        .par_iter()
        .map(|p| hom_image(p, hom, tr).map(|s| (p.clone(), s)))
        .collect::<Result<_>>()?;
    let pairs: Vec<(&Permutation, &Permutation)> = all
        .iter()
        .flat_map(|p| {
            all.iter()
                .filter(move |s| p.len() + s.len() <= cap)
                .map(move |s| (p, s))
        })
        .collect();
    let failures: Vec<String> = pairs
        .par_iter()
        .filter_map(|(p, s)| {
            let mut lhs = Series::zero(tr);
            for tau in shifted_concats(p, s) {
                lhs = &lhs + &images[&tau];
            }
            let rhs = target_product(hom, &images[*p], &images[*s]);
            (!(&lhs - &rhs).is_zero()).then(|| format!("G[{p}] * G[{s}]"))
        })
        .collect();
    Ok(HomReport {
        hom,
        cap,
        pairs_checked: pairs.len(),
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn g(s: &str, cap: usize) -> FqsymElement {
        FqsymElement::basis(p(s), cap)
    }

    fn comp(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn product_examples() {
        let prod = g_product(&g("1", 4), &g("1", 4));
        assert_eq!(prod, g("12", 4).add(&g("21", 4)));
        let prod = g_product(&g("12", 4), &g("1", 4));
        assert_eq!(prod, g("123", 4).add(&g("132", 4)).add(&g("231", 4)));
        let f = g("21", 4).add(&g("1", 4));
        assert_eq!(g_product(&FqsymElement::one(4), &f), f);
        assert!(g_product(&g("123", 4), &g("12", 4)).is_empty());
    }

    #[test]
    fn f_and_r_bar_examples() {
        let set = PatternSet::parse("123").unwrap();
        let f = f_bar(&set, 3);
        assert_eq!(f.coeff(&p("123")), Poly::s());
        assert_eq!(f.coeff(&p("213")), Poly::one());
        assert_eq!(f.degree_part(3).len(), 6);
        let f1 = f_bar(&set, 1);
        assert_eq!(f1, FqsymElement::one(1).add(&g("1", 1)));
        let r = r_bar(&set, 3, true);
        assert_eq!(r, g("123", 3).scale(&(Poly::s() - Poly::one())));
    }

    #[test]
    fn identity_small() {
        for (pat, cap) in [("123", 6), ("21", 5), ("132,231", 5)] {
            let rep = verify_cluster_identity(&PatternSet::parse(pat).unwrap(), cap).unwrap();
            assert!(rep.passed(), "{pat}: {:?}", rep.degrees);
        }
    }

    #[test]
    fn rho_and_qsym() {
        let r = rho(&g("231", 3));
        assert_eq!(r, QSymElement::basis(comp(&[1, 2]), 3));
        assert_eq!(
            rho(&FqsymElement::one(2)),
            QSymElement::basis(Composition::empty(), 2)
        );
        assert_eq!(rho(&g("1234", 4)), QSymElement::basis(comp(&[4]), 4));
        let f1 = QSymElement::basis(comp(&[1]), 3);
        let mut expect = QSymElement::basis(comp(&[2]), 3);
        expect.add_term(comp(&[1, 1]), Poly::one());
        assert_eq!(qsym_product(&f1, &f1), expect);
        let e = QSymElement::basis(Composition::empty(), 3);
        assert_eq!(qsym_product(&e, &f1), f1);
        assert_eq!(
            rho(&g_product(&g("1", 3), &g("1", 3))),
            qsym_product(&f1, &f1)
        );
    }

    #[test]
    fn hom_examples() {
        let tr = Hom::PsiQ.truncation(3);
        let img = apply_hom(&g("21", 3), Hom::PsiQ, tr).unwrap();
        let expect = &Series::monomial([0, 0, 1, 2], BigRational::one(), tr)
            * &Series::from_poly(&(Poly::one() + Poly::q()), tr)
                .invert()
                .unwrap();
        assert_eq!(img, expect);
        let both = apply_hom(&g("12", 3).add(&g("21", 3)), Hom::PsiQ, tr).unwrap();
        assert_eq!(both, Series::monomial([0, 0, 0, 2], BigRational::one(), tr));
        let tr = Hom::PsiIlpk.truncation(3);
        let empty = apply_hom(&FqsymElement::one(3), Hom::PsiIlpk, tr).unwrap();
        assert_eq!(empty, Series::geometric(Var::T, tr).unwrap());
    }

    #[test]
    fn homs_multiplicative_small() {
        for hom in Hom::ALL {
            let rep = hom_is_multiplicative_check(hom, 4).unwrap();
            assert!(rep.passed(), "{hom}: {:?}", rep.failures);
        }
    }

    #[test]
    fn ribbons_map_to_h() {
        for n in 0..=4 {
            let l = if n == 0 {
                Composition::empty()
            } else {
                comp(&[n as u32])
            };
            let r = embed_ribbon(&l, 4);
            assert_eq!(r, FqsymElement::basis(Permutation::identity(n), 4));
            let tr = Hom::PsiQ.truncation(4);
            let img = apply_hom(&r, Hom::PsiQ, tr).unwrap();
            let expect = &Series::monomial([0, 0, 0, n as u32], BigRational::one(), tr)
                * &Series::from_poly(&q_factorial(n as u32), tr)
                    .invert()
                    .unwrap();
            assert_eq!(img, expect);
        }
    }

    #[test]
    fn associativity_and_grading() {
        let all: Vec<Permutation> = (0..=3).flat_map(permutations).collect();
        for a in &all {
            for b in &all {
                let ab = g_product(
                    &FqsymElement::basis(a.clone(), 6),
                    &FqsymElement::basis(b.clone(), 6),
                );
                assert!(ab.terms().all(|(t, _)| t.len() == a.len() + b.len()));
                for c in all.iter().filter(|c| a.len() + b.len() + c.len() <= 6) {
                    let gc = FqsymElement::basis(c.clone(), 6);
                    let bc = g_product(&FqsymElement::basis(b.clone(), 6), &gc);
                    let lhs = g_product(&ab, &gc);
                    let rhs = g_product(&FqsymElement::basis(a.clone(), 6), &bc);
                    assert_eq!(lhs, rhs, "{a} {b} {c}");
                }
            }
        }
    }

    #[test]
    fn rho_is_multiplicative() {
        let all: Vec<Permutation> = (0..=6).flat_map(permutations).collect();
        for a in &all {
            for b in all.iter().filter(|b| a.len() + b.len() <= 6) {
                let ga = FqsymElement::basis(a.clone(), 6);
                let gb = FqsymElement::basis(b.clone(), 6);
                assert_eq!(
                    rho(&g_product(&ga, &gb)),
                    qsym_product(&rho(&ga), &rho(&gb))
                );
            }
        }
    }

    #[test]
    fn qsym_product_is_representative_independent() {
        for m in 1..=3 {
            for n in 1..=3 {
                for a in permutations(m) {
                    for b in permutations(n) {
                        let shifted: Vec<u32> = b.letters().iter().map(|v| v + m as u32).collect();
                        let mut direct = QSymElement::zero(6);
                        for tau in shuffles(a.letters(), &shifted).unwrap() {
                            direct.add_term(crate::perm::descent_composition(&tau), Poly::one());
                        }
                        let prod = qsym_product(
                            &QSymElement::basis(a.descent_composition(), 6),
                            &QSymElement::basis(b.descent_composition(), 6),
                        );
                        assert_eq!(prod, direct);
                    }
                }
            }
        }
    }

    #[test]
    fn q_vandermonde() {
        for m in 0..=4usize {
            for n in 0..=(7 - m) {
                for a in permutations(m) {
                    for b in permutations(n) {
                        let mut lhs = Poly::zero();
                        for tau in shifted_concats(&a, &b) {
                            lhs += &Poly::monomial([0, 0, tau.inversions()], 1);
                        }
                        let rhs = Poly::monomial([0, 0, a.inversions() + b.inversions()], 1)
                            * crate::poly::q_binomial((m + n) as i64, n as i64).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                    if m == 4 {
                        break;
                    }
                }
            }
        }
    }

    #[test]
    fn ilpk_hom_pair() {
        let tr = Hom::PsiIlpk.truncation(2);
        let g1 = apply_hom(&g("1", 2), Hom::PsiIlpk, tr).unwrap();
        let lhs = apply_hom(&g("12", 2).add(&g("21", 2)), Hom::PsiIlpk, tr).unwrap();
        assert_eq!(lhs, g1.hadamard_t(&g1));
    }

    #[test]
    fn empty_set_rejected() {
        assert!(verify_cluster_identity(&PatternSet::none(), 3).is_err());
    }
}
