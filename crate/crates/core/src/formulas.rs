//! Generating-function theorems for the distribution polynomials, closed-form
//! cluster series for monotone and transpositional patterns, coefficient
//! extraction, and numeric checks of the enumerative claims.
//!
//! Every theorem produces a series in `(s, t, q, x)`; an extraction routine
//! then recovers the polynomials family by family.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::brute::{DistributionPolynomial, Family};
use crate::error::{Error, Result};
use crate::pattern::{avoiders, cluster_polynomial, occurrence_count, ClusterStat, PatternSet};
use crate::perm::{inverse_of, reading_sequences, DescentStats, Permutation};
use crate::poly::{binomial, q_binomial, q_integer, Poly, S, T};
use crate::series::{inv_prod_one_minus_tq, u_series, v_series, Series, Truncation, Var};

/// Value of `s` a theorem is evaluated at.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SParam {
    Zero,
    Symbolic,
}

impl fmt::Display for SParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SParam::Zero => f.write_str("0"),
            SParam::Symbolic => f.write_str("symbolic"),
        }
    }
}

impl FromStr for SParam {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "0" | "zero" => Ok(SParam::Zero),
            "s" | "symbolic" => Ok(SParam::Symbolic),
            other => Err(Error::InvalidParameter(format!(
                "s must be 0 or symbolic, got {other:?}"
            ))),
        }
    }
}

/// Where refined cluster polynomials come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClusterSource {
    BruteForce,
    ClosedForm,
}

/// Pattern shapes with closed-form cluster series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PatternShape {
    Increasing(usize),
    Decreasing(usize),
    Transpositional { m: usize, a: usize },
}

/// `12⋯(a−1)(a+1)a(a+2)⋯m`.
pub fn transpositional_pattern(m: usize, a: usize) -> Result<Permutation> {
    check_trans(m, a)?;
    let mut letters: Vec<u32> = (1..=m as u32).collect();
    letters.swap(a - 1, a);
    Permutation::new(letters)
}

fn check_trans(m: usize, a: usize) -> Result<()> {
    if m < 5 || a < 2 || a + 2 > m {
        return Err(Error::InvalidParameter(format!(
            "transpositional pattern needs m >= 5 and 2 <= a <= m-2, got m={m}, a={a}"
        )));
    }
    Ok(())
}

fn check_mono(m: usize) -> Result<()> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!(
            "monotone pattern needs m >= 2, got {m}"
        )));
    }
    Ok(())
}

/// Recognizes a single monotone or transpositional pattern.
pub fn classify(set: &PatternSet) -> Option<PatternShape> {
    let [p] = set.patterns() else { return None };
    let m = p.len();
    if *p == Permutation::identity(m) {
        return Some(PatternShape::Increasing(m));
    }
    if *p == Permutation::decreasing(m) {
        return Some(PatternShape::Decreasing(m));
    }
    (2..m.saturating_sub(1))
        .find(|&a| transpositional_pattern(m, a).is_ok_and(|t| t == *p))
        .map(|a| PatternShape::Transpositional { m, a })
}

impl PatternShape {
    pub fn pattern_set(self) -> Result<PatternSet> {
        let p = match self {
            PatternShape::Increasing(m) => {
                check_mono(m)?;
                Permutation::identity(m)
            }
            PatternShape::Decreasing(m) => {
                check_mono(m)?;
                Permutation::decreasing(m)
            }
            PatternShape::Transpositional { m, a } => transpositional_pattern(m, a)?,
        };
        PatternSet::single(p)
    }
}

/// Truncation used to reproduce a family up to `x^{n_max}`.
pub fn default_truncation(family: Family, n_max: usize) -> Truncation {
    let n = n_max as u32;
    let tr = Truncation::tx(n + 2, n);
    match family {
        Family::AIdesImaj | Family::AIdesIcomaj => {
            tr.with(Var::Q, (n * n.saturating_sub(1) / 2).max(1))
        }
        _ => tr,
    }
}

fn rat(c: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(c))
}

fn cst(c: i64, tr: Truncation) -> Series {
    Series::integer(c, tr)
}

fn var(v: Var, tr: Truncation) -> Series {
    Series::var(v, tr)
}

fn x_pow(k: u32, tr: Truncation) -> Series {
    Series::monomial([0, 0, 0, k], BigRational::one(), tr)
}

fn t_pow(k: u32, tr: Truncation) -> Series {
    Series::monomial([0, k, 0, 0], BigRational::one(), tr)
}

/// `1/(1−t)`.
fn inv_one_minus_t(tr: Truncation) -> Result<Series> {
    Series::geometric(Var::T, tr)
}

/// `1/(1+t)`.
fn inv_one_plus_t(tr: Truncation) -> Result<Series> {
    (&cst(1, tr) + &var(Var::T, tr)).invert()
}

/// `z = x/(1−t)`.
fn z_ides(tr: Truncation) -> Result<Series> {
    Ok(&var(Var::X, tr) * &inv_one_minus_t(tr)?)
}

/// `z = (1+t)x/(1−t)`.
fn z_peak(tr: Truncation) -> Result<Series> {
    let one_plus_t = &cst(1, tr) + &var(Var::T, tr);
    Ok(&(&one_plus_t * &var(Var::X, tr)) * &inv_one_minus_t(tr)?)
}

/// `Σ_{l ∈ range} w^l`.
fn power_sum(w: &Series, range: impl IntoIterator<Item = u32>) -> Series {
    let mut out = Series::zero(w.trunc());
    for l in range {
        out = &out + &w.pow(l);
    }
    out
}

/// `s − 1`, or `−1` at `s = 0`.
fn s_minus_one(s: SParam, tr: Truncation) -> Series {
    match s {
        SParam::Zero => cst(-1, tr),
        SParam::Symbolic => &var(Var::S, tr) - &cst(1, tr),
    }
}

/// `base / (1 − step)`.
fn chain(base: &Series, step: &Series) -> Result<Series> {
    let denom = &cst(1, base.trunc()) - step;
    Ok(base * &denom.invert()?)
}

/// `Σ_k R_{σ,k} x^k` for `σ = 12⋯m` (or `m⋯21` when `decreasing`), with `s`
/// symbolic.
pub fn monotone_cluster_gf(
    m: usize,
    stat: ClusterStat,
    decreasing: bool,
    tr: Truncation,
) -> Result<Series> {
    check_mono(m)?;
    let m = m as u32;
    let s = var(Var::S, tr);
    let x = var(Var::X, tr);
    let t = var(Var::T, tr);
    let unsupported = || {
        Error::InvalidParameter(format!(
            "no closed-form cluster series for {} with statistic {stat:?}",
            if decreasing {
                "a decreasing pattern"
            } else {
                "an increasing pattern"
            }
        ))
    };
    let (weight, letter) = match (decreasing, stat) {
        (false, ClusterStat::Ides | ClusterStat::IdesIcomaj | ClusterStat::Ipk) => {
            (t.clone(), x.clone())
        }
        (false, ClusterStat::Ilpk | ClusterStat::None | ClusterStat::Inv) => {
            (cst(1, tr), x.clone())
        }
        (true, ClusterStat::Ides) => (cst(1, tr), &t * &x),
        (true, ClusterStat::Ipk | ClusterStat::Ilpk) => (t.clone(), x.clone()),
        (true, ClusterStat::None) => (cst(1, tr), x.clone()),
        (true, ClusterStat::IdesIcomaj | ClusterStat::Inv) => return Err(unsupported()),
    };
    let base = &(&s * &weight) * &letter.pow(m);
    let step = &s * &power_sum(&letter, 1..m);
    chain(&base, &step)
}

/// `Σ_k R_{σ,k} x^k` for the transpositional pattern with parameters
/// `(m, a)`, with `s` symbolic.
pub fn trans_cluster_gf(m: usize, a: usize, stat: ClusterStat, tr: Truncation) -> Result<Series> {
    check_trans(m, a)?;
    let i = a.min(m - a) as u32;
    let m = m as u32;
    let s = var(Var::S, tr);
    let x = var(Var::X, tr);
    let t = var(Var::T, tr);
    let (weight, per_step) = match stat {
        ClusterStat::Ides | ClusterStat::Ipk => (t.pow(2), t.clone()),
        ClusterStat::Ilpk => (t.clone(), t.clone()),
        ClusterStat::None => (cst(1, tr), cst(1, tr)),
        other => {
            return Err(Error::InvalidParameter(format!(
                "no closed-form transpositional cluster series for statistic {other:?}"
            )))
        }
    };
    let base = &(&s * &weight) * &x.pow(m);
    let step = &(&s * &per_step) * &power_sum(&x, (1..=i).map(|l| m - l));
    chain(&base, &step)
}

/// Closed-form cluster series for a recognized pattern shape.
pub fn closed_cluster_gf(shape: PatternShape, stat: ClusterStat, tr: Truncation) -> Result<Series> {
    match shape {
        PatternShape::Increasing(m) => monotone_cluster_gf(m, stat, false, tr),
        PatternShape::Decreasing(m) => monotone_cluster_gf(m, stat, true, tr),
        PatternShape::Transpositional { m, a } => trans_cluster_gf(m, a, stat, tr),
    }
}

/// `R_{Γ,k}(s, …)` for `k = 0..=n_max`.
pub fn cluster_polys(
    set: &PatternSet,
    stat: ClusterStat,
    n_max: usize,
    source: ClusterSource,
) -> Result<Vec<Poly>> {
    if set.is_empty() {
        return Ok(vec![Poly::zero(); n_max + 1]);
    }
    match source {
        ClusterSource::BruteForce => (0..=n_max)
            .map(|k| cluster_polynomial(set, k, stat).map(|c| c.poly))
            .collect(),
        ClusterSource::ClosedForm => {
            let shape = classify(set).ok_or_else(|| {
                Error::InvalidParameter(format!(
                    "{} is neither monotone nor transpositional",
                    set.canonical_string()
                ))
            })?;
            let gf =
                closed_cluster_gf(shape, stat, Truncation::exact().with(Var::X, n_max as u32))?;
            (0..=n_max as u32)
                .map(|k| gf.x_slice(k)?.to_poly())
                .collect()
        }
    }
}

fn cluster_stat(family: Family) -> Result<ClusterStat> {
    match family {
        Family::AIdes => Ok(ClusterStat::Ides),
        Family::AIdesIcomaj => Ok(ClusterStat::IdesIcomaj),
        Family::PIpk => Ok(ClusterStat::Ipk),
        Family::PIlpk => Ok(ClusterStat::Ilpk),
        other => Err(Error::InvalidParameter(format!(
            "family {other} has no Hadamard specialization"
        ))),
    }
}

/// The Hadamard kernel `f` whose geometric sum `Σ_n f^{*⟨n⟩}` encodes the
/// family. `rs[k]` is `R_{Γ,k}` before the shift `s ↦ s−1`.
pub fn spec_kernel(family: Family, rs: &[Poly], s: SParam, tr: Truncation) -> Result<Series> {
    let shifted = |p: &Poly| {
        let p = p.shift_s_minus_one();
        match s {
            SParam::Zero => p.eval_var(S, 0),
            SParam::Symbolic => p,
        }
    };
    let t = var(Var::T, tr);
    let x = var(Var::X, tr);
    let inv1mt = inv_one_minus_t(tr)?;
    match family {
        Family::AIdesIcomaj => {
            let mut f = &(&t * &x) * &inv_prod_one_minus_tq(1, tr)?;
            for (k, r) in rs.iter().enumerate().skip(2) {
                if r.is_zero() {
                    continue;
                }
                let term = &Series::from_poly(&shifted(r), tr) * &x_pow(k as u32, tr);
                f = &f + &(&term * &inv_prod_one_minus_tq(k as u32, tr)?);
            }
            Ok(f)
        }
        Family::AIdes => {
            let z = z_ides(tr)?;
            let mut sum = Series::zero(tr);
            for (k, r) in rs.iter().enumerate().skip(2) {
                if !r.is_zero() {
                    sum = &sum + &(&Series::from_poly(&shifted(r), tr) * &z.pow(k as u32));
                }
            }
            Ok(&(&(&t * &x) * &inv1mt.pow(2)) + &(&inv1mt * &sum))
        }
        Family::PIpk | Family::PIlpk => {
            let z = z_peak(tr)?;
            let u = u_series(tr)?;
            let mut sum = Series::zero(tr);
            for (k, r) in rs.iter().enumerate().skip(2) {
                if !r.is_zero() {
                    let rk = Series::from_poly_t_image(&shifted(r), &u, tr)?;
                    sum = &sum + &(&rk * &z.pow(k as u32));
                }
            }
            if family == Family::PIpk {
                let lead = &(&t * &x).scale_int(2) * &inv1mt.pow(2);
                let pref =
                    (&(&cst(1, tr) + &t) * &inv1mt).scale(&BigRational::new(1.into(), 2.into()));
                Ok(&lead + &(&pref * &sum))
            } else {
                Ok(&(&z * &inv1mt) + &(&inv1mt * &sum))
            }
        }
        other => Err(Error::InvalidParameter(format!(
            "family {other} has no Hadamard specialization"
        ))),
    }
}

fn tail_poly(n: usize, slice: &Series, bound: usize, residue: bool) -> Result<Poly> {
    let mut kept = Series::zero(slice.trunc());
    for (m, c) in slice.terms() {
        if m[1] as usize > bound {
            let detail = format!("t^{} has coefficient {c}", m[1]);
            return Err(if residue {
                Error::NonPolynomialResidue { n, detail }
            } else {
                Error::TailNotCleared { n, detail }
            });
        }
        kept.add_term(*m, c.clone());
    }
    kept.to_poly()
}

fn check_extractable(h: &Series, n_max: usize) -> Result<()> {
    match h.trunc().get(Var::X) {
        Some(b) if (b as usize) < n_max => Err(Error::InvalidParameter(format!(
            "series is truncated at x^{b}, cannot extract n = {n_max}"
        ))),
        _ => Ok(()),
    }
}

/// `A_n = [x^n] H · (1−t)^{n+1}`, checking that the tail above `t^n` vanishes.
pub fn extract_a_ides(h: &Series, n_max: usize) -> Result<Vec<Poly>> {
    check_extractable(h, n_max)?;
    let mut out = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let slice = h.x_slice(n as u32)?;
        let tr = slice.trunc();
        let factor = (&cst(1, tr) - &var(Var::T, tr)).pow(n as u32 + 1);
        out.push(tail_poly(n, &(&slice * &factor), n, false)?);
    }
    Ok(out)
}

/// `A_n = [x^n] H · Π_{i=0}^{n}(1 − t q^i)`, checking the tail above `t^n`.
pub fn extract_a_ides_icomaj(h: &Series, n_max: usize) -> Result<Vec<Poly>> {
    check_extractable(h, n_max)?;
    let mut out = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let slice = h.x_slice(n as u32)?;
        let factor = crate::series::prod_one_minus_tq(n as u32, slice.trunc());
        out.push(tail_poly(n, &(&slice * &factor), n, false)?);
    }
    Ok(out)
}

/// `H` with `x ↦ (1−t)x/(1+t)` and then `t ↦ v`.
fn peak_substitution(h: &Series) -> Result<(Series, Series)> {
    let tr = h.trunc();
    let g = &(&(&cst(1, tr) - &var(Var::T, tr)) * &var(Var::X, tr)) * &inv_one_plus_t(tr)?;
    let h1 = h.substitute(Var::X, &g)?;
    let v = v_series(h1.trunc())?;
    let h2 = h1.substitute(Var::T, &v)?;
    let v = v.truncate(h2.trunc())?;
    Ok((h2, v))
}

/// `Σ_{n≥1} P_n x^n = 2(1−v)/(1+v) · H|_{x↦(1−t)x/(1+t), t↦v} − 2/(1+v)`.
pub fn extract_p_ipk(h: &Series, n_max: usize) -> Result<Vec<Poly>> {
    check_extractable(h, n_max)?;
    let (h2, v) = peak_substitution(h)?;
    let tr = h2.trunc();
    let inv = (&cst(1, tr) + &v).invert()?;
    let one_minus_v = &cst(1, tr) - &v;
    let total = &(&(&one_minus_v * &inv).scale_int(2) * &h2) - &inv.scale_int(2);
    let mut out = vec![Poly::one()];
    for n in 1..=n_max {
        let slice = total.x_slice(n as u32)?;
        out.push(tail_poly(n, &slice, Family::PIpk.t_degree_bound(n), true)?);
    }
    Ok(out)
}

/// `Σ_{n≥0} P_n x^n = (1−v) · H|_{x↦(1−t)x/(1+t), t↦v}`.
pub fn extract_p_ilpk(h: &Series, n_max: usize) -> Result<Vec<Poly>> {
    check_extractable(h, n_max)?;
    let (h2, v) = peak_substitution(h)?;
    let tr = h2.trunc();
    let total = &(&cst(1, tr) - &v) * &h2;
    (0..=n_max)
        .map(|n| {
            tail_poly(
                n,
                &total.x_slice(n as u32)?,
                Family::PIlpk.t_degree_bound(n),
                true,
            )
        })
        .collect()
}

/// Dispatches to the extraction routine of a family.
pub fn extract(family: Family, h: &Series, n_max: usize) -> Result<Vec<Poly>> {
    match family {
        Family::AIdes => extract_a_ides(h, n_max),
        Family::AIdesIcomaj | Family::AIdesImaj => extract_a_ides_icomaj(h, n_max),
        Family::PIpk => extract_p_ipk(h, n_max),
        Family::PIlpk => extract_p_ilpk(h, n_max),
        other => Err(Error::InvalidParameter(format!(
            "family {other} is not extracted from a series"
        ))),
    }
}

/// `t^a q^b ↦ t^a q^{n(a−1)−b}`: the `(ides, icomaj)` polynomial to the
/// `(ides, imaj)` one.
pub fn imaj_from_icomaj(p: &Poly, n: usize) -> Result<Poly> {
    let mut out = Poly::zero();
    for (e, c) in p.terms() {
        let qe = n as i64 * (e[1] as i64 - 1) - e[2] as i64;
        if qe < 0 && !(n == 0 && e[1] == 0) {
            return Err(Error::InvalidParameter(format!(
                "monomial t^{} q^{} cannot occur at n = {n}",
                e[1], e[2]
            )));
        }
        out.add_term([e[0], e[1], qe.max(0) as u32], c.clone());
    }
    Ok(out)
}

/// Builds the Hadamard kernel from cluster polynomials, sums it and extracts
/// the family for `n = 0..=n_max`.
pub fn specialize(
    family: Family,
    set: &PatternSet,
    n_max: usize,
    s: SParam,
    source: ClusterSource,
) -> Result<Vec<DistributionPolynomial>> {
    let base_family = if family == Family::AIdesImaj {
        Family::AIdesIcomaj
    } else {
        family
    };
    let stat = cluster_stat(base_family)?;
    let rs = cluster_polys(set, stat, n_max, source)?;
    let tr = default_truncation(base_family, n_max);
    let h = spec_kernel(base_family, &rs, s, tr)?.hadamard_geometric_sum(n_max as u32)?;
    let mut polys = extract(base_family, &h, n_max)?;
    if family == Family::AIdesImaj {
        for (n, p) in polys.iter_mut().enumerate() {
            *p = imaj_from_icomaj(p, n)?;
        }
    }
    Ok(label(family, set, polys))
}

fn label(family: Family, set: &PatternSet, polys: Vec<Poly>) -> Vec<DistributionPolynomial> {
    polys
        .into_iter()
        .enumerate()
        .map(|(n, poly)| DistributionPolynomial {
            family,
            patterns: set.clone(),
            n,
            poly,
        })
        .collect()
}

/// The named theorems.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FormulaKind {
    GjPerm,
    GjQ,
    SpecIdesIcomaj,
    SpecIdes,
    SpecIpk,
    SpecIlpk,
    MonoIdesImajA,
    MonoIdesImajB,
    MonoIdesA,
    MonoIdesB,
    MonoIdesC,
    MonoIpkA,
    MonoIpkB,
    MonoIpkC,
    MonoIlpkA,
    MonoIlpkB,
    MonoIlpkC,
    DecIlpkA,
    DecIlpkB,
    DecIlpkC,
    TransIdesA,
    TransIdesB,
    TransIpkA,
    TransIpkB,
    TransIlpkA,
    TransIlpkB,
}

/// The parameters a theorem is stated for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamKind {
    Patterns,
    Monotone,
    Transpositional,
}

impl FormulaKind {
    pub const ALL: [FormulaKind; 26] = [
        FormulaKind::GjPerm,
        FormulaKind::GjQ,
        FormulaKind::SpecIdesIcomaj,
        FormulaKind::SpecIdes,
        FormulaKind::SpecIpk,
        FormulaKind::SpecIlpk,
        FormulaKind::MonoIdesImajA,
        FormulaKind::MonoIdesImajB,
        FormulaKind::MonoIdesA,
        FormulaKind::MonoIdesB,
        FormulaKind::MonoIdesC,
        FormulaKind::MonoIpkA,
        FormulaKind::MonoIpkB,
        FormulaKind::MonoIpkC,
        FormulaKind::MonoIlpkA,
        FormulaKind::MonoIlpkB,
        FormulaKind::MonoIlpkC,
        FormulaKind::DecIlpkA,
        FormulaKind::DecIlpkB,
        FormulaKind::DecIlpkC,
        FormulaKind::TransIdesA,
        FormulaKind::TransIdesB,
        FormulaKind::TransIpkA,
        FormulaKind::TransIpkB,
        FormulaKind::TransIlpkA,
        FormulaKind::TransIlpkB,
    ];

    pub fn name(self) -> &'static str {
        use FormulaKind::*;
        match self {
            GjPerm => "gj-perm",
            GjQ => "gj-q",
            SpecIdesIcomaj => "spec-ides-icomaj",
            SpecIdes => "spec-ides",
            SpecIpk => "spec-ipk",
            SpecIlpk => "spec-ilpk",
            MonoIdesImajA => "mono-idesimaj-a",
            MonoIdesImajB => "mono-idesimaj-b",
            MonoIdesA => "mono-ides-a",
            MonoIdesB => "mono-ides-b",
            MonoIdesC => "mono-ides-c",
            MonoIpkA => "mono-ipk-a",
            MonoIpkB => "mono-ipk-b",
            MonoIpkC => "mono-ipk-c",
            MonoIlpkA => "mono-ilpk-a",
            MonoIlpkB => "mono-ilpk-b",
            MonoIlpkC => "mono-ilpk-c",
            DecIlpkA => "dec-ilpk-a",
            DecIlpkB => "dec-ilpk-b",
            DecIlpkC => "dec-ilpk-c",
            TransIdesA => "trans-ides-a",
            TransIdesB => "trans-ides-b",
            TransIpkA => "trans-ipk-a",
            TransIpkB => "trans-ipk-b",
            TransIlpkA => "trans-ilpk-a",
            TransIlpkB => "trans-ilpk-b",
        }
    }

    pub fn family(self) -> Family {
        use FormulaKind::*;
        match self {
            GjPerm => Family::FPlain,
            GjQ => Family::FQ,
            SpecIdesIcomaj => Family::AIdesIcomaj,
            MonoIdesImajA | MonoIdesImajB => Family::AIdesImaj,
            SpecIdes | MonoIdesA | MonoIdesB | MonoIdesC | TransIdesA | TransIdesB => Family::AIdes,
            SpecIpk | MonoIpkA | MonoIpkB | MonoIpkC | TransIpkA | TransIpkB => Family::PIpk,
            SpecIlpk | MonoIlpkA | MonoIlpkB | MonoIlpkC | DecIlpkA | DecIlpkB | DecIlpkC
            | TransIlpkA | TransIlpkB => Family::PIlpk,
        }
    }

    pub fn params(self) -> ParamKind {
        use FormulaKind::*;
        match self {
            GjPerm | GjQ | SpecIdesIcomaj | SpecIdes | SpecIpk | SpecIlpk => ParamKind::Patterns,
            TransIdesA | TransIdesB | TransIpkA | TransIpkB | TransIlpkA | TransIlpkB => {
                ParamKind::Transpositional
            }
            _ => ParamKind::Monotone,
        }
    }

    /// Whether the theorem holds with `s` symbolic, not only at `s = 0`.
    pub fn symbolic_s(self) -> bool {
        use FormulaKind::*;
        matches!(
            self,
            GjPerm
                | GjQ
                | SpecIdesIcomaj
                | SpecIdes
                | SpecIpk
                | SpecIlpk
                | MonoIdesA
                | MonoIpkA
                | MonoIlpkA
                | DecIlpkA
                | TransIdesA
                | TransIpkA
                | TransIlpkA
        )
    }

    pub fn description(self) -> &'static str {
        use FormulaKind::*;
        match self {
            GjPerm => "exponential cluster recurrence for s^occ over S_n",
            GjQ => "q-exponential cluster recurrence for s^occ q^inv over S_n",
            SpecIdesIcomaj => "Hadamard specialization for (ides, icomaj) from cluster polynomials",
            SpecIdes => "Hadamard specialization for ides from cluster polynomials",
            SpecIpk => "Hadamard specialization for ipk from cluster polynomials",
            SpecIlpk => "Hadamard specialization for ilpk from cluster polynomials",
            MonoIdesImajA => "(ides, imaj) over S_n(12..m), Hadamard form",
            MonoIdesImajB => "(ides, imaj) over S_n(12..m), q-binomial inverse form",
            MonoIdesA => "ides with occurrences of 12..m, Hadamard form",
            MonoIdesB => "ides over S_n(12..m), reduced Hadamard form",
            MonoIdesC => "ides over S_n(12..m), binomial inverse form",
            MonoIpkA => "ipk with occurrences of 12..m, Hadamard form",
            MonoIpkB => "ipk over S_n(12..m), reduced Hadamard form",
            MonoIpkC => "ipk over S_n(12..m), binomial inverse form",
            MonoIlpkA => "ilpk with occurrences of 12..m, Hadamard form",
            MonoIlpkB => "ilpk over S_n(12..m), reduced Hadamard form",
            MonoIlpkC => "ilpk over S_n(12..m), binomial inverse form",
            DecIlpkA => "ilpk with occurrences of m..21, Hadamard form",
            DecIlpkB => "ilpk over S_n(m..21), reduced Hadamard form",
            DecIlpkC => "ilpk over S_n(m..21), binomial inverse form",
            TransIdesA => "ides with occurrences of a transpositional pattern",
            TransIdesB => "ides over avoiders of a transpositional pattern",
            TransIpkA => "ipk with occurrences of a transpositional pattern",
            TransIpkB => "ipk over avoiders of a transpositional pattern",
            TransIlpkA => "ilpk with occurrences of a transpositional pattern",
            TransIlpkB => "ilpk over avoiders of a transpositional pattern",
        }
    }
}

impl fmt::Display for FormulaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FormulaKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        FormulaKind::ALL
            .into_iter()
            .find(|k| k.name() == key)
            .ok_or_else(|| Error::UnknownFormula {
                name: s.to_string(),
                known: FormulaKind::ALL.map(|k| k.name()).join(", "),
            })
    }
}

/// Parameters a theorem is evaluated at.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormulaParams {
    Patterns(PatternSet),
    Monotone { m: usize },
    Transpositional { m: usize, a: usize },
}

/// A theorem together with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaId {
    pub kind: FormulaKind,
    pub params: FormulaParams,
}

impl FormulaId {
    pub fn new(kind: FormulaKind, params: FormulaParams) -> Result<Self> {
        let ok = matches!(
            (kind.params(), &params),
            (ParamKind::Patterns, FormulaParams::Patterns(_))
                | (ParamKind::Monotone, FormulaParams::Monotone { .. })
                | (
                    ParamKind::Transpositional,
                    FormulaParams::Transpositional { .. }
                )
        );
        if !ok {
            return Err(Error::InvalidParameter(format!(
                "{kind} expects {:?} parameters, got {params:?}",
                kind.params()
            )));
        }
        match params {
            FormulaParams::Monotone { m } => check_mono(m)?,
            FormulaParams::Transpositional { m, a } => check_trans(m, a)?,
            FormulaParams::Patterns(_) => {}
        }
        Ok(FormulaId { kind, params })
    }

    /// The pattern set the theorem counts.
    pub fn pattern_set(&self) -> Result<PatternSet> {
        use FormulaKind::*;
        match (&self.params, self.kind) {
            (FormulaParams::Patterns(p), _) => Ok(p.clone()),
            (FormulaParams::Monotone { m }, DecIlpkA | DecIlpkB | DecIlpkC) => {
                PatternShape::Decreasing(*m).pattern_set()
            }
            (FormulaParams::Monotone { m }, _) => PatternShape::Increasing(*m).pattern_set(),
            (FormulaParams::Transpositional { m, a }, _) => {
                PatternShape::Transpositional { m: *m, a: *a }.pattern_set()
            }
        }
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.params {
            FormulaParams::Patterns(p) => write!(f, "{}[{}]", self.kind, p.canonical_string()),
            FormulaParams::Monotone { m } => write!(f, "{}[m={m}]", self.kind),
            FormulaParams::Transpositional { m, a } => write!(f, "{}[m={m},a={a}]", self.kind),
        }
    }
}

/// Evaluates a theorem for `n = 0..=n_max`. For the specialization theorems
/// `source` says where cluster polynomials come from; the other theorems are
/// self-contained.
pub fn evaluate(
    id: &FormulaId,
    n_max: usize,
    s: SParam,
    source: ClusterSource,
) -> Result<Vec<DistributionPolynomial>> {
    use FormulaKind::*;
    if s == SParam::Symbolic && !id.kind.symbolic_s() {
        return Err(Error::InvalidParameter(format!(
            "{} is stated at s = 0 only",
            id.kind
        )));
    }
    let set = id.pattern_set()?;
    let family = id.kind.family();
    let at_s = |polys: Vec<Poly>| -> Vec<Poly> {
        match s {
            SParam::Zero => polys.into_iter().map(|p| p.eval_var(S, 0)).collect(),
            SParam::Symbolic => polys,
        }
    };
    match id.kind {
        GjPerm => Ok(label(family, &set, at_s(gj_plain(&set, n_max)?))),
        GjQ => Ok(label(family, &set, at_s(gj_q(&set, n_max)?))),
        SpecIdesIcomaj | SpecIdes | SpecIpk | SpecIlpk => {
            specialize(family, &set, n_max, s, source)
        }
        _ => {
            let tr = default_truncation(family, n_max);
            let h = theorem_series(id, s, n_max, tr)?;
            // The monotone (ides, imaj) theorem yields the imaj family directly.
            Ok(label(family, &set, extract(family, &h, n_max)?))
        }
    }
}

/// The left-hand series of a closed-form theorem, built from its right-hand
/// side.
pub fn theorem_series(id: &FormulaId, s: SParam, n_max: usize, tr: Truncation) -> Result<Series> {
    use FormulaKind::*;
    let n = n_max as u32;
    let t = var(Var::T, tr);
    let x = var(Var::X, tr);
    let one = cst(1, tr);
    let inv1mt = inv_one_minus_t(tr)?;
    let sm1 = s_minus_one(s, tr);
    let (m, i) = match id.params {
        FormulaParams::Monotone { m } => (m as u32, 0),
        FormulaParams::Transpositional { m, a } => (m as u32, a.min(m - a) as u32),
        FormulaParams::Patterns(_) => {
            return Err(Error::InvalidParameter(format!(
                "{} is not a closed-form theorem",
                id.kind
            )))
        }
    };
    let kernel = |f: Series| f.hadamard_geometric_sum(n);
    // 1/(1−t^2)
    let inv1mt2 = &inv1mt * &inv_one_plus_t(tr)?;
    let half = BigRational::new(1.into(), 2.into());
    match id.kind {
        MonoIdesImajA => {
            let mut f = &(&t * &x) * &inv_prod_one_minus_tq(1, tr)?;
            let mut j = 1;
            while j * m <= n {
                let a = &(&t * &x_pow(j * m, tr)) * &inv_prod_one_minus_tq(j * m, tr)?;
                let b = &(&t * &x_pow(j * m + 1, tr)) * &inv_prod_one_minus_tq(j * m + 1, tr)?;
                f = &(&f - &a) + &b;
                j += 1;
            }
            kernel(f)
        }
        MonoIdesImajB => inverse_form(
            tr,
            |k| {
                let mut d = Series::zero(tr);
                let mut j = 0;
                while j * m <= n {
                    let (k, jm) = (k as i64, (j * m) as i64);
                    let a = Series::from_poly(&q_binomial(k + jm - 1, k - 1)?, tr);
                    let b = Series::from_poly(&q_binomial(k + jm, k - 1)?, tr);
                    d = &(&d + &(&a * &x_pow(j * m, tr))) - &(&b * &x_pow(j * m + 1, tr));
                    j += 1;
                }
                Ok(d)
            },
            true,
        ),
        MonoIdesA => {
            let z = z_ides(tr)?;
            let lead = &(&t * &x) * &inv1mt.pow(2);
            let den = &one - &(&sm1 * &power_sum(&z, 1..m));
            let tail = &(&(&sm1 * &t) * &z.pow(m)) * &(&inv1mt * &den.invert()?);
            kernel(&lead + &tail)
        }
        MonoIdesB => {
            let z = z_ides(tr)?;
            let num = &(&t * &z) * &(&one - &z.pow(m - 1));
            let den = (&one - &z.pow(m)).invert()?;
            kernel(&(&num * &inv1mt) * &den)
        }
        MonoIdesC => inverse_form(
            tr,
            |k| {
                let mut d = Series::zero(tr);
                let mut j = 0;
                while j * m <= n {
                    let (k, jm) = (k as i64, (j * m) as i64);
                    d.add_term(
                        [0, 0, 0, j * m],
                        BigRational::from_integer(binomial(k + jm - 1, k - 1)),
                    );
                    d.add_term(
                        [0, 0, 0, j * m + 1],
                        -BigRational::from_integer(binomial(k + jm, k - 1)),
                    );
                    j += 1;
                }
                Ok(d)
            },
            true,
        ),
        MonoIpkA => {
            let z = z_peak(tr)?;
            let lead = &(&t * &x).scale_int(2) * &inv1mt.pow(2);
            let den = &one - &(&sm1 * &power_sum(&z, 1..m));
            let tail = &(&(&sm1 * &t).scale_int(2) * &z.pow(m)) * &(&inv1mt2 * &den.invert()?);
            kernel(&lead + &tail)
        }
        MonoIpkB => {
            let z = z_peak(tr)?;
            let num = &(&t * &z).scale_int(2) * &(&one - &z.pow(m - 1));
            let den = (&one - &z.pow(m)).invert()?;
            kernel(&(&num * &inv1mt2) * &den)
        }
        MonoIpkC => inverse_form(
            tr,
            |k| {
                let mut d = cst(1, tr);
                d.add_term([0, 0, 0, 1], rat(-2 * k as i64));
                let mut j = 1;
                while j * m <= n {
                    let jm = (j * m) as i64;
                    let c = peak_coefficient(2, k, |l| (l + jm - 1, l - 1), jm - 1);
                    let c2 = peak_coefficient(2, k, |l| (l + jm, l - 1), jm);
                    d.add_term([0, 0, 0, j * m], BigRational::from_integer(c));
                    d.add_term([0, 0, 0, j * m + 1], -BigRational::from_integer(c2));
                    j += 1;
                }
                Ok(d)
            },
            true,
        ),
        MonoIlpkA => {
            let z = z_peak(tr)?;
            let den = &one - &(&sm1 * &power_sum(&z, 1..m));
            let tail = &(&sm1 * &z.pow(m)) * &(&inv1mt * &den.invert()?);
            kernel(&(&z * &inv1mt) + &tail)
        }
        MonoIlpkB => {
            let z = z_peak(tr)?;
            let num = &z * &(&one - &z.pow(m - 1));
            let den = (&one - &z.pow(m)).invert()?;
            kernel(&(&num * &inv1mt) * &den)
        }
        MonoIlpkC => inverse_form(
            tr,
            |k| {
                let mut d = Series::zero(tr);
                let mut j = 0;
                while j * m <= n {
                    let jm = (j * m) as i64;
                    let k = k as i64;
                    let dd: BigInt = (0..=k)
                        .map(|l| binomial(l + jm, l) * binomial(jm, k - l))
                        .sum();
                    let dd2: BigInt = (0..=k)
                        .map(|l| binomial(l + jm + 1, l) * binomial(jm + 1, k - l))
                        .sum();
                    d.add_term([0, 0, 0, j * m], BigRational::from_integer(dd));
                    d.add_term([0, 0, 0, j * m + 1], -BigRational::from_integer(dd2));
                    j += 1;
                }
                Ok(d)
            },
            false,
        ),
        DecIlpkA => {
            let z = z_peak(tr)?;
            let den = &one - &(&sm1 * &power_sum(&z, 1..m));
            let pref = &(&inv1mt2 * &inv_one_plus_t(tr)?) * &den.invert()?;
            let tail = &(&(&sm1 * &t).scale_int(4) * &z.pow(m)) * &pref;
            kernel(&(&z * &inv1mt) + &tail)
        }
        DecIlpkB => {
            let z = z_peak(tr)?;
            let one_plus_t = &one + &t;
            let one_minus_t = &one - &t;
            let num = &(&(&one_plus_t.pow(2) * &z) - &(&t.scale_int(4) * &z.pow(m)))
                - &(&one_minus_t.pow(2) * &z.pow(m + 1));
            let den = &(&inv1mt2 * &inv_one_plus_t(tr)?) * &(&one - &z.pow(m)).invert()?;
            kernel(&num * &den)
        }
        DecIlpkC => {
            let k_max = tr.get(Var::T).ok_or(Error::Unbounded("t"))?;
            let mut h = Series::geometric(Var::X, tr)?;
            for k in 1..=k_max {
                let mut d = cst(1, tr);
                d.add_term([0, 0, 0, 1], rat(-(2 * k as i64 + 1)));
                let mut j = 1;
                while j * m <= n {
                    let jm = (j * m) as i64;
                    let e = peak_coefficient(4, k, |l| (l + jm - 1, l - 1), jm - 2);
                    let e2 = peak_coefficient(4, k, |l| (l + jm, l - 1), jm - 1);
                    d.add_term([0, 0, 0, j * m], BigRational::from_integer(e));
                    d.add_term([0, 0, 0, j * m + 1], -BigRational::from_integer(e2));
                    j += 1;
                }
                h = &h + &(&d.invert()? * &t_pow(k, tr));
            }
            Ok(h)
        }
        TransIdesA | TransIdesB => {
            let z = z_ides(tr)?;
            let lead = &(&t * &x) * &inv1mt.pow(2);
            let sum = power_sum(&z, (1..=i).map(|l| m - l));
            let c = if id.kind == TransIdesA {
                sm1.clone()
            } else {
                cst(-1, tr)
            };
            let den = &one - &(&(&c * &t) * &sum);
            let tail = &(&(&c * &t.pow(2)) * &z.pow(m)) * &(&inv1mt * &den.invert()?);
            kernel(&lead + &tail)
        }
        TransIpkA | TransIpkB => {
            let z = z_peak(tr)?;
            let u = u_series(tr)?;
            let lead = &(&t * &x).scale_int(2) * &inv1mt.pow(2);
            let sum = power_sum(&z, (1..=i).map(|l| m - l));
            let c = if id.kind == TransIpkA {
                sm1.clone()
            } else {
                cst(-1, tr)
            };
            let den = &one - &(&(&c * &u) * &sum);
            let pref = (&(&one + &t) * &inv1mt).scale(&half);
            let tail = &(&(&c * &u.pow(2)) * &z.pow(m)) * &(&pref * &den.invert()?);
            kernel(&lead + &tail)
        }
        TransIlpkA | TransIlpkB => {
            let z = z_peak(tr)?;
            let u = u_series(tr)?;
            let sum = power_sum(&z, (1..=i).map(|l| m - l));
            let c = if id.kind == TransIlpkA {
                sm1.clone()
            } else {
                cst(-1, tr)
            };
            let den = &one - &(&(&c * &u) * &sum);
            let tail = &(&(&c * &u) * &z.pow(m)) * &(&inv1mt * &den.invert()?);
            kernel(&(&z * &inv1mt) + &tail)
        }
        GjPerm | GjQ | SpecIdesIcomaj | SpecIdes | SpecIpk | SpecIlpk => unreachable!(),
    }
}

/// `scale · Σ_{l=1}^{k} C(a_l, b_l) C(c, k−l)` with `(a_l, b_l) = pair(l)`.
fn peak_coefficient(scale: i64, k: u32, pair: impl Fn(i64) -> (i64, i64), c: i64) -> BigInt {
    let k = k as i64;
    let sum: BigInt = (1..=k)
        .map(|l| {
            let (a, b) = pair(l);
            binomial(a, b) * binomial(c, k - l)
        })
        .sum();
    sum * BigInt::from(scale)
}

/// `[1 if leading_one] + Σ_k [D_k(x)]^{-1} t^k`, summed over `k ≥ 1` when
/// `leading_one` (the `t^0` slice is then 1) and over `k ≥ 0` otherwise.
fn inverse_form(
    tr: Truncation,
    denom: impl Fn(u32) -> Result<Series>,
    leading_one: bool,
) -> Result<Series> {
    let k_max = tr.get(Var::T).ok_or(Error::Unbounded("t"))?;
    let mut h = if leading_one {
        cst(1, tr)
    } else {
        Series::zero(tr)
    };
    let start = if leading_one { 1 } else { 0 };
    for k in start..=k_max {
        h = &h + &(&denom(k)?.invert()? * &t_pow(k, tr));
    }
    Ok(h)
}

/// `a_n = Σ_{π∈𝔖_n} s^{occ}` from the exponential cluster recurrence
/// `a_n = n a_{n−1} + Σ_k C(n,k) r_k(s−1) a_{n−k}`.
pub fn gj_plain(set: &PatternSet, n_max: usize) -> Result<Vec<Poly>> {
    let rs: Vec<Poly> = cluster_polys(set, ClusterStat::None, n_max, ClusterSource::BruteForce)?
        .iter()
        .map(Poly::shift_s_minus_one)
        .collect();
    let mut a: Vec<Poly> = vec![Poly::one()];
    for n in 1..=n_max {
        let mut next = a[n - 1].scale(&BigInt::from(n));
        for k in 2..=n {
            if !rs[k].is_zero() {
                next += &(&rs[k] * &a[n - k]).scale(&binomial(n as i64, k as i64));
            }
        }
        a.push(next);
    }
    Ok(a)
}

/// `a_n = Σ_{π∈𝔖_n} s^{occ} q^{inv}` from the q-exponential recurrence
/// `a_n = [n]_q a_{n−1} + Σ_k C(n,k)_q r_k(s−1,q) a_{n−k}`.
pub fn gj_q(set: &PatternSet, n_max: usize) -> Result<Vec<Poly>> {
    let rs: Vec<Poly> = cluster_polys(set, ClusterStat::Inv, n_max, ClusterSource::BruteForce)?
        .iter()
        .map(Poly::shift_s_minus_one)
        .collect();
    let mut a: Vec<Poly> = vec![Poly::one()];
    for n in 1..=n_max {
        let mut next = &q_integer(n as u32) * &a[n - 1];
        for k in 2..=n {
            if !rs[k].is_zero() {
                next += &(&(&rs[k] * &a[n - k]) * &q_binomial(n as i64, k as i64)?);
            }
        }
        a.push(next);
    }
    Ok(a)
}

/// Checks `A_n(t,q) / Π_{i=0}^{n}(1−tq^i) = Σ_{k≥0} [k]_q^n t^k` through
/// `t^{k_max}` for `n ≤ n_max`, with `A_n` enumerated and `[0]_q^0 = 1`.
pub fn carlitz_check(n_max: usize, k_max: usize) -> Result<bool> {
    Ok(carlitz_rows(n_max, k_max)?.iter().all(|r| r.1))
}

/// Per-`n` outcome of the Carlitz check.
pub fn carlitz_rows(n_max: usize, k_max: usize) -> Result<Vec<(usize, bool)>> {
    let tr = Truncation::exact().with(Var::T, k_max as u32);
    (0..=n_max)
        .map(|n| {
            let a = crate::brute::euler_mahonian(n);
            let left = &Series::from_poly(&a, tr) * &inv_prod_one_minus_tq(n as u32, tr)?;
            let mut right = Series::zero(tr);
            for k in 0..=k_max as u32 {
                let qk = if k == 0 && n == 0 {
                    Poly::one()
                } else {
                    q_integer(k).pow(n as u32)
                };
                right = &right + &(&Series::from_poly(&qk, tr) * &t_pow(k, tr));
            }
            Ok((n, left == right))
        })
        .collect()
}

/// Fibonacci numbers of order `k`: `f_0 = 1`, `f_n = f_{n−1} + ⋯ + f_{n−k}`
/// with negative indices contributing zero.
pub fn fibonacci_order(k: usize, n: usize) -> BigInt {
    let mut f: Vec<BigInt> = vec![BigInt::one()];
    for i in 1..=n {
        let lo = i.saturating_sub(k);
        let v: BigInt = f[lo..i].iter().sum();
        f.push(v);
    }
    f[n].clone()
}

/// One row of a claim check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimRow {
    pub n: usize,
    pub counted: BigInt,
    pub predicted: BigInt,
}

impl ClaimRow {
    pub fn holds(&self) -> bool {
        self.counted == self.predicted
    }
}

fn count_avoiders_with(set: &PatternSet, n: usize, pred: impl Fn(&DescentStats) -> bool) -> BigInt {
    let c = avoiders(n, set)
        .filter(|p| pred(&DescentStats::of(&inverse_of(p.letters()))))
        .count();
    BigInt::from(c)
}

/// `#{π ∈ 𝔖_n(12⋯m) : ipk(π) = 0}` against `f_n^{(m−1)}`, `1 ≤ n ≤ n_max`.
pub fn claim_ipk_rows(m: usize, n_max: usize) -> Result<Vec<ClaimRow>> {
    let set = PatternShape::Increasing(m).pattern_set()?;
    Ok((1..=n_max)
        .map(|n| ClaimRow {
            n,
            counted: count_avoiders_with(&set, n, |d| d.pk == 0),
            predicted: fibonacci_order(m - 1, n),
        })
        .collect())
}

pub fn claim_ipk_check(m: usize, n_max: usize) -> Result<bool> {
    Ok(claim_ipk_rows(m, n_max)?.iter().all(ClaimRow::holds))
}

/// `#{π ∈ 𝔖_n(321) : ilpk(π) = 1}` against `f_{n−1} f_n − ⌊(n+1)/2⌋`,
/// `1 ≤ n ≤ n_max`.
pub fn claim_ilpk_rows(n_max: usize) -> Result<Vec<ClaimRow>> {
    let set = PatternShape::Decreasing(3).pattern_set()?;
    Ok((1..=n_max)
        .map(|n| ClaimRow {
            n,
            counted: count_avoiders_with(&set, n, |d| d.lpk == 1),
            predicted: fibonacci_order(2, n - 1) * fibonacci_order(2, n)
                - BigInt::from(n.div_ceil(2)),
        })
        .collect())
}

pub fn claim_ilpk_check(n_max: usize) -> Result<bool> {
    Ok(claim_ilpk_rows(n_max)?.iter().all(ClaimRow::holds))
}

/// Permutations `σ ∈ 𝔖_n` with one descent whose inverse avoids 123, as
/// listed by the explicit families (odd and even `n` differ).
pub fn prop_123_witnesses(n: usize) -> Result<Vec<Permutation>> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "witness families need n >= 3, got {n}"
        )));
    }
    let n = n as u32;
    // a, a+2, a+4, … up to b.
    let step2 = |a: u32, b: u32| -> Vec<u32> { (a..=b).step_by(2).collect() };
    let cat = |parts: &[Vec<u32>]| -> Result<Permutation> { Permutation::new(parts.concat()) };
    let mut out = if n % 2 == 1 {
        vec![
            cat(&[step2(1, n), step2(2, n - 1)])?,
            cat(&[step2(2, n - 1), step2(1, n)])?,
            cat(&[step2(2, n - 1), vec![n], step2(1, n - 2)])?,
            cat(&[step2(3, n), vec![1], step2(2, n - 1)])?,
        ]
    } else {
        vec![
            cat(&[step2(1, n - 1), step2(2, n)])?,
            cat(&[step2(1, n - 1), vec![n], step2(2, n - 2)])?,
            cat(&[step2(2, n), step2(1, n - 1)])?,
            cat(&[step2(3, n - 1), vec![1], step2(2, n)])?,
            cat(&[step2(3, n - 1), vec![n], vec![1], step2(2, n - 2)])?,
        ]
    };
    out.sort();
    Ok(out)
}

/// One row of the 123 proposition check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prop123Row {
    pub n: usize,
    /// `#{π ∈ 𝔖_n(123) : ides(π) = 1}`.
    pub count: usize,
    /// 4 for odd `n`, 5 for even `n`.
    pub expected: usize,
    pub witnesses: Vec<Permutation>,
    /// Every witness has one descent and reading sequences shorter than 3.
    pub witnesses_valid: bool,
    /// The witnesses are exactly the inverses of the counted permutations.
    pub witnesses_complete: bool,
}

impl Prop123Row {
    pub fn holds(&self) -> bool {
        self.count == self.expected && self.witnesses_valid && self.witnesses_complete
    }
}

/// Counts by enumerating permutations with one descent (as two increasing
/// runs) and testing their inverses.
pub fn prop_123_rows(n_max: usize) -> Result<Vec<Prop123Row>> {
    let set = PatternShape::Increasing(3).pattern_set()?;
    (3..=n_max)
        .map(|n| {
            let mut found = BTreeSet::new();
            for mask in 1u64..(1 << n) - 1 {
                let first: Vec<u32> = (1..=n as u32)
                    .filter(|v| mask >> (v - 1) & 1 == 1)
                    .collect();
                let second: Vec<u32> = (1..=n as u32)
                    .filter(|v| mask >> (v - 1) & 1 == 0)
                    .collect();
                let sigma = [first, second].concat();
                if DescentStats::of(&sigma).des != 1 {
                    continue;
                }
                if occurrence_count(&inverse_of(&sigma), &set) == 0 {
                    found.insert(Permutation::new(sigma)?);
                }
            }
            let witnesses = prop_123_witnesses(n)?;
            let witnesses_valid = witnesses.iter().all(|w| {
                DescentStats::of(w.letters()).des == 1
                    && reading_sequences(w).iter().all(|r| r.len() < 3)
            });
            let listed: BTreeSet<Permutation> = witnesses.iter().cloned().collect();
            Ok(Prop123Row {
                n,
                count: found.len(),
                expected: if n % 2 == 1 { 4 } else { 5 },
                witnesses_complete: listed == found && listed.len() == witnesses.len(),
                witnesses,
                witnesses_valid,
            })
        })
        .collect()
}

pub fn prop_123_ides_check(n_max: usize) -> Result<bool> {
    Ok(prop_123_rows(n_max)?.iter().all(Prop123Row::holds))
}

/// No internal zeros, `c_k² ≥ c_{k−1} c_{k+1}`, unimodal, nonnegative.
pub fn log_concave(coeffs: &[BigInt]) -> bool {
    let Some(lo) = coeffs.iter().position(|c| !c.is_zero()) else {
        return true;
    };
    let hi = coeffs.iter().rposition(|c| !c.is_zero()).unwrap_or(lo);
    let c = &coeffs[lo..=hi];
    if c.iter().any(|x| !x.is_positive()) {
        return false;
    }
    let lc = c.windows(3).all(|w| &w[1] * &w[1] >= &w[0] * &w[2]);
    let peak = c
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
        .map_or(0, |p| p.0);
    let unimodal =
        c[..=peak].windows(2).all(|w| w[0] <= w[1]) && c[peak..].windows(2).all(|w| w[0] >= w[1]);
    lc && unimodal
}

/// [`log_concave`] applied to a polynomial in `t` alone.
pub fn log_concavity_check(p: &Poly) -> Result<bool> {
    Ok(log_concave(&p.univariate(T)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brute::brute_distribution;

    fn set(s: &str) -> PatternSet {
        PatternSet::parse(s).unwrap()
    }

    fn t_poly(coeffs: &[i64]) -> Poly {
        let c: Vec<BigInt> = coeffs.iter().map(|&c| BigInt::from(c)).collect();
        Poly::from_coeffs(T, &c)
    }

    fn run(kind: FormulaKind, params: FormulaParams, n: usize, s: SParam) -> Vec<Poly> {
        let id = FormulaId::new(kind, params).unwrap();
        evaluate(&id, n, s, ClusterSource::ClosedForm)
            .unwrap()
            .into_iter()
            .map(|d| d.poly)
            .collect()
    }

    fn brute(p: &str, family: Family, n_max: usize, s: SParam) -> Vec<Poly> {
        (0..=n_max)
            .map(|n| {
                let d = brute_distribution(&set(p), n, family);
                match s {
                    SParam::Zero => d.avoiders(),
                    SParam::Symbolic => d.poly,
                }
            })
            .collect()
    }

    #[test]
    fn cluster_gf_examples() {
        let tr = Truncation::exact().with(Var::X, 9);
        let gf = monotone_cluster_gf(3, ClusterStat::Ides, false, tr).unwrap();
        let expect = Poly::from_terms([([2, 1, 0], 1.into()), ([3, 1, 0], 1.into())]);
        assert_eq!(gf.x_slice(5).unwrap().to_poly().unwrap(), expect);
        let gf = monotone_cluster_gf(4, ClusterStat::None, false, tr).unwrap();
        let expect = Poly::from_terms([
            ([2, 0, 0], 1.into()),
            ([3, 0, 0], 2.into()),
            ([4, 0, 0], 1.into()),
        ]);
        assert_eq!(gf.x_slice(7).unwrap().to_poly().unwrap(), expect);
        let gf = monotone_cluster_gf(2, ClusterStat::Ides, false, tr).unwrap();
        assert_eq!(
            gf.x_slice(2).unwrap().to_poly().unwrap(),
            Poly::monomial([1, 1, 0], 1)
        );
        let a2 = trans_cluster_gf(5, 2, ClusterStat::Ides, tr).unwrap();
        let a3 = trans_cluster_gf(5, 3, ClusterStat::Ides, tr).unwrap();
        assert_eq!(
            a2.x_slice(9).unwrap().to_poly().unwrap(),
            Poly::monomial([2, 3, 0], 1)
        );
        assert_eq!(
            a3.x_slice(5).unwrap().to_poly().unwrap(),
            Poly::monomial([1, 2, 0], 1)
        );
        assert_eq!(a2, a3);
    }

    #[test]
    fn closed_cluster_series_match_brute_force() {
        for p in ["123", "1234", "321", "4321"] {
            for stat in [
                ClusterStat::Ides,
                ClusterStat::Ipk,
                ClusterStat::Ilpk,
                ClusterStat::None,
            ] {
                let closed = cluster_polys(&set(p), stat, 8, ClusterSource::ClosedForm).unwrap();
                let brute = cluster_polys(&set(p), stat, 8, ClusterSource::BruteForce).unwrap();
                assert_eq!(closed, brute, "{p} {stat:?}");
            }
        }
        let closed = cluster_polys(
            &set("123"),
            ClusterStat::IdesIcomaj,
            7,
            ClusterSource::ClosedForm,
        )
        .unwrap();
        let brute = cluster_polys(
            &set("123"),
            ClusterStat::IdesIcomaj,
            7,
            ClusterSource::BruteForce,
        )
        .unwrap();
        assert_eq!(closed, brute);
    }

    #[test]
    fn spec_rows() {
        let a = specialize(
            Family::AIdes,
            &set("123"),
            5,
            SParam::Zero,
            ClusterSource::ClosedForm,
        )
        .unwrap();
        assert_eq!(a[5].poly, t_poly(&[0, 0, 4, 39, 26, 1]));
        assert_eq!(a[4].poly, t_poly(&[0, 0, 5, 11, 1]));
        let p = specialize(
            Family::PIpk,
            &set("1234"),
            6,
            SParam::Zero,
            ClusterSource::ClosedForm,
        )
        .unwrap();
        assert_eq!(p[6].poly, t_poly(&[0, 24, 364, 254]));
        let p = specialize(
            Family::PIlpk,
            &set("13245"),
            8,
            SParam::Zero,
            ClusterSource::ClosedForm,
        )
        .unwrap();
        assert_eq!(p[8].poly, t_poly(&[1, 1528, 17551, 18536, 1361]));
    }

    #[test]
    fn spec_symbolic_matches_brute() {
        for fam in [Family::AIdes, Family::PIpk, Family::PIlpk] {
            for p in ["132", "213,321"] {
                let spec = specialize(fam, &set(p), 6, SParam::Symbolic, ClusterSource::BruteForce)
                    .unwrap();
                let polys: Vec<Poly> = spec.into_iter().map(|d| d.poly).collect();
                assert_eq!(polys, brute(p, fam, 6, SParam::Symbolic), "{fam} {p}");
            }
        }
    }

    #[test]
    fn spec_ides_icomaj_and_imaj() {
        for p in ["123", "132"] {
            for fam in [Family::AIdesIcomaj, Family::AIdesImaj] {
                let spec = specialize(fam, &set(p), 5, SParam::Symbolic, ClusterSource::BruteForce)
                    .unwrap();
                let polys: Vec<Poly> = spec.into_iter().map(|d| d.poly).collect();
                assert_eq!(polys, brute(p, fam, 5, SParam::Symbolic), "{fam} {p}");
            }
        }
    }

    #[test]
    fn extraction_examples() {
        let tr = Truncation::tx(4, 2);
        let inv = inv_one_minus_t(tr).unwrap();
        let h = &inv + &(&(&var(Var::T, tr) * &var(Var::X, tr)) * &inv.pow(2));
        assert_eq!(extract_a_ides(&h, 1).unwrap()[1], Poly::t());
        let bad = &h + &Series::var(Var::X, tr);
        assert!(matches!(
            extract_a_ides(&bad, 1),
            Err(Error::TailNotCleared { n: 1, .. })
        ));
    }

    #[test]
    fn variants_agree_with_brute_force() {
        for m in [3usize, 4] {
            let mono = FormulaParams::Monotone { m };
            let pat = format!("{}", Permutation::identity(m));
            let dec = format!("{}", Permutation::decreasing(m));
            let ides = brute(&pat, Family::AIdes, 7, SParam::Zero);
            let ipk = brute(&pat, Family::PIpk, 7, SParam::Zero);
            let ilpk = brute(&pat, Family::PIlpk, 7, SParam::Zero);
            let dilpk = brute(&dec, Family::PIlpk, 7, SParam::Zero);
            for (kinds, expect) in [
                (
                    [
                        FormulaKind::MonoIdesA,
                        FormulaKind::MonoIdesB,
                        FormulaKind::MonoIdesC,
                    ],
                    &ides,
                ),
                (
                    [
                        FormulaKind::MonoIpkA,
                        FormulaKind::MonoIpkB,
                        FormulaKind::MonoIpkC,
                    ],
                    &ipk,
                ),
                (
                    [
                        FormulaKind::MonoIlpkA,
                        FormulaKind::MonoIlpkB,
                        FormulaKind::MonoIlpkC,
                    ],
                    &ilpk,
                ),
                (
                    [
                        FormulaKind::DecIlpkA,
                        FormulaKind::DecIlpkB,
                        FormulaKind::DecIlpkC,
                    ],
                    &dilpk,
                ),
            ] {
                for k in kinds {
                    assert_eq!(&run(k, mono.clone(), 7, SParam::Zero), expect, "{k} m={m}");
                }
            }
            let sym = run(FormulaKind::MonoIpkA, mono.clone(), 6, SParam::Symbolic);
            assert_eq!(sym, brute(&pat, Family::PIpk, 6, SParam::Symbolic));
        }
    }

    #[test]
    fn transpositional_variants() {
        for (m, a) in [(5, 2), (5, 3)] {
            let params = FormulaParams::Transpositional { m, a };
            let pat = transpositional_pattern(m, a).unwrap().to_string();
            for (kinds, fam) in [
                (
                    [FormulaKind::TransIdesA, FormulaKind::TransIdesB],
                    Family::AIdes,
                ),
                (
                    [FormulaKind::TransIpkA, FormulaKind::TransIpkB],
                    Family::PIpk,
                ),
                (
                    [FormulaKind::TransIlpkA, FormulaKind::TransIlpkB],
                    Family::PIlpk,
                ),
            ] {
                let expect = brute(&pat, fam, 7, SParam::Zero);
                for k in kinds {
                    assert_eq!(run(k, params.clone(), 7, SParam::Zero), expect, "{k} {pat}");
                }
            }
            let sym = run(FormulaKind::TransIlpkA, params, 6, SParam::Symbolic);
            assert_eq!(sym, brute(&pat, Family::PIlpk, 6, SParam::Symbolic));
        }
    }

    #[test]
    fn monotone_idesimaj_variants() {
        for m in [3usize, 4] {
            let pat = Permutation::identity(m).to_string();
            let expect = brute(&pat, Family::AIdesImaj, 6, SParam::Zero);
            for k in [FormulaKind::MonoIdesImajA, FormulaKind::MonoIdesImajB] {
                assert_eq!(
                    run(k, FormulaParams::Monotone { m }, 6, SParam::Zero),
                    expect,
                    "{k} m={m}"
                );
            }
        }
        let a = run(
            FormulaKind::MonoIdesImajB,
            FormulaParams::Monotone { m: 3 },
            3,
            SParam::Zero,
        );
        assert_eq!(a[2], Poly::t() + Poly::monomial([0, 2, 1], 1));
        assert_eq!(a[3].eval_var(crate::poly::Q, 1), t_poly(&[0, 0, 4, 1]));
    }

    #[test]
    fn b_variants_reject_symbolic_s() {
        let id = FormulaId::new(FormulaKind::MonoIdesB, FormulaParams::Monotone { m: 3 }).unwrap();
        assert!(evaluate(&id, 4, SParam::Symbolic, ClusterSource::ClosedForm).is_err());
        assert!(FormulaId::new(
            FormulaKind::TransIdesA,
            FormulaParams::Transpositional { m: 5, a: 1 }
        )
        .is_err());
        assert!(FormulaId::new(FormulaKind::MonoIdesA, FormulaParams::Monotone { m: 1 }).is_err());
        assert!("nope".parse::<FormulaKind>().is_err());
        for k in FormulaKind::ALL {
            assert_eq!(k.name().parse::<FormulaKind>().unwrap(), k);
        }
    }

    #[test]
    fn imaj_transform() {
        assert_eq!(imaj_from_icomaj(&Poly::t(), 1).unwrap(), Poly::t());
        let p = Poly::monomial([0, 2, 1], 1);
        assert_eq!(imaj_from_icomaj(&p, 2).unwrap(), p);
        assert_eq!(imaj_from_icomaj(&Poly::one(), 0).unwrap(), Poly::one());
    }

    #[test]
    fn gj_recurrences() {
        let a = gj_plain(&set("21"), 3).unwrap();
        assert_eq!(a[3].eval_var(S, 0), Poly::one());
        let a = gj_plain(&set("123"), 3).unwrap();
        assert_eq!(a[3], Poly::constant(5) + Poly::s());
        let q = gj_q(&set("123"), 4).unwrap();
        assert_eq!(q[4].eval([0, 1, 1]), BigInt::from(17));
        for p in ["132", "123,2143"] {
            let plain = gj_plain(&set(p), 6).unwrap();
            let qv = gj_q(&set(p), 6).unwrap();
            for n in 0..=6 {
                assert_eq!(
                    plain[n],
                    brute_distribution(&set(p), n, Family::FPlain).poly
                );
                assert_eq!(qv[n], brute_distribution(&set(p), n, Family::FQ).poly);
            }
        }
    }

    #[test]
    fn carlitz() {
        assert_eq!(
            crate::brute::euler_mahonian(2),
            Poly::t() + Poly::monomial([0, 2, 1], 1)
        );
        assert!(carlitz_check(5, 6).unwrap());
    }

    #[test]
    fn fibonacci_and_claims() {
        assert_eq!(fibonacci_order(2, 5), BigInt::from(8));
        assert_eq!(fibonacci_order(3, 6), BigInt::from(24));
        assert!(claim_ipk_check(3, 8).unwrap());
        assert!(claim_ipk_check(4, 8).unwrap());
        let rows = claim_ilpk_rows(8).unwrap();
        assert_eq!(rows[4].counted, BigInt::from(37));
        assert!(rows.iter().all(ClaimRow::holds));
    }

    #[test]
    fn prop_123() {
        let rows = prop_123_rows(9).unwrap();
        assert_eq!(rows[0].count, 4);
        assert_eq!(rows[2].count, 4);
        assert_eq!(rows[3].count, 5);
        assert!(rows.iter().all(Prop123Row::holds), "{rows:?}");
    }

    #[test]
    fn log_concavity() {
        assert!(log_concavity_check(&t_poly(&[0, 0, 4, 39, 26, 1])).unwrap());
        assert!(!log_concavity_check(&t_poly(&[0, 1, 1, 0, 1])).unwrap());
        assert!(log_concavity_check(&Poly::t()).unwrap());
    }

    #[test]
    fn peak_coefficients_match_series() {
        // c_{m,j,k} is the t^k coefficient of 2t(1+t)^{jm−1}/(1−t)^{jm+1}.
        let tr = Truncation::exact().with(Var::T, 8);
        for jm in 2..=12i64 {
            let one_plus = &cst(1, tr) + &var(Var::T, tr);
            let inv = inv_one_minus_t(tr).unwrap();
            let c_series = &(&var(Var::T, tr).scale_int(2) * &one_plus.pow(jm as u32 - 1))
                * &inv.pow(jm as u32 + 1);
            let e_series = &(&var(Var::T, tr).scale_int(4) * &one_plus.pow(jm as u32 - 2))
                * &inv.pow(jm as u32 + 1);
            for k in 1..=8u32 {
                let c = peak_coefficient(2, k, |l| (l + jm - 1, l - 1), jm - 1);
                assert_eq!(
                    c_series.coeff([0, k, 0, 0]).unwrap(),
                    BigRational::from_integer(c)
                );
                let e = peak_coefficient(4, k, |l| (l + jm - 1, l - 1), jm - 2);
                assert_eq!(
                    e_series.coeff([0, k, 0, 0]).unwrap(),
                    BigRational::from_integer(e)
                );
            }
        }
    }
}
