//! One entry point per computation method, so that every family can be
//! produced several independent ways and compared.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::brute::{brute_sequence, DistributionPolynomial, Family};
use crate::error::{Error, Result};
use crate::formulas::{
    classify, default_truncation, evaluate, extract, imaj_from_icomaj, specialize, ClusterSource,
    FormulaId, FormulaKind, FormulaParams, PatternShape, SParam,
};
use crate::fqsym::{apply_hom, f_bar, Hom, MAX_IDENTITY_CAP};
use crate::pattern::PatternSet;
use crate::perm::factorial;
use crate::poly::{q_factorial, Poly, Q, S};
use crate::series::Series;

/// Largest `n` a brute-force sweep accepts without an explicit override.
pub const BRUTE_SAFETY_CAP: usize = 10;

/// How a family is computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    /// Exhaustive sweep over `𝔖_n`.
    Brute,
    /// Hadamard specialization from enumerated cluster polynomials.
    Spec,
    /// Closed-form theorem for monotone and transpositional patterns.
    Closed,
    /// Image of `F̄_Γ(s)` under a homomorphism out of the truncated algebra.
    Fqsym,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Brute, Method::Spec, Method::Closed, Method::Fqsym];

    pub fn name(self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Spec => "spec",
            Method::Closed => "closed",
            Method::Fqsym => "fqsym",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase();
        Method::ALL
            .into_iter()
            .find(|m| m.name() == key)
            .ok_or_else(|| {
                Error::InvalidParameter(format!(
                    "unknown method {s:?}; expected brute, spec, closed or fqsym"
                ))
            })
    }
}

/// The closed-form theorem used for a pattern shape and family, if any.
pub fn closed_formula(set: &PatternSet, family: Family, s: SParam) -> Option<FormulaId> {
    use FormulaKind::*;
    let shape = classify(set)?;
    let kind = match (shape, family, s) {
        (PatternShape::Increasing(_), Family::AIdes, _) => MonoIdesA,
        (PatternShape::Increasing(_), Family::PIpk, _) => MonoIpkA,
        (PatternShape::Increasing(_), Family::PIlpk, _) => MonoIlpkA,
        (PatternShape::Increasing(_), Family::AIdesImaj, SParam::Zero) => MonoIdesImajA,
        (PatternShape::Decreasing(_), Family::PIlpk, _) => DecIlpkA,
        (PatternShape::Transpositional { .. }, Family::AIdes, _) => TransIdesA,
        (PatternShape::Transpositional { .. }, Family::PIpk, _) => TransIpkA,
        (PatternShape::Transpositional { .. }, Family::PIlpk, _) => TransIlpkA,
        _ => return None,
    };
    let params = match shape {
        PatternShape::Increasing(m) | PatternShape::Decreasing(m) => FormulaParams::Monotone { m },
        PatternShape::Transpositional { m, a } => FormulaParams::Transpositional { m, a },
    };
    FormulaId::new(kind, params).ok()
}

/// Computes `family` for `n = 0..=n_max`.
///
/// `allow_large` lifts [`BRUTE_SAFETY_CAP`] for brute-force sweeps.
pub fn compute(
    set: &PatternSet,
    family: Family,
    n_max: usize,
    s: SParam,
    method: Method,
    allow_large: bool,
) -> Result<Vec<DistributionPolynomial>> {
    let rows = match method {
        Method::Brute => {
            if n_max > BRUTE_SAFETY_CAP && !allow_large {
                return Err(Error::SafetyCap {
                    n: n_max,
                    cap: BRUTE_SAFETY_CAP,
                });
            }
            brute_sequence(set, n_max, family)
        }
        Method::Spec => match family {
            Family::FPlain => evaluate(
                &pattern_formula(FormulaKind::GjPerm, set),
                n_max,
                s,
                ClusterSource::BruteForce,
            )?,
            Family::FQ => evaluate(
                &pattern_formula(FormulaKind::GjQ, set),
                n_max,
                s,
                ClusterSource::BruteForce,
            )?,
            _ => specialize(family, set, n_max, s, ClusterSource::BruteForce)?,
        },
        Method::Closed => {
            if classify(set).is_none() {
                return Err(Error::InvalidParameter(format!(
                    "closed form needs a single monotone or transpositional pattern, got {}",
                    set.canonical_string()
                )));
            }
            match closed_formula(set, family, s) {
                Some(id) => evaluate(&id, n_max, s, ClusterSource::ClosedForm)?,
                None => specialize(family, set, n_max, s, ClusterSource::ClosedForm)?,
            }
        }
        Method::Fqsym => via_fqsym(set, family, n_max)?,
    };
    Ok(match (method, s) {
        (Method::Brute | Method::Fqsym, SParam::Zero) => rows
            .into_iter()
            .map(|mut d| {
                d.poly = d.avoiders();
                d
            })
            .collect(),
        _ => rows,
    })
}

fn pattern_formula(kind: FormulaKind, set: &PatternSet) -> FormulaId {
    FormulaId {
        kind,
        params: FormulaParams::Patterns(set.clone()),
    }
}

/// Applies the homomorphism of `family` to `F̄_Γ(s)` and reads the family
/// off the image.
fn via_fqsym(
    set: &PatternSet,
    family: Family,
    n_max: usize,
) -> Result<Vec<DistributionPolynomial>> {
    if n_max > MAX_IDENTITY_CAP {
        return Err(Error::SafetyCap {
            n: n_max,
            cap: MAX_IDENTITY_CAP,
        });
    }
    let f = f_bar(set, n_max);
    let polys: Vec<Poly> = match family {
        Family::FPlain | Family::FQ => {
            let hom = if family == Family::FPlain {
                Hom::Psi
            } else {
                Hom::PsiQ
            };
            let h = apply_hom(&f, hom, hom.truncation(n_max))?;
            (0..=n_max)
                .map(|n| {
                    let slice = h.x_slice(n as u32)?;
                    let norm = if family == Family::FPlain {
                        Series::constant(
                            BigRational::from_integer(BigInt::from(factorial(n))),
                            slice.trunc(),
                        )
                    } else {
                        Series::from_poly(&q_factorial(n as u32), slice.trunc())
                    };
                    (&slice * &norm).to_poly()
                })
                .collect::<Result<_>>()?
        }
        Family::AIdes | Family::AIdesIcomaj | Family::AIdesImaj => {
            let tr = default_truncation(Family::AIdesIcomaj, n_max);
            let h = apply_hom(&f, Hom::PsiIdesIcomaj, tr)?;
            let polys = extract(Family::AIdesIcomaj, &h, n_max)?;
            polys
                .into_iter()
                .enumerate()
                .map(|(n, p)| match family {
                    Family::AIdes => Ok(p.eval_var(Q, 1)),
                    Family::AIdesImaj => imaj_from_icomaj(&p, n),
                    _ => Ok(p),
                })
                .collect::<Result<_>>()?
        }
        Family::PIpk | Family::PIlpk => {
            let hom = if family == Family::PIpk {
                Hom::PsiIpk
            } else {
                Hom::PsiIlpk
            };
            let h = apply_hom(&f, hom, default_truncation(family, n_max))?;
            extract(family, &h, n_max)?
        }
    };
    Ok(polys
        .into_iter()
        .enumerate()
        .map(|(n, poly)| DistributionPolynomial {
            family,
            patterns: set.clone(),
            n,
            poly,
        })
        .collect())
}

/// `true` iff every polynomial depends on `s` only through `s = 0`.
pub fn is_s_free(rows: &[DistributionPolynomial]) -> bool {
    rows.iter().all(|d| d.poly.degree(S).unwrap_or(0) == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_methods_agree() {
        let cases = [
            ("123", Family::AIdes),
            ("123", Family::PIpk),
            ("321", Family::PIlpk),
            ("123", Family::AIdesImaj),
            ("13245", Family::AIdes),
            ("12435", Family::PIlpk),
            ("1234", Family::PIlpk),
            ("321", Family::AIdes),
            ("123", Family::FQ),
            ("132", Family::FPlain),
        ];
        for (pat, family) in cases {
            let set = PatternSet::parse(pat).unwrap();
            for s in [SParam::Zero, SParam::Symbolic] {
                let brute = compute(&set, family, 6, s, Method::Brute, false).unwrap();
                for method in [Method::Spec, Method::Closed, Method::Fqsym] {
                    if method == Method::Closed && matches!(family, Family::FQ | Family::FPlain) {
                        continue;
                    }
                    if method == Method::Closed
                        && family == Family::AIdesImaj
                        && s == SParam::Symbolic
                    {
                        continue;
                    }
                    let got = compute(&set, family, 6, s, method, false).unwrap();
                    assert_eq!(got, brute, "{pat} {family} {method} {s:?}");
                }
            }
        }
    }

    #[test]
    fn caps_and_rejections() {
        let set = PatternSet::parse("123").unwrap();
        assert!(matches!(
            compute(&set, Family::AIdes, 11, SParam::Zero, Method::Brute, false),
            Err(Error::SafetyCap { .. })
        ));
        let set = PatternSet::parse("132").unwrap();
        assert!(compute(&set, Family::AIdes, 4, SParam::Zero, Method::Closed, false).is_err());
        assert!("fast".parse::<Method>().is_err());
    }
}
