//! Named verification suites. Each produces a line-per-check report and an
//! overall verdict.

use std::fmt;
use std::str::FromStr;

use crate::brute::{Family, Sweep};
use crate::compute::{compute, Method};
use crate::error::{Error, Result};
use crate::formulas::{
    carlitz_rows, claim_ilpk_rows, claim_ipk_rows, log_concavity_check, prop_123_rows, SParam,
};
use crate::fqsym::{hom_is_multiplicative_check, verify_cluster_identity, Hom};
use crate::pattern::PatternSet;
use crate::perm::{permutations, Symmetry};
use crate::poly::Poly;
use crate::tables::{TableSpec, TABLE_N_MAX};
use crate::words::verify_word_cluster_method;

/// The available suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    WordCluster,
    FqsymIdentity,
    HomMultiplicative,
    ThreeWay,
    Symmetry,
    Carlitz,
    Claims,
    Prop123,
    LogConcavity,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::WordCluster,
        Suite::FqsymIdentity,
        Suite::HomMultiplicative,
        Suite::ThreeWay,
        Suite::Symmetry,
        Suite::Carlitz,
        Suite::Claims,
        Suite::Prop123,
        Suite::LogConcavity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::WordCluster => "word-cluster",
            Suite::FqsymIdentity => "fqsym-identity",
            Suite::HomMultiplicative => "hom-multiplicative",
            Suite::ThreeWay => "three-way",
            Suite::Symmetry => "symmetry",
            Suite::Carlitz => "carlitz",
            Suite::Claims => "claims",
            Suite::Prop123 => "prop-123",
            Suite::LogConcavity => "log-concavity",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == key)
            .ok_or_else(|| {
                Error::InvalidParameter(format!(
                    "unknown suite {s:?}; known suites: {}",
                    Suite::ALL.map(|x| x.name()).join(", ")
                ))
            })
    }
}

/// Which claim family the claims suite checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClaimKind {
    Ipk,
    Ilpk,
    Both,
}

impl FromStr for ClaimKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "ipk" => Ok(ClaimKind::Ipk),
            "ilpk" => Ok(ClaimKind::Ilpk),
            "both" | "all" => Ok(ClaimKind::Both),
            _ => Err(Error::InvalidParameter(format!(
                "unknown claim {s:?}; expected ipk, ilpk or both"
            ))),
        }
    }
}

/// Knobs shared by the suites; `None` selects the suite's default.
#[derive(Clone, Debug, Default)]
pub struct SuiteOptions {
    pub patterns: Option<PatternSet>,
    /// Degree, length or `n` bound, depending on the suite.
    pub n: Option<usize>,
    /// Carlitz `t`-degree bound.
    pub k: Option<usize>,
    /// Monotone pattern length for the ipk claim.
    pub m: Option<usize>,
    pub which: Option<ClaimKind>,
}

/// Result of one suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub lines: Vec<String>,
    pub passed: bool,
}

impl SuiteReport {
    fn new(suite: Suite) -> Self {
        SuiteReport {
            suite,
            lines: Vec::new(),
            passed: true,
        }
    }

    fn check(&mut self, ok: bool, line: String) {
        self.passed &= ok;
        self.lines
            .push(format!("{} {line}", if ok { "ok  " } else { "FAIL" }));
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.lines {
            writeln!(f, "{l}")?;
        }
        write!(
            f,
            "{}: {}",
            self.suite,
            if self.passed { "PASS" } else { "FAIL" }
        )
    }
}

/// Pattern sets checked by the cluster identity suite by default.
pub const IDENTITY_SETS: [&str; 7] = ["21", "123", "321", "132,231", "1234", "12435", "13245"];

/// Pattern sets checked by the symmetry suite by default.
pub const SYMMETRY_SETS: [&str; 3] = ["123", "321", "132"];

pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Result<SuiteReport> {
    match suite {
        Suite::WordCluster => word_cluster(opts.n.unwrap_or(8)),
        Suite::FqsymIdentity => fqsym_identity(&sets(opts, &IDENTITY_SETS)?, opts.n.unwrap_or(7)),
        Suite::HomMultiplicative => hom_multiplicative(opts.n.unwrap_or(6)),
        Suite::ThreeWay => three_way(opts.patterns.as_ref(), opts.n.unwrap_or(7)),
        Suite::Symmetry => symmetry(&sets(opts, &SYMMETRY_SETS)?, opts.n.unwrap_or(7)),
        Suite::Carlitz => carlitz(opts.n.unwrap_or(5), opts.k.unwrap_or(6)),
        Suite::Claims => claims(
            opts.which.unwrap_or(ClaimKind::Both),
            opts.m,
            opts.n.unwrap_or(9),
        ),
        Suite::Prop123 => prop_123(opts.n.unwrap_or(11)),
        Suite::LogConcavity => log_concavity(),
    }
}

fn sets(opts: &SuiteOptions, defaults: &[&str]) -> Result<Vec<PatternSet>> {
    match &opts.patterns {
        Some(p) => Ok(vec![p.clone()]),
        None => defaults.iter().map(|s| PatternSet::parse(s)).collect(),
    }
}

/// Running example alphabet and marked set of the word suite.
pub const WORD_ALPHABET: [char; 3] = ['a', 'b', 'c'];
pub const WORD_MARKED: [&str; 2] = ["cab", "bc"];

fn word_cluster(maxlen: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(Suite::WordCluster);
    let rep = verify_word_cluster_method(&WORD_ALPHABET, &WORD_MARKED, maxlen)?;
    r.check(
        rep.passed(),
        format!(
            "alphabet abc, B = {{cab, bc}}, {} words of length <= {maxlen}",
            rep.words_checked
        ),
    );
    for f in rep.failures.iter().take(20) {
        r.lines.push(format!("     {f}"));
    }
    Ok(r)
}

fn fqsym_identity(sets: &[PatternSet], cap: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(Suite::FqsymIdentity);
    for set in sets {
        let rep = verify_cluster_identity(set, cap)?;
        for d in &rep.degrees {
            r.check(
                d.mismatches.is_empty(),
                format!(
                    "{{{}}} degree {}: {} basis elements",
                    set.canonical_string(),
                    d.degree,
                    d.checked
                ),
            );
            for m in d.mismatches.iter().take(5) {
                r.lines.push(format!("     {m}"));
            }
        }
    }
    Ok(r)
}

fn hom_multiplicative(cap: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(Suite::HomMultiplicative);
    for hom in Hom::ALL {
        let rep = hom_is_multiplicative_check(hom, cap)?;
        r.check(
            rep.passed(),
            format!(
                "{hom}: {} basis pairs of total degree <= {cap}",
                rep.pairs_checked
            ),
        );
        for f in rep.failures.iter().take(5) {
            r.lines.push(format!("     {f}"));
        }
    }
    Ok(r)
}

/// Cases compared across every applicable method.
fn three_way_cases(patterns: Option<&PatternSet>) -> Vec<(PatternSet, Family)> {
    match patterns {
        Some(p) => [
            Family::AIdes,
            Family::AIdesImaj,
            Family::PIpk,
            Family::PIlpk,
        ]
        .into_iter()
        .map(|f| (p.clone(), f))
        .collect(),
        None => TableSpec::all()
            .into_iter()
            .map(|t| (t.patterns(), t.family))
            .chain([
                (PatternSet::parse("132").expect("valid"), Family::AIdes),
                (PatternSet::parse("213,321").expect("valid"), Family::PIpk),
                (PatternSet::parse("123").expect("valid"), Family::AIdesImaj),
            ])
            .collect(),
    }
}

fn three_way(patterns: Option<&PatternSet>, n_max: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(Suite::ThreeWay);
    for (set, family) in three_way_cases(patterns) {
        for s in [SParam::Zero, SParam::Symbolic] {
            let brute = compute(&set, family, n_max, s, Method::Brute, false)?;
            for method in [Method::Spec, Method::Closed, Method::Fqsym] {
                if method == Method::Fqsym && n_max > 7 {
                    continue;
                }
                let got = match compute(&set, family, n_max, s, method, false) {
                    Ok(rows) => rows,
                    Err(Error::InvalidParameter(_)) if method == Method::Closed => continue,
                    Err(e) => return Err(e),
                };
                r.check(
                    got == brute,
                    format!(
                        "{{{}}} {family} s={s} n<={n_max}: {method} = brute",
                        set.canonical_string()
                    ),
                );
            }
        }
    }
    Ok(r)
}

fn symmetry(sets: &[PatternSet], n_max: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(Suite::Symmetry);
    let mut stat_fail = [0usize; 5];
    let mut checked = 0usize;
    for n in 1..=n_max {
        let c2 = (n * (n - 1) / 2) as u32;
        let n1 = n as u32 - 1;
        for p in permutations(n) {
            checked += 1;
            let st = p.stats();
            let rev = p.reverse().stats();
            let com = p.complement().stats();
            let rc = p.reverse_complement().stats();
            let ok = [
                rev.imaj == c2 - st.imaj,
                rc.imaj == st.icomaj,
                rev.ides == n1 - st.ides && com.ides == n1 - st.ides,
                rc.ides == st.ides,
                com.ipk == st.ipk,
            ];
            for (i, ok) in ok.into_iter().enumerate() {
                stat_fail[i] += usize::from(!ok);
            }
        }
    }
    let stat_names = [
        "imaj(r) = C(n,2) - imaj",
        "imaj(rc) = icomaj",
        "ides(r) = ides(c) = n-1-ides",
        "ides(rc) = ides",
        "ipk(c) = ipk",
    ];
    for (name, fails) in stat_names.iter().zip(stat_fail) {
        r.check(
            fails == 0,
            format!("{name}: {checked} permutations, n <= {n_max}"),
        );
    }
    for set in sets {
        let mut fails = [0usize; 5];
        for n in 1..=n_max {
            let base = Sweep::run(set, n);
            let rev = Sweep::run(&set.symmetry(Symmetry::Reverse), n);
            let com = Sweep::run(&set.symmetry(Symmetry::Complement), n);
            let rc = Sweep::run(&set.symmetry(Symmetry::ReverseComplement), n);
            let c2 = (n * (n - 1) / 2) as u32;
            let n1 = n as u32 + 1;
            let a_imaj = base.project(Family::AIdesImaj).poly;
            let flip_tq = a_imaj.map_exps(|e| [e[0], n1 - e[1], c2 - e[2]]);
            let a_ides = base.project(Family::AIdes).poly;
            let flip_t = a_ides.map_exps(|e| [e[0], n1 - e[1], e[2]]);
            let ok = [
                rev.project(Family::AIdesImaj).poly == flip_tq,
                rc.project(Family::AIdesImaj).poly == base.project(Family::AIdesIcomaj).poly,
                rc.project(Family::AIdes).poly == a_ides,
                rev.project(Family::AIdes).poly == flip_t
                    && com.project(Family::AIdes).poly == flip_t,
                com.project(Family::PIpk).poly == base.project(Family::PIpk).poly,
            ];
            for (i, ok) in ok.into_iter().enumerate() {
                fails[i] += usize::from(!ok);
            }
        }
        let names = [
            "A(ides,imaj) of reverse = t^(n+1) q^C(n,2) A(1/t, 1/q)",
            "A(ides,imaj) of rc = A(ides,icomaj)",
            "A(ides) of rc = A(ides)",
            "A(ides) of reverse = of complement = t^(n+1) A(1/t)",
            "P(ipk) of complement = P(ipk)",
        ];
        for (name, f) in names.iter().zip(fails) {
            r.check(
                f == 0,
                format!("{{{}}} {name}, n <= {n_max}", set.canonical_string()),
            );
        }
    }
    Ok(r)
}

fn carlitz(n_max: usize, k_max: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(Suite::Carlitz);
    for (n, ok) in carlitz_rows(n_max, k_max)? {
        r.check(ok, format!("n = {n}: through t^{k_max}"));
    }
    Ok(r)
}

fn claims(which: ClaimKind, m: Option<usize>, n_max: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(Suite::Claims);
    if which != ClaimKind::Ilpk {
        let ms: Vec<usize> = m.map_or_else(|| vec![3, 4, 5], |m| vec![m]);
        for m in ms {
            for row in claim_ipk_rows(m, n_max)? {
                r.check(
                    row.holds(),
                    format!(
                        "ipk = 0 over S_{}(12..{m}): counted {} vs f^({})_{} = {}",
                        row.n,
                        row.counted,
                        m - 1,
                        row.n,
                        row.predicted
                    ),
                );
            }
        }
    }
    if which != ClaimKind::Ipk {
        for row in claim_ilpk_rows(n_max)? {
            r.check(
                row.holds(),
                format!(
                    "ilpk = 1 over S_{}(321): counted {} vs f_(n-1) f_n - floor((n+1)/2) = {}",
                    row.n, row.counted, row.predicted
                ),
            );
        }
    }
    Ok(r)
}

fn prop_123(n_max: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(Suite::Prop123);
    for row in prop_123_rows(n_max)? {
        let w: Vec<String> = row.witnesses.iter().map(|w| w.to_string()).collect();
        r.check(
            row.holds(),
            format!(
                "n = {}: {} with ides = 1 (expected {}); witnesses {} valid={} complete={}",
                row.n,
                row.count,
                row.expected,
                w.join(" "),
                row.witnesses_valid,
                row.witnesses_complete
            ),
        );
    }
    Ok(r)
}

/// Log-concavity of every table row, both as listed and as computed from the
/// closed forms.
fn log_concavity() -> Result<SuiteReport> {
    let mut r = SuiteReport::new(Suite::LogConcavity);
    for spec in TableSpec::all() {
        let expected = spec.expected()?;
        let computed: Vec<Poly> = compute(
            &spec.patterns(),
            spec.family,
            TABLE_N_MAX,
            SParam::Zero,
            Method::Closed,
            false,
        )?
        .into_iter()
        .map(|d| d.poly)
        .collect();
        let mut bad = Vec::new();
        for (n, (e, c)) in expected.iter().zip(&computed).enumerate() {
            if !log_concavity_check(e)? || !log_concavity_check(c)? {
                bad.push(n);
            }
        }
        r.check(
            bad.is_empty(),
            format!(
                "table {} rows n = 0..={TABLE_N_MAX} log-concave and unimodal{}",
                spec.id,
                if bad.is_empty() {
                    String::new()
                } else {
                    format!(", failing n = {bad:?}")
                }
            ),
        );
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick(suite: Suite, n: usize) -> SuiteReport {
        let opts = SuiteOptions {
            n: Some(n),
            ..SuiteOptions::default()
        };
        run_suite(suite, &opts).unwrap()
    }

    #[test]
    fn small_suites_pass() {
        for (suite, n) in [
            (Suite::WordCluster, 5),
            (Suite::FqsymIdentity, 5),
            (Suite::HomMultiplicative, 4),
            (Suite::Symmetry, 5),
            (Suite::Carlitz, 4),
            (Suite::Claims, 7),
            (Suite::Prop123, 7),
        ] {
            let r = quick(suite, n);
            assert!(r.passed, "{r}");
        }
    }

    #[test]
    fn three_way_on_one_set() {
        let opts = SuiteOptions {
            patterns: Some(PatternSet::parse("1234").unwrap()),
            n: Some(6),
            ..SuiteOptions::default()
        };
        let r = run_suite(Suite::ThreeWay, &opts).unwrap();
        assert!(r.passed, "{r}");
        assert!(r.lines.len() >= 16);
    }

    #[test]
    fn suite_names_parse() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
        assert_eq!("ipk".parse::<ClaimKind>().unwrap(), ClaimKind::Ipk);
    }
}
