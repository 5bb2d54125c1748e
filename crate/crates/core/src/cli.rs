//! Command-line front end.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::brute::{brute_distribution, DistributionPolynomial, Family};
use crate::compute::{compute, Method, BRUTE_SAFETY_CAP};
use crate::error::{Error, Result};
use crate::formulas::{
    cluster_polys, default_truncation, evaluate, spec_kernel, theorem_series, ClusterSource,
    FormulaId, FormulaKind, FormulaParams, ParamKind, SParam,
};
use crate::fqsym::{f_bar, r_bar};
use crate::pattern::{cluster_candidates, cluster_polynomial, clusters, ClusterStat, PatternSet};
use crate::perm::Permutation;
use crate::poly::Poly;
use crate::series::Series;
use crate::tables::{reproduce, reproduce_with, TableSpec, TABLE_IDS};
use crate::verify::{run_suite, ClaimKind, Suite, SuiteOptions};

/// Version stamp written into every cache entry.
pub const CACHE_VERSION: &str = concat!("permcluster-", env!("CARGO_PKG_VERSION"), "-v1");

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "PERMCLUSTER_CACHE";

#[derive(Parser, Debug)]
#[command(
    name = "permcluster",
    version,
    about = "Permutations by consecutive patterns and inverse statistics"
)]
pub struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Statistics of a permutation and of its inverse.
    Stats {
        /// One-line notation, e.g. 72163584 or 10,2,1,...
        perm: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Distribution polynomials of a family.
    Poly(PolyArgs),
    /// Cluster polynomials, or the clusters themselves with --list.
    Clusters(ClusterArgs),
    /// Reproduce a golden table and diff it.
    Table(TableArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Dump a generating series or a truncated algebra element term by term.
    SeriesDump(DumpArgs),
    /// List or evaluate the named theorems.
    Formulas {
        #[command(subcommand)]
        action: FormulasAction,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct PolyArgs {
    /// Comma-separated patterns, e.g. 123 or 132,231.
    #[arg(long)]
    pattern: String,
    #[arg(long, default_value = "ides")]
    family: String,
    /// A single n or a range a..b (inclusive).
    #[arg(long)]
    n: String,
    #[arg(long, default_value = "brute")]
    method: String,
    /// 0 for avoiders or "symbolic".
    #[arg(long, default_value = "symbolic")]
    s: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Cache directory for brute-force sweeps.
    #[arg(long, env = CACHE_ENV)]
    cache_dir: Option<PathBuf>,
    /// Lift the brute-force safety cap on n.
    #[arg(long)]
    allow_large: bool,
}

#[derive(Args, Debug)]
struct ClusterArgs {
    #[arg(long)]
    pattern: String,
    /// Largest cluster length.
    #[arg(long)]
    n: usize,
    /// none, inv, ides, ides-icomaj, ipk or ilpk.
    #[arg(long, default_value = "none")]
    stat: String,
    /// List every cluster of length n instead of the polynomials.
    #[arg(long)]
    list: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct TableArgs {
    /// Table id, 1..11.
    id: usize,
    /// brute, spec, closed, fqsym or all (brute plus every closed form).
    #[arg(long, default_value = "all")]
    method: String,
    /// Print the reproduced rows as well as the verdict.
    #[arg(long)]
    show: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Suite name.
    suite: String,
    #[arg(long)]
    pattern: Option<String>,
    /// Degree, length or n bound.
    #[arg(long = "n", visible_alias = "N")]
    n: Option<usize>,
    /// t-degree bound for carlitz.
    #[arg(long)]
    k: Option<usize>,
    /// Monotone pattern length for the ipk claim.
    #[arg(long)]
    m: Option<usize>,
    /// ipk, ilpk or both.
    #[arg(long)]
    which: Option<String>,
    /// Print only the verdict.
    #[arg(long)]
    quiet: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum DumpKind {
    /// Left-hand series of a theorem.
    Theorem,
    /// Closed or enumerated cluster series of a pattern set.
    ClusterGf,
    /// F̄_Γ(s) in the G basis.
    Fbar,
    /// R̄_Γ(s) in the G basis.
    Rbar,
}

#[derive(Args, Debug)]
struct DumpArgs {
    #[arg(long, value_enum, default_value_t = DumpKind::Theorem)]
    kind: DumpKind,
    #[command(flatten)]
    formula: FormulaArgs,
    /// Truncation degree in x (or algebra degree cap).
    #[arg(long)]
    n: usize,
    #[arg(long, default_value = "0")]
    s: String,
    /// Statistic of the cluster series.
    #[arg(long, default_value = "ides")]
    stat: String,
    /// Apply s -> s-1 to R̄.
    #[arg(long)]
    shift: bool,
}

#[derive(Args, Debug)]
struct FormulaArgs {
    /// Theorem name, e.g. mono-ides-b.
    #[arg(long)]
    formula: Option<String>,
    #[arg(long)]
    pattern: Option<String>,
    /// Monotone or transpositional pattern length.
    #[arg(long)]
    m: Option<usize>,
    /// Transposition position.
    #[arg(long)]
    a: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum FormulasAction {
    /// Names and descriptions.
    List,
    /// Evaluate a theorem for n = 0..N.
    Run {
        #[command(flatten)]
        formula: FormulaArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "0")]
        s: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// Serialized form of a distribution polynomial. Integers are decimal
/// strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyRecord {
    pub pattern: Vec<String>,
    pub family: String,
    pub n: usize,
    pub s: serde_json::Value,
    pub coeffs: Vec<([u32; 3], String)>,
}

impl PolyRecord {
    pub fn from_distribution(d: &DistributionPolynomial, s: SParam) -> PolyRecord {
        let mut coeffs: Vec<([u32; 3], String)> =
            d.poly.terms().map(|(e, c)| (*e, c.to_string())).collect();
        coeffs.sort();
        PolyRecord {
            pattern: d
                .patterns
                .patterns()
                .iter()
                .map(|p| p.to_string())
                .collect(),
            family: d.family.name().to_string(),
            n: d.n,
            s: match s {
                SParam::Zero => serde_json::Value::from(0),
                SParam::Symbolic => serde_json::Value::from("symbolic"),
            },
            coeffs,
        }
    }

    pub fn to_distribution(&self) -> Result<DistributionPolynomial> {
        let patterns = if self.pattern.is_empty() {
            PatternSet::none()
        } else {
            PatternSet::parse(&self.pattern.join(","))?
        };
        let terms = self
            .coeffs
            .iter()
            .map(|(e, c)| {
                c.parse::<BigInt>()
                    .map(|c| (*e, c))
                    .map_err(|_| Error::InvalidParameter(format!("bad integer {c:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(DistributionPolynomial {
            family: self.family.parse()?,
            patterns,
            n: self.n,
            poly: Poly::from_terms(terms),
        })
    }
}

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    version: String,
    record: PolyRecord,
}

/// Brute-force sweeps cached on disk, one file per pattern set, family and
/// `n`, always stored with symbolic `s`.
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Cache {
        Cache { dir: dir.into() }
    }

    pub fn key(set: &PatternSet, family: Family, n: usize) -> String {
        let mut h = Sha256::new();
        h.update(format!(
            "{}|{}|{}",
            set.canonical_string(),
            family.name(),
            n
        ));
        hex::encode(h.finalize())
    }

    fn path(&self, set: &PatternSet, family: Family, n: usize) -> PathBuf {
        self.dir
            .join(format!("{}.json", Cache::key(set, family, n)))
    }

    pub fn get(
        &self,
        set: &PatternSet,
        family: Family,
        n: usize,
    ) -> Option<DistributionPolynomial> {
        let text = fs::read_to_string(self.path(set, family, n)).ok()?;
        let entry: CacheEntry = serde_json::from_str(&text).ok()?;
        if entry.version != CACHE_VERSION {
            return None;
        }
        let d = entry.record.to_distribution().ok()?;
        (d.patterns == *set && d.family == family && d.n == n).then_some(d)
    }

    pub fn put(&self, d: &DistributionPolynomial) -> Result<()> {
        fs::create_dir_all(&self.dir).map_err(io_err)?;
        let entry = CacheEntry {
            version: CACHE_VERSION.to_string(),
            record: PolyRecord::from_distribution(d, SParam::Symbolic),
        };
        let text =
            serde_json::to_string(&entry).map_err(|e| Error::InvalidParameter(e.to_string()))?;
        fs::write(self.path(&d.patterns, d.family, d.n), text).map_err(io_err)
    }

    /// Cached brute-force distribution with symbolic `s`.
    pub fn brute(
        &self,
        set: &PatternSet,
        family: Family,
        n: usize,
    ) -> Result<DistributionPolynomial> {
        if let Some(d) = self.get(set, family, n) {
            return Ok(d);
        }
        let d = brute_distribution(set, n, family);
        self.put(&d)?;
        Ok(d)
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::InvalidParameter(format!("cache: {e}"))
}

/// Parses `a..b`, `a..=b` or a single `n`.
pub fn parse_range(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::InvalidParameter(format!("bad n or range {s:?}"));
    let num = |x: &str| x.trim().parse::<usize>().map_err(|_| bad());
    match s.split_once("..") {
        Some((a, b)) => {
            let (lo, hi) = (num(a)?, num(b.trim_start_matches('='))?);
            if lo > hi {
                return Err(bad());
            }
            Ok((lo, hi))
        }
        None => {
            let n = num(s)?;
            Ok((n, n))
        }
    }
}

fn parse_cluster_stat(s: &str) -> Result<ClusterStat> {
    match s.trim().to_ascii_lowercase().replace('_', "-").as_str() {
        "none" => Ok(ClusterStat::None),
        "inv" => Ok(ClusterStat::Inv),
        "ides" => Ok(ClusterStat::Ides),
        "ides-icomaj" => Ok(ClusterStat::IdesIcomaj),
        "ipk" => Ok(ClusterStat::Ipk),
        "ilpk" => Ok(ClusterStat::Ilpk),
        _ => Err(Error::InvalidParameter(format!(
            "unknown cluster statistic {s:?}; expected none, inv, ides, ides-icomaj, ipk or ilpk"
        ))),
    }
}

/// Runs the command line and returns the process exit code: 0 iff the
/// command succeeded and every requested check passed.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let mut out = String::new();
    let result = execute(&cli, &mut out);
    let _ = std::io::stdout().write_all(out.as_bytes());
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Executes a parsed command, appending its output to `out`. Returns whether
/// every check passed.
pub fn execute(cli: &Cli, out: &mut String) -> Result<bool> {
    if let Some(n) = cli.threads {
        // A pool may already exist when called repeatedly in one process.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
    match &cli.command {
        Command::Stats { perm, format } => cmd_stats(perm, *format, out),
        Command::Poly(a) => cmd_poly(a, out),
        Command::Clusters(a) => cmd_clusters(a, out),
        Command::Table(a) => cmd_table(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::SeriesDump(a) => cmd_dump(a, out),
        Command::Formulas { action } => cmd_formulas(action, out),
    }
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable")
}

fn cmd_stats(perm: &str, format: Format, out: &mut String) -> Result<bool> {
    let p: Permutation = perm.parse()?;
    let r = p.stats();
    match format {
        Format::Json => writeln!(out, "{}", json(&r)),
        Format::Csv => {
            writeln!(out, "perm,des,maj,comaj,pk,lpk,inv,comp,ides,imaj,icomaj,ipk,ilpk").ok();
            writeln!(
                out,
                "{p},{},{},{},{},{},{},\"{}\",{},{},{},{},{}",
                r.des, r.maj, r.comaj, r.pk, r.lpk, r.inv, r.comp, r.ides, r.imaj, r.icomaj, r.ipk, r.ilpk
            )
        }
        Format::Text => writeln!(
            out,
            "des={} maj={} comaj={} pk={} lpk={} ides={} imaj={} icomaj={} ipk={} ilpk={} inv={} comp={} Des={:?}",
            r.des, r.maj, r.comaj, r.pk, r.lpk, r.ides, r.imaj, r.icomaj, r.ipk, r.ilpk, r.inv, r.comp, r.des_set
        ),
    }
    .ok();
    Ok(true)
}

/// Rows `lo..=hi` of a family by the requested method.
fn poly_rows(a: &PolyArgs) -> Result<(Vec<DistributionPolynomial>, SParam)> {
    let set = PatternSet::parse(&a.pattern)?;
    let family: Family = a.family.parse()?;
    let method: Method = a.method.parse()?;
    let s: SParam = a.s.parse()?;
    let (lo, hi) = parse_range(&a.n)?;
    let rows = match (method, &a.cache_dir) {
        (Method::Brute, Some(dir)) => {
            if hi > BRUTE_SAFETY_CAP && !a.allow_large {
                return Err(Error::SafetyCap {
                    n: hi,
                    cap: BRUTE_SAFETY_CAP,
                });
            }
            let cache = Cache::new(dir);
            (lo..=hi)
                .map(|n| {
                    cache.brute(&set, family, n).map(|mut d| {
                        if s == SParam::Zero {
                            d.poly = d.avoiders();
                        }
                        d
                    })
                })
                .collect::<Result<Vec<_>>>()?
        }
        (Method::Brute, None) => {
            if hi > BRUTE_SAFETY_CAP && !a.allow_large {
                return Err(Error::SafetyCap {
                    n: hi,
                    cap: BRUTE_SAFETY_CAP,
                });
            }
            (lo..=hi)
                .map(|n| {
                    let mut d = brute_distribution(&set, n, family);
                    if s == SParam::Zero {
                        d.poly = d.avoiders();
                    }
                    d
                })
                .collect()
        }
        _ => compute(&set, family, hi, s, method, a.allow_large)?
            .into_iter()
            .skip(lo)
            .collect(),
    };
    Ok((rows, s))
}

fn write_rows(rows: &[DistributionPolynomial], s: SParam, format: Format, out: &mut String) {
    match format {
        Format::Text => {
            for d in rows {
                writeln!(out, "{}\t{}", d.n, d.poly).ok();
            }
        }
        Format::Json => {
            for d in rows {
                writeln!(out, "{}", json(&PolyRecord::from_distribution(d, s))).ok();
            }
        }
        Format::Csv => {
            writeln!(out, "pattern,family,n,e_s,e_t,e_q,coeff").ok();
            for d in rows {
                let rec = PolyRecord::from_distribution(d, s);
                for (e, c) in &rec.coeffs {
                    writeln!(
                        out,
                        "\"{}\",{},{},{},{},{},{c}",
                        d.patterns.canonical_string(),
                        d.family,
                        d.n,
                        e[0],
                        e[1],
                        e[2]
                    )
                    .ok();
                }
            }
        }
    }
}

fn cmd_poly(a: &PolyArgs, out: &mut String) -> Result<bool> {
    let (rows, s) = poly_rows(a)?;
    write_rows(&rows, s, a.format, out);
    Ok(true)
}

fn cmd_clusters(a: &ClusterArgs, out: &mut String) -> Result<bool> {
    let set = PatternSet::parse(&a.pattern)?;
    if a.list {
        let mut found = Vec::new();
        cluster_candidates(a.n, &set, &mut |w| {
            let p = Permutation::new(w.to_vec()).expect("candidates are permutations");
            found.extend(clusters(&p, &set));
        });
        found.sort_by(|x, y| (&x.base, &x.marks).cmp(&(&y.base, &y.marks)));
        for c in &found {
            let marks: Vec<String> = c
                .marks
                .iter()
                .map(|m| format!("{}:{}", m.start, m.pattern))
                .collect();
            match a.format {
                Format::Json => writeln!(out, "{}", json(&(c.base.to_string(), &marks))),
                Format::Csv => writeln!(out, "{},{},\"{}\"", c.base, c.mk(), marks.join(" ")),
                Format::Text => writeln!(out, "{}  marks {}", c.base, marks.join(" ")),
            }
            .ok();
        }
        writeln!(out, "{} clusters of length {}", found.len(), a.n).ok();
        return Ok(true);
    }
    let stat = parse_cluster_stat(&a.stat)?;
    for k in 0..=a.n {
        let c = cluster_polynomial(&set, k, stat)?;
        match a.format {
            Format::Json => {
                let mut coeffs: Vec<([u32; 3], String)> =
                    c.poly.terms().map(|(e, c)| (*e, c.to_string())).collect();
                coeffs.sort();
                writeln!(
                    out,
                    "{}",
                    json(&serde_json::json!({"k": k, "coeffs": coeffs}))
                )
            }
            Format::Csv => writeln!(out, "{k},{}", c.poly),
            Format::Text => writeln!(out, "R_{k}\t{}", c.poly),
        }
        .ok();
    }
    Ok(true)
}

fn cmd_table(a: &TableArgs, out: &mut String) -> Result<bool> {
    let spec = TableSpec::get(a.id).map_err(|_| {
        Error::InvalidParameter(format!(
            "unknown table {}; valid ids are {}..={}",
            a.id,
            TABLE_IDS.start(),
            TABLE_IDS.end()
        ))
    })?;
    writeln!(out, "table {}: {}", spec.id, spec.caption()).ok();
    let diffs = if a.method == "all" {
        let mut d = vec![reproduce(a.id, Method::Brute)?];
        for f in spec.closed_forms() {
            d.push(reproduce_with(a.id, &f)?);
        }
        d
    } else {
        vec![reproduce(a.id, a.method.parse()?)?]
    };
    if a.show {
        for (n, row) in spec.expected()?.iter().enumerate() {
            writeln!(out, "{n}\t{row}").ok();
        }
    }
    let mut ok = true;
    for d in &diffs {
        ok &= d.passed();
        writeln!(out, "{d}").ok();
    }
    writeln!(out, "{}", if ok { "PASS" } else { "FAIL" }).ok();
    Ok(ok)
}

fn cmd_verify(a: &VerifyArgs, out: &mut String) -> Result<bool> {
    let suite: Suite = a.suite.parse()?;
    let opts = SuiteOptions {
        patterns: a.pattern.as_deref().map(PatternSet::parse).transpose()?,
        n: a.n,
        k: a.k,
        m: a.m,
        which: a
            .which
            .as_deref()
            .map(str::parse::<ClaimKind>)
            .transpose()?,
    };
    let r = run_suite(suite, &opts)?;
    if a.quiet {
        writeln!(
            out,
            "{}: {}",
            r.suite,
            if r.passed { "PASS" } else { "FAIL" }
        )
        .ok();
    } else {
        writeln!(out, "{r}").ok();
    }
    Ok(r.passed)
}

fn formula_id(f: &FormulaArgs) -> Result<FormulaId> {
    let name = f
        .formula
        .as_deref()
        .ok_or_else(|| Error::InvalidParameter("--formula is required".into()))?;
    let kind: FormulaKind = name.parse()?;
    let missing = |what: &str| Error::InvalidParameter(format!("{kind} needs --{what}"));
    let params = match kind.params() {
        ParamKind::Patterns => FormulaParams::Patterns(PatternSet::parse(
            f.pattern.as_deref().ok_or_else(|| missing("pattern"))?,
        )?),
        ParamKind::Monotone => FormulaParams::Monotone {
            m: f.m.ok_or_else(|| missing("m"))?,
        },
        ParamKind::Transpositional => FormulaParams::Transpositional {
            m: f.m.ok_or_else(|| missing("m"))?,
            a: f.a.ok_or_else(|| missing("a"))?,
        },
    };
    FormulaId::new(kind, params)
}

fn write_series(series: &Series, out: &mut String) {
    let mut terms: Vec<_> = series.terms().collect();
    terms.sort_by_key(|(m, _)| (m[3], m[1], m[2], m[0]));
    for (m, c) in terms {
        let mono = crate::poly::monomial_text(m, &["s", "t", "q", "x"]);
        writeln!(
            out,
            "{c} * {}",
            if mono.is_empty() {
                "1".to_string()
            } else {
                mono
            }
        )
        .ok();
    }
}

fn cmd_dump(a: &DumpArgs, out: &mut String) -> Result<bool> {
    let s: SParam = a.s.parse()?;
    let pattern = || {
        a.formula
            .pattern
            .as_deref()
            .ok_or_else(|| Error::InvalidParameter("--pattern is required".into()))
            .and_then(PatternSet::parse)
    };
    match a.kind {
        DumpKind::Fbar => write!(out, "{}", f_bar(&pattern()?, a.n)).ok(),
        DumpKind::Rbar => write!(out, "{}", r_bar(&pattern()?, a.n, a.shift)).ok(),
        DumpKind::ClusterGf => {
            let set = pattern()?;
            let stat = parse_cluster_stat(&a.stat)?;
            let source = if crate::formulas::classify(&set).is_some() {
                ClusterSource::ClosedForm
            } else {
                ClusterSource::BruteForce
            };
            for (k, p) in cluster_polys(&set, stat, a.n, source)?.iter().enumerate() {
                writeln!(out, "x^{k}: {p}").ok();
            }
            Some(())
        }
        DumpKind::Theorem => {
            let id = formula_id(&a.formula)?;
            let family = id.kind.family();
            let tr = default_truncation(family, a.n);
            let series = match id.kind.params() {
                ParamKind::Patterns => {
                    let stat = match family {
                        Family::AIdes => ClusterStat::Ides,
                        Family::AIdesIcomaj => ClusterStat::IdesIcomaj,
                        Family::PIpk => ClusterStat::Ipk,
                        Family::PIlpk => ClusterStat::Ilpk,
                        _ => {
                            return Err(Error::InvalidParameter(format!(
                                "{} is a recurrence, not a series",
                                id.kind
                            )))
                        }
                    };
                    let rs =
                        cluster_polys(&id.pattern_set()?, stat, a.n, ClusterSource::BruteForce)?;
                    spec_kernel(family, &rs, s, tr)?.hadamard_geometric_sum(a.n as u32)?
                }
                _ => theorem_series(&id, s, a.n, tr)?,
            };
            writeln!(out, "# {id} s={s} mod {}", series.trunc()).ok();
            write_series(&series, out);
            Some(())
        }
    };
    Ok(true)
}

fn cmd_formulas(action: &FormulasAction, out: &mut String) -> Result<bool> {
    match action {
        FormulasAction::List => {
            for k in FormulaKind::ALL {
                let params = match k.params() {
                    ParamKind::Patterns => "--pattern",
                    ParamKind::Monotone => "--m",
                    ParamKind::Transpositional => "--m --a",
                };
                let s = if k.symbolic_s() {
                    "s symbolic or 0"
                } else {
                    "s = 0"
                };
                writeln!(
                    out,
                    "{:<18} {:<8} {:<16} {}",
                    k.name(),
                    params,
                    s,
                    k.description()
                )
                .ok();
            }
        }
        FormulasAction::Run {
            formula,
            n,
            s,
            format,
        } => {
            let id = formula_id(formula)?;
            let s: SParam = s.parse()?;
            let rows = evaluate(&id, *n, s, ClusterSource::ClosedForm)?;
            write_rows(&rows, s, *format, out);
        }
    }
    Ok(true)
}

/// Exposed for tests: the cache file of a cell.
pub fn cache_path(dir: &Path, set: &PatternSet, family: Family, n: usize) -> PathBuf {
    Cache::new(dir).path(set, family, n)
}

/// Exposed for tests: runs a command line and captures stdout and the
/// success flag.
pub fn run_captured<I, T>(args: I) -> Result<(String, bool)>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| Error::InvalidParameter(e.to_string()))?;
    let mut out = String::new();
    let ok = execute(&cli, &mut out)?;
    Ok((out, ok))
}
