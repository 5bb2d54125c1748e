//! Golden tables of avoider distributions for `n = 0..=9`, embedded as CSV,
//! and a diff of any computed rows against them.

use std::fmt;

use num_bigint::BigInt;

use crate::brute::Family;
use crate::compute::{compute, Method};
use crate::error::{Error, Result};
use crate::formulas::{evaluate, ClusterSource, FormulaId, FormulaKind, FormulaParams, SParam};
use crate::pattern::PatternSet;
use crate::poly::{Poly, T};

/// Highest `n` in every table.
pub const TABLE_N_MAX: usize = 9;

/// Valid table ids.
pub const TABLE_IDS: std::ops::RangeInclusive<usize> = 1..=11;

const CSV: [&str; 11] = [
    include_str!("../data/table01.csv"),
    include_str!("../data/table02.csv"),
    include_str!("../data/table03.csv"),
    include_str!("../data/table04.csv"),
    include_str!("../data/table05.csv"),
    include_str!("../data/table06.csv"),
    include_str!("../data/table07.csv"),
    include_str!("../data/table08.csv"),
    include_str!("../data/table09.csv"),
    include_str!("../data/table10.csv"),
    include_str!("../data/table11.csv"),
];

/// A misprinted coefficient in an embedded table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Erratum {
    pub table: usize,
    pub n: usize,
    pub t_exp: u32,
    pub printed: i64,
    pub corrected: i64,
    /// Table listing the same avoiders, whose row total must agree.
    pub total_from: usize,
}

/// Known misprints. Each is checked by [`check_erratum`]: the printed row
/// total disagrees with the avoider count of another table, and the
/// corrected one agrees.
pub const ERRATA: [Erratum; 1] = [Erratum {
    table: 4,
    n: 7,
    t_exp: 3,
    printed: 2553,
    corrected: 2532,
    total_from: 2,
}];

/// Evidence for an erratum, independent of any computation: the printed
/// row total is wrong and the corrected one matches.
pub fn check_erratum(e: &Erratum) -> Result<bool> {
    let rows = TableSpec::get(e.table)?.expected()?;
    let other = TableSpec::get(e.total_from)?.expected()?;
    let row = &rows[e.n];
    let printed_ok = row.coeff([0, e.t_exp, 0]) == BigInt::from(e.printed);
    let total = other[e.n].total();
    let corrected_total = row.total() - e.printed + e.corrected;
    Ok(printed_ok && row.total() != total && corrected_total == total)
}

/// What a table lists.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableSpec {
    pub id: usize,
    pub pattern: &'static str,
    pub family: Family,
}

impl TableSpec {
    pub fn get(id: usize) -> Result<TableSpec> {
        let (pattern, family) = match id {
            1 => ("123", Family::AIdes),
            2 => ("1234", Family::AIdes),
            3 => ("123", Family::PIpk),
            4 => ("1234", Family::PIpk),
            5 => ("123", Family::PIlpk),
            6 => ("1234", Family::PIlpk),
            7 => ("321", Family::PIlpk),
            8 => ("4321", Family::PIlpk),
            9 => ("13245", Family::AIdes),
            10 => ("13245", Family::PIpk),
            11 => ("13245", Family::PIlpk),
            _ => return Err(Error::UnknownTable { id }),
        };
        Ok(TableSpec {
            id,
            pattern,
            family,
        })
    }

    pub fn all() -> Vec<TableSpec> {
        TABLE_IDS
            .map(|id| TableSpec::get(id).expect("valid id"))
            .collect()
    }

    pub fn patterns(&self) -> PatternSet {
        PatternSet::parse(self.pattern).expect("table patterns are valid")
    }

    pub fn caption(&self) -> String {
        format!(
            "Distribution of {} over S_n({})",
            stat_name(self.family),
            self.pattern
        )
    }

    /// The rows as printed, `n = 0..=9`, as polynomials in `t`.
    pub fn expected(&self) -> Result<Vec<Poly>> {
        parse_csv(CSV[self.id - 1])
    }

    /// The printed rows with [`ERRATA`] applied.
    pub fn corrected(&self) -> Result<Vec<Poly>> {
        let mut rows = self.expected()?;
        for e in ERRATA.iter().filter(|e| e.table == self.id) {
            rows[e.n].add_term([0, e.t_exp, 0], BigInt::from(e.corrected - e.printed));
        }
        Ok(rows)
    }

    pub fn errata(&self) -> Vec<Erratum> {
        ERRATA
            .iter()
            .copied()
            .filter(|e| e.table == self.id)
            .collect()
    }

    /// Every closed-form theorem whose avoider specialization this table
    /// lists.
    pub fn closed_forms(&self) -> Vec<FormulaId> {
        use FormulaKind::*;
        let (kinds, params): (&[FormulaKind], FormulaParams) = match self.id {
            1 => (
                &[MonoIdesA, MonoIdesB, MonoIdesC],
                FormulaParams::Monotone { m: 3 },
            ),
            2 => (
                &[MonoIdesA, MonoIdesB, MonoIdesC],
                FormulaParams::Monotone { m: 4 },
            ),
            3 => (
                &[MonoIpkA, MonoIpkB, MonoIpkC],
                FormulaParams::Monotone { m: 3 },
            ),
            4 => (
                &[MonoIpkA, MonoIpkB, MonoIpkC],
                FormulaParams::Monotone { m: 4 },
            ),
            5 => (
                &[MonoIlpkA, MonoIlpkB, MonoIlpkC],
                FormulaParams::Monotone { m: 3 },
            ),
            6 => (
                &[MonoIlpkA, MonoIlpkB, MonoIlpkC],
                FormulaParams::Monotone { m: 4 },
            ),
            7 => (
                &[DecIlpkA, DecIlpkB, DecIlpkC],
                FormulaParams::Monotone { m: 3 },
            ),
            8 => (
                &[DecIlpkA, DecIlpkB, DecIlpkC],
                FormulaParams::Monotone { m: 4 },
            ),
            9 => (
                &[TransIdesA, TransIdesB],
                FormulaParams::Transpositional { m: 5, a: 2 },
            ),
            10 => (
                &[TransIpkA, TransIpkB],
                FormulaParams::Transpositional { m: 5, a: 2 },
            ),
            _ => (
                &[TransIlpkA, TransIlpkB],
                FormulaParams::Transpositional { m: 5, a: 2 },
            ),
        };
        kinds
            .iter()
            .map(|&k| FormulaId::new(k, params.clone()).expect("table formulas are well-formed"))
            .collect()
    }
}

fn stat_name(family: Family) -> &'static str {
    match family {
        Family::AIdes => "ides",
        Family::PIpk => "ipk",
        Family::PIlpk => "ilpk",
        other => other.name(),
    }
}

fn parse_csv(text: &str) -> Result<Vec<Poly>> {
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate().skip(1) {
        let (n, coeffs) = line
            .split_once(',')
            .ok_or_else(|| Error::InvalidParameter(format!("table line {} has no comma", i + 1)))?;
        let n: usize = n
            .trim()
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("table line {}: bad n", i + 1)))?;
        if n != rows.len() {
            return Err(Error::InvalidParameter(format!(
                "table rows out of order at n = {n}"
            )));
        }
        let c = coeffs
            .split_whitespace()
            .map(|c| c.parse::<BigInt>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::InvalidParameter(format!("table line {}: {e}", i + 1)))?;
        rows.push(Poly::from_coeffs(T, &c));
    }
    Ok(rows)
}

/// One row that differs from the table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowMismatch {
    pub n: usize,
    pub expected: Poly,
    pub got: Option<Poly>,
}

/// Result of comparing computed rows with a table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableDiff {
    pub id: usize,
    pub source: String,
    pub rows_compared: usize,
    pub mismatches: Vec<RowMismatch>,
    /// Misprints the computed rows disagree with as predicted.
    pub errata_applied: Vec<Erratum>,
}

impl TableDiff {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.rows_compared == TABLE_N_MAX + 1
    }
}

impl fmt::Display for TableDiff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "table {} via {}: {verdict} ({} rows)",
            self.id, self.source, self.rows_compared
        )?;
        for e in &self.errata_applied {
            write!(
                f,
                "\n  n={}: printed coefficient {} of t^{} is a misprint; computed {}",
                e.n, e.printed, e.t_exp, e.corrected
            )?;
        }
        for m in &self.mismatches {
            match &m.got {
                Some(g) => write!(f, "\n  n={}: expected {} got {}", m.n, m.expected, g)?,
                None => write!(f, "\n  n={}: expected {} got nothing", m.n, m.expected)?,
            }
        }
        Ok(())
    }
}

/// Compares `rows[n]` with the table's row `n` for every `n`. A row that
/// differs from the printed one only by a known erratum, confirmed by
/// [`check_erratum`], counts as a match and is listed in `errata_applied`.
pub fn diff(id: usize, source: &str, rows: &[Poly]) -> Result<TableDiff> {
    let spec = TableSpec::get(id)?;
    let printed = spec.expected()?;
    let expected = spec.corrected()?;
    let mut errata_applied = Vec::new();
    for e in spec.errata() {
        if !check_erratum(&e)? {
            return Err(Error::InvalidParameter(format!(
                "erratum {e:?} is not confirmed"
            )));
        }
        if rows
            .get(e.n)
            .is_some_and(|r| *r != printed[e.n] && *r == expected[e.n])
        {
            errata_applied.push(e);
        }
    }
    let mismatches = expected
        .iter()
        .enumerate()
        .filter_map(|(n, e)| match rows.get(n) {
            Some(g) if g == e => None,
            got => Some(RowMismatch {
                n,
                expected: e.clone(),
                got: got.cloned(),
            }),
        })
        .collect();
    Ok(TableDiff {
        id,
        source: source.to_string(),
        rows_compared: expected.len(),
        mismatches,
        errata_applied,
    })
}

/// Reproduces a table with `method` and diffs it.
pub fn reproduce(id: usize, method: Method) -> Result<TableDiff> {
    let spec = TableSpec::get(id)?;
    let rows = compute(
        &spec.patterns(),
        spec.family,
        TABLE_N_MAX,
        SParam::Zero,
        method,
        false,
    )?;
    let polys: Vec<Poly> = rows.into_iter().map(|d| d.poly).collect();
    diff(id, method.name(), &polys)
}

/// Reproduces a table from one closed-form theorem and diffs it.
pub fn reproduce_with(id: usize, formula: &FormulaId) -> Result<TableDiff> {
    let rows = evaluate(
        formula,
        TABLE_N_MAX,
        SParam::Zero,
        ClusterSource::ClosedForm,
    )?;
    let polys: Vec<Poly> = rows.into_iter().map(|d| d.poly).collect();
    diff(id, &formula.to_string(), &polys)
}
