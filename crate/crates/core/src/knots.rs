//! Built-in knots, name resolution for quandles and groups, pairwise
//! distinction by coloring counts, and the combined invariant report.

use std::fmt;
use std::thread;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{Diagram, DiagramError};
use crate::group::FiniteGroup;
use crate::presentation::{abelianize, hom_count, tietze_simplify, wirtinger, DEFAULT_LENGTH_CAP};
use crate::quandle::{count_colorings, FiniteQuandle};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResolveError {
    #[error("unknown knot `{0}` (expected unknot, trefoil or figure8)")]
    UnknownKnot(String),
    #[error("unknown quandle `{0}` (expected R<n> or QS4)")]
    UnknownQuandle(String),
    #[error("unknown group `{0}` (expected S<k>, A<k> or Z<n>)")]
    UnknownGroup(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotRecord {
    pub name: String,
    pub pd: String,
    pub note: String,
}

impl KnotRecord {
    pub fn new(name: impl Into<String>, pd: impl Into<String>, note: impl Into<String>) -> Self {
        KnotRecord {
            name: name.into(),
            pd: pd.into(),
            note: note.into(),
        }
    }

    pub fn diagram(&self) -> Result<Diagram, DiagramError> {
        Diagram::parse_pd(&self.pd)
    }
}

pub const BUILTIN_NAMES: [&str; 3] = ["unknot", "trefoil", "figure8"];

/// The three built-in knots. Accepts a few common aliases.
pub fn builtin(name: &str) -> Result<KnotRecord, ResolveError> {
    let record = match name.to_ascii_lowercase().as_str() {
        "unknot" | "u" | "0_1" => KnotRecord::new("unknot", "U", "zero-crossing circle"),
        "trefoil" | "3_1" => KnotRecord::new(
            "trefoil",
            "X[1,5,2,4];X[3,1,4,6];X[5,3,6,2]",
            "right-handed, standard alternating three-crossing diagram",
        ),
        "figure8" | "figure-8" | "4_1" => KnotRecord::new(
            "figure8",
            "X[4,2,5,1];X[8,6,1,5];X[6,3,7,4];X[2,7,3,8]",
            "standard alternating four-crossing diagram",
        ),
        _ => return Err(ResolveError::UnknownKnot(name.to_string())),
    };
    Ok(record)
}

pub fn builtins() -> Vec<KnotRecord> {
    BUILTIN_NAMES
        .iter()
        .map(|n| builtin(n).expect("built-in name"))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedQuandle {
    pub name: String,
    pub quandle: FiniteQuandle,
}

/// `R<n>` (dihedral, `n ≥ 3`) or `QS4`.
pub fn resolve_quandle(name: &str) -> Result<NamedQuandle, ResolveError> {
    let unknown = || ResolveError::UnknownQuandle(name.to_string());
    let quandle = if name.eq_ignore_ascii_case("QS4") {
        FiniteQuandle::tetrahedral()
    } else if let Some(n) = name.strip_prefix(['R', 'r']) {
        let n: usize = n.parse().map_err(|_| unknown())?;
        FiniteQuandle::dihedral(n).map_err(|_| unknown())?
    } else {
        return Err(unknown());
    };
    Ok(NamedQuandle {
        name: name.to_ascii_uppercase(),
        quandle,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedGroup {
    pub name: String,
    pub group: FiniteGroup,
}

/// `S<k>` (2..=5), `A<k>` (3..=5) or `Z<n>` (1..=120).
pub fn resolve_group(name: &str) -> Result<NamedGroup, ResolveError> {
    let unknown = || ResolveError::UnknownGroup(name.to_string());
    let mut chars = name.chars();
    let family = chars.next().ok_or_else(unknown)?.to_ascii_uppercase();
    let k: usize = chars.as_str().parse().map_err(|_| unknown())?;
    let group = match family {
        'S' => FiniteGroup::symmetric(k),
        'A' => FiniteGroup::alternating(k),
        'Z' => FiniteGroup::cyclic(k),
        _ => return Err(unknown()),
    }
    .map_err(|_| unknown())?;
    Ok(NamedGroup {
        name: format!("{family}{k}"),
        group,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    /// Coloring totals differ for `quandle`: `totals.0` for the first knot.
    Distinct { quandle: String, totals: (u64, u64) },
    /// No listed quandle separates the two; this is not a proof of equality.
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Distinct { quandle, totals } => {
                write!(
                    f,
                    "DISTINCT (witness {quandle}: {} vs {})",
                    totals.0, totals.1
                )
            }
            Verdict::Inconclusive => f.write_str("INCONCLUSIVE"),
        }
    }
}

/// The first quandle in `quandles` whose coloring totals differ.
pub fn distinguish(a: &Diagram, b: &Diagram, quandles: &[NamedQuandle]) -> Verdict {
    for q in quandles {
        let ta = count_colorings(a, &q.quandle).total;
        let tb = count_colorings(b, &q.quandle).total;
        if ta != tb {
            return Verdict::Distinct {
                quandle: q.name.clone(),
                totals: (ta, tb),
            };
        }
    }
    Verdict::Inconclusive
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringCell {
    pub quandle: String,
    pub total: u64,
    pub nontrivial: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomCell {
    pub group: String,
    pub count: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationSize {
    pub generators: usize,
    pub relators: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotRow {
    pub name: String,
    pub pd: String,
    pub crossings: usize,
    pub writhe: i32,
    pub colorings: Vec<ColoringCell>,
    pub wirtinger: PresentationSize,
    pub simplified: PresentationSize,
    pub homs: Vec<HomCell>,
    pub abelianization: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairVerdict {
    pub a: String,
    pub b: String,
    #[serde(flatten)]
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub rows: Vec<KnotRow>,
    pub pairs: Vec<PairVerdict>,
}

fn size(p: &crate::presentation::GroupPresentation) -> PresentationSize {
    PresentationSize {
        generators: p.generators().len(),
        relators: p.relators().len(),
    }
}

pub fn knot_row(
    record: &KnotRecord,
    quandles: &[NamedQuandle],
    groups: &[NamedGroup],
) -> Result<KnotRow, DiagramError> {
    let d = record.diagram()?;
    let w = wirtinger(&d);
    let simplified = tietze_simplify(&w, DEFAULT_LENGTH_CAP);
    Ok(KnotRow {
        name: record.name.clone(),
        pd: d.to_string(),
        crossings: d.crossing_count(),
        writhe: d.writhe(),
        colorings: quandles
            .iter()
            .map(|q| {
                let c = count_colorings(&d, &q.quandle);
                ColoringCell {
                    quandle: q.name.clone(),
                    total: c.total,
                    nontrivial: c.nontrivial,
                }
            })
            .collect(),
        wirtinger: size(&w),
        simplified: size(&simplified),
        homs: groups
            .iter()
            .map(|g| HomCell {
                group: g.name.clone(),
                count: hom_count(&w, &g.group),
            })
            .collect(),
        abelianization: abelianize(&w),
    })
}

/// Rows in input order, computed on up to `threads` worker threads, and a
/// verdict for every unordered pair.
pub fn report(
    knots: &[KnotRecord],
    quandles: &[NamedQuandle],
    groups: &[NamedGroup],
    threads: usize,
) -> Result<InvariantReport, DiagramError> {
    let threads = threads.max(1);
    let mut rows: Vec<Option<Result<KnotRow, DiagramError>>> = vec![None; knots.len()];
    thread::scope(|s| {
        for (chunk_rows, chunk_knots) in rows
            .chunks_mut(knots.len().div_ceil(threads).max(1))
            .zip(knots.chunks(knots.len().div_ceil(threads).max(1)))
        {
            s.spawn(move || {
                for (slot, k) in chunk_rows.iter_mut().zip(chunk_knots) {
                    *slot = Some(knot_row(k, quandles, groups));
                }
            });
        }
    });
    let rows = rows
        .into_iter()
        .map(|r| r.expect("every row computed"))
        .collect::<Result<Vec<_>, _>>()?;
    let mut pairs = Vec::new();
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            let verdict = rows[i]
                .colorings
                .iter()
                .zip(&rows[j].colorings)
                .find(|(a, b)| a.total != b.total)
                .map_or(Verdict::Inconclusive, |(a, b)| Verdict::Distinct {
                    quandle: a.quandle.clone(),
                    totals: (a.total, b.total),
                });
            pairs.push(PairVerdict {
                a: rows[i].name.clone(),
                b: rows[j].name.clone(),
                verdict,
            });
        }
    }
    Ok(InvariantReport { rows, pairs })
}

impl fmt::Display for InvariantReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            writeln!(
                f,
                "{}: {} crossings, writhe {}, pd {}",
                row.name, row.crossings, row.writhe, row.pd
            )?;
            for c in &row.colorings {
                writeln!(
                    f,
                    "  colorings {}: {} total, {} nontrivial",
                    c.quandle, c.total, c.nontrivial
                )?;
            }
            writeln!(
                f,
                "  wirtinger {}x{}, simplified {}x{} (generators x relators)",
                row.wirtinger.generators,
                row.wirtinger.relators,
                row.simplified.generators,
                row.simplified.relators
            )?;
            for h in &row.homs {
                writeln!(f, "  homs into {}: {}", h.group, h.count)?;
            }
            let ab: Vec<String> = row.abelianization.iter().map(i64::to_string).collect();
            writeln!(f, "  abelianization ({})", ab.join(","))?;
        }
        for p in &self.pairs {
            writeln!(f, "{} vs {}: {}", p.a, p.b, p.verdict)?;
        }
        Ok(())
    }
}
