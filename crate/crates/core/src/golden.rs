//! Golden tables of boundary slopes, weights and Â-degrees: parsing,
//! verification and identification of rows with knots `K(α,β)`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::apoly::{ahat_degrees_from_table, degree_consistency_with, DegreeReport, TableDegrees};
use crate::error::{Error, Result};
use crate::knot::TwoBridgeKnot;
use crate::seminorm::SeminormTable;
use crate::surfaces::all_surfaces;

/// One table row. Weights are stored doubled so half-integers stay exact.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GoldenRow {
    pub name: String,
    pub alpha: i64,
    pub beta: i64,
    /// `(boundary slope, doubled weight)`, one entry per surface.
    pub surfaces: Vec<(i64, u64)>,
    pub deg_m_a: u64,
    pub deg_l_a: u64,
    pub deg_m_ahat: Option<u64>,
    pub deg_l_ahat: Option<u64>,
}

#[derive(Deserialize)]
struct RawRow {
    name: String,
    alpha: i64,
    beta: i64,
    surfaces: String,
    #[serde(rename = "degM_A")]
    deg_m_a: u64,
    #[serde(rename = "degL_A")]
    deg_l_a: u64,
    #[serde(rename = "degM_Ahat", default, deserialize_with = "empty_as_none")]
    deg_m_ahat: Option<u64>,
    #[serde(rename = "degL_Ahat", default, deserialize_with = "empty_as_none")]
    deg_l_ahat: Option<u64>,
}

fn empty_as_none<'de, D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Option<u64>, D::Error> {
    let s: Option<String> = Option::deserialize(d)?;
    match s.as_deref().map(str::trim) {
        None | Some("") | Some("-") => Ok(None),
        Some(t) => t.parse().map(Some).map_err(serde::de::Error::custom),
    }
}

fn parse_surfaces(field: &str) -> Result<Vec<(i64, u64)>> {
    field
        .split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|item| {
            let bad = || Error::Parse {
                what: "slope:doubled_weight",
                input: item.to_string(),
            };
            let (s, w) = item.split_once(':').ok_or_else(bad)?;
            Ok((s.trim().parse().map_err(|_| bad())?, w.trim().parse().map_err(|_| bad())?))
        })
        .collect()
}

impl GoldenRow {
    pub fn degrees(&self) -> TableDegrees {
        TableDegrees {
            deg_m_a: self.deg_m_a,
            deg_l_a: self.deg_l_a,
            deg_m_ahat: self.deg_m_ahat,
            deg_l_ahat: self.deg_l_ahat,
        }
    }

    /// The row's L-degree for Â: the Â column when present, else the A column.
    pub fn ahat_deg_l(&self) -> u64 {
        self.deg_l_ahat.unwrap_or(self.deg_l_a)
    }

    pub fn surfaces_sorted(&self) -> Vec<(i64, u64)> {
        let mut v = self.surfaces.clone();
        v.sort_unstable();
        v
    }

    /// A row is internally consistent when its weights sum to its own L-degree.
    pub fn inconsistency(&self) -> Option<String> {
        let doubled: u64 = self.surfaces.iter().map(|s| s.1).sum();
        let deg_l = self.ahat_deg_l();
        (doubled != 2 * deg_l).then(|| {
            format!(
                "weights sum to {} but deg_L is {deg_l}",
                crate::arith::Rational::new(doubled as i64, 2).expect("nonzero")
            )
        })
    }
}

/// Parses tab-separated rows with a header line; `#` starts a comment line.
pub fn parse_table(text: &str) -> Result<Vec<GoldenRow>> {
    let mut rdr = csv::ReaderBuilder::new()
        .delimiter(b'\t')
        .comment(Some(b'#'))
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut rows = Vec::new();
    for rec in rdr.deserialize::<RawRow>() {
        let raw = rec.map_err(|e| Error::Table(e.to_string()))?;
        if raw.deg_m_ahat.is_some() != raw.deg_l_ahat.is_some() {
            return Err(Error::Table(format!("{}: only one Â column given", raw.name)));
        }
        TwoBridgeKnot::normalize(raw.alpha, raw.beta)?;
        rows.push(GoldenRow {
            surfaces: parse_surfaces(&raw.surfaces)?,
            name: raw.name,
            alpha: raw.alpha,
            beta: raw.beta,
            deg_m_a: raw.deg_m_a,
            deg_l_a: raw.deg_l_a,
            deg_m_ahat: raw.deg_m_ahat,
            deg_l_ahat: raw.deg_l_ahat,
        });
    }
    if rows.is_empty() {
        return Err(Error::Table("no rows".into()));
    }
    Ok(rows)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Chirality {
    Same,
    Mirror,
}

impl fmt::Display for Chirality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Chirality::Same => "same",
            Chirality::Mirror => "mirror",
        })
    }
}

/// Table entries known to disagree with the computation, as
/// `(row, column, table value, computed value)`.
pub const KNOWN_MISMATCHES: &[(&str, DegreeColumn, u64, u64)] = &[("7_4", DegreeColumn::M, 38, 30)];

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum DegreeColumn {
    M,
    L,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING-KEBAB-CASE")]
pub enum RowStatus {
    Pass,
    KnownMismatch,
    Fail,
}

impl fmt::Display for RowStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RowStatus::Pass => "PASS",
            RowStatus::KnownMismatch => "KNOWN-MISMATCH",
            RowStatus::Fail => "FAIL",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RowVerdict {
    pub name: String,
    pub knot: TwoBridgeKnot,
    /// Which chirality of the computed surfaces matched; `None` if neither.
    pub chirality: Option<Chirality>,
    pub computed_surfaces: Vec<(i64, u64)>,
    pub degrees: DegreeReport,
    pub status: RowStatus,
    pub notes: Vec<String>,
}

fn computed_multiset(k: &TwoBridgeKnot) -> Vec<(i64, u64)> {
    let mut v: Vec<(i64, u64)> = all_surfaces(k)
        .iter()
        .map(|s| (s.boundary_slope, s.doubled_weight))
        .collect();
    v.sort_unstable();
    v
}

fn negated(v: &[(i64, u64)]) -> Vec<(i64, u64)> {
    let mut n: Vec<(i64, u64)> = v.iter().map(|&(s, w)| (-s, w)).collect();
    n.sort_unstable();
    n
}

fn match_chirality(computed: &[(i64, u64)], want: &[(i64, u64)]) -> Option<Chirality> {
    if computed == want {
        Some(Chirality::Same)
    } else if negated(computed) == want {
        Some(Chirality::Mirror)
    } else {
        None
    }
}

pub fn verify_row(row: &GoldenRow) -> Result<RowVerdict> {
    let knot = TwoBridgeKnot::normalize(row.alpha, row.beta)?;
    let surfaces = all_surfaces(&knot);
    let table = SeminormTable::from_surfaces(knot, &surfaces);
    let computed = computed_multiset(&knot);
    let chirality = match_chirality(&computed, &row.surfaces_sorted());
    let degrees = degree_consistency_with(ahat_degrees_from_table(&table), &row.degrees());

    let mut notes = Vec::new();
    if chirality.is_none() {
        notes.push(format!(
            "surfaces differ: table {} vs computed {}",
            fmt_multiset(&row.surfaces_sorted()),
            fmt_multiset(&computed)
        ));
    }
    if let Some(msg) = row.inconsistency() {
        notes.push(format!("row is internally inconsistent: {msg}"));
    }
    let mut unexplained = chirality.is_none();
    let mut known = false;
    for (col, ok, table_v, computed_v) in [
        (DegreeColumn::M, degrees.deg_m_ok, degrees.expected.deg_m, degrees.computed.deg_m),
        (DegreeColumn::L, degrees.deg_l_ok, degrees.expected.deg_l, degrees.computed.deg_l),
    ] {
        if ok {
            continue;
        }
        let registered = KNOWN_MISMATCHES
            .iter()
            .any(|&(n, c, t, v)| n == row.name && c == col && t == table_v && v == computed_v);
        let label = if col == DegreeColumn::M { "deg_M" } else { "deg_L" };
        notes.push(format!(
            "{label}: table {table_v} vs computed {computed_v}{}",
            if registered { " (known mismatch)" } else { "" }
        ));
        if registered {
            known = true;
        } else {
            unexplained = true;
        }
    }
    let status = if unexplained {
        RowStatus::Fail
    } else if known {
        RowStatus::KnownMismatch
    } else {
        RowStatus::Pass
    };
    Ok(RowVerdict {
        name: row.name.clone(),
        knot,
        chirality,
        computed_surfaces: computed,
        degrees,
        status,
        notes,
    })
}

pub fn fmt_multiset(v: &[(i64, u64)]) -> String {
    let items: Vec<String> = v.iter().map(|(s, w)| format!("{s}:{w}")).collect();
    items.join(";")
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct VerifySummary {
    pub rows: Vec<RowVerdict>,
    pub passed: usize,
    pub known_mismatches: usize,
    pub failed: usize,
}

impl VerifySummary {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

pub fn verify_table(rows: &[GoldenRow]) -> Result<VerifySummary> {
    let verdicts = rows.iter().map(verify_row).collect::<Result<Vec<_>>>()?;
    let count = |s: RowStatus| verdicts.iter().filter(|v| v.status == s).count();
    Ok(VerifySummary {
        passed: count(RowStatus::Pass),
        known_mismatches: count(RowStatus::KnownMismatch),
        failed: count(RowStatus::Fail),
        rows: verdicts,
    })
}

/// A candidate identification of a table row.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Candidate {
    pub knot: TwoBridgeKnot,
    pub chirality: Chirality,
    /// Size of the symmetric difference of the surface multisets.
    pub distance: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Discovery {
    pub name: String,
    /// Knots whose surfaces match exactly, one per equivalence class and
    /// chirality.
    pub exact: Vec<Candidate>,
    /// Best approximate match with `α = 2·deg_L + 1`, when nothing matches.
    pub nearest: Option<Candidate>,
}

fn symmetric_difference(a: &[(i64, u64)], b: &[(i64, u64)]) -> usize {
    let mut counts: BTreeMap<(i64, u64), i64> = BTreeMap::new();
    for x in a {
        *counts.entry(*x).or_default() += 1;
    }
    for x in b {
        *counts.entry(*x).or_default() -= 1;
    }
    counts.values().map(|c| c.unsigned_abs() as usize).sum()
}

/// Identifies each row with the knots whose surface data match it, searching
/// all `K(α,β)` with `α ≤ max_alpha`.
pub fn discover(rows: &[GoldenRow], max_alpha: i64) -> Vec<Discovery> {
    let mut knots: Vec<(TwoBridgeKnot, Vec<(i64, u64)>)> = Vec::new();
    for k in TwoBridgeKnot::all_up_to(max_alpha) {
        if k == k.canonical() {
            knots.push((k, computed_multiset(&k)));
        }
    }
    rows.iter()
        .map(|row| {
            let want = row.surfaces_sorted();
            // A row matching the mirror of `K` matches `mirror(K)` directly,
            // so only same-chirality hits are listed.
            let exact: Vec<Candidate> = knots
                .iter()
                .filter(|(_, ms)| *ms == want)
                .map(|(k, _)| Candidate { knot: *k, chirality: Chirality::Same, distance: 0 })
                .collect();
            let nearest = if exact.is_empty() {
                let alpha = 2 * row.ahat_deg_l() as i64 + 1;
                knots
                    .iter()
                    .filter(|(k, _)| k.alpha() == alpha)
                    .flat_map(|(k, ms)| {
                        [
                            Candidate {
                                knot: *k,
                                chirality: Chirality::Same,
                                distance: symmetric_difference(ms, &want),
                            },
                            Candidate {
                                knot: *k,
                                chirality: Chirality::Mirror,
                                distance: symmetric_difference(&negated(ms), &want),
                            },
                        ]
                    })
                    .min_by_key(|c| (c.distance, c.knot, c.chirality == Chirality::Mirror))
            } else {
                None
            };
            Discovery {
                name: row.name.clone(),
                exact,
                nearest,
            }
        })
        .collect()
}
