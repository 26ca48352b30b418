//! Catalog-wide sweep, comparison with the expected classification, and the
//! table emitters.
//!
//! Negative verdicts mean "no diagonal almost symmetry": only sign characters
//! are searched, so an empty result is a statement about that model.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::involutions::{CharacterTable, Finding, FindingClass, Outcome, Rejection};
use crate::orbits::Marking;
use crate::symspace::{catalog, inner_only, SymmetricSpace};

pub const SCHEMA_VERSION: u32 = 1;

/// Why a marking carries no finding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Exclusion {
    /// All multiplicities are even.
    SplittingRank,
    /// No tangent root has multiplicity one.
    NoUnitMultiplicityClass,
    /// A character would fix a tangent line but reverses orientation.
    Orientation,
    NoneFound,
}

#[derive(Debug, Clone, Serialize)]
pub struct MarkingOutcome {
    pub support: Marking,
    pub findings: Vec<Finding>,
    pub exclusions: Vec<Exclusion>,
}

#[derive(Debug, Clone)]
pub struct Verdict {
    pub space: String,
    pub parameters: Vec<u32>,
    /// One entry per non-empty support, ordered by size then lexicographically.
    pub markings: Vec<MarkingOutcome>,
    pub inner_only: bool,
}

impl Verdict {
    pub fn findings(&self) -> impl Iterator<Item = &Finding> {
        self.markings.iter().flat_map(|m| m.findings.iter())
    }

    pub fn almost_symmetries(&self) -> impl Iterator<Item = &Finding> {
        self.findings().filter(|f| f.class == FindingClass::AlmostSymmetry)
    }

    /// Markings admitting a symmetry among the sign characters.
    pub fn symmetric_markings(&self) -> Vec<&Marking> {
        self.markings
            .iter()
            .filter(|m| m.findings.iter().any(|f| f.class == FindingClass::Symmetry))
            .map(|m| &m.support)
            .collect()
    }
}

#[derive(Serialize)]
struct VerdictBody<'a> {
    findings: Vec<&'a Finding>,
    symmetric_markings: Vec<&'a Marking>,
    exclusions: Vec<ExclusionRecord<'a>>,
    inner_only: bool,
}

#[derive(Serialize)]
struct ExclusionRecord<'a> {
    support: &'a Marking,
    reasons: &'a [Exclusion],
}

impl Serialize for Verdict {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        VerdictBody {
            findings: self.findings().collect(),
            symmetric_markings: self.symmetric_markings(),
            exclusions: self
                .markings
                .iter()
                .filter(|m| !m.exclusions.is_empty())
                .map(|m| ExclusionRecord {
                    support: &m.support,
                    reasons: &m.exclusions,
                })
                .collect(),
            inner_only: self.inner_only,
        }
        .serialize(s)
    }
}

pub fn classify_space(space: &SymmetricSpace) -> Result<Verdict> {
    let table = CharacterTable::new(space);
    let mults = space.multiplicities();
    let roots = space.roots().positive_roots();
    let mut markings = Vec::new();
    for marking in Marking::all(space.rank()) {
        let outcomes = crate::involutions::torus_outcomes_with(&table, space, &marking)?;
        let mut findings = Vec::new();
        let mut orientation = false;
        for (c, outcome) in outcomes {
            match outcome {
                Outcome::Found(f) => findings.push(f),
                Outcome::Rejected(Rejection::Orientation) => {
                    orientation |= table.profile(marking.mask(), c.mask()).fixed_tangent_dim == 1;
                }
                Outcome::Rejected(_) => {}
            }
        }
        let mut exclusions = Vec::new();
        if findings.is_empty() {
            if space.flags.splitting_rank {
                exclusions.push(Exclusion::SplittingRank);
            }
            let unit_tangent = roots
                .iter()
                .zip(&mults)
                .any(|(r, &m)| m == 1 && marking.is_tangent(&r.simple_coeffs));
            if !unit_tangent {
                exclusions.push(Exclusion::NoUnitMultiplicityClass);
            }
            if orientation {
                exclusions.push(Exclusion::Orientation);
            }
            if exclusions.is_empty() {
                exclusions.push(Exclusion::NoneFound);
            }
        }
        markings.push(MarkingOutcome {
            support: marking,
            findings,
            exclusions,
        });
    }
    Ok(Verdict {
        space: space.label(),
        parameters: space.parameters.clone(),
        markings,
        inner_only: inner_only(space),
    })
}

/// Expected almost-symmetry count at one marking, or over a whole space
/// when `support` is `None`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExpectedEntry {
    pub space: String,
    pub support: Option<Vec<usize>>,
    pub count: usize,
    pub anchor: &'static str,
}

/// Expected diagonal almost symmetries of one catalog space.
pub fn expected_findings(space: &SymmetricSpace) -> Vec<ExpectedEntry> {
    let label = space.label();
    let q = space.rank();
    let at = |support: Vec<usize>, count: usize, anchor: &'static str| ExpectedEntry {
        space: label.clone(),
        support: Some(support),
        count,
        anchor,
    };
    let none = |anchor: &'static str| ExpectedEntry {
        space: label.clone(),
        support: None,
        count: 0,
        anchor,
    };
    let p = &space.parameters;
    match space.class.as_str() {
        "AI" if q == 2 => vec![at(
            vec![1, 2],
            3,
            "A_2 principal orbit: one character per focal Grassmannian plus the canonical one",
        )],
        "AI" => vec![
            at(vec![1, 2], 1, "A_q, extremal node fixed and its neighbour negated"),
            at(vec![q - 1, q], 1, "A_q, mirror image under the diagram flip"),
            at(vec![1, q], 1, "A_q, δ = λ_1 + λ_q fixed by the canonical involution"),
        ],
        "AII" => vec![none("all multiplicities 4: splitting rank")],
        "AIII" => vec![at(vec![1], 1, "C_q/BC_q node 1: the long class 2θ_1 has multiplicity 1")],
        "BDI" if p[..] == [3, 3] => vec![
            at(vec![1, 2], 1, "D_3 = A_3: two-node marking through the middle node"),
            at(vec![1, 3], 1, "D_3 = A_3: mirror image of the previous marking"),
            at(vec![2, 3], 1, "D_3 = A_3: the λ_1 + λ_q marking"),
        ],
        "BDI" if p[..] == [3, 2] => vec![
            at(vec![2], 1, "B_2, node 2: Stiefel orbit over the Grassmannian"),
            at(vec![1, 2], 1, "B_2 principal orbit, canonical involution"),
        ],
        "BDI" => vec![at(vec![2], 1, "B_q/D_q node 2: δ is the only tangent root with even n_2")],
        "CI" if q == 2 => vec![
            at(vec![1], 1, "C_q node 1: δ = 2λ_1 is the only tangent root with even n_1"),
            at(vec![1, 2], 1, "C_2 = B_2 principal orbit, canonical involution"),
        ],
        "CI" => vec![at(vec![1], 1, "C_q node 1: δ = 2λ_1 is the only tangent root with even n_1")],
        "CII" => vec![none("no tangent class of multiplicity 1")],
        "DIII" => vec![at(vec![1], 1, "C_q/BC_q node 1: the long class has multiplicity 1")],
        "EI" => vec![at(vec![2], 1, "E_6, δ = λ_2")],
        "EII" | "EVI" | "EIX" | "FI" => vec![at(vec![1], 1, "F_4, δ = λ_1, long class of multiplicity 1")],
        "EIII" => vec![
            at(vec![1], 1, "BC_2 node 1: fixed line 2θ_1"),
            at(vec![2], 0, "BC_2 node 2: tangent classes of multiplicity 6 and 8"),
            at(vec![1, 2], 0, "BC_2 principal orbit: no unit tangent class besides 2θ_i"),
        ],
        "EIV" => vec![none("all multiplicities 8: splitting rank")],
        "EV" => vec![at(vec![1], 1, "E_7, δ = λ_1")],
        "EVII" => vec![at(vec![1], 1, "C_3 node 1: fixed line 2θ_1")],
        "EVIII" => vec![at(vec![8], 1, "E_8, δ = λ_8")],
        "G" => vec![
            at(vec![1], 1, "G_2 node 1: 2α_1 + α_2 is the only tangent root with even n_1"),
            at(vec![2], 1, "G_2 node 2: δ = λ_2 is the only tangent root with even n_2"),
        ],
        c if c.starts_with("Group-") => vec![none("all multiplicities 2: splitting rank")],
        _ => vec![],
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiffEntry {
    pub space: String,
    pub support: Vec<usize>,
    pub class: FindingClass,
    pub expected: usize,
    pub found: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct DiffReport {
    pub spaces_checked: usize,
    /// Expected but absent.
    pub missing: Vec<DiffEntry>,
    /// Found but not expected.
    pub extra: Vec<DiffEntry>,
    /// Found and expected with different counts.
    pub count_mismatch: Vec<DiffEntry>,
}

impl DiffReport {
    pub fn is_empty(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty() && self.count_mismatch.is_empty()
    }
}

/// Compares the sweep with the expected almost symmetries and with the
/// symmetric-orbit criterion (a symmetry exactly at single nodes with
/// `n_i(δ) = 1`).
pub fn verify_spaces(spaces: &[SymmetricSpace]) -> Result<DiffReport> {
    let mut report = DiffReport {
        spaces_checked: spaces.len(),
        ..Default::default()
    };
    for space in spaces {
        let verdict = classify_space(space)?;
        let mut found: BTreeMap<(Vec<usize>, FindingClass), usize> = BTreeMap::new();
        for f in verdict.findings() {
            *found.entry((f.support.nodes(), f.class)).or_default() += 1;
        }
        let mut expected: BTreeMap<(Vec<usize>, FindingClass), usize> = BTreeMap::new();
        for e in expected_findings(space) {
            if let Some(s) = e.support {
                expected.insert((s, FindingClass::AlmostSymmetry), e.count);
            }
        }
        for i in crate::orbits::symmetric_nodes(space) {
            expected.insert((vec![i], FindingClass::Symmetry), 1);
        }
        let entry = |(support, class): &(Vec<usize>, FindingClass), expected: usize, found: usize| DiffEntry {
            space: verdict.space.clone(),
            support: support.clone(),
            class: *class,
            expected,
            found,
        };
        for (key, &n) in &expected {
            match found.get(key).copied().unwrap_or(0) {
                0 if n > 0 => report.missing.push(entry(key, n, 0)),
                f if f != n => report.count_mismatch.push(entry(key, n, f)),
                _ => {}
            }
        }
        for (key, &f) in &found {
            if !expected.contains_key(key) {
                report.extra.push(entry(key, 0, f));
            }
        }
    }
    Ok(report)
}

pub fn verify_against_paper(max_rank: usize) -> Result<DiffReport> {
    verify_spaces(&catalog(max_rank)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Json,
    Markdown,
}

impl FromStr for TableFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(TableFormat::Json),
            "md" | "markdown" => Ok(TableFormat::Markdown),
            other => Err(Error::UnsupportedFormat(other.to_string())),
        }
    }
}

/// Fixed columns of the almost-symmetric orbit table: `(Nr., M/S¹, k_a, conditions)`.
const TABLE_A: [(u32, &str, &str, &str); 15] = [
    (1, "CP^{q-1}", "u(q-1)", "q≥2"),
    (2, "S^2×S^2", "so(2)", ""),
    (3, "Sp(3)/U(3)×S^2", "su(3)⊕u(1)", ""),
    (4, "Sp(4)/U(4)", "su(4)", ""),
    (5, "SU(8)/S(U(4)×U(4))", "su(4)⊕su(4)", ""),
    (6, "SO(16)/U(8)", "su(8)", ""),
    (7, "G_2(R^{q+1})", "so(q-1)", "q≥2"),
    (8, "S^2×S^1", "{0}", ""),
    (9, "CP^{p-1}×CP^{q-1}", "s(u(p-1)⊕u(q-1)⊕u(1))", "p≥q≥2"),
    (10, "E_6/[Spin(10)×U(1)]/Z_4", "so(10)⊕u(1)", ""),
    (11, "Spin(10)/U(5)", "su(5)⊕u(1)", ""),
    (12, "G_2(R^p)×G_2(R^q)", "so(p-2)⊕so(q-2)⊕so(2)", "p≥q≥2"),
    (13, "G_3(C^6)×CP^1", "s(u(3)⊕u(3))", ""),
    (14, "SO(12)/U(6)×CP^1", "u(6)", ""),
    (15, "E_7/[E_6×U(1)]/Z_3×CP^1", "e6⊕u(1)", ""),
];

/// Row of the orbit table for an almost symmetry, with an optional remark.
fn table_a_row(space: &SymmetricSpace, support: &[usize]) -> (Option<u32>, Option<&'static str>) {
    let principal_b2 = support.len() == 2 && space.rank() == 2;
    match space.class.as_str() {
        "CI" if principal_b2 => (Some(8), Some("sp(2)/u(2) ≅ so(5)/so(3)⊕so(2)")),
        "CI" => (Some(1), None),
        "G" => (
            Some(2),
            Some("two orbits (markings {1} and {2}); whether they are congruent is not decided here"),
        ),
        "FI" => (Some(3), None),
        "EI" => (Some(4), None),
        "EV" => (Some(5), None),
        "EVIII" => (Some(6), None),
        "AI" => (Some(7), None),
        "BDI" if space.parameters[..] == [3, 3] => (Some(7), Some("so(6)/so(3)⊕so(3) ≅ su(4)/so(4)")),
        "BDI" if principal_b2 => (Some(8), None),
        "AIII" => (Some(9), None),
        "EVII" => (Some(10), None),
        "EIII" => (Some(11), None),
        "BDI" => (Some(12), None),
        "EII" => (Some(13), None),
        "EVI" => (Some(14), None),
        "EIX" => (Some(15), None),
        "DIII" => (
            None,
            Some("almost symmetric orbit U(2q)/SU(2)×U(2q−2) with no matching table row"),
        ),
        _ => (None, Some("unexpected finding")),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableInstance {
    pub space: String,
    pub support: Vec<usize>,
    pub c: Vec<u8>,
    pub certification: crate::involutions::Certification,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableARow {
    pub nr: Option<u32>,
    pub quotient: Option<String>,
    pub g: String,
    pub k: String,
    pub k_a: Option<String>,
    pub conditions: String,
    pub family: String,
    pub instances: Vec<TableInstance>,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableA {
    pub schema_version: u32,
    pub rows: Vec<TableARow>,
}

/// Groups the almost symmetries of `spaces` into table rows, one per
/// (row number, family).
pub fn table_a(spaces: &[SymmetricSpace], verdicts: &[Verdict]) -> TableA {
    let mut rows: BTreeMap<(u32, String), TableARow> = BTreeMap::new();
    for (space, verdict) in spaces.iter().zip(verdicts) {
        for f in verdict.almost_symmetries() {
            let support = f.support.nodes();
            let (nr, note) = table_a_row(space, &support);
            let fixed = nr.and_then(|n| TABLE_A.iter().find(|r| r.0 == n));
            // Family rows use symbolic names; isomorphic duplicates and the rank-2 principal row are single spaces.
            let (g, k) = if nr == Some(8) || (nr == Some(7) && space.class == "BDI") {
                (space.g_name.clone(), space.k_name.clone())
            } else {
                space.family_names()
            };
            let row = rows
                .entry((nr.unwrap_or(u32::MAX), space.class.clone()))
                .or_insert_with(|| TableARow {
                    nr,
                    quotient: fixed.map(|r| r.1.to_string()),
                    g,
                    k,
                    k_a: fixed.map(|r| r.2.to_string()),
                    conditions: fixed.map_or(String::new(), |r| r.3.to_string()),
                    family: space.class.clone(),
                    instances: Vec::new(),
                    note: note.map(str::to_string),
                });
            row.instances.push(TableInstance {
                space: f.space.clone(),
                support,
                c: f.c.bits().to_vec(),
                certification: f.certification,
            });
        }
    }
    TableA {
        schema_version: SCHEMA_VERSION,
        rows: rows.into_values().collect(),
    }
}

pub fn emit_table_a(table: &TableA, format: TableFormat) -> String {
    match format {
        TableFormat::Json => serde_json::to_string_pretty(table).expect("table serializes") + "\n",
        TableFormat::Markdown => {
            let mut out = String::new();
            out.push_str("| Nr. | M/S¹ | g | k | k_a | Conditions | Family | Markings | Note |\n");
            out.push_str("|---|---|---|---|---|---|---|---|---|\n");
            for r in &table.rows {
                let mut markings: Vec<String> = r
                    .instances
                    .iter()
                    .map(|i| {
                        let s: Vec<String> = i.support.iter().map(|n| n.to_string()).collect();
                        format!("{{{}}}", s.join(","))
                    })
                    .collect();
                markings.sort();
                markings.dedup();
                let _ = writeln!(
                    out,
                    "| {} | {} | {} | {} | {} | {} | {} | {} | {} |",
                    r.nr.map_or("–".to_string(), |n| n.to_string()),
                    r.quotient.as_deref().unwrap_or("–"),
                    r.g,
                    r.k,
                    r.k_a.as_deref().unwrap_or("–"),
                    r.conditions,
                    r.family,
                    markings.join(" "),
                    r.note.as_deref().unwrap_or(""),
                );
            }
            out
        }
    }
}

/// One row of the cohomogeneity-three table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableBCheck {
    pub nr: u32,
    pub orbit: String,
    pub representation: String,
    /// Value of the family parameter `n`, where there is one.
    pub n: Option<u32>,
    /// `dim H − dim H_principal`.
    pub orbit_dim: u64,
    pub representation_dim: u64,
    pub pass: bool,
}

fn so_dim(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

/// Checks `dim orbit = dim representation − 3` for the cohomogeneity-three rows,
/// the Stiefel row at `n = 3..=max_n`.
pub fn verify_table_b(max_n: u32) -> Vec<TableBCheck> {
    let mut out = Vec::new();
    let check = |nr, orbit: &str, rep: &str, n, group_dim: u64, stabilizer_dim: u64, rep_dim: u64| {
        let orbit_dim = group_dim - stabilizer_dim;
        TableBCheck {
            nr,
            orbit: orbit.to_string(),
            representation: rep.to_string(),
            n,
            orbit_dim,
            representation_dim: rep_dim,
            pass: orbit_dim + 3 == rep_dim,
        }
    };
    for n in 3..=max_n.max(3) {
        let m = n as u64;
        // SO(n) on pairs of vectors: principal stabilizer SO(n−2).
        out.push(check(16, "V_2(R^n)", "(SO(n), R^n⊕R^n)", Some(n), so_dim(m), so_dim(m - 2), 2 * m));
    }
    out.push(check(17, "U(2)", "(U(2), C^2⊕R^3)", None, 4, 0, 4 + 3));
    out.push(check(18, "T^2×S^3", "(U(1)×SU(2)×U(1), C^2⊕C^2)", None, 1 + 3 + 1, 0, 4 + 4));
    out
}

/// Full sweep report.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub spaces: Vec<SpaceReport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpaceReport {
    pub label: String,
    pub parameters: Vec<u32>,
    pub verdict: Verdict,
}

pub fn report(verdicts: Vec<Verdict>) -> Report {
    Report {
        schema_version: SCHEMA_VERSION,
        spaces: verdicts
            .into_iter()
            .map(|v| SpaceReport {
                label: v.space.clone(),
                parameters: v.parameters.clone(),
                verdict: v,
            })
            .collect(),
    }
}

pub fn classify_all(spaces: &[SymmetricSpace]) -> Result<Vec<Verdict>> {
    spaces.iter().map(classify_space).collect()
}
