//! Qualitative coding: codebooks, coded segments, axial graphs, agreement
//! between coders and saturation.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::corpus::Corpus;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Code {
    pub id: String,
    pub name: String,
    pub rationale: String,
    /// Category names from the root down.
    #[serde(default)]
    pub category_path: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Category {
    pub name: String,
    #[serde(default)]
    pub parent: Option<String>,
}

/// A code applied to the byte range `start..end` of a document.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CodedSegment {
    pub document_id: String,
    pub start: usize,
    pub end: usize,
    pub code_id: String,
    pub coder_id: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxialEdge {
    pub from: String,
    pub to: String,
    pub relation: String,
    /// Number of supporting statements.
    pub weight: u32,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Codebook {
    pub codes: Vec<Code>,
    pub categories: Vec<Category>,
    pub segments: Vec<CodedSegment>,
    pub axial_edges: Vec<AxialEdge>,
    pub core_category: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    DuplicateCodeId { code_id: String },
    EmptyRationale { code_id: String },
    UnknownCategory { code_id: String, category: String },
    DanglingCode { segment: usize, code_id: String },
    UnknownDocument { segment: usize, document_id: String },
    SpanOutOfBounds { segment: usize, document_id: String, start: usize, end: usize, len: usize },
    DanglingEdge { edge: usize, code_id: String },
    ZeroWeightEdge { edge: usize },
    UnknownCoreCategory { name: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DuplicateCodeId { code_id } => write!(f, "duplicate code id `{code_id}`"),
            Violation::EmptyRationale { code_id } => write!(f, "code `{code_id}` has no rationale"),
            Violation::UnknownCategory { code_id, category } => {
                write!(f, "code `{code_id}` names unknown category `{category}`")
            }
            Violation::DanglingCode { segment, code_id } => {
                write!(f, "segment {segment} references missing code `{code_id}`")
            }
            Violation::UnknownDocument { segment, document_id } => {
                write!(f, "segment {segment} references missing document `{document_id}`")
            }
            Violation::SpanOutOfBounds { segment, document_id, start, end, len } => write!(
                f,
                "segment {segment} span {start}..{end} outside document `{document_id}` of length {len}"
            ),
            Violation::DanglingEdge { edge, code_id } => {
                write!(f, "axial edge {edge} references missing code `{code_id}`")
            }
            Violation::ZeroWeightEdge { edge } => write!(f, "axial edge {edge} has weight 0"),
            Violation::UnknownCoreCategory { name } => {
                write!(f, "core category `{name}` is neither a code nor a category")
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks internal references, and segment spans against `corpus` when
/// one is given. Categories are only checked when the codebook lists any.
pub fn validate_codebook(codebook: &Codebook, corpus: Option<&Corpus>) -> ValidationReport {
    let mut v = Vec::new();
    let mut ids = BTreeSet::new();
    let categories: BTreeSet<&str> = codebook.categories.iter().map(|c| c.name.as_str()).collect();
    for c in &codebook.codes {
        if !ids.insert(c.id.as_str()) {
            v.push(Violation::DuplicateCodeId { code_id: c.id.clone() });
        }
        if c.rationale.trim().is_empty() {
            v.push(Violation::EmptyRationale { code_id: c.id.clone() });
        }
        if !categories.is_empty() {
            for cat in c.category_path.iter().filter(|p| !categories.contains(p.as_str())) {
                v.push(Violation::UnknownCategory {
                    code_id: c.id.clone(),
                    category: cat.clone(),
                });
            }
        }
    }
    for (i, s) in codebook.segments.iter().enumerate() {
        if !ids.contains(s.code_id.as_str()) {
            v.push(Violation::DanglingCode {
                segment: i,
                code_id: s.code_id.clone(),
            });
        }
        if let Some(corpus) = corpus {
            match corpus.document(&s.document_id) {
                None => v.push(Violation::UnknownDocument {
                    segment: i,
                    document_id: s.document_id.clone(),
                }),
                Some(d) => {
                    let len = d.text.len();
                    if s.start >= s.end
                        || s.end > len
                        || !d.text.is_char_boundary(s.start)
                        || !d.text.is_char_boundary(s.end)
                    {
                        v.push(Violation::SpanOutOfBounds {
                            segment: i,
                            document_id: s.document_id.clone(),
                            start: s.start,
                            end: s.end,
                            len,
                        });
                    }
                }
            }
        } else if s.start >= s.end {
            v.push(Violation::SpanOutOfBounds {
                segment: i,
                document_id: s.document_id.clone(),
                start: s.start,
                end: s.end,
                len: 0,
            });
        }
    }
    for (i, e) in codebook.axial_edges.iter().enumerate() {
        for end in [&e.from, &e.to] {
            if !ids.contains(end.as_str()) {
                v.push(Violation::DanglingEdge {
                    edge: i,
                    code_id: end.clone(),
                });
            }
        }
        if e.weight == 0 {
            v.push(Violation::ZeroWeightEdge { edge: i });
        }
    }
    if let Some(core) = &codebook.core_category {
        if !ids.contains(core.as_str()) && !categories.contains(core.as_str()) {
            v.push(Violation::UnknownCoreCategory { name: core.clone() });
        }
    }
    ValidationReport { violations: v }
}

/// Segments per code id; unused codes count zero. Segments naming unknown
/// codes are counted under their id as well.
pub fn occurrence_counts(codebook: &Codebook) -> BTreeMap<String, usize> {
    let mut counts: BTreeMap<String, usize> =
        codebook.codes.iter().map(|c| (c.id.clone(), 0)).collect();
    for s in &codebook.segments {
        *counts.entry(s.code_id.clone()).or_default() += 1;
    }
    counts
}

/// Segments per category, each segment counted for every category on its
/// code's path.
pub fn category_counts(codebook: &Codebook) -> BTreeMap<String, usize> {
    let paths: BTreeMap<&str, &[String]> = codebook
        .codes
        .iter()
        .map(|c| (c.id.as_str(), c.category_path.as_slice()))
        .collect();
    let mut out = BTreeMap::new();
    for s in &codebook.segments {
        for cat in paths.get(s.code_id.as_str()).copied().unwrap_or_default() {
            *out.entry(cat.clone()).or_default() += 1;
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxialNode {
    pub code_id: String,
    pub name: String,
    pub occurrences: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxialGraph {
    pub nodes: Vec<AxialNode>,
    pub edges: Vec<AxialEdge>,
    pub core_category: Option<String>,
}

/// Nodes for every code with its occurrence count, plus the axial edges.
pub fn axial_graph(codebook: &Codebook) -> AxialGraph {
    let counts = occurrence_counts(codebook);
    AxialGraph {
        nodes: codebook
            .codes
            .iter()
            .map(|c| AxialNode {
                code_id: c.id.clone(),
                name: c.name.clone(),
                occurrences: counts[&c.id],
            })
            .collect(),
        edges: codebook.axial_edges.clone(),
        core_category: codebook.core_category.clone(),
    }
}

/// Keeps nodes with at least `min_occurrence` occurrences and the edges
/// between surviving nodes.
pub fn condense_graph(graph: &AxialGraph, min_occurrence: usize) -> AxialGraph {
    let nodes: Vec<AxialNode> = graph
        .nodes
        .iter()
        .filter(|n| n.occurrences >= min_occurrence)
        .cloned()
        .collect();
    let keep: BTreeSet<&str> = nodes.iter().map(|n| n.code_id.as_str()).collect();
    let edges = graph
        .edges
        .iter()
        .filter(|e| keep.contains(e.from.as_str()) && keep.contains(e.to.as_str()))
        .cloned()
        .collect();
    AxialGraph {
        edges,
        core_category: graph.core_category.clone(),
        nodes,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodingError {
    #[error("the coders share no coded units")]
    NoSharedUnits,
    #[error("coder `{coder}` assigned several codes to unit `{unit}`")]
    MultipleCodes { coder: String, unit: String },
    #[error("batch size must be at least 1")]
    ZeroBatch,
}

/// How segments are grouped into units for agreement.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AgreementUnit {
    /// One unit per document.
    #[default]
    Document,
    /// One unit per distinct (document, span).
    Segment,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Agreement {
    pub units: usize,
    pub percent_agreement: f64,
    pub expected_agreement: f64,
    pub kappa: f64,
    /// Set when expected agreement is 1: both coders used one identical
    /// code throughout, so kappa is undefined and reported as 1.
    pub perfect_special_case: bool,
}

/// Cohen's kappa over paired labels.
pub fn cohen_kappa<A: Ord + PartialEq<B>, B: Ord>(pairs: &[(A, B)]) -> Result<Agreement, CodingError> {
    if pairs.is_empty() {
        return Err(CodingError::NoSharedUnits);
    }
    let n = pairs.len() as f64;
    let agree = pairs.iter().filter(|(a, b)| a == b).count() as f64;
    let mut ma: BTreeMap<&A, usize> = BTreeMap::new();
    let mut mb: BTreeMap<&B, usize> = BTreeMap::new();
    for (a, b) in pairs {
        *ma.entry(a).or_default() += 1;
        *mb.entry(b).or_default() += 1;
    }
    let mut pe = 0.0;
    for (a, &ca) in &ma {
        for (b, &cb) in &mb {
            if *a == *b {
                pe += (ca as f64 / n) * (cb as f64 / n);
            }
        }
    }
    let po = agree / n;
    let special = (1.0 - pe).abs() < 1e-12;
    let kappa = if special { 1.0 } else { (po - pe) / (1.0 - pe) };
    Ok(Agreement {
        units: pairs.len(),
        percent_agreement: po,
        expected_agreement: pe,
        kappa,
        perfect_special_case: special,
    })
}

fn unit_key(s: &CodedSegment, unit: AgreementUnit) -> String {
    match unit {
        AgreementUnit::Document => s.document_id.clone(),
        AgreementUnit::Segment => alloc::format!("{}@{}..{}", s.document_id, s.start, s.end),
    }
}

fn codes_by_unit<'a>(
    segments: &'a [CodedSegment],
    coder: &str,
    unit: AgreementUnit,
) -> BTreeMap<String, BTreeSet<&'a str>> {
    let mut out: BTreeMap<String, BTreeSet<&str>> = BTreeMap::new();
    for s in segments.iter().filter(|s| s.coder_id == coder) {
        out.entry(unit_key(s, unit)).or_default().insert(&s.code_id);
    }
    out
}

/// Agreement of two coders on the units both coded, one code per unit.
pub fn agreement(
    segments: &[CodedSegment],
    coder_a: &str,
    coder_b: &str,
    unit: AgreementUnit,
) -> Result<Agreement, CodingError> {
    let a = codes_by_unit(segments, coder_a, unit);
    let b = codes_by_unit(segments, coder_b, unit);
    let mut pairs = Vec::new();
    for (u, ca) in &a {
        let Some(cb) = b.get(u) else { continue };
        for (coder, set) in [(coder_a, ca), (coder_b, cb)] {
            if set.len() > 1 {
                return Err(CodingError::MultipleCodes {
                    coder: coder.to_string(),
                    unit: u.clone(),
                });
            }
        }
        pairs.push((*ca.first().unwrap(), *cb.first().unwrap()));
    }
    cohen_kappa(&pairs)
}

/// Per-code agreement treating each code as a present/absent decision on
/// every shared unit. Allows several codes per unit.
pub fn agreement_per_code(
    segments: &[CodedSegment],
    coder_a: &str,
    coder_b: &str,
    unit: AgreementUnit,
) -> Result<BTreeMap<String, Agreement>, CodingError> {
    let a = codes_by_unit(segments, coder_a, unit);
    let b = codes_by_unit(segments, coder_b, unit);
    let shared: Vec<(&BTreeSet<&str>, &BTreeSet<&str>)> =
        a.iter().filter_map(|(u, ca)| b.get(u).map(|cb| (ca, cb))).collect();
    if shared.is_empty() {
        return Err(CodingError::NoSharedUnits);
    }
    let codes: BTreeSet<&str> = shared.iter().flat_map(|(x, y)| x.iter().chain(y.iter())).copied().collect();
    let mut out = BTreeMap::new();
    for code in codes {
        let pairs: Vec<(bool, bool)> = shared
            .iter()
            .map(|(x, y)| (x.contains(code), y.contains(code)))
            .collect();
        out.insert(code.to_string(), cohen_kappa(&pairs)?);
    }
    Ok(out)
}

/// Number of codes first seen in each batch of `batch` consecutive
/// segments.
pub fn saturation_curve(segments: &[CodedSegment], batch: usize) -> Result<Vec<usize>, CodingError> {
    if batch == 0 {
        return Err(CodingError::ZeroBatch);
    }
    let mut seen = BTreeSet::new();
    Ok(segments
        .chunks(batch)
        .map(|c| c.iter().filter(|s| seen.insert(s.code_id.as_str())).count())
        .collect())
}

/// Index of the first batch after which no later batch adds a code, if
/// the curve ends in at least one empty batch.
pub fn saturation_point(curve: &[usize]) -> Option<usize> {
    let last_new = curve.iter().rposition(|&n| n > 0)?;
    (last_new + 1 < curve.len()).then_some(last_new + 1)
}
