use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::{CloneError, CloneGroup};
use crate::corpus::{TokenizedCorpus, TokenizedDocument};

/// Lines of `doc` touched by any clone instance.
fn cloned_lines(doc: &TokenizedDocument, groups: &[CloneGroup]) -> BTreeSet<u32> {
    let mut lines = BTreeSet::new();
    for inst in groups
        .iter()
        .flat_map(|g| &g.instances)
        .filter(|i| i.document_id == doc.id)
    {
        for t in &doc.tokens[inst.start_token..inst.end_token] {
            lines.insert(t.line);
        }
    }
    lines
}

fn counts(doc: &TokenizedDocument, groups: &[CloneGroup]) -> (usize, usize) {
    let total = doc.analyzable_lines();
    let cloned = cloned_lines(doc, groups);
    (cloned.intersection(&total).count(), total.len())
}

fn ratio(num: usize, den: usize) -> Result<f64, CloneError> {
    if den == 0 {
        Err(CloneError::UndefinedCoverage)
    } else {
        Ok(num as f64 / den as f64)
    }
}

/// Fraction of analyzable lines of the whole corpus covered by a clone.
/// Numerators and denominators are summed over documents.
pub fn clone_coverage(corpus: &TokenizedCorpus, groups: &[CloneGroup]) -> Result<f64, CloneError> {
    let (num, den) = corpus
        .documents
        .iter()
        .map(|d| counts(d, groups))
        .fold((0, 0), |(a, b), (c, d)| (a + c, b + d));
    ratio(num, den)
}

pub fn document_coverage(
    corpus: &TokenizedCorpus,
    document_id: &str,
    groups: &[CloneGroup],
) -> Result<f64, CloneError> {
    let doc = corpus
        .document(document_id)
        .ok_or_else(|| CloneError::UnknownDocument(document_id.into()))?;
    let (num, den) = counts(doc, groups);
    ratio(num, den)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DocumentCloneStats {
    pub document_id: String,
    pub clone_coverage: f64,
    /// Groups with at least one instance in this document.
    pub clone_group_count: usize,
    /// Instances located in this document.
    pub clone_instance_count: usize,
    pub cloned_lines: usize,
    pub total_lines: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CloneStats {
    pub documents: Vec<DocumentCloneStats>,
    pub clone_coverage: f64,
    pub clone_group_count: usize,
    pub clone_instance_count: usize,
    pub cloned_lines: usize,
    pub total_lines: usize,
}

/// Per-document table plus corpus totals. Documents without analyzable
/// lines report coverage 0.
pub fn clone_stats(corpus: &TokenizedCorpus, groups: &[CloneGroup]) -> CloneStats {
    let mut per_doc: BTreeMap<&str, (BTreeSet<usize>, usize)> = BTreeMap::new();
    for g in groups {
        for inst in &g.instances {
            let e = per_doc.entry(inst.document_id.as_str()).or_default();
            e.0.insert(g.id);
            e.1 += 1;
        }
    }
    let documents: Vec<DocumentCloneStats> = corpus
        .documents
        .iter()
        .map(|d| {
            let (cloned, total) = counts(d, groups);
            let (gs, inst) = per_doc
                .get(d.id.as_str())
                .map(|(g, i)| (g.len(), *i))
                .unwrap_or((0, 0));
            DocumentCloneStats {
                document_id: d.id.clone(),
                clone_coverage: ratio(cloned, total).unwrap_or(0.0),
                clone_group_count: gs,
                clone_instance_count: inst,
                cloned_lines: cloned,
                total_lines: total,
            }
        })
        .collect();
    let cloned_lines = documents.iter().map(|d| d.cloned_lines).sum();
    let total_lines = documents.iter().map(|d| d.total_lines).sum();
    CloneStats {
        clone_coverage: ratio(cloned_lines, total_lines).unwrap_or(0.0),
        clone_group_count: groups.len(),
        clone_instance_count: groups.iter().map(|g| g.instances.len()).sum(),
        cloned_lines,
        total_lines,
        documents,
    }
}
