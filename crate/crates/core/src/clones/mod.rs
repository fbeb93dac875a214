//! Token-based clone detection over natural-language text.
//!
//! Exact clones are the maximal repeats of the normalized token sequence of a
//! corpus, found with a suffix array. Gapped clones fuse exact clones whose
//! instances are separated by a few differing lines, then grow them over
//! similar neighbouring lines, as long as every instance stays within
//! `max_gap` line edits of the first instance.

mod diff;
mod exact;
mod gapped;
mod metrics;
mod suffix;

use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::corpus::TokenizedCorpus;

pub use diff::{diff_instances, CloneDiff, InstanceDiff, LineEdit};
pub use metrics::{clone_coverage, clone_stats, document_coverage, CloneStats, DocumentCloneStats};

pub const DEFAULT_MIN_LENGTH: usize = 20;
pub const DEFAULT_MAX_GAP: usize = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct CloneConfig {
    pub min_length: usize,
    pub max_gap: usize,
}

impl Default for CloneConfig {
    fn default() -> Self {
        CloneConfig {
            min_length: DEFAULT_MIN_LENGTH,
            max_gap: DEFAULT_MAX_GAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CloneError {
    #[error("min_length must be at least 2, got {0}")]
    MinLengthTooSmall(usize),
    #[error("clone coverage is undefined: no analyzable lines")]
    UndefinedCoverage,
    #[error("unknown document `{0}`")]
    UnknownDocument(String),
}

/// One occurrence of a clone.
///
/// `start_token..end_token` indexes the document's token stream (half-open);
/// `start_line..=end_line` are the lines it touches.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CloneInstance {
    pub document_id: String,
    pub start_token: usize,
    pub end_token: usize,
    pub start_line: u32,
    pub end_line: u32,
}

impl CloneInstance {
    pub fn len_tokens(&self) -> usize {
        self.end_token - self.start_token
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CloneGroup {
    pub id: usize,
    pub instances: Vec<CloneInstance>,
    /// Token length of the first instance.
    pub length_tokens: usize,
    /// Largest line edit distance of any instance from the first one.
    pub gap_edits: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) struct Span {
    pub doc: usize,
    pub start: usize,
    pub end: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Group {
    pub spans: Vec<Span>,
    pub gap_edits: usize,
}

fn check_min_length(min_length: usize) -> Result<(), CloneError> {
    if min_length < 2 {
        Err(CloneError::MinLengthTooSmall(min_length))
    } else {
        Ok(())
    }
}

/// All maximal repeats of at least `min_length` tokens, every occurrence
/// reported. Sorted by length (descending), then by first instance.
pub fn detect_exact_clones(
    corpus: &TokenizedCorpus,
    min_length: usize,
) -> Result<Vec<CloneGroup>, CloneError> {
    check_min_length(min_length)?;
    let enc = exact::Encoded::new(corpus);
    let groups = exact::maximal_repeats(&enc, min_length);
    Ok(finish(corpus, groups))
}

/// Exact clones fused across gaps of at most `max_gap` differing lines.
/// With `max_gap == 0` this is [`detect_exact_clones`].
pub fn detect_gapped_clones(
    corpus: &TokenizedCorpus,
    min_length: usize,
    max_gap: usize,
) -> Result<Vec<CloneGroup>, CloneError> {
    check_min_length(min_length)?;
    let enc = exact::Encoded::new(corpus);
    let mut groups = exact::maximal_repeats(&enc, min_length);
    if max_gap > 0 {
        groups = gapped::fuse(&gapped::Ctx::new(corpus, &enc), groups, max_gap);
    }
    Ok(finish(corpus, groups))
}

pub fn detect(corpus: &TokenizedCorpus, config: &CloneConfig) -> Result<Vec<CloneGroup>, CloneError> {
    detect_gapped_clones(corpus, config.min_length, config.max_gap)
}

fn finish(corpus: &TokenizedCorpus, groups: Vec<Group>) -> Vec<CloneGroup> {
    let mut out: Vec<CloneGroup> = groups
        .into_iter()
        .map(|g| {
            let mut instances: Vec<CloneInstance> = g
                .spans
                .iter()
                .map(|s| {
                    let doc = &corpus.documents[s.doc];
                    CloneInstance {
                        document_id: doc.id.clone(),
                        start_token: s.start,
                        end_token: s.end,
                        start_line: doc.tokens[s.start].line,
                        end_line: doc.tokens[s.end - 1].line,
                    }
                })
                .collect();
            instances.sort();
            CloneGroup {
                id: 0,
                length_tokens: instances[0].len_tokens(),
                instances,
                gap_edits: g.gap_edits,
            }
        })
        .collect();
    out.sort_by(|a, b| {
        b.length_tokens
            .cmp(&a.length_tokens)
            .then_with(|| a.instances[0].cmp(&b.instances[0]))
            .then_with(|| a.instances.cmp(&b.instances))
    });
    for (i, g) in out.iter_mut().enumerate() {
        g.id = i + 1;
    }
    out
}
