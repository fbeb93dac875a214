use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::LayoutError;
use crate::corpus::{Corpus, TokenizedCorpus};
use crate::ngram::frequency_series;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FlowPoint {
    pub version: String,
    pub frequency: f64,
    /// `frequency * scale`.
    pub thickness: f64,
    /// Lower edge of the stream; the stack is centred on zero.
    pub offset: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Stream {
    pub term: String,
    pub points: Vec<FlowPoint>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TextFlowLayout {
    pub versions: Vec<String>,
    /// In the order the terms were given, stacked bottom to top.
    pub streams: Vec<Stream>,
    /// Largest stack height over all versions.
    pub max_total: f64,
}

/// One stream per term whose thickness at each version is the term's
/// relative frequency times `scale`. Streams are stacked symmetrically
/// around a centre line.
pub fn text_flow(
    corpus: &Corpus,
    tokenized: &TokenizedCorpus,
    terms: &[&str],
    scale: f64,
) -> Result<TextFlowLayout, LayoutError> {
    if terms.is_empty() {
        return Err(LayoutError::NoTerms);
    }
    let mut streams = Vec::with_capacity(terms.len());
    let mut versions: Vec<String> = Vec::new();
    for &term in terms {
        let series = frequency_series(corpus, tokenized, term)?;
        if versions.is_empty() {
            versions = series.iter().map(|p| p.version.clone()).collect();
            if versions.len() < 2 {
                return Err(LayoutError::TooFewVersions(versions.len()));
            }
        }
        streams.push(Stream {
            term: String::from(term),
            points: series
                .into_iter()
                .map(|p| FlowPoint {
                    version: p.version,
                    frequency: p.frequency,
                    thickness: p.frequency * scale,
                    offset: 0.0,
                })
                .collect(),
        });
    }
    let mut max_total: f64 = 0.0;
    for v in 0..versions.len() {
        let total: f64 = streams.iter().map(|s| s.points[v].thickness).sum();
        max_total = max_total.max(total);
        let mut y = -total / 2.0;
        for s in &mut streams {
            s.points[v].offset = y;
            y += s.points[v].thickness;
        }
    }
    Ok(TextFlowLayout { versions, streams, max_total })
}
