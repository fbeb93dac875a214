//! Geometry of the report visualizations. Rendering to SVG happens in the
//! `textproj` crate; everything here is plain data.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::corpus::TokenizedCorpus;
use crate::ngram::NGramError;

mod phrasenet;
mod textflow;
mod treemap;
mod wordcloud;

pub use phrasenet::{phrase_net, PhraseEdge, PhraseNet, PhraseNode};
pub use textflow::{text_flow, FlowPoint, Stream, TextFlowLayout};
pub use treemap::{treemap, Palette, Rgb, TreemapItem, TreemapLayout, TreemapRect};
pub use wordcloud::{word_cloud, PlacedWord, WordCloudConfig, WordCloudLayout};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LayoutError {
    #[error("max_words must be at least 1")]
    ZeroWords,
    #[error("no words left to place")]
    NoWords,
    #[error("canvas {width}x{height} cannot hold the word `{word}`")]
    CanvasTooSmall { word: String, width: f64, height: f64 },
    #[error("canvas dimensions must be positive")]
    BadCanvas,
    #[error("font sizes must satisfy 0 < min <= max")]
    BadFontRange,
    #[error("connector word is empty")]
    EmptyConnector,
    #[error("treemap needs at least one item")]
    EmptyTreemap,
    #[error("item `{0}` has a non-positive size")]
    NonPositiveSize(String),
    #[error("item `{0}` has a colour value outside 0..=1")]
    ColorOutOfRange(String),
    #[error("text flow needs at least one term")]
    NoTerms,
    #[error("text flow needs at least two versions, found {0}")]
    TooFewVersions(usize),
    #[error(transparent)]
    Series(#[from] NGramError),
}

/// Axis-aligned rectangle with its top-left corner at `(x, y)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Rect {
    pub x: f64,
    pub y: f64,
    pub width: f64,
    pub height: f64,
}

impl Rect {
    pub fn area(&self) -> f64 {
        self.width * self.height
    }

    /// Area shared with `other`; touching edges share none.
    pub fn overlap(&self, other: &Rect) -> f64 {
        let w = (self.x + self.width).min(other.x + other.width) - self.x.max(other.x);
        let h = (self.y + self.height).min(other.y + other.height) - self.y.max(other.y);
        if w > 0.0 && h > 0.0 {
            w * h
        } else {
            0.0
        }
    }

    pub fn intersects(&self, other: &Rect) -> bool {
        self.overlap(other) > 0.0
    }

    pub fn within(&self, width: f64, height: f64) -> bool {
        self.x >= 0.0 && self.y >= 0.0 && self.x + self.width <= width && self.y + self.height <= height
    }
}

/// Counts of lowercase word tokens that contain a letter, over active
/// tokens of every document.
pub fn word_frequencies(corpus: &TokenizedCorpus) -> BTreeMap<String, usize> {
    let mut out = BTreeMap::new();
    for d in &corpus.documents {
        for t in d.active_tokens().filter(|t| t.is_word()) {
            if t.normalized.chars().any(char::is_alphabetic) {
                *out.entry(t.normalized.to_lowercase()).or_default() += 1;
            }
        }
    }
    out
}

/// The bundled English stop words as an owned set.
pub fn default_stopwords() -> BTreeSet<String> {
    crate::stopwords::ENGLISH.iter().map(|&w| String::from(w)).collect()
}
