//! Analysis algorithms for textual software-project artifacts.
//!
//! This crate carries the pure part of the toolkit: tokenization, token-based
//! clone detection with gapped clones and clone coverage, word and character
//! n-gram models, LDA topic modelling, rule-based POS tagging with term,
//! entity-relationship and passive-voice extraction, qualitative-coding
//! analytics and the geometry of the report visualizations.
//!
//! Everything here works on in-memory data and only needs `alloc`. File
//! system ingestion, regular-expression filters, JSON/SVG/HTML formats and the
//! command line live in the `textproj` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod clones;
pub mod coding;
pub mod corpus;
pub mod layout;
pub mod ngram;
pub mod pos;
pub mod stopwords;
pub mod topics;

mod editdist;

pub use corpus::{Corpus, Document, Link, SourceClass, TokenizedCorpus, TokenizerConfig};
