//! Regular-expression filters that mark text for analyses to skip.

use std::path::Path;

use regex::Regex;
use textproj_core::corpus::{merge_regions, Corpus, Document, IgnoredRegion, TokenizedCorpus, TokenizerConfig};

use crate::error::{Error, Result};
use crate::io::read_text;

#[derive(Debug, Clone, Default)]
pub struct IgnorePatterns {
    patterns: Vec<Regex>,
}

impl IgnorePatterns {
    pub fn compile<S: AsRef<str>>(patterns: &[S]) -> Result<Self> {
        let patterns = patterns
            .iter()
            .map(|p| {
                Regex::new(p.as_ref()).map_err(|e| Error::InvalidPattern {
                    pattern: p.as_ref().to_string(),
                    message: e.to_string(),
                })
            })
            .collect::<Result<_>>()?;
        Ok(IgnorePatterns { patterns })
    }

    /// One pattern per line; blank lines and lines starting with `#` are
    /// skipped.
    pub fn read_file(path: &Path) -> Result<Self> {
        let text = read_text(path)?;
        let lines: Vec<&str> = text
            .lines()
            .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
            .collect();
        Self::compile(&lines)
    }

    pub fn sources(&self) -> Vec<String> {
        self.patterns.iter().map(|r| r.as_str().to_string()).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }
}

/// Every non-empty match of every pattern as a region, merged.
pub fn apply_ignore_patterns(doc: &Document, patterns: &IgnorePatterns) -> Vec<IgnoredRegion> {
    let regions = patterns
        .patterns
        .iter()
        .flat_map(|re| {
            re.find_iter(&doc.text).filter(|m| m.end() > m.start()).map(|m| IgnoredRegion {
                document_id: doc.id.clone(),
                start: m.start(),
                end: m.end(),
                reason: re.as_str().to_string(),
            })
        })
        .collect();
    merge_regions(regions)
}

pub fn ignored_regions(corpus: &Corpus, patterns: &IgnorePatterns) -> Vec<IgnoredRegion> {
    merge_regions(
        corpus
            .documents()
            .iter()
            .flat_map(|d| apply_ignore_patterns(d, patterns))
            .collect(),
    )
}

/// Tokenizes the corpus with the pattern regions masked out.
pub fn tokenize_corpus(corpus: &Corpus, config: TokenizerConfig, patterns: &IgnorePatterns) -> TokenizedCorpus {
    TokenizedCorpus::new(corpus, config, &ignored_regions(corpus, patterns))
}
