//! Documents, links, tokenization and ignored regions.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Classification of textual project data by the activity that produced it.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SourceClass {
    Contracting,
    PlanningControl,
    Reporting,
    ConfigChangeMgmt,
    Evaluation,
    #[default]
    RequirementsAnalysis,
    SoftwareDesign,
    SoftwareElements,
    Logistics,
}

impl SourceClass {
    pub const ALL: [SourceClass; 9] = [
        SourceClass::Contracting,
        SourceClass::PlanningControl,
        SourceClass::Reporting,
        SourceClass::ConfigChangeMgmt,
        SourceClass::Evaluation,
        SourceClass::RequirementsAnalysis,
        SourceClass::SoftwareDesign,
        SourceClass::SoftwareElements,
        SourceClass::Logistics,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SourceClass::Contracting => "contracting",
            SourceClass::PlanningControl => "planning_control",
            SourceClass::Reporting => "reporting",
            SourceClass::ConfigChangeMgmt => "config_change_mgmt",
            SourceClass::Evaluation => "evaluation",
            SourceClass::RequirementsAnalysis => "requirements_analysis",
            SourceClass::SoftwareDesign => "software_design",
            SourceClass::SoftwareElements => "software_elements",
            SourceClass::Logistics => "logistics",
        }
    }
}

impl fmt::Display for SourceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SourceClass {
    type Err = CorpusError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SourceClass::ALL
            .iter()
            .copied()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| CorpusError::UnknownSourceClass(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Document {
    pub id: String,
    pub path: String,
    pub source_class: SourceClass,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub version_label: Option<String>,
    pub text: String,
    #[serde(default)]
    pub metadata: BTreeMap<String, String>,
}

impl Document {
    /// A document whose path equals its id and which carries no metadata.
    pub fn new(id: impl Into<String>, text: impl Into<String>) -> Self {
        let id = id.into();
        Document {
            path: id.clone(),
            id,
            source_class: SourceClass::default(),
            version_label: None,
            text: text.into(),
            metadata: BTreeMap::new(),
        }
    }

    pub fn with_version(mut self, label: impl Into<String>) -> Self {
        self.version_label = Some(label.into());
        self
    }
}

/// A typed reference between two documents of the same corpus.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Link {
    #[serde(rename = "from")]
    pub from_id: String,
    #[serde(rename = "to")]
    pub to_id: String,
    pub kind: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorpusError {
    #[error("duplicate document id `{0}`")]
    DuplicateId(String),
    #[error("document `{0}` has empty text")]
    EmptyText(String),
    #[error("link endpoint `{0}` does not resolve to a document")]
    DanglingLink(String),
    #[error("unknown source class `{0}`")]
    UnknownSourceClass(String),
    #[error("unknown document `{0}`")]
    UnknownDocument(String),
    #[error("document `{0}` has no version label")]
    MissingVersion(String),
}

/// An immutable set of documents ordered by id, plus their links.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CorpusData", into = "CorpusData")]
pub struct Corpus {
    documents: Vec<Document>,
    links: Vec<Link>,
}

#[derive(Serialize, Deserialize)]
struct CorpusData {
    documents: Vec<Document>,
    #[serde(default)]
    links: Vec<Link>,
}

impl TryFrom<CorpusData> for Corpus {
    type Error = CorpusError;

    fn try_from(data: CorpusData) -> Result<Self, Self::Error> {
        Corpus::new(data.documents, data.links)
    }
}

impl From<Corpus> for CorpusData {
    fn from(c: Corpus) -> Self {
        CorpusData {
            documents: c.documents,
            links: c.links,
        }
    }
}

impl Corpus {
    pub fn new(mut documents: Vec<Document>, mut links: Vec<Link>) -> Result<Self, CorpusError> {
        documents.sort_by(|a, b| a.id.cmp(&b.id));
        for w in documents.windows(2) {
            if w[0].id == w[1].id {
                return Err(CorpusError::DuplicateId(w[0].id.clone()));
            }
        }
        if let Some(d) = documents.iter().find(|d| d.text.is_empty()) {
            return Err(CorpusError::EmptyText(d.id.clone()));
        }
        let ids: BTreeSet<&str> = documents.iter().map(|d| d.id.as_str()).collect();
        for l in &links {
            for end in [&l.from_id, &l.to_id] {
                if !ids.contains(end.as_str()) {
                    return Err(CorpusError::DanglingLink(end.clone()));
                }
            }
        }
        links.sort();
        links.dedup();
        Ok(Corpus { documents, links })
    }

    pub fn documents(&self) -> &[Document] {
        &self.documents
    }

    pub fn links(&self) -> &[Link] {
        &self.links
    }

    pub fn len(&self) -> usize {
        self.documents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.documents.is_empty()
    }

    pub fn document(&self, id: &str) -> Option<&Document> {
        self.documents
            .binary_search_by(|d| d.id.as_str().cmp(id))
            .ok()
            .map(|i| &self.documents[i])
    }

    /// Documents that carry a version label, ordered by [`version_order`].
    ///
    /// Fails if any document lacks a label.
    pub fn by_version(&self) -> Result<Vec<&Document>, CorpusError> {
        let mut labels = Vec::with_capacity(self.documents.len());
        for d in &self.documents {
            match &d.version_label {
                Some(v) => labels.push(v.as_str()),
                None => return Err(CorpusError::MissingVersion(d.id.clone())),
            }
        }
        Ok(version_order(&labels)
            .into_iter()
            .map(|i| &self.documents[i])
            .collect())
    }
}

/// How a set of version labels is compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VersionScheme {
    Integer,
    IsoDate,
    Lexicographic,
}

fn parse_iso_date(s: &str) -> Option<(i32, u32, u32)> {
    let mut parts = s.split('-');
    let (y, m, d) = (parts.next()?, parts.next()?, parts.next()?);
    if parts.next().is_some() || y.len() != 4 || m.len() != 2 || d.len() != 2 {
        return None;
    }
    let (y, m, d) = (y.parse().ok()?, m.parse().ok()?, d.parse().ok()?);
    if !(1..=12).contains(&m) || !(1..=31).contains(&d) {
        return None;
    }
    Some((y, m, d))
}

/// Picks integers if every label parses as one, else ISO dates, else plain strings.
pub fn version_scheme(labels: &[&str]) -> VersionScheme {
    if labels.iter().all(|l| l.trim().parse::<i64>().is_ok()) {
        VersionScheme::Integer
    } else if labels.iter().all(|l| parse_iso_date(l.trim()).is_some()) {
        VersionScheme::IsoDate
    } else {
        VersionScheme::Lexicographic
    }
}

/// Indices of `labels` in ascending version order; ties keep input order.
pub fn version_order(labels: &[&str]) -> Vec<usize> {
    let scheme = version_scheme(labels);
    let mut idx: Vec<usize> = (0..labels.len()).collect();
    idx.sort_by(|&a, &b| compare_versions(scheme, labels[a], labels[b]));
    idx
}

fn compare_versions(scheme: VersionScheme, a: &str, b: &str) -> Ordering {
    match scheme {
        VersionScheme::Integer => a
            .trim()
            .parse::<i64>()
            .unwrap_or_default()
            .cmp(&b.trim().parse::<i64>().unwrap_or_default()),
        VersionScheme::IsoDate => parse_iso_date(a.trim()).cmp(&parse_iso_date(b.trim())),
        VersionScheme::Lexicographic => a.cmp(b),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TokenKind {
    Word,
    Punct,
}

/// A token with its position in the source document.
///
/// Offsets are UTF-8 byte offsets into the document text, `start..end`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Token {
    pub surface: String,
    pub normalized: String,
    pub line: u32,
    pub start: usize,
    pub end: usize,
    pub kind: TokenKind,
}

impl Token {
    pub fn is_word(&self) -> bool {
        self.kind == TokenKind::Word
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TokenStream {
    pub document_id: String,
    pub tokens: Vec<Token>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct TokenizerConfig {
    pub keep_punctuation: bool,
    pub lowercase: bool,
}

impl Default for TokenizerConfig {
    fn default() -> Self {
        TokenizerConfig {
            keep_punctuation: true,
            lowercase: true,
        }
    }
}

impl TokenizerConfig {
    pub fn words_only() -> Self {
        TokenizerConfig {
            keep_punctuation: false,
            ..Self::default()
        }
    }
}

fn is_word_char(c: char) -> bool {
    c.is_alphanumeric() || c == '-' || c == '_'
}

/// Splits text into words (maximal runs of letters, digits, `-` and `_`) and
/// single-character punctuation tokens.
pub fn tokenize_text(document_id: &str, text: &str, config: &TokenizerConfig) -> TokenStream {
    let mut tokens = Vec::new();
    let mut line = 1u32;
    let mut word_start: Option<(usize, u32)> = None;

    let push = |tokens: &mut Vec<Token>, start: usize, end: usize, line: u32, kind| {
        let surface = &text[start..end];
        let normalized = if config.lowercase {
            surface.to_lowercase()
        } else {
            surface.to_string()
        };
        tokens.push(Token {
            surface: surface.to_string(),
            normalized,
            line,
            start,
            end,
            kind,
        });
    };

    for (i, c) in text.char_indices() {
        if is_word_char(c) {
            if word_start.is_none() {
                word_start = Some((i, line));
            }
            continue;
        }
        if let Some((s, l)) = word_start.take() {
            push(&mut tokens, s, i, l, TokenKind::Word);
        }
        if c == '\n' {
            line += 1;
        } else if !c.is_whitespace() && config.keep_punctuation {
            push(&mut tokens, i, i + c.len_utf8(), line, TokenKind::Punct);
        }
    }
    if let Some((s, l)) = word_start {
        push(&mut tokens, s, text.len(), l, TokenKind::Word);
    }
    TokenStream {
        document_id: document_id.to_string(),
        tokens,
    }
}

pub fn tokenize(doc: &Document, config: &TokenizerConfig) -> TokenStream {
    tokenize_text(&doc.id, &doc.text, config)
}

/// A span of a document that analyses skip, e.g. a copyright header.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IgnoredRegion {
    pub document_id: String,
    pub start: usize,
    pub end: usize,
    pub reason: String,
}

/// Sorts regions and merges overlapping or touching ones per document.
///
/// Empty regions are dropped. Reasons of merged regions are joined with `|`.
pub fn merge_regions(mut regions: Vec<IgnoredRegion>) -> Vec<IgnoredRegion> {
    regions.retain(|r| r.end > r.start);
    regions.sort_by(|a, b| {
        (a.document_id.as_str(), a.start, a.end).cmp(&(b.document_id.as_str(), b.start, b.end))
    });
    let mut out: Vec<IgnoredRegion> = Vec::with_capacity(regions.len());
    for r in regions {
        match out.last_mut() {
            Some(last) if last.document_id == r.document_id && r.start <= last.end => {
                last.end = last.end.max(r.end);
                if !last.reason.split('|').any(|x| x == r.reason) {
                    last.reason.push('|');
                    last.reason.push_str(&r.reason);
                }
            }
            _ => out.push(r),
        }
    }
    out
}

/// A document's tokens together with a mask of tokens inside ignored regions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TokenizedDocument {
    pub id: String,
    pub tokens: Vec<Token>,
    pub ignored: Vec<bool>,
}

impl TokenizedDocument {
    pub fn new(stream: TokenStream, regions: &[IgnoredRegion]) -> Self {
        let ignored = stream
            .tokens
            .iter()
            .map(|t| {
                regions
                    .iter()
                    .any(|r| r.document_id == stream.document_id && t.start < r.end && r.start < t.end)
            })
            .collect();
        TokenizedDocument {
            id: stream.document_id,
            tokens: stream.tokens,
            ignored,
        }
    }

    /// Tokens outside ignored regions.
    pub fn active_tokens(&self) -> impl Iterator<Item = &Token> {
        self.tokens
            .iter()
            .zip(&self.ignored)
            .filter(|(_, &ig)| !ig)
            .map(|(t, _)| t)
    }

    /// Lines holding at least one token outside ignored regions.
    pub fn analyzable_lines(&self) -> BTreeSet<u32> {
        self.active_tokens().map(|t| t.line).collect()
    }
}

/// Every document of a corpus tokenized with one configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TokenizedCorpus {
    pub config: TokenizerConfig,
    pub documents: Vec<TokenizedDocument>,
}

impl TokenizedCorpus {
    /// Tokenizes every document; `regions` must already be merged.
    pub fn new(corpus: &Corpus, config: TokenizerConfig, regions: &[IgnoredRegion]) -> Self {
        let documents = corpus
            .documents()
            .iter()
            .map(|d| {
                let own: Vec<IgnoredRegion> = regions
                    .iter()
                    .filter(|r| r.document_id == d.id)
                    .cloned()
                    .collect();
                TokenizedDocument::new(tokenize(d, &config), &own)
            })
            .collect();
        TokenizedCorpus { config, documents }
    }

    pub fn from_texts<'a>(texts: impl IntoIterator<Item = (&'a str, &'a str)>) -> Self {
        let config = TokenizerConfig::default();
        let documents = texts
            .into_iter()
            .map(|(id, text)| TokenizedDocument::new(tokenize_text(id, text, &config), &[]))
            .collect();
        TokenizedCorpus { config, documents }
    }

    pub fn document(&self, id: &str) -> Option<&TokenizedDocument> {
        self.documents.iter().find(|d| d.id == id)
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.documents.iter().position(|d| d.id == id)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn surfaces(s: &TokenStream) -> Vec<&str> {
        s.tokens.iter().map(|t| t.surface.as_str()).collect()
    }

    #[test]
    fn hyphenated_words_stay_whole() {
        let s = tokenize_text("d", "HTTP is an application-level protocol", &TokenizerConfig::default());
        assert_eq!(surfaces(&s), ["HTTP", "is", "an", "application-level", "protocol"]);
        assert_eq!(s.tokens[0].normalized, "http");
    }

    #[test]
    fn single_token_offsets() {
        let s = tokenize_text("d", "a", &TokenizerConfig::default());
        assert_eq!(s.tokens.len(), 1);
        assert_eq!((s.tokens[0].line, s.tokens[0].start, s.tokens[0].end), (1, 0, 1));
    }

    #[test]
    fn lines_are_counted() {
        let s = tokenize_text("d", "a\nb", &TokenizerConfig::default());
        let lines: Vec<u32> = s.tokens.iter().map(|t| t.line).collect();
        assert_eq!(lines, [1, 2]);
    }

    #[test]
    fn punctuation_is_optional() {
        let text = "Comments (see above), e.g. here.";
        let with = tokenize_text("d", text, &TokenizerConfig::default());
        assert_eq!(
            surfaces(&with),
            ["Comments", "(", "see", "above", ")", ",", "e", ".", "g", ".", "here", "."]
        );
        let without = tokenize_text("d", text, &TokenizerConfig::words_only());
        assert_eq!(surfaces(&without), ["Comments", "see", "above", "e", "g", "here"]);
    }

    #[test]
    fn merging_regions() {
        let r = |s, e, why: &str| IgnoredRegion {
            document_id: "d".into(),
            start: s,
            end: e,
            reason: why.into(),
        };
        let merged = merge_regions(vec![r(10, 20, "b"), r(0, 5, "a"), r(15, 30, "a"), r(40, 40, "x")]);
        assert_eq!(merged, vec![r(0, 5, "a"), r(10, 30, "b|a")]);
    }

    #[test]
    fn ignored_tokens_are_masked() {
        let stream = tokenize_text("d", "keep this\nskip that\nkeep", &TokenizerConfig::default());
        let region = IgnoredRegion {
            document_id: "d".into(),
            start: 10,
            end: 19,
            reason: "skip.*".into(),
        };
        let doc = TokenizedDocument::new(stream, &[region]);
        assert_eq!(doc.ignored, [false, false, true, true, false]);
        assert_eq!(doc.analyzable_lines().into_iter().collect::<Vec<_>>(), [1, 3]);
    }

    #[test]
    fn corpus_rejects_bad_input() {
        let a = Document::new("a", "x");
        assert_eq!(
            Corpus::new(vec![a.clone(), a.clone()], vec![]),
            Err(CorpusError::DuplicateId("a".into()))
        );
        assert_eq!(
            Corpus::new(vec![Document::new("e", "")], vec![]),
            Err(CorpusError::EmptyText("e".into()))
        );
        let link = Link {
            from_id: "a".into(),
            to_id: "zz".into(),
            kind: "ref".into(),
        };
        assert_eq!(
            Corpus::new(vec![a], vec![link]),
            Err(CorpusError::DanglingLink("zz".into()))
        );
    }

    #[test]
    fn version_schemes() {
        assert_eq!(version_order(&["10", "9", "100"]), [1, 0, 2]);
        assert_eq!(version_scheme(&["1999-06-01", "1996-05-01"]), VersionScheme::IsoDate);
        assert_eq!(version_order(&["1999-06-01", "1996-05-01"]), [1, 0]);
        assert_eq!(version_order(&["b", "a", "10"]), [2, 1, 0]);
    }

    #[test]
    fn source_class_round_trip() {
        for c in SourceClass::ALL {
            assert_eq!(c.as_str().parse::<SourceClass>().unwrap(), c);
        }
        assert!("bogus".parse::<SourceClass>().is_err());
    }
}
