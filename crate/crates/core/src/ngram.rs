//! Word n-gram language models and character n-gram category profiles.
//!
//! Word models count sliding windows inside each token stream; windows never
//! span two streams. Character profiles rank the most frequent 1..5-grams
//! and compare texts with the out-of-place rank distance.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::corpus::{Corpus, CorpusError, TokenizedCorpus};

/// Symbol every out-of-vocabulary token maps to.
pub const UNKNOWN: &str = "<unk>";
/// Default profile length.
pub const DEFAULT_PROFILE_SIZE: usize = 300;
/// Longest character n-gram in a profile.
pub const MAX_CHAR_N: usize = 5;
pub const MIN_PROFILE_TEXT: usize = 500;
pub const MIN_CATEGORIZE_TEXT: usize = 50;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NGramError {
    #[error("n-gram order must be at least 1")]
    ZeroOrder,
    #[error("no stream holds at least {0} tokens")]
    InsufficientTokens(usize),
    #[error("evaluation text has fewer than {0} tokens")]
    TooShort(usize),
    #[error("unseen event `{token}` after context `{context}` has probability zero")]
    UnseenEvent { context: String, token: String },
    #[error("profile text has {got} characters, need at least {need}")]
    ProfileTextTooShort { got: usize, need: usize },
    #[error("no category profiles given")]
    NoProfiles,
    #[error("empty n-gram query")]
    EmptyQuery,
    #[error(transparent)]
    Corpus(#[from] CorpusError),
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Smoothing {
    None,
    #[default]
    AddOne,
}

impl core::str::FromStr for Smoothing {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "none" => Ok(Smoothing::None),
            "add_one" | "add-one" | "laplace" => Ok(Smoothing::AddOne),
            other => Err(other.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContextCounts {
    pub total: u64,
    pub next: BTreeMap<String, u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NGramModel {
    pub n: usize,
    pub smoothing: Smoothing,
    /// Context tokens joined by a single space; empty for unigrams.
    pub counts: BTreeMap<String, ContextCounts>,
    /// Observed tokens; [`UNKNOWN`] is implied.
    pub vocabulary: BTreeSet<String>,
    /// Number of counted windows.
    pub total: u64,
}

/// Normalized active tokens of every document, one stream per document.
pub fn token_streams(corpus: &TokenizedCorpus) -> Vec<Vec<String>> {
    corpus
        .documents
        .iter()
        .map(|d| d.active_tokens().map(|t| t.normalized.clone()).collect())
        .collect()
}

/// Like [`token_streams`] but keeps word tokens only.
pub fn word_streams(corpus: &TokenizedCorpus) -> Vec<Vec<String>> {
    corpus
        .documents
        .iter()
        .map(|d| {
            d.active_tokens()
                .filter(|t| t.is_word())
                .map(|t| t.normalized.clone())
                .collect()
        })
        .collect()
}

fn join<S: AsRef<str>>(parts: &[S]) -> String {
    let mut out = String::new();
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        out.push_str(p.as_ref());
    }
    out
}

pub fn train_word_model<S: AsRef<str>>(
    streams: &[Vec<S>],
    n: usize,
    smoothing: Smoothing,
) -> Result<NGramModel, NGramError> {
    if n == 0 {
        return Err(NGramError::ZeroOrder);
    }
    let mut counts: BTreeMap<String, ContextCounts> = BTreeMap::new();
    let mut vocabulary = BTreeSet::new();
    let mut total = 0u64;
    for stream in streams {
        vocabulary.extend(stream.iter().map(|t| t.as_ref().to_string()));
        for w in stream.windows(n) {
            let e = counts.entry(join(&w[..n - 1])).or_insert_with(|| ContextCounts {
                total: 0,
                next: BTreeMap::new(),
            });
            e.total += 1;
            *e.next.entry(w[n - 1].as_ref().to_string()).or_default() += 1;
            total += 1;
        }
    }
    if total == 0 {
        return Err(NGramError::InsufficientTokens(n));
    }
    Ok(NGramModel {
        n,
        smoothing,
        counts,
        vocabulary,
        total,
    })
}

impl NGramModel {
    fn map<'a>(&self, token: &'a str) -> &'a str {
        if self.vocabulary.contains(token) {
            token
        } else {
            UNKNOWN
        }
    }

    pub fn count(&self, context: &[&str], token: &str) -> u64 {
        self.counts
            .get(&join(context))
            .and_then(|c| c.next.get(token))
            .copied()
            .unwrap_or(0)
    }

    /// Event space size under add-one smoothing: vocabulary plus unknown.
    pub fn event_space(&self) -> usize {
        self.vocabulary.len() + 1
    }

    /// P(token | context). Out-of-vocabulary tokens count as [`UNKNOWN`].
    pub fn probability(&self, context: &[&str], token: &str) -> Result<f64, NGramError> {
        let ctx: Vec<&str> = context.iter().map(|t| self.map(t)).collect();
        let key = join(&ctx);
        let tok = self.map(token);
        let entry = self.counts.get(&key);
        let (c, total) = entry.map_or((0, 0), |e| (e.next.get(tok).copied().unwrap_or(0), e.total));
        match self.smoothing {
            Smoothing::AddOne => Ok((c + 1) as f64 / (total + self.event_space() as u64) as f64),
            Smoothing::None if c == 0 => Err(NGramError::UnseenEvent {
                context: key,
                token: token.to_string(),
            }),
            Smoothing::None => Ok(c as f64 / total as f64),
        }
    }

    fn log_prob_sum<S: AsRef<str>>(&self, tokens: &[S]) -> Result<(f64, usize), NGramError> {
        let mut sum = 0.0;
        let mut m = 0;
        for w in tokens.windows(self.n) {
            let ctx: Vec<&str> = w[..self.n - 1].iter().map(AsRef::as_ref).collect();
            sum += libm::log2(self.probability(&ctx, w[self.n - 1].as_ref())?);
            m += 1;
        }
        Ok((sum, m))
    }
}

/// Bits per predicted token over all windows of `tokens`.
pub fn cross_entropy<S: AsRef<str>>(model: &NGramModel, tokens: &[S]) -> Result<f64, NGramError> {
    if tokens.len() < model.n {
        return Err(NGramError::TooShort(model.n));
    }
    let (sum, m) = model.log_prob_sum(tokens)?;
    Ok(-sum / m as f64)
}

/// Cross-entropy pooled over several streams; streams shorter than the
/// model order contribute nothing.
pub fn cross_entropy_streams<S: AsRef<str>>(
    model: &NGramModel,
    streams: &[Vec<S>],
) -> Result<f64, NGramError> {
    let mut sum = 0.0;
    let mut m = 0;
    for s in streams {
        let (a, b) = model.log_prob_sum(s)?;
        sum += a;
        m += b;
    }
    if m == 0 {
        return Err(NGramError::TooShort(model.n));
    }
    Ok(-sum / m as f64)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategoryProfile {
    pub category: String,
    /// Grams in rank order; the index is the rank.
    pub grams: Vec<String>,
}

impl CategoryProfile {
    pub fn rank_map(&self) -> BTreeMap<&str, usize> {
        self.grams.iter().enumerate().map(|(i, g)| (g.as_str(), i)).collect()
    }
}

/// Frequencies of character 1..5-grams over lowercase alphabetic words,
/// each word padded by one space on both sides.
pub fn char_ngram_counts(text: &str) -> BTreeMap<String, u64> {
    let mut counts = BTreeMap::new();
    let lower = text.to_lowercase();
    for word in lower.split(|c: char| !c.is_alphabetic()).filter(|w| !w.is_empty()) {
        let padded: Vec<char> = core::iter::once(' ')
            .chain(word.chars())
            .chain(core::iter::once(' '))
            .collect();
        for n in 1..=MAX_CHAR_N {
            for w in padded.windows(n) {
                if w.iter().all(|&c| c == ' ') {
                    continue;
                }
                *counts.entry(w.iter().collect::<String>()).or_default() += 1;
            }
        }
    }
    counts
}

/// Top `k` grams by frequency, ties broken lexicographically.
pub fn ranked_grams(text: &str, k: usize) -> Vec<String> {
    let mut v: Vec<(String, u64)> = char_ngram_counts(text).into_iter().collect();
    v.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    v.truncate(k);
    v.into_iter().map(|(g, _)| g).collect()
}

pub fn train_char_profile(text: &str, category: &str) -> Result<CategoryProfile, NGramError> {
    train_char_profile_k(text, category, DEFAULT_PROFILE_SIZE)
}

pub fn train_char_profile_k(
    text: &str,
    category: &str,
    k: usize,
) -> Result<CategoryProfile, NGramError> {
    let got = text.chars().count();
    if got < MIN_PROFILE_TEXT {
        return Err(NGramError::ProfileTextTooShort {
            got,
            need: MIN_PROFILE_TEXT,
        });
    }
    Ok(CategoryProfile {
        category: category.to_string(),
        grams: ranked_grams(text, k),
    })
}

/// Out-of-place distance of `text` against `category`: for every gram of
/// `text`, the rank difference, or `penalty` if `category` lacks it.
///
/// Zero for rank-identical profiles. When `text` is shorter than
/// `category`, a rank-identical prefix also scores zero.
pub fn out_of_place(text: &[String], category: &CategoryProfile, penalty: usize) -> u64 {
    let ranks = category.rank_map();
    text.iter()
        .enumerate()
        .map(|(i, g)| ranks.get(g.as_str()).map_or(penalty, |&r| i.abs_diff(r)) as u64)
        .sum()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Categorization {
    /// (category, distance), ascending distance, ties by name.
    pub ranking: Vec<(String, u64)>,
    /// Set when the text is shorter than [`MIN_CATEGORIZE_TEXT`] characters
    /// or every profile scored the same distance.
    pub low_confidence: bool,
}

impl Categorization {
    pub fn best(&self) -> &str {
        &self.ranking[0].0
    }
}

pub fn categorize(profiles: &[CategoryProfile], text: &str) -> Result<Categorization, NGramError> {
    if profiles.is_empty() {
        return Err(NGramError::NoProfiles);
    }
    let k = profiles.iter().map(|p| p.grams.len()).max().unwrap_or(0).max(1);
    let grams = ranked_grams(text, k);
    let mut ranking: Vec<(String, u64)> = profiles
        .iter()
        .map(|p| (p.category.clone(), out_of_place(&grams, p, k)))
        .collect();
    ranking.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    let all_equal = profiles.len() > 1 && ranking.iter().all(|r| r.1 == ranking[0].1);
    let low_confidence = text.chars().count() < MIN_CATEGORIZE_TEXT || all_equal;
    Ok(Categorization {
        ranking,
        low_confidence,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeriesPoint {
    pub version: String,
    pub occurrences: u64,
    pub windows: u64,
    pub frequency: f64,
}

/// Relative frequency of `query` (whitespace-separated, matched against
/// normalized word tokens) per version label, in version order.
///
/// Documents sharing a label are pooled. A version without any window of
/// the query length reports frequency 0.
pub fn frequency_series(
    corpus: &Corpus,
    tokenized: &TokenizedCorpus,
    query: &str,
) -> Result<Vec<SeriesPoint>, NGramError> {
    let q: Vec<String> = query.split_whitespace().map(str::to_lowercase).collect();
    if q.is_empty() {
        return Err(NGramError::EmptyQuery);
    }
    let mut points: Vec<SeriesPoint> = Vec::new();
    for doc in corpus.by_version()? {
        let version = doc.version_label.clone().unwrap_or_default();
        let td = tokenized
            .document(&doc.id)
            .ok_or_else(|| CorpusError::UnknownDocument(doc.id.clone()))?;
        let words: Vec<&str> = td
            .active_tokens()
            .filter(|t| t.is_word())
            .map(|t| t.normalized.as_str())
            .collect();
        let windows = words.windows(q.len());
        let n_windows = windows.len() as u64;
        let hits = words.windows(q.len()).filter(|w| *w == q.as_slice()).count() as u64;
        match points.last_mut() {
            Some(p) if p.version == version => {
                p.occurrences += hits;
                p.windows += n_windows;
            }
            _ => points.push(SeriesPoint {
                version,
                occurrences: hits,
                windows: n_windows,
                frequency: 0.0,
            }),
        }
    }
    for p in &mut points {
        p.frequency = if p.windows == 0 {
            0.0
        } else {
            p.occurrences as f64 / p.windows as f64
        };
    }
    Ok(points)
}
