//! Analysis stages over a loaded corpus, producing the serializable
//! results that the CLI prints and the report renders.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use textproj_core::clones::{self, CloneConfig, CloneGroup, CloneStats};
use textproj_core::coding::{self, Agreement, AgreementUnit, AxialGraph, Codebook, ValidationReport};
use textproj_core::corpus::{Corpus, Document, SourceClass, TokenizedCorpus, TokenizerConfig};
use textproj_core::layout::{self, Palette, TreemapItem, TreemapLayout};
use textproj_core::ngram::{self, CategoryProfile, Smoothing};
use textproj_core::pos::{self, BaselineTagger, ErGraph, SmellFinding};
use textproj_core::topics::{self, LdaConfig, TopicModel, TopicNetwork};

use crate::error::Result;
use crate::ignore::{tokenize_corpus, IgnorePatterns};
use crate::ingest::FileError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DocumentSummary {
    pub id: String,
    pub source_class: SourceClass,
    pub version: Option<String>,
    pub lines: usize,
    pub tokens: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSummary {
    pub documents: Vec<DocumentSummary>,
    pub links: usize,
    #[serde(default)]
    pub ingest_errors: Vec<FileError>,
}

pub fn summarize_corpus(corpus: &Corpus, tokenized: &TokenizedCorpus, errors: &[FileError]) -> CorpusSummary {
    CorpusSummary {
        documents: corpus
            .documents()
            .iter()
            .zip(&tokenized.documents)
            .map(|(d, t)| DocumentSummary {
                id: d.id.clone(),
                source_class: d.source_class,
                version: d.version_label.clone(),
                lines: d.text.lines().count(),
                tokens: t.active_tokens().count(),
            })
            .collect(),
        links: corpus.links().len(),
        ingest_errors: errors.to_vec(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClonesReport {
    pub config: CloneConfig,
    pub ignore_patterns: Vec<String>,
    pub groups: Vec<CloneGroup>,
    pub stats: CloneStats,
}

pub fn detect_clones(corpus: &Corpus, patterns: &IgnorePatterns, config: &CloneConfig) -> Result<ClonesReport> {
    let tokenized = tokenize_corpus(corpus, TokenizerConfig::default(), patterns);
    let groups = clones::detect(&tokenized, config)?;
    let stats = clones::clone_stats(&tokenized, &groups);
    Ok(ClonesReport {
        config: *config,
        ignore_patterns: patterns.sources(),
        groups,
        stats,
    })
}

/// Treemap of documents sized by analyzable lines and coloured by clone
/// coverage. Documents without analyzable lines are left out.
pub fn clone_treemap(stats: &CloneStats, width: f64, height: f64) -> Result<TreemapLayout> {
    let items: Vec<TreemapItem> = stats
        .documents
        .iter()
        .filter(|d| d.total_lines > 0)
        .map(|d| TreemapItem {
            id: d.document_id.clone(),
            size: d.total_lines as f64,
            color: d.clone_coverage,
        })
        .collect();
    Ok(layout::treemap(&items, width, height, &Palette::default())?)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NaturalnessRow {
    pub document_id: String,
    pub tokens: usize,
    /// Bits per token under a model trained on the other documents.
    pub cross_entropy: f64,
    /// The same for the document's tokens in shuffled order.
    pub shuffled_cross_entropy: f64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategoryRow {
    pub document_id: String,
    pub category: String,
    pub low_confidence: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NGramReport {
    pub n: usize,
    pub smoothing: Smoothing,
    pub seed: u64,
    pub naturalness: Vec<NaturalnessRow>,
    pub categories: Vec<CategoryRow>,
}

/// Shuffles a copy of `tokens` with a ChaCha8 stream seeded by `seed`.
pub fn shuffled<T: Clone>(tokens: &[T], seed: u64) -> Vec<T> {
    let mut v = tokens.to_vec();
    v.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    v
}

/// Leave-one-out cross-entropy of every document with at least `n` words,
/// plus categorization against `profiles` when any are given.
pub fn naturalness(
    corpus: &Corpus,
    tokenized: &TokenizedCorpus,
    n: usize,
    smoothing: Smoothing,
    seed: u64,
    profiles: &[CategoryProfile],
) -> Result<NGramReport> {
    let streams = ngram::word_streams(tokenized);
    let mut rows = Vec::new();
    if streams.len() > 1 {
        for (i, held_out) in streams.iter().enumerate() {
            if held_out.len() < n {
                continue;
            }
            let train: Vec<Vec<String>> = streams
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, s)| s.clone())
                .collect();
            let model = ngram::train_word_model(&train, n, smoothing)?;
            rows.push(NaturalnessRow {
                document_id: tokenized.documents[i].id.clone(),
                tokens: held_out.len(),
                cross_entropy: ngram::cross_entropy(&model, held_out)?,
                shuffled_cross_entropy: ngram::cross_entropy(&model, &shuffled(held_out, seed))?,
            });
        }
    }
    let mut categories = Vec::new();
    if !profiles.is_empty() {
        for d in corpus.documents() {
            let c = ngram::categorize(profiles, &d.text)?;
            categories.push(CategoryRow {
                document_id: d.id.clone(),
                category: c.best().to_string(),
                low_confidence: c.low_confidence,
            });
        }
    }
    Ok(NGramReport {
        n,
        smoothing,
        seed,
        naturalness: rows,
        categories,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TopicSummary {
    pub topic: usize,
    pub top_words: Vec<(String, f64)>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DocumentTopics {
    pub document_id: String,
    pub dominant: usize,
    pub weights: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TopicsReport {
    pub k: usize,
    pub alpha: f64,
    pub beta: f64,
    pub iterations: usize,
    pub seed: u64,
    pub topics: Vec<TopicSummary>,
    pub documents: Vec<DocumentTopics>,
    pub network: TopicNetwork,
}

pub fn fit_topics(tokenized: &TokenizedCorpus, stopwords: &BTreeSet<String>, config: &LdaConfig) -> Result<TopicModel> {
    let docs = topics::prepare_documents(tokenized, stopwords);
    Ok(topics::fit_lda(&docs, config)?)
}

pub fn summarize_topics(model: &TopicModel, top: usize, threshold: f64) -> Result<TopicsReport> {
    let topics = (0..model.k)
        .map(|t| {
            Ok(TopicSummary {
                topic: t,
                top_words: model.top_words(t, top)?,
            })
        })
        .collect::<Result<_>>()?;
    let documents = model
        .document_ids
        .iter()
        .map(|id| {
            Ok(DocumentTopics {
                document_id: id.clone(),
                dominant: model.dominant_topic(id)?,
                weights: model.doc_topics(id)?,
            })
        })
        .collect::<Result<_>>()?;
    Ok(TopicsReport {
        k: model.k,
        alpha: model.alpha,
        beta: model.beta,
        iterations: model.iterations,
        seed: model.seed,
        topics,
        documents,
        network: model.topic_network(threshold),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermCount {
    pub term: String,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosReport {
    /// Most frequent terms over the corpus, matched case-insensitively.
    pub terms: Vec<TermCount>,
    pub er: ErGraph,
    pub smells: Vec<SmellFinding>,
}

/// Tagged sentences of one document, skipping ignored tokens.
pub fn tagged_sentences(tokenized: &TokenizedCorpus, document_id: &str) -> Vec<Vec<pos::TaggedToken>> {
    let Some(doc) = tokenized.document(document_id) else {
        return Vec::new();
    };
    let tokens: Vec<_> = doc.active_tokens().cloned().collect();
    pos::split_sentences(&tokens)
        .into_iter()
        .map(|r| pos::tag(&BaselineTagger, &tokens[r]))
        .collect()
}

/// Terms, merged ER graph and passive-voice findings for the selected
/// documents (all when `only` is `None`).
pub fn extract_pos(tokenized: &TokenizedCorpus, only: Option<&str>, max_terms: usize) -> PosReport {
    let mut counts: BTreeMap<String, (String, usize)> = BTreeMap::new();
    let mut graphs = Vec::new();
    let mut smells = Vec::new();
    for d in tokenized.documents.iter().filter(|d| only.is_none_or(|o| o == d.id)) {
        for s in tagged_sentences(tokenized, &d.id) {
            for t in pos::extract_terms(&s) {
                let e = counts.entry(t.text.to_lowercase()).or_insert((t.text.clone(), 0));
                e.1 += 1;
            }
            graphs.push(pos::extract_er(&s));
            smells.extend(pos::detect_passive(&d.id, &s));
        }
    }
    let mut terms: Vec<TermCount> = counts
        .into_values()
        .map(|(term, count)| TermCount { term, count })
        .collect();
    terms.sort_by(|a, b| b.count.cmp(&a.count).then_with(|| a.term.cmp(&b.term)));
    terms.truncate(max_terms);
    PosReport {
        terms,
        er: pos::merge_graphs(&graphs),
        smells,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CodingReport {
    pub validation: ValidationReport,
    pub counts: BTreeMap<String, usize>,
    pub min_occurrence: usize,
    pub condensed: AxialGraph,
    pub batch: usize,
    pub saturation: Vec<usize>,
    pub saturation_point: Option<usize>,
    pub agreement: Option<CoderAgreement>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoderAgreement {
    pub coders: (String, String),
    pub unit: AgreementUnit,
    pub agreement: Agreement,
}

pub fn analyze_codebook(
    codebook: &Codebook,
    corpus: Option<&Corpus>,
    min_occurrence: usize,
    batch: usize,
    coders: Option<(&str, &str)>,
    unit: AgreementUnit,
) -> Result<CodingReport> {
    let saturation = coding::saturation_curve(&codebook.segments, batch)?;
    let agreement = match coders {
        Some((a, b)) => Some(CoderAgreement {
            coders: (a.to_string(), b.to_string()),
            unit,
            agreement: coding::agreement(&codebook.segments, a, b, unit)?,
        }),
        None => None,
    };
    Ok(CodingReport {
        validation: coding::validate_codebook(codebook, corpus),
        counts: coding::occurrence_counts(codebook),
        min_occurrence,
        condensed: coding::condense_graph(&coding::axial_graph(codebook), min_occurrence),
        batch,
        saturation_point: coding::saturation_point(&saturation),
        saturation,
        agreement,
    })
}

/// Versioned documents only, tokenized with `patterns`. `None` when fewer
/// than two distinct version labels exist.
pub fn versioned_subset(corpus: &Corpus, patterns: &IgnorePatterns) -> Result<Option<(Corpus, TokenizedCorpus)>> {
    let docs: Vec<Document> = corpus
        .documents()
        .iter()
        .filter(|d| d.version_label.is_some())
        .cloned()
        .collect();
    let labels: BTreeSet<&str> = docs.iter().filter_map(|d| d.version_label.as_deref()).collect();
    if labels.len() < 2 {
        return Ok(None);
    }
    let sub = Corpus::new(docs, Vec::new())?;
    let tokenized = tokenize_corpus(&sub, TokenizerConfig::default(), patterns);
    Ok(Some((sub, tokenized)))
}

