//! Latent Dirichlet Allocation fitted by collapsed Gibbs sampling.
//!
//! The sampler is single-threaded and driven by a seeded ChaCha8 stream, so
//! identical inputs produce identical models. Only the final assignment
//! state is kept.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::corpus::TokenizedCorpus;
use crate::stopwords;

pub const DEFAULT_BETA: f64 = 0.01;
pub const DEFAULT_ITERATIONS: usize = 1000;
pub const MIN_WORD_CHARS: usize = 3;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TopicError {
    #[error("topic count must be at least 1")]
    ZeroTopics,
    #[error("iteration count must be at least 1")]
    ZeroIterations,
    #[error("hyperparameters must be positive and finite")]
    BadHyperparameter,
    #[error("vocabulary is empty after filtering")]
    EmptyVocabulary,
    #[error("{k} topics exceed the {tokens} available tokens")]
    TooManyTopics { k: usize, tokens: usize },
    #[error("unknown document `{0}`")]
    UnknownDocument(String),
    #[error("topic {topic} out of range for {k} topics")]
    TopicOutOfRange { topic: usize, k: usize },
    #[error("count tables disagree with assignments: {0}")]
    Inconsistent(&'static str),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LdaConfig {
    pub k: usize,
    /// Defaults to 50/K when absent.
    pub alpha: Option<f64>,
    pub beta: f64,
    pub iterations: usize,
    pub seed: u64,
}

impl LdaConfig {
    pub fn new(k: usize, seed: u64) -> Self {
        LdaConfig {
            k,
            alpha: None,
            beta: DEFAULT_BETA,
            iterations: DEFAULT_ITERATIONS,
            seed,
        }
    }

    pub fn alpha(&self) -> f64 {
        self.alpha.unwrap_or(50.0 / self.k.max(1) as f64)
    }
}

/// A document reduced to the tokens the model sees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BagDocument {
    pub id: String,
    pub words: Vec<String>,
}

pub fn english_stopwords() -> BTreeSet<String> {
    stopwords::ENGLISH.iter().map(|s| s.to_string()).collect()
}

/// Whether a normalized word survives topic-model filtering.
pub fn keep_word(word: &str, stopwords: &BTreeSet<String>) -> bool {
    word.chars().count() >= MIN_WORD_CHARS
        && !word.chars().all(|c| c.is_ascii_digit() || c == '.' || c == ',')
        && word.chars().any(|c| c.is_alphabetic())
        && !stopwords.contains(word)
}

/// Active word tokens of every document minus stop words, short tokens and
/// numbers.
pub fn prepare_documents(corpus: &TokenizedCorpus, stopwords: &BTreeSet<String>) -> Vec<BagDocument> {
    corpus
        .documents
        .iter()
        .map(|d| BagDocument {
            id: d.id.clone(),
            words: d
                .active_tokens()
                .filter(|t| t.is_word() && keep_word(&t.normalized, stopwords))
                .map(|t| t.normalized.clone())
                .collect(),
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TopicModel {
    pub k: usize,
    pub alpha: f64,
    pub beta: f64,
    pub iterations: usize,
    pub seed: u64,
    /// Sorted vocabulary; word ids index into it.
    pub vocabulary: Vec<String>,
    pub document_ids: Vec<String>,
    /// Word id of every token, per document.
    pub words: Vec<Vec<u32>>,
    /// Topic of every token, per document.
    pub assignments: Vec<Vec<u32>>,
    /// n_dk, documents × topics.
    pub doc_topic: Vec<Vec<u32>>,
    /// n_kw, topics × vocabulary.
    pub topic_word: Vec<Vec<u32>>,
    /// n_k.
    pub topic_totals: Vec<u32>,
}

/// Step-wise collapsed Gibbs sampler.
pub struct Sampler {
    model: TopicModel,
    rng: ChaCha8Rng,
    weights: Vec<f64>,
    done: usize,
}

impl Sampler {
    /// Builds the vocabulary and draws the random initial assignment.
    pub fn new(documents: &[BagDocument], config: &LdaConfig) -> Result<Self, TopicError> {
        let k = config.k;
        if k == 0 {
            return Err(TopicError::ZeroTopics);
        }
        if config.iterations == 0 {
            return Err(TopicError::ZeroIterations);
        }
        let alpha = config.alpha();
        if !(alpha > 0.0 && alpha.is_finite() && config.beta > 0.0 && config.beta.is_finite()) {
            return Err(TopicError::BadHyperparameter);
        }
        let vocab: BTreeSet<&str> = documents
            .iter()
            .flat_map(|d| d.words.iter().map(String::as_str))
            .collect();
        if vocab.is_empty() {
            return Err(TopicError::EmptyVocabulary);
        }
        let tokens: usize = documents.iter().map(|d| d.words.len()).sum();
        if k > tokens {
            return Err(TopicError::TooManyTopics { k, tokens });
        }
        let index: BTreeMap<&str, u32> = vocab.iter().enumerate().map(|(i, w)| (*w, i as u32)).collect();
        let v = vocab.len();
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        let mut doc_topic = vec![vec![0u32; k]; documents.len()];
        let mut topic_word = vec![vec![0u32; v]; k];
        let mut topic_totals = vec![0u32; k];
        let mut words = Vec::with_capacity(documents.len());
        let mut assignments = Vec::with_capacity(documents.len());
        for (d, doc) in documents.iter().enumerate() {
            let ids: Vec<u32> = doc.words.iter().map(|w| index[w.as_str()]).collect();
            let z: Vec<u32> = ids
                .iter()
                .map(|&w| {
                    let t = rng.random_range(0..k);
                    doc_topic[d][t] += 1;
                    topic_word[t][w as usize] += 1;
                    topic_totals[t] += 1;
                    t as u32
                })
                .collect();
            words.push(ids);
            assignments.push(z);
        }
        Ok(Sampler {
            model: TopicModel {
                k,
                alpha,
                beta: config.beta,
                iterations: config.iterations,
                seed: config.seed,
                vocabulary: vocab.into_iter().map(String::from).collect(),
                document_ids: documents.iter().map(|d| d.id.clone()).collect(),
                words,
                assignments,
                doc_topic,
                topic_word,
                topic_totals,
            },
            rng,
            weights: vec![0.0; k],
            done: 0,
        })
    }

    /// Resamples every token once.
    pub fn sweep(&mut self) {
        let m = &mut self.model;
        let vbeta = m.vocabulary.len() as f64 * m.beta;
        for d in 0..m.words.len() {
            for i in 0..m.words[d].len() {
                let w = m.words[d][i] as usize;
                let old = m.assignments[d][i] as usize;
                m.doc_topic[d][old] -= 1;
                m.topic_word[old][w] -= 1;
                m.topic_totals[old] -= 1;
                let mut total = 0.0;
                for t in 0..m.k {
                    let p = (m.doc_topic[d][t] as f64 + m.alpha)
                        * (m.topic_word[t][w] as f64 + m.beta)
                        / (m.topic_totals[t] as f64 + vbeta);
                    total += p;
                    self.weights[t] = total;
                }
                let u = self.rng.random::<f64>() * total;
                let new = self.weights.partition_point(|&c| c <= u).min(m.k - 1);
                m.assignments[d][i] = new as u32;
                m.doc_topic[d][new] += 1;
                m.topic_word[new][w] += 1;
                m.topic_totals[new] += 1;
            }
        }
        self.done += 1;
    }

    pub fn iterations_done(&self) -> usize {
        self.done
    }

    pub fn model(&self) -> &TopicModel {
        &self.model
    }

    pub fn into_model(mut self) -> TopicModel {
        self.model.iterations = self.done;
        self.model
    }
}

pub fn fit_lda(documents: &[BagDocument], config: &LdaConfig) -> Result<TopicModel, TopicError> {
    let mut s = Sampler::new(documents, config)?;
    for _ in 0..config.iterations {
        s.sweep();
    }
    Ok(s.into_model())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TopicEdge {
    pub document_id: String,
    pub topic: usize,
    pub weight: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TopicNetwork {
    pub documents: Vec<String>,
    pub topics: usize,
    pub edges: Vec<TopicEdge>,
}

impl TopicModel {
    /// Recounts every table from the assignments and compares.
    pub fn check_consistency(&self) -> Result<(), TopicError> {
        let mut dt = vec![vec![0u32; self.k]; self.words.len()];
        let mut tw = vec![vec![0u32; self.vocabulary.len()]; self.k];
        let mut tt = vec![0u32; self.k];
        for (d, (ws, zs)) in self.words.iter().zip(&self.assignments).enumerate() {
            if ws.len() != zs.len() {
                return Err(TopicError::Inconsistent("assignment length"));
            }
            for (&w, &z) in ws.iter().zip(zs) {
                dt[d][z as usize] += 1;
                tw[z as usize][w as usize] += 1;
                tt[z as usize] += 1;
            }
        }
        if dt != self.doc_topic {
            return Err(TopicError::Inconsistent("document-topic counts"));
        }
        if tw != self.topic_word {
            return Err(TopicError::Inconsistent("topic-word counts"));
        }
        if tt != self.topic_totals {
            return Err(TopicError::Inconsistent("topic totals"));
        }
        Ok(())
    }

    fn check_topic(&self, topic: usize) -> Result<(), TopicError> {
        if topic >= self.k {
            Err(TopicError::TopicOutOfRange { topic, k: self.k })
        } else {
            Ok(())
        }
    }

    /// Smoothed P(word | topic) for every vocabulary entry.
    pub fn topic_word_distribution(&self, topic: usize) -> Result<Vec<f64>, TopicError> {
        self.check_topic(topic)?;
        let den = self.topic_totals[topic] as f64 + self.vocabulary.len() as f64 * self.beta;
        Ok(self.topic_word[topic]
            .iter()
            .map(|&c| (c as f64 + self.beta) / den)
            .collect())
    }

    /// The `k` most probable words of `topic`, ties in lexicographic order.
    pub fn top_words(&self, topic: usize, k: usize) -> Result<Vec<(String, f64)>, TopicError> {
        let p = self.topic_word_distribution(topic)?;
        let mut idx: Vec<usize> = (0..p.len()).collect();
        // counts decide the order; vocabulary is sorted, so index order is lexicographic
        idx.sort_by(|&a, &b| self.topic_word[topic][b].cmp(&self.topic_word[topic][a]).then(a.cmp(&b)));
        Ok(idx
            .into_iter()
            .take(k)
            .map(|i| (self.vocabulary[i].clone(), p[i]))
            .collect())
    }

    pub fn document_index(&self, document_id: &str) -> Result<usize, TopicError> {
        self.document_ids
            .iter()
            .position(|d| d == document_id)
            .ok_or_else(|| TopicError::UnknownDocument(document_id.to_string()))
    }

    pub fn doc_topics(&self, document_id: &str) -> Result<Vec<f64>, TopicError> {
        Ok(self.doc_topics_at(self.document_index(document_id)?))
    }

    fn doc_topics_at(&self, d: usize) -> Vec<f64> {
        let len = self.words[d].len() as f64;
        let den = len + self.k as f64 * self.alpha;
        self.doc_topic[d]
            .iter()
            .map(|&c| (c as f64 + self.alpha) / den)
            .collect()
    }

    /// Topic holding the largest share of `document_id`.
    pub fn dominant_topic(&self, document_id: &str) -> Result<usize, TopicError> {
        let d = self.document_index(document_id)?;
        let row = &self.doc_topic[d];
        Ok((0..self.k).max_by(|&a, &b| row[a].cmp(&row[b]).then(b.cmp(&a))).unwrap_or(0))
    }

    /// Document-topic edges whose mixture proportion reaches `threshold`.
    pub fn topic_network(&self, threshold: f64) -> TopicNetwork {
        let mut edges = Vec::new();
        for (d, id) in self.document_ids.iter().enumerate() {
            for (topic, weight) in self.doc_topics_at(d).into_iter().enumerate() {
                if weight >= threshold {
                    edges.push(TopicEdge {
                        document_id: id.clone(),
                        topic,
                        weight,
                    });
                }
            }
        }
        TopicNetwork {
            documents: self.document_ids.clone(),
            topics: self.k,
            edges,
        }
    }
}
