use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::{word_frequencies, LayoutError};
use crate::corpus::{Token, TokenizedCorpus};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhraseNode {
    pub word: String,
    pub frequency: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhraseEdge {
    pub from: String,
    pub to: String,
    pub connector: String,
    pub weight: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhraseNet {
    pub connector: String,
    /// Endpoints of the kept edges, sorted by word.
    pub nodes: Vec<PhraseNode>,
    /// Sorted by descending weight, then endpoints.
    pub edges: Vec<PhraseEdge>,
}

fn content_word(t: &Token, stopwords: &BTreeSet<String>) -> Option<String> {
    let w = t.normalized.to_lowercase();
    (t.is_word() && w.chars().any(char::is_alphabetic) && !stopwords.contains(&w)).then_some(w)
}

/// Counts adjacent token triples `w1 connector w2` where both outer words
/// are non-stop words, and keeps pairs seen at least `min_weight` times.
pub fn phrase_net(
    corpus: &TokenizedCorpus,
    connector: &str,
    stopwords: &BTreeSet<String>,
    min_weight: usize,
) -> Result<PhraseNet, LayoutError> {
    let connector = connector.trim().to_lowercase();
    if connector.is_empty() {
        return Err(LayoutError::EmptyConnector);
    }
    let mut counts: BTreeMap<(String, String), usize> = BTreeMap::new();
    for d in &corpus.documents {
        let toks: Vec<&Token> = d.active_tokens().collect();
        for w in toks.windows(3) {
            if w[1].normalized.to_lowercase() != connector {
                continue;
            }
            if let (Some(a), Some(b)) = (content_word(w[0], stopwords), content_word(w[2], stopwords)) {
                *counts.entry((a, b)).or_default() += 1;
            }
        }
    }
    let mut edges: Vec<PhraseEdge> = counts
        .into_iter()
        .filter(|(_, n)| *n >= min_weight.max(1))
        .map(|((from, to), weight)| PhraseEdge {
            from,
            to,
            connector: connector.clone(),
            weight,
        })
        .collect();
    edges.sort_by(|a, b| b.weight.cmp(&a.weight).then_with(|| (&a.from, &a.to).cmp(&(&b.from, &b.to))));
    let freq = word_frequencies(corpus);
    let words: BTreeSet<&str> = edges.iter().flat_map(|e| [e.from.as_str(), e.to.as_str()]).collect();
    let nodes = words
        .into_iter()
        .map(|w| PhraseNode {
            word: String::from(w),
            frequency: freq.get(w).copied().unwrap_or(0),
        })
        .collect();
    Ok(PhraseNet { connector, nodes, edges })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn net(text: &str, connector: &str, min: usize) -> PhraseNet {
        let c = TokenizedCorpus::from_texts([("d", text)]);
        phrase_net(&c, connector, &super::super::default_stopwords(), min).unwrap()
    }

    #[test]
    fn minimal_triple() {
        let n = net("x is y", "is", 1);
        assert_eq!(n.edges.len(), 1);
        assert_eq!((n.edges[0].from.as_str(), n.edges[0].to.as_str(), n.edges[0].weight), ("x", "y", 1));
        assert_eq!(n.nodes.len(), 2);
    }

    #[test]
    fn absent_connector_gives_empty_graph() {
        let n = net("x is y", "and", 1);
        assert!(n.edges.is_empty() && n.nodes.is_empty());
    }

    #[test]
    fn stopwords_punctuation_and_threshold() {
        let n = net("the is y. Response is cacheable, response is cacheable; it is z", "is", 2);
        assert_eq!(n.edges.len(), 1);
        assert_eq!(n.edges[0].from, "response");
        assert_eq!(n.edges[0].weight, 2);
        assert_eq!(n.nodes[0].frequency, 2);
    }

    #[test]
    fn empty_connector_is_rejected() {
        let c = TokenizedCorpus::from_texts([("d", "a")]);
        assert_eq!(phrase_net(&c, " ", &BTreeSet::new(), 1), Err(LayoutError::EmptyConnector));
    }
}
