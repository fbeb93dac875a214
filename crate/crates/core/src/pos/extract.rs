//! Term, entity-relationship and passive-voice extraction from tagged
//! sentences.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Write;

use serde::{Deserialize, Serialize};

use super::{Tag, TaggedToken};

/// A maximal run of nouns with its preceding adjectives.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub text: String,
    pub qualifiers: Vec<String>,
    /// Token range of the noun run within the sentence.
    pub start: usize,
    pub end: usize,
}

fn noun_runs(sentence: &[TaggedToken]) -> Vec<(usize, usize)> {
    let mut runs = Vec::new();
    let mut i = 0;
    while i < sentence.len() {
        if sentence[i].tag.is_noun() {
            let s = i;
            while i < sentence.len() && sentence[i].tag.is_noun() {
                i += 1;
            }
            runs.push((s, i));
        } else {
            i += 1;
        }
    }
    runs
}

fn surface(sentence: &[TaggedToken], from: usize, to: usize) -> String {
    let mut out = String::new();
    for t in &sentence[from..to] {
        if !out.is_empty() {
            out.push(' ');
        }
        out.push_str(&t.token.surface);
    }
    out
}

/// Adjectives directly before `start`; commas and conjunctions between
/// adjectives or before the noun are skipped.
fn qualifiers(sentence: &[TaggedToken], start: usize) -> Vec<String> {
    let mut out = Vec::new();
    let mut j = start;
    while j > 0 {
        let t = sentence[j - 1].tag;
        if t.is_adjective() {
            out.push(sentence[j - 1].token.surface.clone());
            j -= 1;
        } else if matches!(t, Tag::Comma | Tag::Cc) && j >= 2 && sentence[j - 2].tag.is_adjective() {
            j -= 1;
        } else {
            break;
        }
    }
    out.reverse();
    out
}

/// Maximal noun runs in textual order, casing preserved.
pub fn extract_terms(sentence: &[TaggedToken]) -> Vec<Term> {
    noun_runs(sentence)
        .into_iter()
        .map(|(s, e)| Term {
            text: surface(sentence, s, e),
            qualifiers: qualifiers(sentence, s),
            start: s,
            end: e,
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entity {
    pub name: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relationship {
    pub from: String,
    pub to: String,
    pub label: String,
}

/// Entities with case-insensitively unique names and labelled directed
/// edges between them.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErGraph {
    pub entities: Vec<Entity>,
    pub relationships: Vec<Relationship>,
}

impl ErGraph {
    /// Name of the existing entity equal to `name` ignoring case.
    pub fn find(&self, name: &str) -> Option<&str> {
        let key = name.to_lowercase();
        self.entities
            .iter()
            .find(|e| e.name.to_lowercase() == key)
            .map(|e| e.name.as_str())
    }

    fn intern(&mut self, name: &str) -> String {
        if let Some(n) = self.find(name) {
            return n.to_string();
        }
        self.entities.push(Entity { name: name.to_string() });
        name.to_string()
    }

    fn relate(&mut self, from: &str, to: &str, label: String) {
        let from = self.intern(from);
        let to = self.intern(to);
        let dup = self.relationships.iter().any(|r| {
            r.from == from && r.to == to && r.label.to_lowercase() == label.to_lowercase()
        });
        if !dup {
            self.relationships.push(Relationship { from, to, label });
        }
    }

    /// Graphviz rendering.
    pub fn to_dot(&self) -> String {
        fn q(s: &str) -> String {
            let mut o = String::from("\"");
            for c in s.chars() {
                if c == '"' || c == '\\' {
                    o.push('\\');
                }
                o.push(c);
            }
            o.push('"');
            o
        }
        let mut out = String::from("digraph er {\n  node [shape=box];\n");
        for e in &self.entities {
            let _ = writeln!(out, "  {};", q(&e.name));
        }
        for r in &self.relationships {
            let _ = writeln!(out, "  {} -> {} [label={}];", q(&r.from), q(&r.to), q(&r.label));
        }
        out.push_str("}\n");
        out
    }
}

fn blocks_relationship(t: &TaggedToken) -> bool {
    matches!(t.tag, Tag::Period | Tag::Colon | Tag::Lrb | Tag::Rrb)
}

fn is_label_head(tag: Tag) -> bool {
    tag.is_verb() || matches!(tag, Tag::Md | Tag::To | Tag::In | Tag::Rp)
}

/// Noun runs become entities; the verbs, auxiliaries, particles and
/// prepositions between two neighbouring entities label a relationship
/// from the first to the second.
pub fn extract_er(sentence: &[TaggedToken]) -> ErGraph {
    let mut g = ErGraph::default();
    let runs = noun_runs(sentence);
    for &(s, e) in &runs {
        g.intern(&surface(sentence, s, e));
    }
    for w in runs.windows(2) {
        let ((s1, e1), (s2, e2)) = (w[0], w[1]);
        let mid = &sentence[e1..s2];
        if mid.iter().any(blocks_relationship) || !mid.iter().any(|t| is_label_head(t.tag)) {
            continue;
        }
        let label: Vec<&str> = mid
            .iter()
            .filter(|t| is_label_head(t.tag) || t.tag.is_adverb())
            .map(|t| t.token.surface.as_str())
            .collect();
        g.relate(&surface(sentence, s1, e1), &surface(sentence, s2, e2), label.join(" "));
    }
    g
}

/// Union of several graphs with case-insensitive entity merging.
pub fn merge_graphs<'a>(graphs: impl IntoIterator<Item = &'a ErGraph>) -> ErGraph {
    let mut out = ErGraph::default();
    for g in graphs {
        for e in &g.entities {
            out.intern(&e.name);
        }
        for r in &g.relationships {
            out.relate(&r.from, &r.to, r.label.clone());
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SmellKind {
    PassiveVoice,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmellFinding {
    pub document_id: String,
    /// Byte range of the sentence in the document.
    pub sentence_start: usize,
    pub sentence_end: usize,
    pub kind: SmellKind,
    /// Auxiliary through participle, e.g. "be included".
    pub evidence: String,
    pub evidence_start: usize,
    pub evidence_end: usize,
}

const BE_FORMS: &[&str] = &["am", "are", "be", "been", "being", "is", "was", "were"];

/// A finding for every be-form followed within two tokens by a past
/// participle. Each participle is reported once.
pub fn detect_passive(document_id: &str, sentence: &[TaggedToken]) -> Vec<SmellFinding> {
    let mut out = Vec::new();
    let (Some(first), Some(last)) = (sentence.first(), sentence.last()) else {
        return out;
    };
    let mut used = BTreeSet::new();
    for (i, t) in sentence.iter().enumerate() {
        if !BE_FORMS.contains(&t.token.surface.to_lowercase().as_str()) {
            continue;
        }
        let Some(j) = (i + 1..sentence.len().min(i + 3)).find(|&j| sentence[j].tag == Tag::Vbn) else {
            continue;
        };
        if !used.insert(j) {
            continue;
        }
        out.push(SmellFinding {
            document_id: document_id.to_string(),
            sentence_start: first.token.start,
            sentence_end: last.token.end,
            kind: SmellKind::PassiveVoice,
            evidence: surface(sentence, i, j + 1),
            evidence_start: t.token.start,
            evidence_end: sentence[j].token.end,
        });
    }
    out
}
