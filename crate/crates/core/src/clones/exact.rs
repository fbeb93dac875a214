//! Maximal repeats over the concatenated token sequence.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::suffix::{lcp_array, suffix_array};
use super::{Group, Span};
use crate::corpus::TokenizedCorpus;

pub(crate) const NO_SEGMENT: u32 = u32::MAX;
const SENTINEL_ORIGIN: (u32, u32) = (u32::MAX, u32::MAX);

/// Symbol encoding of a tokenized corpus.
///
/// Active tokens map to vocabulary ids. Every maximal run of active tokens
/// within a document (a segment) is terminated by its own sentinel symbol, so
/// no repeat can cross a document boundary or an ignored region.
pub(crate) struct Encoded {
    pub seq: Vec<u32>,
    origin: Vec<(u32, u32)>,
    /// Per document, per token: vocabulary id (meaningless for ignored tokens).
    pub ids: Vec<Vec<u32>>,
    /// Per document, per token: segment id or [`NO_SEGMENT`].
    pub segment: Vec<Vec<u32>>,
}

impl Encoded {
    pub fn new(corpus: &TokenizedCorpus) -> Self {
        let mut vocab: BTreeMap<&str, u32> = BTreeMap::new();
        for d in &corpus.documents {
            for t in d.active_tokens() {
                vocab.entry(t.normalized.as_str()).or_insert(0);
            }
        }
        for (i, v) in vocab.values_mut().enumerate() {
            *v = i as u32;
        }
        let vocab_len = vocab.len() as u32;

        let mut seq = Vec::new();
        let mut origin = Vec::new();
        let mut ids = Vec::with_capacity(corpus.documents.len());
        let mut segment = Vec::with_capacity(corpus.documents.len());
        let mut next_segment = 0u32;

        for (di, d) in corpus.documents.iter().enumerate() {
            let mut doc_ids = Vec::with_capacity(d.tokens.len());
            let mut doc_seg = Vec::with_capacity(d.tokens.len());
            let mut open = false;
            for (ti, (t, &ignored)) in d.tokens.iter().zip(&d.ignored).enumerate() {
                if ignored {
                    if open {
                        seq.push(vocab_len + next_segment);
                        origin.push(SENTINEL_ORIGIN);
                        next_segment += 1;
                        open = false;
                    }
                    doc_ids.push(u32::MAX);
                    doc_seg.push(NO_SEGMENT);
                    continue;
                }
                open = true;
                let id = vocab[t.normalized.as_str()];
                seq.push(id);
                origin.push((di as u32, ti as u32));
                doc_ids.push(id);
                doc_seg.push(next_segment);
            }
            if open {
                seq.push(vocab_len + next_segment);
                origin.push(SENTINEL_ORIGIN);
                next_segment += 1;
            }
            ids.push(doc_ids);
            segment.push(doc_seg);
        }
        Encoded {
            seq,
            origin,
            ids,
            segment,
        }
    }

    fn span_at(&self, pos: usize, len: usize) -> Span {
        let (doc, tok) = self.origin[pos];
        Span {
            doc: doc as usize,
            start: tok as usize,
            end: tok as usize + len,
        }
    }

    /// Whether the occurrences at `positions` are preceded by different
    /// symbols (a sequence or segment start counts as unique).
    fn left_maximal(&self, positions: &[usize]) -> bool {
        let prev = |p: usize| {
            if p == 0 || self.origin[p - 1] == SENTINEL_ORIGIN {
                None
            } else {
                Some(self.seq[p - 1])
            }
        };
        let first = match prev(positions[0]) {
            Some(x) => x,
            None => return true,
        };
        positions[1..].iter().any(|&p| prev(p) != Some(first))
    }
}

/// Enumerates lcp-intervals bottom-up; every interval with lcp value at
/// least `min_length` is a right-maximal repeat, kept if also left-maximal.
pub(crate) fn maximal_repeats(enc: &Encoded, min_length: usize) -> Vec<Group> {
    let n = enc.seq.len();
    if n < 2 {
        return Vec::new();
    }
    let sa = suffix_array(&enc.seq);
    let lcp = lcp_array(&enc.seq, &sa);

    let mut groups = Vec::new();
    let mut report = |len: usize, lb: usize, rb: usize| {
        if len < min_length {
            return;
        }
        let mut positions: Vec<usize> = sa[lb..=rb].to_vec();
        positions.sort_unstable();
        if !enc.left_maximal(&positions) {
            return;
        }
        let spans = positions.iter().map(|&p| enc.span_at(p, len)).collect();
        groups.push(Group { spans, gap_edits: 0 });
    };

    // (lcp value, left bound)
    let mut stack: Vec<(usize, usize)> = alloc::vec![(0, 0)];
    for i in 1..=n {
        let cur = lcp.get(i).copied().filter(|_| i < n).unwrap_or(0);
        let mut lb = i - 1;
        while cur < stack[stack.len() - 1].0 {
            let (len, b) = stack.pop().expect("root interval never popped");
            report(len, b, i - 1);
            lb = b;
        }
        if cur > stack[stack.len() - 1].0 {
            stack.push((cur, lb));
        }
    }
    groups
}
