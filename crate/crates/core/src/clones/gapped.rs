//! Fusion of exact clones into gapped clones.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::exact::{Encoded, NO_SEGMENT};
use super::{Group, Span};
use crate::corpus::TokenizedCorpus;
use crate::editdist;

/// Minimum token similarity (2·LCS / total length) for a boundary line to be
/// absorbed into a gapped clone.
const LINE_SIMILARITY: f64 = 0.5;

pub(crate) struct Ctx<'a> {
    corpus: &'a TokenizedCorpus,
    enc: &'a Encoded,
}

impl<'a> Ctx<'a> {
    pub fn new(corpus: &'a TokenizedCorpus, enc: &'a Encoded) -> Self {
        Ctx { corpus, enc }
    }

    fn line(&self, doc: usize, tok: usize) -> u32 {
        self.corpus.documents[doc].tokens[tok].line
    }

    fn segment(&self, doc: usize, tok: usize) -> u32 {
        self.enc.segment[doc][tok]
    }

    fn doc_len(&self, doc: usize) -> usize {
        self.enc.ids[doc].len()
    }

    /// Token ids of a span, grouped by line.
    pub fn lines(&self, s: Span) -> Vec<&'a [u32]> {
        let ids = &self.enc.ids[s.doc];
        let mut out = Vec::new();
        let mut from = s.start;
        for t in s.start + 1..s.end {
            if self.line(s.doc, t) != self.line(s.doc, t - 1) {
                out.push(&ids[from..t]);
                from = t;
            }
        }
        if s.end > s.start {
            out.push(&ids[from..s.end]);
        }
        out
    }

    fn gap_lines(&self, doc: usize, from: usize, to: usize) -> usize {
        (from..to)
            .map(|t| self.line(doc, t))
            .collect::<BTreeSet<_>>()
            .len()
    }

    fn edit_distance(&self, spans: &[Span]) -> usize {
        let skeleton = self.lines(spans[0]);
        spans[1..]
            .iter()
            .map(|&s| editdist::distance(&self.lines(s), &skeleton))
            .max()
            .unwrap_or(0)
    }

    fn line_similarity(a: &[u32], b: &[u32]) -> f64 {
        if a.is_empty() && b.is_empty() {
            return 1.0;
        }
        2.0 * editdist::lcs_len(a, b) as f64 / (a.len() + b.len()) as f64
    }
}

fn disjoint(spans: &[Span]) -> bool {
    spans
        .windows(2)
        .all(|w| w[0].doc != w[1].doc || w[0].end <= w[1].start)
}

/// Fuses `a` with a later group `b`, pairing instances in order.
///
/// Returns the fused group and the number of gap tokens it absorbed.
fn try_fuse(ctx: &Ctx<'_>, a: &Group, b: &Group, max_gap: usize) -> Option<(Group, usize)> {
    if a.spans.len() != b.spans.len() {
        return None;
    }
    let mut fused = Vec::with_capacity(a.spans.len());
    let mut gap_tokens = 0;
    for (x, y) in a.spans.iter().zip(&b.spans) {
        if x.doc != y.doc || y.start < x.end {
            return None;
        }
        if ctx.segment(x.doc, x.end - 1) != ctx.segment(y.doc, y.start) {
            return None;
        }
        if ctx.gap_lines(x.doc, x.end, y.start) > max_gap {
            return None;
        }
        gap_tokens += y.start - x.end;
        fused.push(Span {
            doc: x.doc,
            start: x.start,
            end: y.end,
        });
    }
    if !disjoint(&fused) {
        return None;
    }
    let gap_edits = ctx.edit_distance(&fused);
    if gap_edits > max_gap {
        return None;
    }
    Some((
        Group {
            spans: fused,
            gap_edits,
        },
        gap_tokens,
    ))
}

#[derive(Clone, Copy)]
enum Side {
    Left,
    Right,
}

/// Grows every instance by its neighbouring line on one side if those lines
/// are similar across instances and the edit budget allows it.
fn try_extend(ctx: &Ctx<'_>, g: &Group, side: Side, max_gap: usize) -> Option<Group> {
    let mut spans = Vec::with_capacity(g.spans.len());
    let mut added: Vec<&[u32]> = Vec::with_capacity(g.spans.len());
    for s in &g.spans {
        let ids = &ctx.enc.ids[s.doc];
        let new = match side {
            Side::Left => {
                if s.start == 0 {
                    return None;
                }
                let seg = ctx.segment(s.doc, s.start);
                let prev = s.start - 1;
                if ctx.segment(s.doc, prev) != seg {
                    return None;
                }
                let line = ctx.line(s.doc, prev);
                let mut t = prev;
                while t > 0 && ctx.segment(s.doc, t - 1) == seg && ctx.line(s.doc, t - 1) == line {
                    t -= 1;
                }
                added.push(&ids[t..s.start]);
                Span { start: t, ..*s }
            }
            Side::Right => {
                let next = s.end;
                if next >= ctx.doc_len(s.doc) {
                    return None;
                }
                let seg = ctx.segment(s.doc, s.end - 1);
                if ctx.segment(s.doc, next) != seg || seg == NO_SEGMENT {
                    return None;
                }
                let line = ctx.line(s.doc, next);
                let mut t = next + 1;
                while t < ctx.doc_len(s.doc)
                    && ctx.segment(s.doc, t) == seg
                    && ctx.line(s.doc, t) == line
                {
                    t += 1;
                }
                added.push(&ids[next..t]);
                Span { end: t, ..*s }
            }
        };
        spans.push(new);
    }
    if added
        .iter()
        .skip(1)
        .any(|a| Ctx::line_similarity(a, added[0]) < LINE_SIMILARITY)
    {
        return None;
    }
    if !disjoint(&spans) {
        return None;
    }
    let gap_edits = ctx.edit_distance(&spans);
    if gap_edits > max_gap {
        return None;
    }
    Some(Group { spans, gap_edits })
}

fn first(g: &Group) -> Span {
    g.spans[0]
}

pub(crate) fn fuse(ctx: &Ctx<'_>, mut groups: Vec<Group>, max_gap: usize) -> Vec<Group> {
    loop {
        groups.sort_by(|a, b| first(a).cmp(&first(b)).then_with(|| a.spans.cmp(&b.spans)));
        let mut merge: Option<(usize, usize, Group)> = None;
        'outer: for (ai, a) in groups.iter().enumerate() {
            let a0 = first(a);
            let lo = groups.partition_point(|g| {
                let f = first(g);
                (f.doc, f.start) < (a0.doc, a0.end)
            });
            let mut best: Option<(usize, usize, Group)> = None;
            for (bi, b) in groups.iter().enumerate().skip(lo) {
                let b0 = first(b);
                if b0.doc != a0.doc || ctx.gap_lines(a0.doc, a0.end, b0.start) > max_gap {
                    break;
                }
                if bi == ai {
                    continue;
                }
                if let Some((fused, gap)) = try_fuse(ctx, a, b, max_gap) {
                    if best.as_ref().is_none_or(|(g, _, _)| gap < *g) {
                        best = Some((gap, bi, fused));
                    }
                }
            }
            if let Some((_, bi, fused)) = best {
                merge = Some((ai, bi, fused));
                break 'outer;
            }
        }
        match merge {
            Some((ai, bi, fused)) => {
                let (hi, lo) = if ai > bi { (ai, bi) } else { (bi, ai) };
                groups.remove(hi);
                groups.remove(lo);
                groups.push(fused);
            }
            None => break,
        }
    }

    for g in groups.iter_mut() {
        while g.gap_edits < max_gap {
            let grown = try_extend(ctx, g, Side::Left, max_gap)
                .or_else(|| try_extend(ctx, g, Side::Right, max_gap));
            match grown {
                Some(n) => *g = n,
                None => break,
            }
        }
    }

    groups.sort_by(|a, b| a.spans.cmp(&b.spans));
    groups.dedup_by(|a, b| a.spans == b.spans);
    groups
}
