//! Clone detection against a brute-force maximal-repeat oracle, plus
//! coverage laws.

use std::collections::{BTreeSet, HashMap};

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use textproj_core::clones::{
    clone_coverage, detect_exact_clones, detect_gapped_clones, CloneGroup,
};
use textproj_core::TokenizedCorpus;

const ALPHABET: [&str; 5] = ["a", "b", "c", "d", "e"];

/// (length, sorted occurrence positions) of every maximal repeat.
type RepeatSet = BTreeSet<(usize, Vec<(usize, usize)>)>;

/// Enumerates every repeated window per length and keeps those that cannot
/// be extended by one symbol on either side in all occurrences.
fn oracle(docs: &[Vec<usize>], min_len: usize) -> RepeatSet {
    let mut out = RepeatSet::new();
    for len in min_len.. {
        let mut windows: HashMap<&[usize], Vec<(usize, usize)>> = HashMap::new();
        for (d, doc) in docs.iter().enumerate() {
            for i in 0..doc.len().saturating_sub(len - 1) {
                windows.entry(&doc[i..i + len]).or_default().push((d, i));
            }
        }
        let mut repeated = false;
        for occ in windows.values().filter(|o| o.len() >= 2) {
            repeated = true;
            let next = |&(d, i): &(usize, usize)| docs[d].get(i + len).copied();
            let prev = |&(d, i): &(usize, usize)| if i == 0 { None } else { Some(docs[d][i - 1]) };
            let right_ext = next(&occ[0]).is_some() && occ.iter().all(|o| next(o) == next(&occ[0]));
            let left_ext = prev(&occ[0]).is_some() && occ.iter().all(|o| prev(o) == prev(&occ[0]));
            if !right_ext && !left_ext {
                let mut pos = occ.clone();
                pos.sort();
                out.insert((len, pos));
            }
        }
        if !repeated {
            break;
        }
    }
    out
}

fn as_set(corpus: &TokenizedCorpus, groups: &[CloneGroup]) -> RepeatSet {
    groups
        .iter()
        .map(|g| {
            let pos = g
                .instances
                .iter()
                .map(|i| (corpus.index_of(&i.document_id).unwrap(), i.start_token))
                .collect();
            (g.length_tokens, pos)
        })
        .collect()
}

/// Random documents over a 5-symbol alphabet, split into short lines.
fn random_docs(seed: u64, max_total: usize) -> Vec<Vec<usize>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ndocs = rng.random_range(1..=3);
    let total = rng.random_range(10..=max_total);
    let mut docs = vec![Vec::new(); ndocs];
    for _ in 0..total {
        let d = rng.random_range(0..ndocs);
        docs[d].push(rng.random_range(0..ALPHABET.len()));
    }
    docs.retain(|d| !d.is_empty());
    docs
}

fn render(docs: &[Vec<usize>], seed: u64) -> Vec<(String, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    docs.iter()
        .enumerate()
        .map(|(i, d)| {
            let mut text = String::new();
            for (k, &s) in d.iter().enumerate() {
                if k > 0 {
                    text.push(if rng.random_range(0..6) == 0 { '\n' } else { ' ' });
                }
                text.push_str(ALPHABET[s]);
            }
            (format!("doc{i:02}"), text)
        })
        .collect()
}

fn corpus_of(texts: &[(String, String)]) -> TokenizedCorpus {
    TokenizedCorpus::from_texts(texts.iter().map(|(a, b)| (a.as_str(), b.as_str())))
}

#[test]
fn exact_clones_equal_oracle_on_seeded_corpora() {
    for seed in 0..100u64 {
        let docs = random_docs(seed, 300);
        let corpus = corpus_of(&render(&docs, seed));
        let min_len = 2 + (seed as usize % 5);
        let got = as_set(&corpus, &detect_exact_clones(&corpus, min_len).unwrap());
        assert_eq!(got, oracle(&docs, min_len), "seed {seed}, min_len {min_len}");
    }
}

fn coverage(texts: &[(String, String)], min_len: usize, max_gap: usize) -> f64 {
    let c = corpus_of(texts);
    let g = detect_gapped_clones(&c, min_len, max_gap).unwrap();
    clone_coverage(&c, &g).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reported_groups_are_maximal(seed in any::<u64>(), min_len in 2usize..6) {
        let docs = random_docs(seed, 200);
        let texts = render(&docs, seed);
        let corpus = corpus_of(&texts);
        for g in detect_exact_clones(&corpus, min_len).unwrap() {
            prop_assert!(g.instances.len() >= 2);
            let sym = |i: &textproj_core::clones::CloneInstance, t: usize| {
                corpus.document(&i.document_id).unwrap().tokens.get(t).map(|t| t.normalized.clone())
            };
            let first = &g.instances[0];
            let right = g.instances.iter().all(|i| sym(i, i.end_token).is_some()
                && sym(i, i.end_token) == sym(first, first.end_token));
            let left = g.instances.iter().all(|i| i.start_token > 0
                && sym(i, i.start_token - 1) == sym(first, first.start_token.wrapping_sub(1)));
            prop_assert!(!right && !left);
        }
    }

    #[test]
    fn coverage_is_monotone(seed in any::<u64>()) {
        let texts = render(&random_docs(seed, 150), seed);
        let mut last = 1.0f64;
        for min_len in 2..8 {
            let c = coverage(&texts, min_len, 0);
            prop_assert!((0.0..=1.0).contains(&c));
            prop_assert!(c <= last + 1e-12, "min_len {} raised coverage", min_len);
            last = c;
        }
        let mut last = 0.0f64;
        for max_gap in 0..4 {
            let c = coverage(&texts, 4, max_gap);
            prop_assert!(c + 1e-12 >= last, "max_gap {} lowered coverage", max_gap);
            last = c;
        }
    }

    #[test]
    fn gapped_min_length_monotone(seed in any::<u64>()) {
        let texts = render(&random_docs(seed, 150), seed);
        let mut last = 1.0f64;
        for min_len in 2..8 {
            let c = coverage(&texts, min_len, 2);
            prop_assert!(c <= last + 1e-12, "min_len {} raised gapped coverage", min_len);
            last = c;
        }
    }

    #[test]
    fn duplicated_corpus_fully_covered(seed in any::<u64>()) {
        let docs = random_docs(seed, 120);
        let mut texts = render(&docs, seed);
        let copies: Vec<(String, String)> =
            texts.iter().map(|(id, t)| (format!("{id}-copy"), t.clone())).collect();
        texts.extend(copies);
        let min_len = docs.iter().map(Vec::len).min().unwrap().clamp(2, 5);
        prop_assert_eq!(coverage(&texts, min_len, 0), 1.0);
        prop_assert_eq!(coverage(&texts, min_len, 2), 1.0);
    }

    #[test]
    fn detection_is_deterministic(seed in any::<u64>()) {
        let texts = render(&random_docs(seed, 200), seed);
        let a = detect_gapped_clones(&corpus_of(&texts), 3, 2).unwrap();
        let b = detect_gapped_clones(&corpus_of(&texts), 3, 2).unwrap();
        prop_assert_eq!(a, b);
    }
}
