//! Acceptance criteria 1-12. Prints one PASS/FAIL line per criterion and
//! exits non-zero when any fails.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fs;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::weighted::WeightedIndex;
use rand_distr::{Dirichlet, Distribution};
use textproj::analysis;
use textproj::config::PipelineConfig;
use textproj::ignore::tokenize_corpus;
use textproj::io::read_json;
use textproj::pipeline::{self, run_pipeline, Loaded};
use textproj_core::clones::{clone_coverage, detect_exact_clones, detect_gapped_clones, CloneConfig, CloneGroup};
use textproj_core::coding::{axial_graph, cohen_kappa, condense_graph, occurrence_counts, Codebook};
use textproj_core::corpus::{Corpus, Document, TokenizedCorpus, TokenizerConfig};
use textproj_core::layout::{default_stopwords, phrase_net, treemap, word_cloud, Palette, TreemapItem, WordCloudConfig};
use textproj_core::ngram::{categorize, train_char_profile, Smoothing};
use textproj_core::pos::{detect_passive, extract_er, tag_text, BaselineTagger};
use textproj_core::topics::{english_stopwords, BagDocument, LdaConfig, Sampler};

// Pinned tolerances and budgets.
const ORACLE_SEEDS: u64 = 100;
const ORACLE_BUDGET: Duration = Duration::from_secs(30);
const FIG7_BUDGET: Duration = Duration::from_secs(10);
const COVERAGE_RANGE: (f64, f64) = (0.10, 0.45);
const COVERAGE_BUDGET: Duration = Duration::from_secs(60);
const LAW_CORPORA: u64 = 50;
const NATURALNESS_MARGIN: f64 = 0.5;
const NATURALNESS_SEED: u64 = 42;
const NATURALNESS_BUDGET: Duration = Duration::from_secs(30);
const CATEGORIZATION_ACCURACY: f64 = 0.95;
const LDA_OVERLAP: usize = 3;
const LDA_BUDGET: Duration = Duration::from_secs(60);
const LDA_RFC_SEEDS: [u64; 2] = [42, 43];
const LDA_RFC_K: usize = 5;
const LDA_RFC_HITS: usize = 2;
const KAPPA_TOL: f64 = 1e-9;
const CLOUD_SETS: u64 = 1000;
const TREEMAP_AREA_TOL: f64 = 0.01;
const TILING_TOL: f64 = 1e-9;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

fn rfc_config() -> PipelineConfig {
    PipelineConfig::load(&fixtures().join("rfc_pipeline.json")).expect("pipeline config")
}

fn rfc() -> Loaded {
    pipeline::load_corpus(&rfc_config()).expect("RFC corpus")
}

fn check(cond: bool, detail: String) -> Outcome {
    if cond {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn within(start: Instant, budget: Duration, detail: String) -> Outcome {
    let t = start.elapsed();
    check(t < budget, format!("{detail}; {:.2}s of {}s", t.as_secs_f64(), budget.as_secs()))
}

// 1

const ALPHABET: [&str; 5] = ["a", "b", "c", "d", "e"];

type RepeatSet = BTreeSet<(usize, Vec<(usize, usize)>)>;

/// Every repeated window that no occurrence set extends by one symbol.
fn maximal_repeats(docs: &[Vec<usize>], min_len: usize) -> RepeatSet {
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
            let prev = |&(d, i): &(usize, usize)| i.checked_sub(1).map(|j| docs[d][j]);
            let right = next(&occ[0]).is_some() && occ.iter().all(|o| next(o) == next(&occ[0]));
            let left = prev(&occ[0]).is_some() && occ.iter().all(|o| prev(o) == prev(&occ[0]));
            if !right && !left {
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

fn random_docs(rng: &mut ChaCha8Rng, max_total: usize) -> Vec<Vec<usize>> {
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

fn render(docs: &[Vec<usize>], rng: &mut ChaCha8Rng) -> Vec<(String, String)> {
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

fn clone_oracle() -> Outcome {
    let start = Instant::now();
    for seed in 0..ORACLE_SEEDS {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let docs = random_docs(&mut rng, 300);
        let corpus = corpus_of(&render(&docs, &mut rng));
        let min_len = 2 + (seed as usize % 5);
        let got = as_set(&corpus, &detect_exact_clones(&corpus, min_len).map_err(|e| e.to_string())?);
        if got != maximal_repeats(&docs, min_len) {
            return Err(format!("seed {seed} differs from the oracle"));
        }
    }
    within(start, ORACLE_BUDGET, format!("{ORACLE_SEEDS} corpora equal the oracle"))
}

// 2

fn fig7_clone() -> Outcome {
    let start = Instant::now();
    let loaded = rfc();
    let doc = loaded.corpus.document("rfc2616.txt").ok_or("rfc2616.txt missing")?.clone();
    let text = doc.text.clone();
    let single = Corpus::new(vec![doc], vec![]).map_err(|e| e.to_string())?;
    let tokenized = tokenize_corpus(&single, TokenizerConfig::default(), &loaded.patterns);
    let groups = detect_gapped_clones(&tokenized, 20, 2).map_err(|e| e.to_string())?;
    let b1 = text.find("Media Type name:         message").ok_or("message block missing")?;
    let b2 = text.find("Media Type name:         application").ok_or("application block missing")?;
    let end = text.len();
    // Byte span from the parameter list through the last line of each block.
    let span = |from: usize, to: usize| -> Option<(usize, usize)> {
        let a = from + text[from..to].find("Required parameters")?;
        let b = from + text[from..to].rfind("line of the body.")?;
        Some((a, b))
    };
    let (s1, s2) = (span(b1, b2).ok_or("block 1")?, span(b2, end).ok_or("block 2")?);
    let toks = &tokenized.documents[0].tokens;
    let covers = |g: &CloneGroup, (a, b): (usize, usize)| {
        g.instances.iter().any(|i| toks[i.start_token].start <= a && toks[i.end_token - 1].end > b)
    };
    let hit = groups.iter().find(|g| covers(g, s1) && covers(g, s2));
    match hit {
        Some(g) => within(
            start,
            FIG7_BUDGET,
            format!("group {} covers both blocks, {} tokens, {} gap edits", g.id, g.length_tokens, g.gap_edits),
        ),
        None => Err(format!("no group spans both media-type blocks among {} groups", groups.len())),
    }
}

// 3

fn rfc_coverage() -> Outcome {
    let start = Instant::now();
    let loaded = rfc();
    let report = analysis::detect_clones(&loaded.corpus, &loaded.patterns, &CloneConfig::default())
        .map_err(|e| e.to_string())?;
    let c = report.stats.clone_coverage;
    let (lo, hi) = COVERAGE_RANGE;
    let detail = format!(
        "coverage {c:.4} over {} documents (min_length {}, max_gap {})",
        loaded.corpus.len(),
        report.config.min_length,
        report.config.max_gap
    );
    if !(lo..=hi).contains(&c) || loaded.corpus.len() != 11 {
        return Err(detail);
    }
    within(start, COVERAGE_BUDGET, detail)
}

// 4

fn coverage_of(texts: &[(String, String)], min_len: usize, max_gap: usize) -> f64 {
    let c = corpus_of(texts);
    clone_coverage(&c, &detect_gapped_clones(&c, min_len, max_gap).unwrap()).unwrap()
}

fn coverage_laws() -> Outcome {
    for seed in 0..LAW_CORPORA {
        let mut rng = ChaCha8Rng::seed_from_u64(1000 + seed);
        let docs = random_docs(&mut rng, 200);
        let texts = render(&docs, &mut rng);
        let min_len = rng.random_range(2..6);
        let mut doubled = texts.clone();
        doubled.extend(texts.iter().map(|(id, t)| (format!("{id}-copy"), t.clone())));
        let shortest = docs.iter().map(Vec::len).min().unwrap();
        let dup = coverage_of(&doubled, min_len.min(shortest).max(1), 0);
        if (dup - 1.0).abs() > 1e-12 {
            return Err(format!("seed {seed}: duplicated corpus coverage {dup}"));
        }
        let unique: Vec<(String, String)> = vec![(
            "u".into(),
            (0..rng.random_range(5..200)).map(|i| format!("w{i}")).collect::<Vec<_>>().join(" "),
        )];
        let free = coverage_of(&unique, min_len, 2);
        if free != 0.0 {
            return Err(format!("seed {seed}: clone-free coverage {free}"));
        }
        for gap in 0..3 {
            let seq: Vec<f64> = (2..8).map(|m| coverage_of(&texts, m, gap)).collect();
            if seq.windows(2).any(|w| w[1] > w[0] + 1e-12) {
                return Err(format!("seed {seed}: not monotone in min_length: {seq:?}"));
            }
        }
        let seq: Vec<f64> = (0..4).map(|g| coverage_of(&texts, min_len, g)).collect();
        if seq.windows(2).any(|w| w[1] + 1e-12 < w[0]) {
            return Err(format!("seed {seed}: not monotone in max_gap: {seq:?}"));
        }
    }
    Ok(format!("{LAW_CORPORA} random corpora"))
}

// 5

fn naturalness() -> Outcome {
    let start = Instant::now();
    let loaded = rfc();
    let report = analysis::naturalness(
        &loaded.corpus,
        &loaded.tokenized,
        3,
        Smoothing::AddOne,
        NATURALNESS_SEED,
        &[],
    )
    .map_err(|e| e.to_string())?;
    let row = report
        .naturalness
        .iter()
        .find(|r| r.document_id == "rfc2616.txt")
        .ok_or("no row for rfc2616.txt")?;
    let margin = row.shuffled_cross_entropy - row.cross_entropy;
    let mean = report
        .naturalness
        .iter()
        .map(|r| r.shuffled_cross_entropy - r.cross_entropy)
        .sum::<f64>()
        / report.naturalness.len() as f64;
    let detail = format!(
        "held-out rfc2616: {:.3} vs shuffled {:.3} bits/token, margin {margin:.3} (mean over all {} folds {mean:.3})",
        row.cross_entropy,
        row.shuffled_cross_entropy,
        report.naturalness.len()
    );
    if margin < NATURALNESS_MARGIN {
        return Err(detail);
    }
    within(start, NATURALNESS_BUDGET, detail)
}

// 6

/// First paragraph of at least 200 characters after the title page.
fn body_paragraph(doc: &Document) -> Option<String> {
    let body = &doc.text[doc.text.find("All Rights Reserved.")?..];
    body.split("\n\n")
        .skip(1)
        .map(|p| p.split_whitespace().collect::<Vec<_>>().join(" "))
        .find(|p| p.len() >= 200)
}

fn categorization() -> Outcome {
    let lang = fixtures().join("lang");
    let read = |f: &str| fs::read_to_string(lang.join(f)).unwrap();
    let profiles = vec![
        train_char_profile(&read("english.txt"), "english").map_err(|e| e.to_string())?,
        train_char_profile(&read("german.txt"), "german").map_err(|e| e.to_string())?,
    ];
    let loaded = rfc();
    let mut labelled: Vec<(String, &str)> = loaded
        .corpus
        .documents()
        .iter()
        .filter_map(body_paragraph)
        .take(10)
        .map(|p| (p, "english"))
        .collect();
    let german: Vec<String> = read_json(&lang.join("german_excerpts.json")).map_err(|e| e.to_string())?;
    labelled.extend(german.into_iter().map(|p| (p, "german")));
    if labelled.len() != 20 {
        return Err(format!("expected 20 excerpts, found {}", labelled.len()));
    }
    let mut correct = 0;
    for (text, want) in &labelled {
        if categorize(&profiles, text).map_err(|e| e.to_string())?.best() == *want {
            correct += 1;
        }
    }
    let accuracy = correct as f64 / labelled.len() as f64;
    let mut english = 0;
    for d in loaded.corpus.documents() {
        if categorize(&profiles, &d.text).map_err(|e| e.to_string())?.best() == "english" {
            english += 1;
        }
    }
    check(
        accuracy >= CATEGORIZATION_ACCURACY && english == loaded.corpus.len(),
        format!(
            "{correct}/{} excerpts correct ({:.0}%), {english}/{} RFC documents English",
            labelled.len(),
            accuracy * 100.0,
            loaded.corpus.len()
        ),
    )
}

// 7

const TOPICS: [[&str; 8]; 3] = [
    ["apple", "banana", "cherry", "grape", "lemon", "mango", "peach", "plum"],
    ["anvil", "chisel", "drill", "hammer", "lathe", "pliers", "saw", "wrench"],
    ["cello", "drum", "flute", "harp", "oboe", "piano", "tuba", "viola"],
];
const WEIGHTS: [f64; 8] = [30.0, 22.0, 16.0, 11.0, 8.0, 6.0, 4.0, 3.0];

fn synthetic_documents(seed: u64) -> Vec<BagDocument> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let theta = Dirichlet::new([0.3f64; 3]).unwrap();
    let words = WeightedIndex::new(WEIGHTS).unwrap();
    (0..60)
        .map(|d| {
            let pick = WeightedIndex::new(theta.sample(&mut rng)).unwrap();
            let w = (0..80)
                .map(|_| TOPICS[pick.sample(&mut rng)][words.sample(&mut rng)].to_string())
                .collect();
            BagDocument { id: format!("d{d:03}"), words: w }
        })
        .collect()
}

fn lda_recovery() -> Outcome {
    let start = Instant::now();
    let docs = synthetic_documents(7);
    let cfg = LdaConfig {
        alpha: Some(0.1),
        iterations: 500,
        ..LdaConfig::new(3, 11)
    };
    let mut sampler = Sampler::new(&docs, &cfg).map_err(|e| e.to_string())?;
    for _ in 0..cfg.iterations {
        sampler.sweep();
        if sampler.iterations_done() % 100 == 0 {
            sampler
                .model()
                .check_consistency()
                .map_err(|e| format!("after {} sweeps: {e}", sampler.iterations_done()))?;
        }
    }
    let model = sampler.into_model();
    let mut overlaps = Vec::new();
    for gen in &TOPICS {
        let best = (0..3)
            .map(|k| {
                let top = model.top_words(k, 5).unwrap();
                top.iter().filter(|(w, _)| gen[..5].contains(&w.as_str())).count()
            })
            .max()
            .unwrap();
        overlaps.push(best);
    }
    if overlaps.iter().any(|&o| o < LDA_OVERLAP) {
        return Err(format!("top-5 overlaps {overlaps:?}"));
    }
    let synthetic = format!("synthetic top-5 overlaps {overlaps:?}, counts consistent every 100 sweeps");
    let loaded = rfc();
    let anchors = ["request", "response", "header"];
    let mut attempts = Vec::new();
    for &seed in &LDA_RFC_SEEDS {
        let model = analysis::fit_topics(&loaded.tokenized, &english_stopwords(), &LdaConfig::new(LDA_RFC_K, seed))
            .map_err(|e| e.to_string())?;
        let t = model.dominant_topic("rfc2616.txt").map_err(|e| e.to_string())?;
        let top: Vec<String> = model.top_words(t, 10).unwrap().into_iter().map(|(w, _)| w).collect();
        let hits = anchors.iter().filter(|a| top.iter().any(|w| w == *a)).count();
        attempts.push(format!("seed {seed}: {hits} of 3 in [{}]", top.join(" ")));
        if hits >= LDA_RFC_HITS {
            return within(
                start,
                LDA_BUDGET,
                format!("{synthetic}; RFC soft check (K={LDA_RFC_K}) {}", attempts.join("; ")),
            );
        }
    }
    Err(format!("{synthetic}; RFC soft check failed: {}", attempts.join("; ")))
}

// 8

fn er_extraction() -> Outcome {
    let sentence = "Most HTTP communication is initiated by a user agent and consists of a \
                    request to be applied to a resource on some origin server.";
    let tagged = tag_text(&BaselineTagger, "fig5", sentence);
    let g = extract_er(&tagged[0]);
    let entities: Vec<&str> = g.entities.iter().map(|e| e.name.as_str()).collect();
    let rels: Vec<(&str, &str, &str)> = g
        .relationships
        .iter()
        .map(|r| (r.from.as_str(), r.label.as_str(), r.to.as_str()))
        .collect();
    let want_entities = ["HTTP communication", "user agent", "request", "resource", "origin server"];
    let want_rels = [
        ("HTTP communication", "is initiated by", "user agent"),
        ("user agent", "consists of", "request"),
        ("request", "to be applied to", "resource"),
        ("resource", "on", "origin server"),
    ];
    check(
        tagged.len() == 1 && entities == want_entities && rels == want_rels,
        format!("{} entities, {} relationships", entities.len(), rels.len()),
    )
}

// 9

fn passive_voice() -> Outcome {
    let flagged = |s: &str| -> Vec<String> {
        tag_text(&BaselineTagger, "d", s)
            .iter()
            .flat_map(|t| detect_passive("d", t))
            .map(|f| f.evidence)
            .collect()
    };
    let a = flagged("Comments can be included in some HTTP header fields.");
    let b = flagged(
        "Most HTTP communication is initiated by a user agent and consists of a request \
         to be applied to a resource on some origin server.",
    );
    let c = flagged("The server stores the message.");
    check(
        !a.is_empty() && b.iter().any(|e| e == "is initiated") && c.is_empty(),
        format!("flagged {a:?}, {b:?}, clean sentence {c:?}"),
    )
}

// 10

fn coding() -> Outcome {
    let cb: Codebook = read_json(&fixtures().join("napire/codebook.json")).map_err(|e| e.to_string())?;
    let counts = occurrence_counts(&cb);
    let condensed = condense_graph(&axial_graph(&cb), 7);
    let kept: BTreeMap<&str, usize> = condensed.nodes.iter().map(|n| (n.code_id.as_str(), n.occurrences)).collect();
    let cr = cb.codes.iter().find(|c| c.name == "Change Request").ok_or("no Change Request code")?;
    if counts[&cr.id] != 22 || kept.get(cr.id.as_str()) != Some(&22) {
        return Err(format!("Change Request count {} / kept {:?}", counts[&cr.id], kept.get(cr.id.as_str())));
    }
    let dropped_low = counts.iter().filter(|(_, &n)| n < 7).all(|(id, _)| !kept.contains_key(id.as_str()));
    let kept_high = counts.iter().filter(|(_, &n)| n >= 7).all(|(id, _)| kept.contains_key(id.as_str()));
    if !(dropped_low && kept_high) {
        return Err(format!("condensed nodes {kept:?}"));
    }
    let same: Vec<(char, char)> = "XXXXXYYYYY".chars().map(|c| (c, c)).collect();
    let k1 = cohen_kappa(&same).map_err(|e| e.to_string())?.kappa;
    let pairs: Vec<(char, char)> = "XXXXXYYYYY".chars().zip("XXXXYXYYYY".chars()).collect();
    let a = cohen_kappa(&pairs).map_err(|e| e.to_string())?;
    check(
        (k1 - 1.0).abs() <= KAPPA_TOL
            && (a.kappa - 0.6).abs() <= KAPPA_TOL
            && (a.percent_agreement - 0.8).abs() <= KAPPA_TOL
            && (a.expected_agreement - 0.5).abs() <= KAPPA_TOL,
        format!(
            "{} of {} nodes kept at 7, kappa {k1:.9} and {:.9} (po {:.3}, pe {:.3})",
            kept.len(),
            counts.len(),
            a.kappa,
            a.percent_agreement,
            a.expected_agreement
        ),
    )
}

// 11

fn visualizations() -> Outcome {
    for seed in 0..CLOUD_SETS {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.random_range(1..60);
        let freq: BTreeMap<String, usize> = (0..n)
            .map(|i| {
                let len = rng.random_range(1..10);
                let w: String = (0..len).map(|_| rng.random_range(b'a'..=b'z') as char).collect();
                (format!("{w}{i}"), rng.random_range(1..500))
            })
            .collect();
        let l = word_cloud(&freq, &BTreeSet::new(), &WordCloudConfig { seed, ..Default::default() })
            .map_err(|e| format!("cloud {seed}: {e}"))?;
        for (i, a) in l.words.iter().enumerate() {
            if !a.bbox.within(l.width, l.height) || l.words[i + 1..].iter().any(|b| a.bbox.intersects(&b.bbox)) {
                return Err(format!("cloud {seed}: overlapping or outside box for {}", a.word));
            }
        }
    }
    let items: Vec<TreemapItem> = read_json(&fixtures().join("table2.json")).map_err(|e| e.to_string())?;
    let (w, h) = (800.0, 600.0);
    let tm = treemap(&items, w, h, &Palette::default()).map_err(|e| e.to_string())?;
    let total: f64 = items.iter().map(|i| i.size).sum();
    let mut worst: f64 = 0.0;
    for r in &tm.rects {
        let item = items.iter().find(|i| i.id == r.id).ok_or("unknown treemap id")?;
        let want = item.size / total * w * h;
        worst = worst.max((r.rect.area() - want).abs() / want);
    }
    let area: f64 = tm.rects.iter().map(|r| r.rect.area()).sum();
    let overlap: f64 = tm
        .rects
        .iter()
        .enumerate()
        .flat_map(|(i, a)| tm.rects[i + 1..].iter().map(move |b| a.rect.overlap(&b.rect)))
        .sum();
    let tiled = (area - w * h).abs() <= TILING_TOL * w * h
        && overlap <= TILING_TOL * w * h
        && tm.rects.iter().all(|r| {
            let eps = TILING_TOL * w.max(h);
            r.rect.x >= -eps && r.rect.y >= -eps && r.rect.x + r.rect.width <= w + eps && r.rect.y + r.rect.height <= h + eps
        });
    if tm.rects.len() != 28 || worst > TREEMAP_AREA_TOL || !tiled {
        return Err(format!("treemap: {} rects, worst area error {worst:.2e}, tiled {tiled}", tm.rects.len()));
    }
    let loaded = rfc();
    let stop = default_stopwords();
    let net = phrase_net(&loaded.tokenized, "is", &stop, 1).map_err(|e| e.to_string())?;
    let mut oracle: BTreeMap<(String, String), usize> = BTreeMap::new();
    for d in &loaded.tokenized.documents {
        let words: Vec<(String, bool)> = d
            .active_tokens()
            .map(|t| {
                let w = t.normalized.to_lowercase();
                let content = t.is_word() && w.chars().any(char::is_alphabetic) && !stop.contains(&w);
                (w, content)
            })
            .collect();
        for i in 2..words.len() {
            if words[i - 1].0 == "is" && words[i - 2].1 && words[i].1 {
                *oracle.entry((words[i - 2].0.clone(), words[i].0.clone())).or_default() += 1;
            }
        }
    }
    let got: BTreeMap<(String, String), usize> =
        net.edges.iter().map(|e| ((e.from.clone(), e.to.clone()), e.weight)).collect();
    if got != oracle {
        return Err("phrase-net weights differ from the triple count".into());
    }
    let cacheable = got.get(&("response".into(), "cacheable".into())).copied().unwrap_or(0);
    check(
        cacheable > 0,
        format!(
            "{CLOUD_SETS} clouds disjoint; treemap worst area error {:.2e}; {} phrase-net edges; response->cacheable weight {cacheable}",
            worst,
            got.len()
        ),
    )
}

// 12

fn bundle(dir: &Path) -> BTreeMap<String, Vec<u8>> {
    let mut out = BTreeMap::new();
    for e in fs::read_dir(dir).unwrap() {
        let p = e.unwrap().path();
        out.insert(p.file_name().unwrap().to_string_lossy().into_owned(), fs::read(&p).unwrap());
    }
    out
}

fn determinism() -> Outcome {
    let tmp = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut bundles = Vec::new();
    for run in 0..2 {
        let mut cfg = rfc_config();
        cfg.output = tmp.path().join(format!("run{run}"));
        let outcome = run_pipeline(&cfg).map_err(|e| e.to_string())?;
        if !outcome.failures.is_empty() {
            return Err(format!("stage failures: {:?}", outcome.failures));
        }
        bundles.push(bundle(&cfg.output));
    }
    let svgs = bundles[0].keys().filter(|k| k.ends_with(".svg")).count();
    check(
        bundles[0] == bundles[1] && svgs == 4,
        format!("{} files, {svgs} SVGs, identical: {}", bundles[0].len(), bundles[0] == bundles[1]),
    )
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("clone oracle equivalence", clone_oracle),
        ("gapped media-type clone", fig7_clone),
        ("RFC clone coverage", rfc_coverage),
        ("coverage laws", coverage_laws),
        ("naturalness", naturalness),
        ("language categorization", categorization),
        ("LDA recovery", lda_recovery),
        ("ER extraction", er_extraction),
        ("passive voice", passive_voice),
        ("coding analytics", coding),
        ("visualization properties", visualizations),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(d) => println!("criterion {:>2} PASS {name}: {d}", i + 1),
            Err(d) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {d}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
