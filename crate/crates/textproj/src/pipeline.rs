//! The `run` command: ingest, run the enabled stages in dependency order
//! and write the report bundle.

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

use log::{info, warn};
use textproj_core::coding::Codebook;
use textproj_core::corpus::{Corpus, TokenizedCorpus, TokenizerConfig};
use textproj_core::layout::{self, default_stopwords, WordCloudConfig};
use textproj_core::ngram::CategoryProfile;
use textproj_core::topics::{english_stopwords, LdaConfig};

use crate::analysis;
use crate::config::{PipelineConfig, Stage};
use crate::error::{Error, Result};
use crate::ignore::{tokenize_corpus, IgnorePatterns};
use crate::ingest::{build_corpus, ingest_path, ClassMap, IngestOptions, Manifest};
use crate::io::{read_json, read_text};
use crate::report::{render_report, ReportInputs, ReportSummary};
use crate::svg;

#[derive(Debug, Clone, Default)]
pub struct PipelineOutcome {
    pub report: ReportSummary,
    pub completed: Vec<Stage>,
    pub failures: Vec<(Stage, String)>,
}

impl PipelineOutcome {
    pub fn exit_code(&self) -> i32 {
        if self.failures.is_empty() {
            0
        } else {
            1
        }
    }
}

/// A loaded corpus with ignore patterns applied.
pub struct Loaded {
    pub corpus: Corpus,
    pub patterns: IgnorePatterns,
    pub tokenized: TokenizedCorpus,
    pub summary: analysis::CorpusSummary,
}

pub fn ignore_patterns(config: &PipelineConfig) -> Result<IgnorePatterns> {
    let mut sources = config.corpus.ignore_patterns.clone();
    if let Some(f) = &config.corpus.ignore_file {
        sources.extend(IgnorePatterns::read_file(f)?.sources());
    }
    IgnorePatterns::compile(&sources)
}

pub fn load_corpus(config: &PipelineConfig) -> Result<Loaded> {
    let rules: Vec<(&str, _)> = config
        .corpus
        .class_map
        .iter()
        .map(|r| (r.pattern.as_str(), r.class))
        .collect();
    let options = IngestOptions {
        class_map: ClassMap::new(&rules)?,
        extensions: config.corpus.extensions.clone(),
    };
    let patterns = ignore_patterns(config)?;
    let ingested = ingest_path(&config.corpus.root, &options)?;
    for e in &ingested.errors {
        warn!("skipped {}: {:?}", e.path, e.problem);
    }
    let manifest: Option<Manifest> = config.corpus.manifest.as_deref().map(read_json).transpose()?;
    let corpus = build_corpus(ingested.documents, manifest.as_ref())?;
    let tokenized = tokenize_corpus(&corpus, TokenizerConfig::default(), &patterns);
    let summary = analysis::summarize_corpus(&corpus, &tokenized, &ingested.errors);
    info!("ingested {} documents", corpus.len());
    Ok(Loaded {
        corpus,
        patterns,
        tokenized,
        summary,
    })
}

/// Category profiles from every `.json` file in `dir`, by file name.
pub fn load_profiles(dir: &Path) -> Result<Vec<CategoryProfile>> {
    let mut files: Vec<_> = fs::read_dir(dir)
        .map_err(|source| Error::Read {
            path: dir.to_path_buf(),
            source,
        })?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    files.iter().map(|p| read_json(p)).collect()
}

pub fn load_stopwords(path: Option<&Path>) -> Result<BTreeSet<String>> {
    match path {
        None => Ok(english_stopwords()),
        Some(p) => Ok(read_text(p)?
            .lines()
            .map(|l| l.trim().to_lowercase())
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .collect()),
    }
}

/// Word cloud, phrase net, clone treemap and text flow SVGs. Views that
/// lack their inputs are skipped with a note.
pub fn visualize(
    config: &PipelineConfig,
    loaded: &Loaded,
    clones: Option<&analysis::ClonesReport>,
    seed: u64,
    inputs: &mut ReportInputs,
) -> Result<()> {
    let v = &config.viz;
    let stop = default_stopwords();
    let freq = layout::word_frequencies(&loaded.tokenized);
    let cloud = layout::word_cloud(
        &freq,
        &stop,
        &WordCloudConfig {
            max_words: v.max_words,
            width: v.width,
            height: v.height,
            seed,
            ..Default::default()
        },
    )?;
    inputs.svgs.push(("wordcloud.svg".into(), svg::word_cloud(&cloud)));
    let net = layout::phrase_net(&loaded.tokenized, &v.connector, &stop, v.min_weight)?;
    inputs.svgs.push(("phrasenet.svg".into(), svg::phrase_net(&net, v.width, v.height)));
    match clones {
        Some(c) => {
            let tm = analysis::clone_treemap(&c.stats, v.width, v.height)?;
            inputs.svgs.push(("treemap.svg".into(), svg::treemap(&tm)));
        }
        None => inputs.notes.push("treemap skipped: the clones stage did not run".into()),
    }
    match analysis::versioned_subset(&loaded.corpus, &loaded.patterns)? {
        Some((sub, tokenized)) => {
            let terms: Vec<String> = if v.flow_terms.is_empty() {
                cloud.words.iter().take(3).map(|w| w.word.clone()).collect()
            } else {
                v.flow_terms.clone()
            };
            let refs: Vec<&str> = terms.iter().map(String::as_str).collect();
            let flow = layout::text_flow(&sub, &tokenized, &refs, 1.0)?;
            inputs.svgs.push(("textflow.svg".into(), svg::text_flow(&flow, v.width, v.height)));
        }
        None => inputs
            .notes
            .push("text flow skipped: fewer than two version labels in the corpus".into()),
    }
    Ok(())
}

fn run_stage(
    stage: Stage,
    config: &PipelineConfig,
    loaded: &Loaded,
    inputs: &mut ReportInputs,
) -> Result<()> {
    let seed = config.seed.unwrap_or_default();
    match stage {
        Stage::Clones => {
            inputs.clones = Some(analysis::detect_clones(&loaded.corpus, &loaded.patterns, &config.clones)?);
        }
        Stage::Ngram => {
            let profiles = match &config.ngram.profiles {
                Some(dir) => load_profiles(dir)?,
                None => Vec::new(),
            };
            inputs.ngram = Some(analysis::naturalness(
                &loaded.corpus,
                &loaded.tokenized,
                config.ngram.n,
                config.ngram.smoothing,
                seed,
                &profiles,
            )?);
        }
        Stage::Topics => {
            let t = &config.topics;
            let stop = load_stopwords(t.stopwords.as_deref())?;
            let lda = LdaConfig {
                k: t.k,
                alpha: t.alpha,
                beta: t.beta,
                iterations: t.iterations,
                seed,
            };
            let model = analysis::fit_topics(&loaded.tokenized, &stop, &lda)?;
            inputs.topics = Some(analysis::summarize_topics(&model, t.top_words, t.network_threshold)?);
        }
        Stage::Pos => {
            inputs.pos = Some(analysis::extract_pos(&loaded.tokenized, None, config.pos.max_terms));
        }
        Stage::Coding => {
            let c = &config.coding;
            let path = c
                .codebook
                .as_deref()
                .ok_or_else(|| Error::Config("stage `coding` needs `coding.codebook`".into()))?;
            let codebook: Codebook = read_json(path)?;
            let coders = match c.coders.as_slice() {
                [a, b] => Some((a.as_str(), b.as_str())),
                _ => None,
            };
            inputs.coding = Some(analysis::analyze_codebook(
                &codebook,
                Some(&loaded.corpus),
                c.min_occurrence,
                c.batch,
                coders,
                c.unit,
            )?);
        }
        Stage::Viz => {
            let clones = inputs.clones.clone();
            visualize(config, loaded, clones.as_ref(), seed, inputs)?;
        }
    }
    Ok(())
}

/// Runs the pipeline. Configuration and input problems are returned as
/// errors; a failing stage is recorded and the others still run.
pub fn run_pipeline(config: &PipelineConfig) -> Result<PipelineOutcome> {
    config.check()?;
    let mut outcome = PipelineOutcome::default();
    let mut inputs = ReportInputs::default();
    if !config.stages.is_empty() {
        let loaded = load_corpus(config)?;
        inputs.corpus = Some(loaded.summary.clone());
        let stages: BTreeSet<Stage> = config.stages.iter().copied().collect();
        for stage in stages {
            info!("stage {}", stage.name());
            match run_stage(stage, config, &loaded, &mut inputs) {
                Ok(()) => outcome.completed.push(stage),
                Err(e) => {
                    warn!("stage {} failed: {e}", stage.name());
                    inputs.notes.push(format!("stage {} failed: {e}", stage.name()));
                    outcome.failures.push((stage, e.to_string()));
                }
            }
        }
    }
    outcome.report = render_report(&config.output, &inputs)?;
    Ok(outcome)
}
