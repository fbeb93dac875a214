//! Command-line interface.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use log::info;
use textproj_core::clones::{self, CloneConfig};
use textproj_core::coding::{self, AgreementUnit, Codebook};
use textproj_core::corpus::{Corpus, SourceClass, TokenizedCorpus, TokenizerConfig};
use textproj_core::layout::{self, default_stopwords, Palette, TreemapItem, WordCloudConfig};
use textproj_core::ngram::{self, NGramModel, Smoothing};
use textproj_core::pos;
use textproj_core::topics::{LdaConfig, TopicModel};

use crate::analysis::{self, ClonesReport};
use crate::config::{schema, PipelineConfig, SEED_ENV};
use crate::error::{Error, Result};
use crate::ignore::{tokenize_corpus, IgnorePatterns};
use crate::ingest::{build_corpus, ingest_path, ClassMap, IngestOptions, Manifest};
use crate::io::{emit, read_json, read_text, to_json, write_text};
use crate::pipeline::{load_profiles, load_stopwords, run_pipeline};
use crate::report::{render_report, ReportInputs};
use crate::svg;

#[derive(Debug, Parser)]
#[command(name = "textproj", version, about = "Text analytics for software-project artifacts")]
pub struct Cli {
    /// Print the pipeline configuration schema and exit.
    #[arg(long)]
    pub schema: bool,
    /// Log progress to standard error (repeat for more detail).
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    pub verbose: u8,
    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Ingest plain-text files into a corpus file.
    #[command(subcommand)]
    Corpus(CorpusCmd),
    /// Detect clones and report coverage.
    #[command(subcommand)]
    Clones(ClonesCmd),
    /// Word n-gram models, cross-entropy and character-profile categorization.
    #[command(subcommand)]
    Ngram(NGramCmd),
    /// LDA topic models.
    #[command(subcommand)]
    Topics(TopicsCmd),
    /// Part-of-speech tags, terms, entity-relationship graphs and passive voice.
    Pos(PosArgs),
    /// Codebook analytics.
    Coding(CodingArgs),
    /// Visualizations and the HTML report.
    #[command(subcommand)]
    Viz(VizCmd),
    /// Run the configured pipeline and write the report bundle.
    Run(RunArgs),
}

#[derive(Debug, Subcommand)]
pub enum CorpusCmd {
    /// Read every text file below a directory.
    Ingest {
        #[arg(long)]
        root: PathBuf,
        /// Sidecar JSON with links, versions, classes and metadata.
        #[arg(long)]
        manifest: Option<PathBuf>,
        /// `REGEX=CLASS` rule for source classes; first match wins.
        #[arg(long = "class", value_name = "REGEX=CLASS")]
        classes: Vec<String>,
        /// File extensions to read (default: md, text, txt).
        #[arg(long = "ext")]
        extensions: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct CorpusArg {
    /// Corpus file written by `corpus ingest`.
    #[arg(long)]
    pub corpus: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum ClonesCmd {
    /// Detect exact and gapped clones.
    Detect {
        #[command(flatten)]
        corpus: CorpusArg,
        #[arg(long, default_value_t = clones::DEFAULT_MIN_LENGTH)]
        min_length: usize,
        #[arg(long, default_value_t = clones::DEFAULT_MAX_GAP)]
        max_gap: usize,
        /// File of regular expressions, one per line, for text to ignore.
        #[arg(long)]
        ignore: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Per-document coverage table of a clones file.
    Stats {
        #[command(flatten)]
        corpus: CorpusArg,
        #[arg(long)]
        clones: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Line differences between the instances of one group.
    Diff {
        #[command(flatten)]
        corpus: CorpusArg,
        #[arg(long)]
        clones: PathBuf,
        group_id: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum NGramCmd {
    /// Train a word n-gram model.
    Train {
        #[command(flatten)]
        corpus: CorpusArg,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value = "add_one")]
        smoothing: Smoothing,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cross-entropy in bits per token of a text or corpus.
    Entropy {
        #[arg(long)]
        model: PathBuf,
        #[arg(long, conflicts_with = "corpus", required_unless_present = "corpus")]
        text: Option<PathBuf>,
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
    /// Character n-gram profile of a training text.
    Profile {
        #[arg(long)]
        text: PathBuf,
        #[arg(long)]
        category: String,
        #[arg(long, default_value_t = ngram::DEFAULT_PROFILE_SIZE)]
        size: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rank categories for a text by out-of-place distance.
    Categorize {
        /// Directory of profile JSON files.
        #[arg(long)]
        profiles: PathBuf,
        #[arg(long)]
        text: PathBuf,
    },
    /// Relative frequency of a word or phrase per version.
    Series {
        #[command(flatten)]
        corpus: CorpusArg,
        #[arg(long)]
        query: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum TopicsCmd {
    /// Fit LDA by collapsed Gibbs sampling.
    Fit {
        #[command(flatten)]
        corpus: CorpusArg,
        #[arg(long, default_value_t = 10)]
        k: usize,
        #[arg(long, env = SEED_ENV)]
        seed: Option<u64>,
        #[arg(long, default_value_t = textproj_core::topics::DEFAULT_ITERATIONS)]
        iterations: usize,
        /// Document-topic prior; 50/K when absent.
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long, default_value_t = textproj_core::topics::DEFAULT_BETA)]
        beta: f64,
        /// Stop words, one per line; the bundled English list when absent.
        #[arg(long)]
        stopwords: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Most probable words of a topic.
    Show {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        topic: usize,
        #[arg(long, default_value_t = 10)]
        top: usize,
    },
    /// Document-topic edges above a threshold.
    Network {
        #[arg(long)]
        model: PathBuf,
        #[arg(long, default_value_t = 0.2)]
        threshold: f64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum PosTask {
    Tag,
    Terms,
    Er,
    Smells,
}

#[derive(Debug, Clone, Copy, Default, ValueEnum)]
pub enum ErFormat {
    #[default]
    Json,
    Dot,
}

#[derive(Debug, Args)]
pub struct PosArgs {
    pub task: PosTask,
    #[command(flatten)]
    pub corpus: CorpusArg,
    /// Restrict to one document.
    #[arg(long)]
    pub doc: Option<String>,
    /// Output format of `er`.
    #[arg(long, value_enum, default_value_t)]
    pub format: ErFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum CodingTask {
    Validate,
    Counts,
    Condense,
    Agreement,
    Saturation,
}

#[derive(Debug, Args)]
pub struct CodingArgs {
    pub task: CodingTask,
    #[arg(long)]
    pub codebook: PathBuf,
    /// Corpus for checking segment spans.
    #[arg(long)]
    pub corpus: Option<PathBuf>,
    /// Minimum occurrences kept by `condense`.
    #[arg(long, default_value_t = 7)]
    pub min: usize,
    /// Coder ids for `agreement`; give exactly two.
    #[arg(long = "coder")]
    pub coders: Vec<String>,
    #[arg(long, value_enum, default_value_t = Unit::Document)]
    pub unit: Unit,
    /// Compare each code as a present/absent decision.
    #[arg(long)]
    pub per_code: bool,
    #[arg(long, default_value_t = 10)]
    pub batch: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Unit {
    Document,
    Segment,
}

impl From<Unit> for AgreementUnit {
    fn from(u: Unit) -> Self {
        match u {
            Unit::Document => AgreementUnit::Document,
            Unit::Segment => AgreementUnit::Segment,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Canvas(pub f64, pub f64);

impl std::str::FromStr for Canvas {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let (w, h) = s.split_once(['x', 'X']).ok_or("expected WIDTHxHEIGHT")?;
        let w: f64 = w.trim().parse().map_err(|_| format!("bad width `{w}`"))?;
        let h: f64 = h.trim().parse().map_err(|_| format!("bad height `{h}`"))?;
        if w > 0.0 && h > 0.0 {
            Ok(Canvas(w, h))
        } else {
            Err("canvas dimensions must be positive".into())
        }
    }
}

#[derive(Debug, Args)]
pub struct VizCommon {
    /// Output directory.
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, default_value = "800x600")]
    pub canvas: Canvas,
}

#[derive(Debug, Subcommand)]
pub enum VizCmd {
    /// Word cloud of the most frequent non-stop words.
    Wordcloud {
        #[command(flatten)]
        corpus: CorpusArg,
        #[command(flatten)]
        common: VizCommon,
        #[arg(long, env = SEED_ENV)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 50)]
        max_words: usize,
    },
    /// Words linked by a connector word.
    Phrasenet {
        #[command(flatten)]
        corpus: CorpusArg,
        #[command(flatten)]
        common: VizCommon,
        #[arg(long, default_value = "is")]
        connector: String,
        #[arg(long, default_value_t = 2)]
        min_weight: usize,
    },
    /// Treemap from a JSON item list, or from a corpus and clones file.
    Treemap {
        #[command(flatten)]
        common: VizCommon,
        /// JSON array of {id, size, color}.
        #[arg(long, conflicts_with_all = ["corpus", "clones"], required_unless_present = "clones")]
        items: Option<PathBuf>,
        #[arg(long, requires = "clones")]
        corpus: Option<PathBuf>,
        #[arg(long, requires = "corpus")]
        clones: Option<PathBuf>,
    },
    /// Term frequency streams over versions.
    Textflow {
        #[command(flatten)]
        corpus: CorpusArg,
        #[command(flatten)]
        common: VizCommon,
        #[arg(long, value_delimiter = ',', required = true)]
        terms: Vec<String>,
    },
    /// HTML bundle from the result files in a directory.
    Report {
        #[arg(long)]
        from: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct RunArgs {
    #[arg(long)]
    pub config: PathBuf,
    /// Overrides `output`.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Overrides `seed`.
    #[arg(long)]
    pub seed: Option<u64>,
}

fn load_corpus(path: &Path) -> Result<Corpus> {
    read_json(path)
}

fn tokenized(corpus: &Corpus) -> TokenizedCorpus {
    TokenizedCorpus::new(corpus, TokenizerConfig::default(), &[])
}

fn require_seed(seed: Option<u64>) -> Result<u64> {
    seed.ok_or_else(|| Error::Config(format!("a seed is required: pass --seed or set {SEED_ENV}")))
}

fn ingest(root: &Path, manifest: Option<&Path>, classes: &[String], extensions: &[String]) -> Result<Corpus> {
    let rules = classes
        .iter()
        .map(|c| {
            let (re, class) = c
                .rsplit_once('=')
                .ok_or_else(|| Error::Config(format!("--class `{c}` is not REGEX=CLASS")))?;
            let class: SourceClass = class.parse().map_err(|e| Error::Config(format!("{e}")))?;
            Ok((re.to_string(), class))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut options = IngestOptions {
        class_map: ClassMap::new(&rules)?,
        ..Default::default()
    };
    if !extensions.is_empty() {
        options.extensions = extensions.iter().map(|e| e.trim_start_matches('.').to_lowercase()).collect();
    }
    let ingested = ingest_path(root, &options)?;
    for e in &ingested.errors {
        log::warn!("skipped {}: {:?}", e.path, e.problem);
    }
    let manifest: Option<Manifest> = manifest.map(read_json).transpose()?;
    build_corpus(ingested.documents, manifest.as_ref())
}

fn clones_tokenized(corpus: &Corpus, report: &ClonesReport) -> Result<TokenizedCorpus> {
    let patterns = IgnorePatterns::compile(&report.ignore_patterns)?;
    Ok(tokenize_corpus(corpus, TokenizerConfig::default(), &patterns))
}

/// Runs a parsed command line and returns the process exit code.
pub fn execute(cli: Cli) -> Result<i32> {
    if cli.schema {
        print!("{}", to_json(&schema()));
        return Ok(0);
    }
    let Some(command) = cli.command else {
        return Err(Error::Config("no command given; see --help".into()));
    };
    match command {
        Command::Corpus(CorpusCmd::Ingest {
            root,
            manifest,
            classes,
            extensions,
            out,
        }) => {
            let corpus = ingest(&root, manifest.as_deref(), &classes, &extensions)?;
            info!("ingested {} documents", corpus.len());
            emit(out.as_deref(), &to_json(&corpus))?;
        }
        Command::Clones(cmd) => clones_cmd(cmd)?,
        Command::Ngram(cmd) => ngram_cmd(cmd)?,
        Command::Topics(cmd) => topics_cmd(cmd)?,
        Command::Pos(args) => pos_cmd(args)?,
        Command::Coding(args) => coding_cmd(args)?,
        Command::Viz(cmd) => viz_cmd(cmd)?,
        Command::Run(args) => {
            let mut cfg = PipelineConfig::load(&args.config)?;
            if let Some(o) = args.out {
                cfg.output = o;
            }
            if args.seed.is_some() {
                cfg.seed = args.seed;
            }
            cfg.apply_env()?;
            let outcome = run_pipeline(&cfg)?;
            for (stage, e) in &outcome.failures {
                eprintln!("error: stage {} failed: {e}", stage.name());
            }
            info!("report written to {}", cfg.output.display());
            return Ok(outcome.exit_code());
        }
    }
    Ok(0)
}

fn clones_cmd(cmd: ClonesCmd) -> Result<()> {
    match cmd {
        ClonesCmd::Detect {
            corpus,
            min_length,
            max_gap,
            ignore,
            out,
        } => {
            let c = load_corpus(&corpus.corpus)?;
            let patterns = match ignore {
                Some(f) => IgnorePatterns::read_file(&f)?,
                None => IgnorePatterns::default(),
            };
            let report = analysis::detect_clones(&c, &patterns, &CloneConfig { min_length, max_gap })?;
            info!(
                "{} groups, coverage {:.3}",
                report.groups.len(),
                report.stats.clone_coverage
            );
            emit(out.as_deref(), &to_json(&report))
        }
        ClonesCmd::Stats { corpus, clones, out } => {
            let c = load_corpus(&corpus.corpus)?;
            let report: ClonesReport = read_json(&clones)?;
            let t = clones_tokenized(&c, &report)?;
            emit(out.as_deref(), &to_json(&clones::clone_stats(&t, &report.groups)))
        }
        ClonesCmd::Diff { corpus, clones, group_id } => {
            let c = load_corpus(&corpus.corpus)?;
            let report: ClonesReport = read_json(&clones)?;
            let t = clones_tokenized(&c, &report)?;
            let group = report
                .groups
                .iter()
                .find(|g| g.id == group_id)
                .ok_or_else(|| Error::Config(format!("no clone group {group_id}")))?;
            emit(None, &to_json(&clones::diff_instances(&t, group)?))
        }
    }
}

fn ngram_cmd(cmd: NGramCmd) -> Result<()> {
    match cmd {
        NGramCmd::Train { corpus, n, smoothing, out } => {
            let c = load_corpus(&corpus.corpus)?;
            let model = ngram::train_word_model(&ngram::word_streams(&tokenized(&c)), n, smoothing)?;
            emit(out.as_deref(), &to_json(&model))
        }
        NGramCmd::Entropy { model, text, corpus } => {
            let model: NGramModel = read_json(&model)?;
            let streams = match (text, corpus) {
                (Some(t), _) => {
                    let text = read_text(&t)?;
                    vec![ngram::word_streams(&TokenizedCorpus::from_texts([("text", text.as_str())])).remove(0)]
                }
                (None, Some(c)) => ngram::word_streams(&tokenized(&load_corpus(&c)?)),
                (None, None) => return Err(Error::Config("give --text or --corpus".into())),
            };
            let h = ngram::cross_entropy_streams(&model, &streams)?;
            emit(None, &to_json(&serde_json::json!({ "cross_entropy": h })))
        }
        NGramCmd::Profile { text, category, size, out } => {
            let p = ngram::train_char_profile_k(&read_text(&text)?, &category, size)?;
            emit(out.as_deref(), &to_json(&p))
        }
        NGramCmd::Categorize { profiles, text } => {
            let profiles = load_profiles(&profiles)?;
            let c = ngram::categorize(&profiles, &read_text(&text)?)?;
            emit(None, &to_json(&c))
        }
        NGramCmd::Series { corpus, query } => {
            let c = load_corpus(&corpus.corpus)?;
            let (sub, t) = analysis::versioned_subset(&c, &IgnorePatterns::default())?
                .ok_or_else(|| Error::Config("a series needs documents with at least two version labels".into()))?;
            let s = ngram::frequency_series(&sub, &t, &query)?;
            emit(None, &to_json(&s))
        }
    }
}

fn topics_cmd(cmd: TopicsCmd) -> Result<()> {
    match cmd {
        TopicsCmd::Fit {
            corpus,
            k,
            seed,
            iterations,
            alpha,
            beta,
            stopwords,
            out,
        } => {
            let seed = require_seed(seed)?;
            let c = load_corpus(&corpus.corpus)?;
            let stop = load_stopwords(stopwords.as_deref())?;
            let cfg = LdaConfig {
                k,
                alpha,
                beta,
                iterations,
                seed,
            };
            let model = analysis::fit_topics(&tokenized(&c), &stop, &cfg)?;
            emit(out.as_deref(), &to_json(&model))
        }
        TopicsCmd::Show { model, topic, top } => {
            let m: TopicModel = read_json(&model)?;
            emit(None, &to_json(&m.top_words(topic, top)?))
        }
        TopicsCmd::Network { model, threshold } => {
            let m: TopicModel = read_json(&model)?;
            emit(None, &to_json(&m.topic_network(threshold)))
        }
    }
}

fn pos_cmd(args: PosArgs) -> Result<()> {
    let c = load_corpus(&args.corpus.corpus)?;
    if let Some(d) = &args.doc {
        if c.document(d).is_none() {
            return Err(Error::Config(format!("no document `{d}`")));
        }
    }
    let t = tokenized(&c);
    let docs: Vec<&str> = c
        .documents()
        .iter()
        .map(|d| d.id.as_str())
        .filter(|id| args.doc.as_deref().is_none_or(|d| d == *id))
        .collect();
    let out = args.out.as_deref();
    match args.task {
        PosTask::Tag => {
            let mut text = String::new();
            for id in docs {
                for s in analysis::tagged_sentences(&t, id) {
                    text.push_str(&pos::render_tagged(&s));
                    text.push('\n');
                }
            }
            emit(out, &text)
        }
        PosTask::Terms => {
            let mut rows = Vec::new();
            for id in docs {
                for s in analysis::tagged_sentences(&t, id) {
                    for term in pos::extract_terms(&s) {
                        rows.push(serde_json::json!({
                            "document_id": id,
                            "term": term.text,
                            "qualifiers": term.qualifiers,
                        }));
                    }
                }
            }
            emit(out, &to_json(&rows))
        }
        PosTask::Er => {
            let report = analysis::extract_pos(&t, args.doc.as_deref(), 0);
            match args.format {
                ErFormat::Json => emit(out, &to_json(&report.er)),
                ErFormat::Dot => emit(out, &report.er.to_dot()),
            }
        }
        PosTask::Smells => {
            let report = analysis::extract_pos(&t, args.doc.as_deref(), 0);
            emit(out, &to_json(&report.smells))
        }
    }
}

fn coding_cmd(args: CodingArgs) -> Result<()> {
    let codebook: Codebook = read_json(&args.codebook)?;
    let corpus = args.corpus.as_deref().map(load_corpus).transpose()?;
    let out = args.out.as_deref();
    match args.task {
        CodingTask::Validate => {
            let report = coding::validate_codebook(&codebook, corpus.as_ref());
            emit(out, &to_json(&report))?;
            if !report.is_valid() {
                return Err(Error::Analysis(format!(
                    "codebook has {} violations",
                    report.violations.len()
                )));
            }
            Ok(())
        }
        CodingTask::Counts => emit(out, &to_json(&coding::occurrence_counts(&codebook))),
        CodingTask::Condense => emit(
            out,
            &to_json(&coding::condense_graph(&coding::axial_graph(&codebook), args.min)),
        ),
        CodingTask::Agreement => {
            let [a, b] = args.coders.as_slice() else {
                return Err(Error::Config("agreement needs exactly two --coder values".into()));
            };
            if args.per_code {
                let r = coding::agreement_per_code(&codebook.segments, a, b, args.unit.into())?;
                emit(out, &to_json(&r))
            } else {
                let r = coding::agreement(&codebook.segments, a, b, args.unit.into())?;
                emit(out, &to_json(&r))
            }
        }
        CodingTask::Saturation => {
            let curve = coding::saturation_curve(&codebook.segments, args.batch)?;
            emit(
                out,
                &to_json(&serde_json::json!({
                    "batch": args.batch,
                    "new_codes": curve,
                    "saturation_batch": coding::saturation_point(&curve),
                })),
            )
        }
    }
}

fn viz_cmd(cmd: VizCmd) -> Result<()> {
    match cmd {
        VizCmd::Wordcloud {
            corpus,
            common,
            seed,
            max_words,
        } => {
            let seed = require_seed(seed)?;
            let c = load_corpus(&corpus.corpus)?;
            let freq = layout::word_frequencies(&tokenized(&c));
            let cfg = WordCloudConfig {
                max_words,
                width: common.canvas.0,
                height: common.canvas.1,
                seed,
                ..Default::default()
            };
            let l = layout::word_cloud(&freq, &default_stopwords(), &cfg)?;
            write_text(&common.out.join("wordcloud.json"), &to_json(&l))?;
            write_text(&common.out.join("wordcloud.svg"), &svg::word_cloud(&l))
        }
        VizCmd::Phrasenet {
            corpus,
            common,
            connector,
            min_weight,
        } => {
            let c = load_corpus(&corpus.corpus)?;
            let net = layout::phrase_net(&tokenized(&c), &connector, &default_stopwords(), min_weight)?;
            write_text(&common.out.join("phrasenet.json"), &to_json(&net))?;
            write_text(
                &common.out.join("phrasenet.svg"),
                &svg::phrase_net(&net, common.canvas.0, common.canvas.1),
            )
        }
        VizCmd::Treemap {
            common,
            items,
            corpus,
            clones,
        } => {
            let Canvas(w, h) = common.canvas;
            let layout = match (items, corpus, clones) {
                (Some(items), _, _) => {
                    let items: Vec<TreemapItem> = read_json(&items)?;
                    layout::treemap(&items, w, h, &Palette::default())?
                }
                (None, Some(corpus), Some(clones)) => {
                    let c = load_corpus(&corpus)?;
                    let report: ClonesReport = read_json(&clones)?;
                    let t = clones_tokenized(&c, &report)?;
                    analysis::clone_treemap(&clones::clone_stats(&t, &report.groups), w, h)?
                }
                _ => return Err(Error::Config("give --items, or --corpus with --clones".into())),
            };
            write_text(&common.out.join("treemap.json"), &to_json(&layout))?;
            write_text(&common.out.join("treemap.svg"), &svg::treemap(&layout))
        }
        VizCmd::Textflow { corpus, common, terms } => {
            let c = load_corpus(&corpus.corpus)?;
            let refs: Vec<&str> = terms.iter().map(String::as_str).collect();
            let (sub, t) = analysis::versioned_subset(&c, &IgnorePatterns::default())?
                .ok_or_else(|| Error::Config("text flow needs documents with at least two version labels".into()))?;
            let flow = layout::text_flow(&sub, &t, &refs, 1.0)?;
            write_text(&common.out.join("textflow.json"), &to_json(&flow))?;
            write_text(
                &common.out.join("textflow.svg"),
                &svg::text_flow(&flow, common.canvas.0, common.canvas.1),
            )
        }
        VizCmd::Report { from, out } => {
            let inputs = ReportInputs::load(&from)?;
            let summary = render_report(&out, &inputs)?;
            if !summary.missing.is_empty() {
                info!("not included: {}", summary.missing.join(", "));
            }
            Ok(())
        }
    }
}
