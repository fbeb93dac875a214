//! Pipeline configuration, its published JSON schema and a validator for
//! the schema keywords used here.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use textproj_core::clones::CloneConfig;
use textproj_core::coding::AgreementUnit;
use textproj_core::corpus::SourceClass;
use textproj_core::ngram::Smoothing;

use crate::error::{Error, Result};
use crate::io::read_text;

pub const SEED_ENV: &str = "TEXTPROJ_SEED";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Stage {
    Clones,
    Ngram,
    Topics,
    Pos,
    Coding,
    Viz,
}

impl Stage {
    pub const ALL: [Stage; 6] = [Stage::Clones, Stage::Ngram, Stage::Topics, Stage::Pos, Stage::Coding, Stage::Viz];

    pub fn name(self) -> &'static str {
        match self {
            Stage::Clones => "clones",
            Stage::Ngram => "ngram",
            Stage::Topics => "topics",
            Stage::Pos => "pos",
            Stage::Coding => "coding",
            Stage::Viz => "viz",
        }
    }

    /// Stages whose output depends on the seed.
    pub fn is_stochastic(self) -> bool {
        matches!(self, Stage::Ngram | Stage::Topics | Stage::Viz)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassRule {
    pub pattern: String,
    pub class: SourceClass,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CorpusSettings {
    pub root: PathBuf,
    pub manifest: Option<PathBuf>,
    pub class_map: Vec<ClassRule>,
    pub extensions: Vec<String>,
    pub ignore_patterns: Vec<String>,
    pub ignore_file: Option<PathBuf>,
}

impl Default for CorpusSettings {
    fn default() -> Self {
        CorpusSettings {
            root: PathBuf::from("corpus"),
            manifest: None,
            class_map: Vec::new(),
            extensions: crate::ingest::DEFAULT_EXTENSIONS.iter().map(|s| s.to_string()).collect(),
            ignore_patterns: Vec::new(),
            ignore_file: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct NGramSettings {
    pub n: usize,
    pub smoothing: Smoothing,
    /// Directory of category profile JSON files.
    pub profiles: Option<PathBuf>,
}

impl Default for NGramSettings {
    fn default() -> Self {
        NGramSettings {
            n: 3,
            smoothing: Smoothing::AddOne,
            profiles: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct TopicSettings {
    pub k: usize,
    pub alpha: Option<f64>,
    pub beta: f64,
    pub iterations: usize,
    pub top_words: usize,
    pub network_threshold: f64,
    /// One stop word per line; the bundled English list when absent.
    pub stopwords: Option<PathBuf>,
}

impl Default for TopicSettings {
    fn default() -> Self {
        TopicSettings {
            k: 10,
            alpha: None,
            beta: textproj_core::topics::DEFAULT_BETA,
            iterations: textproj_core::topics::DEFAULT_ITERATIONS,
            top_words: 10,
            network_threshold: 0.2,
            stopwords: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PosSettings {
    pub max_terms: usize,
}

impl Default for PosSettings {
    fn default() -> Self {
        PosSettings { max_terms: 30 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CodingSettings {
    pub codebook: Option<PathBuf>,
    pub min_occurrence: usize,
    pub batch: usize,
    /// Two coder ids to compare, or empty.
    pub coders: Vec<String>,
    pub unit: AgreementUnit,
}

impl Default for CodingSettings {
    fn default() -> Self {
        CodingSettings {
            codebook: None,
            min_occurrence: 7,
            batch: 10,
            coders: Vec::new(),
            unit: AgreementUnit::Document,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct VizSettings {
    pub width: f64,
    pub height: f64,
    pub max_words: usize,
    pub connector: String,
    pub min_weight: usize,
    /// Terms for the text flow; the three most frequent non-stop words when
    /// empty.
    pub flow_terms: Vec<String>,
}

impl Default for VizSettings {
    fn default() -> Self {
        VizSettings {
            width: 800.0,
            height: 600.0,
            max_words: 50,
            connector: "is".into(),
            min_weight: 2,
            flow_terms: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PipelineConfig {
    pub corpus: CorpusSettings,
    pub output: PathBuf,
    pub seed: Option<u64>,
    pub stages: Vec<Stage>,
    pub clones: CloneConfig,
    pub ngram: NGramSettings,
    pub topics: TopicSettings,
    pub pos: PosSettings,
    pub coding: CodingSettings,
    pub viz: VizSettings,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            corpus: CorpusSettings::default(),
            output: PathBuf::from("report"),
            seed: None,
            stages: Vec::new(),
            clones: CloneConfig::default(),
            ngram: NGramSettings::default(),
            topics: TopicSettings::default(),
            pos: PosSettings::default(),
            coding: CodingSettings::default(),
            viz: VizSettings::default(),
        }
    }
}

fn rebase(base: &Path, p: &mut PathBuf) {
    if p.is_relative() {
        *p = base.join(&*p);
    }
}

fn rebase_opt(base: &Path, p: &mut Option<PathBuf>) {
    if let Some(p) = p {
        rebase(base, p);
    }
}

impl PipelineConfig {
    /// Parses a config file, checks it against the schema and resolves
    /// relative paths against the file's directory.
    pub fn load(path: &Path) -> Result<Self> {
        let text = read_text(path)?;
        let value: Value = serde_json::from_str(&text).map_err(|source| Error::Parse {
            path: path.to_path_buf(),
            source,
        })?;
        let problems = validate(&schema(), &value);
        if !problems.is_empty() {
            return Err(Error::Config(format!("{}: {}", path.display(), problems.join("; "))));
        }
        let mut cfg: PipelineConfig = serde_json::from_value(value).map_err(|source| Error::Parse {
            path: path.to_path_buf(),
            source,
        })?;
        let base = path.parent().unwrap_or(Path::new("."));
        cfg.resolve(base);
        Ok(cfg)
    }

    pub fn resolve(&mut self, base: &Path) {
        rebase(base, &mut self.corpus.root);
        rebase_opt(base, &mut self.corpus.manifest);
        rebase_opt(base, &mut self.corpus.ignore_file);
        rebase(base, &mut self.output);
        rebase_opt(base, &mut self.ngram.profiles);
        rebase_opt(base, &mut self.topics.stopwords);
        rebase_opt(base, &mut self.coding.codebook);
    }

    pub fn enabled(&self, stage: Stage) -> bool {
        self.stages.contains(&stage)
    }

    /// Fills a missing seed from `TEXTPROJ_SEED`.
    pub fn apply_env(&mut self) -> Result<()> {
        if self.seed.is_none() {
            if let Ok(v) = std::env::var(SEED_ENV) {
                let seed = v
                    .trim()
                    .parse()
                    .map_err(|_| Error::Config(format!("{SEED_ENV}=`{v}` is not an unsigned integer")))?;
                self.seed = Some(seed);
            }
        }
        Ok(())
    }

    /// Checks the settings that the schema cannot: file existence, the
    /// seed requirement and cross-field rules.
    pub fn check(&self) -> Result<()> {
        let need = |p: &Path, what: &str| {
            if p.exists() {
                Ok(())
            } else {
                Err(Error::Config(format!("{what} {} does not exist", p.display())))
            }
        };
        if self.stages.is_empty() {
            return Ok(());
        }
        need(&self.corpus.root, "corpus root")?;
        if let Some(m) = &self.corpus.manifest {
            need(m, "manifest")?;
        }
        if let Some(f) = &self.corpus.ignore_file {
            need(f, "ignore file")?;
        }
        if let Some(s) = self.stages.iter().find(|s| s.is_stochastic()) {
            if self.seed.is_none() {
                return Err(Error::Config(format!(
                    "stage `{}` needs a seed: set `seed` or {SEED_ENV}",
                    s.name()
                )));
            }
        }
        if self.enabled(Stage::Ngram) {
            if let Some(p) = &self.ngram.profiles {
                need(p, "profile directory")?;
            }
        }
        if self.enabled(Stage::Topics) {
            if let Some(p) = &self.topics.stopwords {
                need(p, "stop-word file")?;
            }
        }
        if self.enabled(Stage::Coding) {
            match &self.coding.codebook {
                Some(p) => need(p, "codebook")?,
                None => return Err(Error::Config("stage `coding` needs `coding.codebook`".into())),
            }
            if !(self.coding.coders.is_empty() || self.coding.coders.len() == 2) {
                return Err(Error::Config("`coding.coders` must list exactly two coders".into()));
            }
        }
        Ok(())
    }
}

/// JSON schema of the pipeline configuration, with one example.
pub fn schema() -> Value {
    let path = json!({"type": "string", "minLength": 1});
    let opt_path = json!({"type": ["string", "null"], "minLength": 1});
    let count = |min: u64| json!({"type": "integer", "minimum": min});
    let classes: Vec<&str> = SourceClass::ALL.iter().map(|c| c.as_str()).collect();
    let stages: Vec<&str> = Stage::ALL.iter().map(|s| s.name()).collect();
    json!({
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "title": "textproj pipeline configuration",
        "description": "Relative paths are resolved against the directory of the configuration file. Omitted fields take their defaults.",
        "type": "object",
        "additionalProperties": false,
        "required": ["corpus"],
        "properties": {
            "corpus": {
                "type": "object",
                "additionalProperties": false,
                "required": ["root"],
                "properties": {
                    "root": path,
                    "manifest": opt_path,
                    "class_map": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "additionalProperties": false,
                            "required": ["pattern", "class"],
                            "properties": {
                                "pattern": {"type": "string"},
                                "class": {"enum": classes}
                            }
                        }
                    },
                    "extensions": {"type": "array", "items": {"type": "string"}},
                    "ignore_patterns": {"type": "array", "items": {"type": "string"}},
                    "ignore_file": opt_path
                }
            },
            "output": path,
            "seed": {"type": ["integer", "null"], "minimum": 0},
            "stages": {"type": "array", "items": {"enum": stages}},
            "clones": {
                "type": "object",
                "additionalProperties": false,
                "properties": {"min_length": count(2), "max_gap": count(0)}
            },
            "ngram": {
                "type": "object",
                "additionalProperties": false,
                "properties": {
                    "n": count(1),
                    "smoothing": {"enum": ["none", "add_one"]},
                    "profiles": opt_path
                }
            },
            "topics": {
                "type": "object",
                "additionalProperties": false,
                "properties": {
                    "k": count(1),
                    "alpha": {"type": ["number", "null"], "exclusiveMinimum": 0},
                    "beta": {"type": "number", "exclusiveMinimum": 0},
                    "iterations": count(1),
                    "top_words": count(1),
                    "network_threshold": {"type": "number", "minimum": 0},
                    "stopwords": opt_path
                }
            },
            "pos": {
                "type": "object",
                "additionalProperties": false,
                "properties": {"max_terms": count(0)}
            },
            "coding": {
                "type": "object",
                "additionalProperties": false,
                "properties": {
                    "codebook": opt_path,
                    "min_occurrence": count(0),
                    "batch": count(1),
                    "coders": {"type": "array", "items": {"type": "string"}},
                    "unit": {"enum": ["document", "segment"]}
                }
            },
            "viz": {
                "type": "object",
                "additionalProperties": false,
                "properties": {
                    "width": {"type": "number", "exclusiveMinimum": 0},
                    "height": {"type": "number", "exclusiveMinimum": 0},
                    "max_words": count(1),
                    "connector": {"type": "string", "minLength": 1},
                    "min_weight": count(1),
                    "flow_terms": {"type": "array", "items": {"type": "string"}}
                }
            }
        },
        "examples": [{
            "corpus": {
                "root": "rfc",
                "manifest": "rfc/manifest.json",
                "class_map": [{"pattern": "^rfc", "class": "requirements_analysis"}],
                "ignore_patterns": ["(?m)^Copyright \\(C\\).*$"]
            },
            "output": "report",
            "seed": 42,
            "stages": ["clones", "ngram", "topics", "pos", "viz"],
            "clones": {"min_length": 20, "max_gap": 2},
            "topics": {"k": 5, "iterations": 500},
            "viz": {"connector": "is", "flow_terms": ["request", "response", "header"]}
        }]
    })
}

fn type_matches(ty: &str, v: &Value) -> bool {
    match ty {
        "object" => v.is_object(),
        "array" => v.is_array(),
        "string" => v.is_string(),
        "integer" => v.is_i64() || v.is_u64(),
        "number" => v.is_number(),
        "boolean" => v.is_boolean(),
        "null" => v.is_null(),
        _ => false,
    }
}

/// Problems of `instance` against `schema`, one per line. Supports `type`,
/// `enum`, `properties`, `required`, `additionalProperties: false`,
/// `items`, `minimum`, `exclusiveMinimum` and `minLength`.
pub fn validate(schema: &Value, instance: &Value) -> Vec<String> {
    let mut out = Vec::new();
    check(schema, instance, "$", &mut out);
    out
}

fn check(schema: &Value, v: &Value, at: &str, out: &mut Vec<String>) {
    if let Some(t) = schema.get("type") {
        let ok = match t {
            Value::String(s) => type_matches(s, v),
            Value::Array(ts) => ts.iter().filter_map(Value::as_str).any(|s| type_matches(s, v)),
            _ => true,
        };
        if !ok {
            out.push(format!("{at}: expected type {t}"));
            return;
        }
    }
    if let Some(Value::Array(allowed)) = schema.get("enum") {
        if !allowed.contains(v) {
            out.push(format!("{at}: {v} is not one of {}", Value::Array(allowed.clone())));
        }
    }
    if let Some(x) = v.as_f64() {
        if let Some(m) = schema.get("minimum").and_then(Value::as_f64) {
            if x < m {
                out.push(format!("{at}: {x} is below {m}"));
            }
        }
        if let Some(m) = schema.get("exclusiveMinimum").and_then(Value::as_f64) {
            if x <= m {
                out.push(format!("{at}: {x} must exceed {m}"));
            }
        }
    }
    if let (Some(s), Some(m)) = (v.as_str(), schema.get("minLength").and_then(Value::as_u64)) {
        if (s.chars().count() as u64) < m {
            out.push(format!("{at}: shorter than {m}"));
        }
    }
    if let Some(obj) = v.as_object() {
        let props = schema.get("properties").and_then(Value::as_object);
        if let Some(Value::Array(req)) = schema.get("required") {
            for r in req.iter().filter_map(Value::as_str) {
                if !obj.contains_key(r) {
                    out.push(format!("{at}: missing `{r}`"));
                }
            }
        }
        for (k, child) in obj {
            match props.and_then(|p| p.get(k)) {
                Some(s) => check(s, child, &format!("{at}.{k}"), out),
                None if schema.get("additionalProperties") == Some(&Value::Bool(false)) => {
                    out.push(format!("{at}: unknown field `{k}`"))
                }
                None => {}
            }
        }
    }
    if let (Some(items), Some(arr)) = (schema.get("items"), v.as_array()) {
        for (i, x) in arr.iter().enumerate() {
            check(items, x, &format!("{at}[{i}]"), out);
        }
    }
}
