//! Building a corpus from a directory of plain-text files.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use regex::Regex;
use serde::{Deserialize, Serialize};
use textproj_core::corpus::{Corpus, CorpusError, Document, Link, SourceClass};
use walkdir::WalkDir;

use crate::error::{Error, Result};

pub const DEFAULT_EXTENSIONS: &[&str] = &["md", "text", "txt"];

/// Ordered `pattern → class` rules matched against relative ids; the first
/// matching rule wins.
#[derive(Debug, Clone, Default)]
pub struct ClassMap {
    rules: Vec<(Regex, SourceClass)>,
}

impl ClassMap {
    pub fn new<S: AsRef<str>>(rules: &[(S, SourceClass)]) -> Result<Self> {
        let rules = rules
            .iter()
            .map(|(p, c)| {
                Regex::new(p.as_ref())
                    .map(|r| (r, *c))
                    .map_err(|e| Error::InvalidPattern {
                        pattern: p.as_ref().to_string(),
                        message: e.to_string(),
                    })
            })
            .collect::<Result<_>>()?;
        Ok(ClassMap { rules })
    }

    pub fn classify(&self, id: &str) -> SourceClass {
        self.rules
            .iter()
            .find(|(r, _)| r.is_match(id))
            .map(|(_, c)| *c)
            .unwrap_or_default()
    }
}

#[derive(Debug, Clone)]
pub struct IngestOptions {
    pub class_map: ClassMap,
    /// Lowercase file extensions to read; empty reads every file.
    pub extensions: Vec<String>,
}

impl Default for IngestOptions {
    fn default() -> Self {
        IngestOptions {
            class_map: ClassMap::default(),
            extensions: DEFAULT_EXTENSIONS.iter().map(|s| s.to_string()).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FileProblem {
    Empty,
    NotUtf8,
    Unreadable(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FileError {
    pub path: String,
    pub problem: FileProblem,
}

#[derive(Debug, Clone, Default)]
pub struct Ingested {
    /// Sorted by id.
    pub documents: Vec<Document>,
    pub errors: Vec<FileError>,
}

fn relative_id(root: &Path, path: &Path) -> String {
    let rel = path.strip_prefix(root).unwrap_or(path);
    rel.components()
        .map(|c| c.as_os_str().to_string_lossy().into_owned())
        .collect::<Vec<_>>()
        .join("/")
}

/// One document per matching file below `root`, with ids taken from the
/// path relative to `root`. Empty and non-UTF-8 files are reported and
/// skipped; hidden files and directories are ignored.
pub fn ingest_path(root: &Path, options: &IngestOptions) -> Result<Ingested> {
    let meta = fs::metadata(root).map_err(|source| Error::Read {
        path: root.to_path_buf(),
        source,
    })?;
    if !meta.is_dir() {
        return Err(Error::Config(format!("{} is not a directory", root.display())));
    }
    let mut out = Ingested::default();
    let walker = WalkDir::new(root)
        .sort_by_file_name()
        .into_iter()
        .filter_entry(|e| e.depth() == 0 || !e.file_name().to_string_lossy().starts_with('.'));
    for entry in walker {
        let entry = match entry {
            Ok(e) => e,
            Err(e) if e.depth() == 0 => {
                return Err(Error::Read {
                    path: root.to_path_buf(),
                    source: e.into(),
                })
            }
            Err(e) => {
                let path = e.path().map(|p| relative_id(root, p)).unwrap_or_default();
                out.errors.push(FileError {
                    path,
                    problem: FileProblem::Unreadable(e.to_string()),
                });
                continue;
            }
        };
        if !entry.file_type().is_file() {
            continue;
        }
        let path = entry.path();
        if !options.extensions.is_empty() {
            let ext = path
                .extension()
                .map(|e| e.to_string_lossy().to_lowercase())
                .unwrap_or_default();
            if !options.extensions.contains(&ext) {
                continue;
            }
        }
        let id = relative_id(root, path);
        let bytes = match fs::read(path) {
            Ok(b) => b,
            Err(e) => {
                out.errors.push(FileError {
                    path: id,
                    problem: FileProblem::Unreadable(e.to_string()),
                });
                continue;
            }
        };
        let text = match String::from_utf8(bytes) {
            Ok(t) if t.is_empty() => {
                out.errors.push(FileError { path: id, problem: FileProblem::Empty });
                continue;
            }
            Ok(t) => t,
            Err(_) => {
                out.errors.push(FileError { path: id, problem: FileProblem::NotUtf8 });
                continue;
            }
        };
        let mut doc = Document::new(id.clone(), text);
        doc.path = path.to_string_lossy().into_owned();
        doc.source_class = options.class_map.classify(&id);
        out.documents.push(doc);
    }
    out.documents.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(out)
}

/// Sidecar file with links, version labels and optional per-document
/// classes and metadata.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Manifest {
    pub links: Vec<Link>,
    pub versions: BTreeMap<String, String>,
    pub classes: BTreeMap<String, SourceClass>,
    pub metadata: BTreeMap<String, BTreeMap<String, String>>,
}

/// Applies `manifest` to the documents and checks the corpus invariants.
pub fn build_corpus(mut documents: Vec<Document>, manifest: Option<&Manifest>) -> Result<Corpus> {
    if let Some(m) = manifest {
        let index: BTreeMap<String, usize> =
            documents.iter().enumerate().map(|(i, d)| (d.id.clone(), i)).collect();
        let find = |id: &str| index.get(id).copied().ok_or_else(|| CorpusError::UnknownDocument(id.to_string()));
        for (id, v) in &m.versions {
            documents[find(id)?].version_label = Some(v.clone());
        }
        for (id, c) in &m.classes {
            documents[find(id)?].source_class = *c;
        }
        for (id, meta) in &m.metadata {
            documents[find(id)?].metadata.extend(meta.clone());
        }
    }
    let links = manifest.map(|m| m.links.clone()).unwrap_or_default();
    Ok(Corpus::new(documents, links)?)
}
