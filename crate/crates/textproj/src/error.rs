use std::io;
use std::path::PathBuf;

use textproj_core::clones::CloneError;
use textproj_core::coding::CodingError;
use textproj_core::corpus::CorpusError;
use textproj_core::layout::LayoutError;
use textproj_core::ngram::NGramError;
use textproj_core::topics::TopicError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("invalid ignore pattern `{pattern}`: {message}")]
    InvalidPattern { pattern: String, message: String },
    #[error("cannot read {}: {source}", path.display())]
    Read { path: PathBuf, source: io::Error },
    #[error("cannot parse {}: {source}", path.display())]
    Parse { path: PathBuf, source: serde_json::Error },
    #[error("cannot write {}: {source}", path.display())]
    Write { path: PathBuf, source: io::Error },
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error(transparent)]
    Clone(#[from] CloneError),
    #[error(transparent)]
    NGram(#[from] NGramError),
    #[error(transparent)]
    Topic(#[from] TopicError),
    #[error(transparent)]
    Coding(#[from] CodingError),
    #[error(transparent)]
    Layout(#[from] LayoutError),
    #[error("{0}")]
    Analysis(String),
}

impl Error {
    /// 2 for bad invocations and unusable inputs, 1 for failed analyses.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::InvalidPattern { .. } | Error::Read { .. } | Error::Parse { .. } => 2,
            _ => 1,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
