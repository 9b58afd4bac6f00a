//! CoNaLa corpus loading, split construction, model-input assembly,
//! dataset statistics, and JSONL export.

mod export;
mod input;
mod load;
mod split;
mod stats;

pub use export::{export_jsonl, read_jsonl, Manifest};
pub use input::build_input;
pub use load::{load_annotated, load_mined, select_top_mined, LoadOutcome};
pub use split::{make_splits, make_splits_with, Splits, ANNOTATED_VALID_COUNT, MINED_VALID_COUNT};
pub use stats::{compute_statistics, MeanStd, ModalityMeans, SplitStats};

use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::segment::AblationVariant;

/// Where an example came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Source {
    Annotated,
    Mined,
}

/// One natural-language-to-code pair.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Example {
    /// Stable id assigned at load time (source kind plus file position).
    pub id: String,
    pub question_id: u64,
    pub intent: String,
    pub rewritten_intent: Option<String>,
    pub snippet: String,
    /// Mined-pair confidence; present iff `source` is `Mined`.
    pub prob: Option<f64>,
    pub source: Source,
}

impl Example {
    /// The rewritten intent when available, the raw intent otherwise.
    pub fn effective_intent(&self) -> &str {
        match &self.rewritten_intent {
            Some(text) if !text.is_empty() => text,
            _ => &self.intent,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Split {
    Train,
    Valid,
    Test,
}

impl Split {
    pub fn name(self) -> &'static str {
        match self {
            Split::Train => "train",
            Split::Valid => "valid",
            Split::Test => "test",
        }
    }
}

impl FromStr for Split {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "train" => Ok(Split::Train),
            "valid" => Ok(Split::Valid),
            "test" => Ok(Split::Test),
            other => Err(format!("unknown split '{other}'")),
        }
    }
}

impl std::fmt::Display for Split {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// One assembled (input text, target snippet) record.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelInput {
    pub example_id: String,
    pub question_id: u64,
    pub input_text: String,
    pub target: String,
    pub variant: AblationVariant,
    pub split: Split,
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path} is not in the expected format: {detail}")]
    Format { path: PathBuf, detail: String },

    #[error("need at least {need} {what} examples, have {have}")]
    TooFewExamples {
        what: &'static str,
        need: usize,
        have: usize,
    },

    #[error("example {example_id} needs the body of question {question_id}, which is missing")]
    MissingQuestion {
        example_id: String,
        question_id: u64,
    },

    #[error("no fetched body for question {0}")]
    MissingBody(u64),
}
