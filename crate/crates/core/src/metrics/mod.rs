//! Snippet tokenization and the evaluation metric suite: smoothed corpus
//! and sentence BLEU, Oracle BLEU, ROUGE-2/L, and the body-similarity
//! ("cheating") measurements.
//!
//! All functions are pure and deterministic; corpus-level reductions run
//! in fixed input order so floating-point results are reproducible.

mod bleu;
mod cheating;
mod pair;
mod rouge;
mod tokenizer;

pub use bleu::{
    corpus_bleu, corpus_bleu_with, oracle_bleu, oracle_bleu_with, sentence_bleu, smoothing_by_id,
    smoothings, AddOneSmoothing, BleuReport, FloorSmoothing, OracleAggregation, Smoothing,
    DEFAULT_SMOOTHING,
};
pub use cheating::{cheating, cheating_by_id, cheating_report, CheatingReport};
pub use pair::{pair_metric_by_id, pair_metrics, PairMetric};
pub use rouge::{rouge_2, rouge_l};
pub use tokenizer::tokenize_code;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A tokenized snippet or body. Holds no empty-string tokens.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TokenSeq {
    tokens: Vec<String>,
}

impl TokenSeq {
    /// Builds a sequence, dropping any empty-string tokens.
    pub fn new(tokens: Vec<String>) -> Self {
        Self {
            tokens: tokens.into_iter().filter(|t| !t.is_empty()).collect(),
        }
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn contains(&self, token: &str) -> bool {
        self.tokens.iter().any(|t| t == token)
    }
}

impl From<Vec<String>> for TokenSeq {
    fn from(tokens: Vec<String>) -> Self {
        Self::new(tokens)
    }
}

impl From<&[&str]> for TokenSeq {
    fn from(tokens: &[&str]) -> Self {
        Self::new(tokens.iter().map(|t| (*t).to_owned()).collect())
    }
}

#[derive(Debug, Error)]
pub enum MetricsError {
    #[error("hypothesis/reference corpus length mismatch: {hyps} hypotheses vs {refs} references")]
    LengthMismatch { hyps: usize, refs: usize },

    #[error("empty corpus")]
    EmptyCorpus,

    #[error("n-gram order must be at least 1")]
    ZeroNgramOrder,

    #[error("candidate list at index {index} is empty")]
    EmptyCandidateList { index: usize },

    #[error(
        "aligned inputs disagree in length: generated {gen}, ground truth {truth}, bodies {bodies}"
    )]
    AlignmentMismatch {
        gen: usize,
        truth: usize,
        bodies: usize,
    },

    #[error("unknown pair metric id: {0}")]
    UnknownMetric(String),

    #[error("unknown smoothing id: {0}")]
    UnknownSmoothing(String),
}

/// Clipped n-gram precision of `hyp` against a single reference.
///
/// Returns 0 when the hypothesis has no n-grams of the requested order.
pub fn ngram_precision(
    hyp: &TokenSeq,
    reference: &TokenSeq,
    n: usize,
) -> Result<f64, MetricsError> {
    if n == 0 {
        return Err(MetricsError::ZeroNgramOrder);
    }
    Ok(bleu::clipped_precision(hyp.tokens(), reference.tokens(), n))
}
