//! Corpus construction and evaluation toolkit for the CoNaLa dataset
//! extended with StackOverflow question bodies.
//!
//! The crate covers the full pipeline:
//!
//! - [`stackexchange`]: fetch and cache question bodies from the
//!   StackExchange API.
//! - [`segment`]: split a question body into code-block / inline-code /
//!   natural-language segments and render ablation variants.
//! - [`corpus`]: load the CoNaLa files, build train/valid/test splits,
//!   assemble model inputs, compute dataset statistics, export JSONL.
//! - [`metrics`]: code tokenization, smoothed corpus/sentence BLEU,
//!   Oracle BLEU, ROUGE-2/L, and the body-similarity ("cheating") report.
//! - [`syntax`]: Python 3 validity checks with delimiter-based error
//!   categories and `print`-presence buckets.
//! - [`report`]: aligned snippet-file input and evaluation report output.

pub mod corpus;
pub mod metrics;
pub mod report;
pub mod segment;
pub mod stackexchange;
pub mod syntax;
pub mod tokens;

pub use corpus::{Example, ModelInput, Split, SplitStats, Splits};
pub use metrics::{
    corpus_bleu, sentence_bleu, tokenize_code, BleuReport, CheatingReport, TokenSeq,
};
pub use segment::{render, segment_body, AblationVariant, Modality, ModalityStats, Segment};
pub use stackexchange::{FetchReport, RawQuestion, StackExchangeClient};
pub use syntax::{check_syntax, ErrorCategory, ValidityResult};
