//! Token-counting strategies for dataset statistics.
//!
//! Statistics tables are whitespace-tokenized by default; the code-aware
//! strategy runs the metric tokenizer instead and exists because snippet
//! columns of published statistics look closer to code-token counts.

use crate::metrics::tokenize_code;

pub trait StatsTokenizer: Send + Sync {
    fn id(&self) -> &'static str;
    fn count(&self, text: &str) -> usize;
}

/// Splits on whitespace (default).
pub struct WhitespaceTokenizer;

impl StatsTokenizer for WhitespaceTokenizer {
    fn id(&self) -> &'static str {
        "whitespace"
    }

    fn count(&self, text: &str) -> usize {
        text.split_whitespace().count()
    }
}

/// Counts tokens produced by the metric code tokenizer.
pub struct CodeTokenizer;

impl StatsTokenizer for CodeTokenizer {
    fn id(&self) -> &'static str {
        "code"
    }

    fn count(&self, text: &str) -> usize {
        tokenize_code(text).len()
    }
}

pub static DEFAULT_STATS_TOKENIZER: &dyn StatsTokenizer = &WhitespaceTokenizer;

static TOKENIZERS: [&dyn StatsTokenizer; 2] = [&WhitespaceTokenizer, &CodeTokenizer];

pub fn stats_tokenizers() -> &'static [&'static dyn StatsTokenizer] {
    &TOKENIZERS
}

pub fn stats_tokenizer_by_id(id: &str) -> Option<&'static dyn StatsTokenizer> {
    let wanted = id.to_ascii_lowercase();
    TOKENIZERS.iter().copied().find(|t| t.id() == wanted)
}
