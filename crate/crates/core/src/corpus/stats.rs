//! Dataset statistics over a split joined with its question bodies.
//!
//! Intent, snippet, and body token columns are per example; question
//! counts, answer/code percentages, and modality columns are per unique
//! question. Standard deviations are population (N divisor).

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::segment::{body_stats, render, segment_body, AblationVariant};
use crate::stackexchange::RawQuestion;
use crate::tokens::StatsTokenizer;

use super::{CorpusError, Example};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MeanStd {
    pub mean: f64,
    pub std: f64,
}

impl MeanStd {
    fn of(values: &[f64]) -> Self {
        if values.is_empty() {
            return Self {
                mean: 0.0,
                std: 0.0,
            };
        }
        let n = values.len() as f64;
        let mean = values.iter().sum::<f64>() / n;
        let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n;
        Self {
            mean,
            std: var.sqrt(),
        }
    }
}

/// Per-question modality columns.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ModalityMeans {
    pub inline: MeanStd,
    pub blocks: MeanStd,
    pub code_tokens: MeanStd,
    pub nl_tokens: MeanStd,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SplitStats {
    pub n_examples: usize,
    pub n_questions: usize,
    pub examples_per_question: MeanStd,
    pub intent_tokens: MeanStd,
    pub snippet_tokens: MeanStd,
    pub body_tokens: MeanStd,
    pub pct_has_answer: f64,
    pub pct_has_code: f64,
    pub modality_means: ModalityMeans,
}

/// Computes every statistics column for one split. Every question id in
/// the split must be present in `bodies`.
pub fn compute_statistics(
    examples: &[Example],
    bodies: &HashMap<u64, RawQuestion>,
    tokenizer: &dyn StatsTokenizer,
) -> Result<SplitStats, CorpusError> {
    let mut per_question: BTreeMap<u64, usize> = BTreeMap::new();
    for example in examples {
        *per_question.entry(example.question_id).or_insert(0) += 1;
    }
    for &question_id in per_question.keys() {
        if !bodies.contains_key(&question_id) {
            return Err(CorpusError::MissingBody(question_id));
        }
    }

    // Segment each unique body once.
    let mut body_token_count: HashMap<u64, usize> = HashMap::new();
    let mut inline = Vec::with_capacity(per_question.len());
    let mut blocks = Vec::with_capacity(per_question.len());
    let mut code_tokens = Vec::with_capacity(per_question.len());
    let mut nl_tokens = Vec::with_capacity(per_question.len());
    let mut answered = 0usize;
    let mut with_code = 0usize;
    for &question_id in per_question.keys() {
        let question = &bodies[&question_id];
        let segments = segment_body(&question.body_html);
        let stats = body_stats(&segments, tokenizer);
        inline.push(stats.inline_count as f64);
        blocks.push(stats.block_count as f64);
        code_tokens.push(stats.code_tokens as f64);
        nl_tokens.push(stats.nl_tokens as f64);
        if question.has_accepted_answer {
            answered += 1;
        }
        if stats.has_code {
            with_code += 1;
        }
        let full = render(&segments, AblationVariant::Full);
        body_token_count.insert(question_id, tokenizer.count(&full));
    }

    let intent: Vec<f64> = examples
        .iter()
        .map(|e| tokenizer.count(e.effective_intent()) as f64)
        .collect();
    let snippet: Vec<f64> = examples
        .iter()
        .map(|e| tokenizer.count(&e.snippet) as f64)
        .collect();
    let body: Vec<f64> = examples
        .iter()
        .map(|e| body_token_count[&e.question_id] as f64)
        .collect();
    let examples_per_question: Vec<f64> = per_question.values().map(|&c| c as f64).collect();

    let n_questions = per_question.len();
    let pct = |count: usize| {
        if n_questions == 0 {
            0.0
        } else {
            100.0 * count as f64 / n_questions as f64
        }
    };

    Ok(SplitStats {
        n_examples: examples.len(),
        n_questions,
        examples_per_question: MeanStd::of(&examples_per_question),
        intent_tokens: MeanStd::of(&intent),
        snippet_tokens: MeanStd::of(&snippet),
        body_tokens: MeanStd::of(&body),
        pct_has_answer: pct(answered),
        pct_has_code: pct(with_code),
        modality_means: ModalityMeans {
            inline: MeanStd::of(&inline),
            blocks: MeanStd::of(&blocks),
            code_tokens: MeanStd::of(&code_tokens),
            nl_tokens: MeanStd::of(&nl_tokens),
        },
    })
}
