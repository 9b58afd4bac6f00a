//! Corpus, sentence, and oracle BLEU.
//!
//! The corpus score follows the CoNaLa challenge evaluation: BLEU-4 over
//! aggregate clipped n-gram counts, a corpus-level brevity penalty, and
//! add-one smoothing of every order (the reported per-order precisions
//! stay unsmoothed). The arithmetic mirrors that evaluator operation for
//! operation so scores agree to the last few bits.

use std::collections::HashMap;

use serde::Serialize;

use super::{MetricsError, TokenSeq};

const MAX_ORDER: usize = 4;

/// Corpus BLEU result. `score` is in [0, 100]; `precisions` are the
/// unsmoothed per-order precisions in [0, 1].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BleuReport {
    pub score: f64,
    pub precisions: [f64; MAX_ORDER],
    pub brevity_penalty: f64,
    pub hyp_len: usize,
    pub ref_len: usize,
}

/// How zero (or all) n-gram precisions are adjusted before the geometric
/// mean. Strategies are registered by id and selectable at runtime.
pub trait Smoothing: Send + Sync {
    fn id(&self) -> &'static str;

    /// Returns the per-order precisions that enter the geometric mean.
    fn smooth(&self, matches: &[u64; MAX_ORDER], possible: &[u64; MAX_ORDER]) -> [f64; MAX_ORDER];
}

/// Add-one smoothing on every order: `(matches + 1) / (possible + 1)`.
/// This is what the CoNaLa challenge evaluation applies.
pub struct AddOneSmoothing;

impl Smoothing for AddOneSmoothing {
    fn id(&self) -> &'static str {
        "add-one"
    }

    fn smooth(&self, matches: &[u64; MAX_ORDER], possible: &[u64; MAX_ORDER]) -> [f64; MAX_ORDER] {
        let mut out = [0.0; MAX_ORDER];
        for i in 0..MAX_ORDER {
            out[i] = (matches[i] as f64 + 1.0) / (possible[i] as f64 + 1.0);
        }
        out
    }
}

/// Raw precisions with zero values floored to a small epsilon.
pub struct FloorSmoothing;

impl FloorSmoothing {
    const FLOOR: f64 = 1e-7;
}

impl Smoothing for FloorSmoothing {
    fn id(&self) -> &'static str {
        "floor"
    }

    fn smooth(&self, matches: &[u64; MAX_ORDER], possible: &[u64; MAX_ORDER]) -> [f64; MAX_ORDER] {
        let mut out = [0.0; MAX_ORDER];
        for i in 0..MAX_ORDER {
            let p = if possible[i] > 0 {
                matches[i] as f64 / possible[i] as f64
            } else {
                0.0
            };
            out[i] = if p > 0.0 { p } else { Self::FLOOR };
        }
        out
    }
}

pub static DEFAULT_SMOOTHING: &dyn Smoothing = &AddOneSmoothing;

static SMOOTHINGS: [&dyn Smoothing; 2] = [&AddOneSmoothing, &FloorSmoothing];

pub fn smoothings() -> &'static [&'static dyn Smoothing] {
    &SMOOTHINGS
}

pub fn smoothing_by_id(id: &str) -> Option<&'static dyn Smoothing> {
    let wanted = id.to_ascii_lowercase();
    SMOOTHINGS.iter().copied().find(|s| s.id() == wanted)
}

fn ngram_counts(tokens: &[String], n: usize) -> HashMap<&[String], u64> {
    let mut counts: HashMap<&[String], u64> = HashMap::new();
    if n >= 1 && tokens.len() >= n {
        for window in tokens.windows(n) {
            *counts.entry(window).or_insert(0) += 1;
        }
    }
    counts
}

/// Clipped n-gram precision for a single hypothesis/reference pair.
pub(super) fn clipped_precision(hyp: &[String], reference: &[String], n: usize) -> f64 {
    if hyp.len() < n {
        return 0.0;
    }
    let total = (hyp.len() - n + 1) as u64;
    let ref_counts = ngram_counts(reference, n);
    let mut matched = 0u64;
    for (gram, count) in ngram_counts(hyp, n) {
        matched += count.min(ref_counts.get(gram).copied().unwrap_or(0));
    }
    matched as f64 / total as f64
}

struct Accumulator {
    matches: [u64; MAX_ORDER],
    possible: [u64; MAX_ORDER],
    hyp_len: usize,
    ref_len: usize,
}

impl Accumulator {
    fn new() -> Self {
        Self {
            matches: [0; MAX_ORDER],
            possible: [0; MAX_ORDER],
            hyp_len: 0,
            ref_len: 0,
        }
    }

    fn add_pair(&mut self, hyp: &[String], reference: &[String]) {
        self.hyp_len += hyp.len();
        self.ref_len += reference.len();
        for n in 1..=MAX_ORDER {
            let ref_counts = ngram_counts(reference, n);
            for (gram, count) in ngram_counts(hyp, n) {
                self.matches[n - 1] += count.min(ref_counts.get(gram).copied().unwrap_or(0));
            }
            if hyp.len() >= n {
                self.possible[n - 1] += (hyp.len() - n + 1) as u64;
            }
        }
    }

    fn report(&self, smoothing: &dyn Smoothing) -> BleuReport {
        let mut precisions = [0.0; MAX_ORDER];
        for (slot, (&matched, &possible)) in precisions
            .iter_mut()
            .zip(self.matches.iter().zip(&self.possible))
        {
            if possible > 0 {
                *slot = matched as f64 / possible as f64;
            }
        }

        let smoothed = smoothing.smooth(&self.matches, &self.possible);
        let geo_mean = if smoothed.iter().all(|p| *p > 0.0) {
            let mut log_sum = 0.0;
            for p in smoothed {
                log_sum += (1.0 / MAX_ORDER as f64) * p.ln();
            }
            log_sum.exp()
        } else {
            0.0
        };

        let brevity_penalty = if self.hyp_len == 0 {
            0.0
        } else {
            let ratio = self.hyp_len as f64 / self.ref_len as f64;
            if ratio > 1.0 {
                1.0
            } else {
                (1.0 - 1.0 / ratio).exp()
            }
        };

        BleuReport {
            score: geo_mean * brevity_penalty * 100.0,
            precisions,
            brevity_penalty,
            hyp_len: self.hyp_len,
            ref_len: self.ref_len,
        }
    }
}

/// Corpus BLEU-4 with the default (add-one) smoothing.
pub fn corpus_bleu(hyps: &[TokenSeq], refs: &[TokenSeq]) -> Result<BleuReport, MetricsError> {
    corpus_bleu_with(hyps, refs, DEFAULT_SMOOTHING)
}

pub fn corpus_bleu_with(
    hyps: &[TokenSeq],
    refs: &[TokenSeq],
    smoothing: &dyn Smoothing,
) -> Result<BleuReport, MetricsError> {
    if hyps.len() != refs.len() {
        return Err(MetricsError::LengthMismatch {
            hyps: hyps.len(),
            refs: refs.len(),
        });
    }
    if hyps.is_empty() {
        return Err(MetricsError::EmptyCorpus);
    }
    let mut acc = Accumulator::new();
    for (hyp, reference) in hyps.iter().zip(refs) {
        acc.add_pair(hyp.tokens(), reference.tokens());
    }
    Ok(acc.report(smoothing))
}

/// Corpus BLEU of the singleton corpus, with an empty hypothesis scoring 0.
pub fn sentence_bleu(hyp: &TokenSeq, reference: &TokenSeq) -> f64 {
    if hyp.is_empty() {
        return 0.0;
    }
    let mut acc = Accumulator::new();
    acc.add_pair(hyp.tokens(), reference.tokens());
    acc.report(DEFAULT_SMOOTHING).score
}

/// How per-example argmax candidates are aggregated into one number.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleAggregation {
    /// Corpus BLEU over the selected candidates (default).
    Corpus,
    /// Mean of the selected candidates' sentence BLEU scores.
    MeanSentence,
}

/// Oracle BLEU: per example, pick the candidate with the highest sentence
/// BLEU against the reference (ties go to the lowest index), then score
/// the selected snippets with corpus BLEU.
pub fn oracle_bleu(candidates: &[Vec<TokenSeq>], refs: &[TokenSeq]) -> Result<f64, MetricsError> {
    oracle_bleu_with(candidates, refs, OracleAggregation::Corpus)
}

pub fn oracle_bleu_with(
    candidates: &[Vec<TokenSeq>],
    refs: &[TokenSeq],
    aggregation: OracleAggregation,
) -> Result<f64, MetricsError> {
    if candidates.len() != refs.len() {
        return Err(MetricsError::LengthMismatch {
            hyps: candidates.len(),
            refs: refs.len(),
        });
    }
    if candidates.is_empty() {
        return Err(MetricsError::EmptyCorpus);
    }

    let mut selected: Vec<&TokenSeq> = Vec::with_capacity(candidates.len());
    let mut best_scores: Vec<f64> = Vec::with_capacity(candidates.len());
    for (index, (cands, reference)) in candidates.iter().zip(refs).enumerate() {
        let mut best: Option<(&TokenSeq, f64)> = None;
        for candidate in cands {
            let score = sentence_bleu(candidate, reference);
            match best {
                Some((_, best_score)) if score <= best_score => {}
                _ => best = Some((candidate, score)),
            }
        }
        let (choice, score) = best.ok_or(MetricsError::EmptyCandidateList { index })?;
        selected.push(choice);
        best_scores.push(score);
    }

    match aggregation {
        OracleAggregation::Corpus => {
            let mut acc = Accumulator::new();
            for (hyp, reference) in selected.iter().zip(refs) {
                acc.add_pair(hyp.tokens(), reference.tokens());
            }
            Ok(acc.report(DEFAULT_SMOOTHING).score)
        }
        OracleAggregation::MeanSentence => {
            Ok(best_scores.iter().sum::<f64>() / best_scores.len() as f64)
        }
    }
}
