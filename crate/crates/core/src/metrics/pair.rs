//! Per-pair similarity metrics behind a common trait.
//!
//! The four instantiations used by the cheating report (BLEU bigram and
//! trigram precision, ROUGE-2, ROUGE-L) are registered here by id and can
//! be selected at runtime by name or alias.

use super::bleu::clipped_precision;
use super::rouge::{rouge_2, rouge_l};
use super::TokenSeq;

pub trait PairMetric: Send + Sync {
    fn id(&self) -> &'static str;

    fn aliases(&self) -> &'static [&'static str] {
        &[]
    }

    /// Similarity of `hyp` against `reference`, in [0, 1].
    fn score(&self, hyp: &TokenSeq, reference: &TokenSeq) -> f64;
}

struct BleuBigram;

impl PairMetric for BleuBigram {
    fn id(&self) -> &'static str {
        "bleu-bigram"
    }

    fn aliases(&self) -> &'static [&'static str] {
        &["bb"]
    }

    fn score(&self, hyp: &TokenSeq, reference: &TokenSeq) -> f64 {
        clipped_precision(hyp.tokens(), reference.tokens(), 2)
    }
}

struct BleuTrigram;

impl PairMetric for BleuTrigram {
    fn id(&self) -> &'static str {
        "bleu-trigram"
    }

    fn aliases(&self) -> &'static [&'static str] {
        &["bt"]
    }

    fn score(&self, hyp: &TokenSeq, reference: &TokenSeq) -> f64 {
        clipped_precision(hyp.tokens(), reference.tokens(), 3)
    }
}

struct RougeBigram;

impl PairMetric for RougeBigram {
    fn id(&self) -> &'static str {
        "rouge-2"
    }

    fn aliases(&self) -> &'static [&'static str] {
        &["r2"]
    }

    fn score(&self, hyp: &TokenSeq, reference: &TokenSeq) -> f64 {
        rouge_2(hyp, reference)
    }
}

struct RougeLcs;

impl PairMetric for RougeLcs {
    fn id(&self) -> &'static str {
        "rouge-l"
    }

    fn aliases(&self) -> &'static [&'static str] {
        &["rl"]
    }

    fn score(&self, hyp: &TokenSeq, reference: &TokenSeq) -> f64 {
        rouge_l(hyp, reference)
    }
}

/// Cheating-report column order.
static PAIR_METRICS: [&dyn PairMetric; 4] = [&BleuBigram, &BleuTrigram, &RougeBigram, &RougeLcs];

pub fn pair_metrics() -> &'static [&'static dyn PairMetric] {
    &PAIR_METRICS
}

pub fn pair_metric_by_id(id: &str) -> Option<&'static dyn PairMetric> {
    let wanted = id.to_ascii_lowercase();
    PAIR_METRICS
        .iter()
        .copied()
        .find(|m| m.id() == wanted || m.aliases().contains(&wanted.as_str()))
}
