//! ROUGE-2 and ROUGE-L as per-pair F1 scores (equal-weight harmonic mean).

use super::TokenSeq;

fn f1(precision: f64, recall: f64) -> f64 {
    if precision + recall == 0.0 {
        0.0
    } else {
        2.0 * precision * recall / (precision + recall)
    }
}

/// Bigram-overlap F1. Returns 0 when either side has fewer than two tokens.
pub fn rouge_2(hyp: &TokenSeq, reference: &TokenSeq) -> f64 {
    let hyp_tokens = hyp.tokens();
    let ref_tokens = reference.tokens();
    if hyp_tokens.len() < 2 || ref_tokens.len() < 2 {
        return 0.0;
    }

    let mut ref_counts: std::collections::HashMap<&[String], u64> =
        std::collections::HashMap::new();
    for window in ref_tokens.windows(2) {
        *ref_counts.entry(window).or_insert(0) += 1;
    }
    let mut hyp_counts: std::collections::HashMap<&[String], u64> =
        std::collections::HashMap::new();
    for window in hyp_tokens.windows(2) {
        *hyp_counts.entry(window).or_insert(0) += 1;
    }

    let mut matched = 0u64;
    for (gram, count) in hyp_counts {
        matched += count.min(ref_counts.get(gram).copied().unwrap_or(0));
    }

    let precision = matched as f64 / (hyp_tokens.len() - 1) as f64;
    let recall = matched as f64 / (ref_tokens.len() - 1) as f64;
    f1(precision, recall)
}

fn lcs_length(a: &[String], b: &[String]) -> usize {
    if a.is_empty() || b.is_empty() {
        return 0;
    }
    // Two-row DP over token sequences.
    let mut prev = vec![0usize; b.len() + 1];
    let mut curr = vec![0usize; b.len() + 1];
    for item in a {
        for (j, other) in b.iter().enumerate() {
            curr[j + 1] = if item == other {
                prev[j] + 1
            } else {
                prev[j + 1].max(curr[j])
            };
        }
        std::mem::swap(&mut prev, &mut curr);
    }
    prev[b.len()]
}

/// Longest-common-subsequence F1 over token sequences.
pub fn rouge_l(hyp: &TokenSeq, reference: &TokenSeq) -> f64 {
    if hyp.is_empty() || reference.is_empty() {
        return 0.0;
    }
    let lcs = lcs_length(hyp.tokens(), reference.tokens()) as f64;
    let precision = lcs / hyp.len() as f64;
    let recall = lcs / reference.len() as f64;
    f1(precision, recall)
}
