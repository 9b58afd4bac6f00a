"""Reference implementations used only to generate frozen test fixtures.

`tokenize_for_bleu_eval` is the code tokenizer published with the CoNaLa
challenge evaluation, and `compute_bleu` is the smoothed corpus BLEU that
the challenge evaluation calls (originally from the Google NMT codebase,
Apache-2.0). They are kept in plain Python here so fixtures can be
regenerated and diffed against the Rust implementation.
"""

import collections
import math
import re


def tokenize_for_bleu_eval(code):
    code = re.sub(r'([^A-Za-z0-9_])', r' \1 ', code)
    code = re.sub(r'([a-z])([A-Z])', r'\1 \2', code)
    code = re.sub(r'\s+', ' ', code)
    code = code.replace('"', '`')
    code = code.replace('\'', '`')
    tokens = [t for t in code.split(' ') if t]
    return tokens


def _get_ngrams(segment, max_order):
    ngram_counts = collections.Counter()
    for order in range(1, max_order + 1):
        for i in range(0, len(segment) - order + 1):
            ngram = tuple(segment[i:i + order])
            ngram_counts[ngram] += 1
    return ngram_counts


def compute_bleu(reference_corpus, translation_corpus, max_order=4,
                 smooth=False):
    matches_by_order = [0] * max_order
    possible_matches_by_order = [0] * max_order
    reference_length = 0
    translation_length = 0
    for (references, translation) in zip(reference_corpus,
                                         translation_corpus):
        reference_length += min(len(r) for r in references)
        translation_length += len(translation)

        merged_ref_ngram_counts = collections.Counter()
        for reference in references:
            merged_ref_ngram_counts |= _get_ngrams(reference, max_order)
        translation_ngram_counts = _get_ngrams(translation, max_order)
        overlap = translation_ngram_counts & merged_ref_ngram_counts
        for ngram in overlap:
            matches_by_order[len(ngram) - 1] += overlap[ngram]
        for order in range(1, max_order + 1):
            possible_matches = len(translation) - order + 1
            if possible_matches > 0:
                possible_matches_by_order[order - 1] += possible_matches

    precisions = [0] * max_order
    for i in range(0, max_order):
        if smooth:
            precisions[i] = ((matches_by_order[i] + 1.) /
                             (possible_matches_by_order[i] + 1.))
        else:
            if possible_matches_by_order[i] > 0:
                precisions[i] = (float(matches_by_order[i]) /
                                 possible_matches_by_order[i])
            else:
                precisions[i] = 0.0

    if min(precisions) > 0:
        geo_mean = math.exp(sum((1. / max_order) * math.log(p)
                                for p in precisions))
    else:
        geo_mean = 0

    ratio = float(translation_length) / reference_length
    if ratio > 1.0:
        bp = 1.
    else:
        bp = math.exp(1 - 1. / ratio)

    bleu = geo_mean * bp

    return (bleu, precisions, bp, ratio, translation_length, reference_length)


def corpus_bleu_report(hyp_token_lists, ref_token_lists):
    """Score in [0, 100] plus unsmoothed per-order precisions."""
    refs = [[r] for r in ref_token_lists]
    smoothed = compute_bleu(refs, hyp_token_lists, smooth=True)
    plain = compute_bleu(refs, hyp_token_lists, smooth=False)
    return {
        'score': smoothed[0] * 100.0,
        'precisions': plain[1],
        'brevity_penalty': smoothed[2],
        'hyp_len': smoothed[4],
        'ref_len': smoothed[5],
    }


def sentence_bleu(hyp_tokens, ref_tokens):
    if not hyp_tokens:
        return 0.0
    return corpus_bleu_report([hyp_tokens], [ref_tokens])['score']


def ngram_precision(hyp_tokens, ref_tokens, n):
    """Clipped n-gram precision of hyp against a single reference."""
    total = len(hyp_tokens) - n + 1
    if total <= 0:
        return 0.0
    hyp_counts = collections.Counter(
        tuple(hyp_tokens[i:i + n]) for i in range(total))
    ref_counts = collections.Counter(
        tuple(ref_tokens[i:i + n]) for i in range(len(ref_tokens) - n + 1))
    matched = sum(min(c, ref_counts[g]) for g, c in hyp_counts.items())
    return matched / float(total)


def rouge_2(hyp_tokens, ref_tokens):
    hyp_total = len(hyp_tokens) - 1
    ref_total = len(ref_tokens) - 1
    if hyp_total <= 0 or ref_total <= 0:
        return 0.0
    hyp_counts = collections.Counter(
        tuple(hyp_tokens[i:i + 2]) for i in range(hyp_total))
    ref_counts = collections.Counter(
        tuple(ref_tokens[i:i + 2]) for i in range(ref_total))
    matched = sum(min(c, ref_counts[g]) for g, c in hyp_counts.items())
    precision = matched / float(hyp_total)
    recall = matched / float(ref_total)
    if precision + recall == 0.0:
        return 0.0
    return 2.0 * precision * recall / (precision + recall)


def _lcs_length(a, b):
    if not a or not b:
        return 0
    dp = [[0] * (len(b) + 1) for _ in range(len(a) + 1)]
    for i in range(1, len(a) + 1):
        for j in range(1, len(b) + 1):
            if a[i - 1] == b[j - 1]:
                dp[i][j] = dp[i - 1][j - 1] + 1
            else:
                dp[i][j] = max(dp[i - 1][j], dp[i][j - 1])
    return dp[len(a)][len(b)]


def rouge_l(hyp_tokens, ref_tokens):
    if not hyp_tokens or not ref_tokens:
        return 0.0
    lcs = float(_lcs_length(hyp_tokens, ref_tokens))
    precision = lcs / len(hyp_tokens)
    recall = lcs / len(ref_tokens)
    if precision + recall == 0.0:
        return 0.0
    return 2.0 * precision * recall / (precision + recall)


PAIR_METRICS = {
    'bb': lambda h, r: ngram_precision(h, r, 2),
    'bt': lambda h, r: ngram_precision(h, r, 3),
    'r2': rouge_2,
    'rl': rouge_l,
}


def cheating(gen_lists, truth_lists, body_lists, metric):
    m = PAIR_METRICS[metric]
    n = len(gen_lists)
    total = sum(m(s, b) - m(y, b)
                for s, y, b in zip(gen_lists, truth_lists, body_lists))
    return total / float(n)


if __name__ == '__main__':
    # Tokenize a JSON array of snippet strings from stdin to stdout.
    import json
    import sys
    snippets = json.load(sys.stdin)
    json.dump([tokenize_for_bleu_eval(s) for s in snippets], sys.stdout)
