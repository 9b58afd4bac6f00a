"""Generate frozen metric fixtures (tokenizer, BLEU, ROUGE, cheating).

Run from the repository root:

    python3 testdata/oracle/gen_metric_fixtures.py

Outputs testdata/tokenizer_reference.json, testdata/bleu_reference.json,
testdata/rouge_reference.json and testdata/cheating_reference.json.
"""

import json
import os
import random
import re
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import reference_eval as ref
from snippets import SNIPPETS

OUT_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), '..')

IDENTIFIERS = [
    'data', 'value', 'result', 'items', 'frame', 'arr', 'buf', 'node',
    'parseInt', 'myValue', 'tmp', 'out', 'acc', 'row', 'col', 'idx',
]


def mutate(rng, snippet):
    """String-level mutations producing a hypothesis for a reference."""
    kind = rng.randrange(6)
    if kind == 0:
        return snippet
    if kind == 1:
        return rng.choice(SNIPPETS)
    if kind == 2:
        other = rng.choice(SNIPPETS)
        cut_a = rng.randrange(1, max(2, len(snippet)))
        cut_b = rng.randrange(0, max(1, len(other)))
        return snippet[:cut_a] + other[cut_b:]
    if kind == 3:
        words = re.findall(r'[A-Za-z_][A-Za-z0-9_]*', snippet)
        if not words:
            return snippet
        target = rng.choice(words)
        return snippet.replace(target, rng.choice(IDENTIFIERS), 1)
    if kind == 4:
        cut = rng.randrange(1, max(2, len(snippet)))
        return snippet[:cut]
    extra = rng.choice(["[0]", ".strip()", " + 1", ", axis=0)", " if x else y"])
    return snippet + extra


def gen_pairs(rng, count):
    pairs = []
    for i in range(count):
        reference = SNIPPETS[i % len(SNIPPETS)]
        hyp = mutate(rng, reference)
        if not ref.tokenize_for_bleu_eval(hyp):
            hyp = reference
        pairs.append({'hyp': hyp, 'ref': reference})
    return pairs


def main():
    rng = random.Random(20210814)

    tokenizer_cases = [
        {'code': code, 'tokens': ref.tokenize_for_bleu_eval(code)}
        for code in SNIPPETS
    ]
    with open(os.path.join(OUT_DIR, 'tokenizer_reference.json'), 'w') as f:
        json.dump({'cases': tokenizer_cases}, f, indent=1, ensure_ascii=False)
    print('tokenizer cases:', len(tokenizer_cases))

    pairs = gen_pairs(rng, 60)
    enriched = []
    for p in pairs:
        hyp_tokens = ref.tokenize_for_bleu_eval(p['hyp'])
        ref_tokens = ref.tokenize_for_bleu_eval(p['ref'])
        enriched.append({
            'hyp': p['hyp'],
            'ref': p['ref'],
            'hyp_tokens': hyp_tokens,
            'ref_tokens': ref_tokens,
            'sentence_bleu': ref.sentence_bleu(hyp_tokens, ref_tokens),
        })

    identity_indices = [i for i, p in enumerate(enriched)
                        if p['hyp'] == p['ref']]
    groups = [
        list(range(0, 50)),
        list(range(0, 60)),
        list(range(0, 10)),
        list(range(10, 35)),
        list(range(35, 60)),
        identity_indices,
    ] + [[i] for i in range(0, 12)]

    corpora = []
    for indices in groups:
        if not indices:
            continue
        hyps = [enriched[i]['hyp_tokens'] for i in indices]
        refs = [enriched[i]['ref_tokens'] for i in indices]
        report = ref.corpus_bleu_report(hyps, refs)
        report['indices'] = indices
        corpora.append(report)

    with open(os.path.join(OUT_DIR, 'bleu_reference.json'), 'w') as f:
        json.dump({'pairs': enriched, 'corpora': corpora}, f,
                  indent=1, ensure_ascii=False)
    print('bleu pairs:', len(enriched), 'corpora:', len(corpora))

    rouge_cases = []
    for p in enriched[:40]:
        rouge_cases.append({
            'hyp_tokens': p['hyp_tokens'],
            'ref_tokens': p['ref_tokens'],
            'rouge2': ref.rouge_2(p['hyp_tokens'], p['ref_tokens']),
            'rougel': ref.rouge_l(p['hyp_tokens'], p['ref_tokens']),
            'bb': ref.ngram_precision(p['hyp_tokens'], p['ref_tokens'], 2),
            'bt': ref.ngram_precision(p['hyp_tokens'], p['ref_tokens'], 3),
        })
    with open(os.path.join(OUT_DIR, 'rouge_reference.json'), 'w') as f:
        json.dump({'cases': rouge_cases}, f, indent=1, ensure_ascii=False)
    print('rouge cases:', len(rouge_cases))

    crafted = {
        'gen': ['b = a[:]', 'x = 1', "print(' '.join(map(str, l)))"],
        'truth': ['b = list(a)', 'x = 2', "' '.join(map(str, l))"],
        'bodies': [
            'I want to copy a list so I tried b = a[:] but is that right',
            'how do I assign x = 1 in python',
            "use print(' '.join(map(str, l))) to show the list",
        ],
    }
    cheating_sets = [crafted]
    for start in (0, 15, 30):
        gen = [enriched[start + j]['hyp'] for j in range(5)]
        truth = [enriched[start + j]['ref'] for j in range(5)]
        bodies = [enriched[start + 5 + j]['ref'] + ' ' +
                  enriched[start + j]['ref'] for j in range(5)]
        cheating_sets.append({'gen': gen, 'truth': truth, 'bodies': bodies})

    cheat_cases = []
    for cs in cheating_sets:
        gen_toks = [ref.tokenize_for_bleu_eval(s) for s in cs['gen']]
        truth_toks = [ref.tokenize_for_bleu_eval(s) for s in cs['truth']]
        body_toks = [ref.tokenize_for_bleu_eval(s) for s in cs['bodies']]
        cheat_cases.append({
            'gen': cs['gen'],
            'truth': cs['truth'],
            'bodies': cs['bodies'],
            'c_bb': ref.cheating(gen_toks, truth_toks, body_toks, 'bb'),
            'c_bt': ref.cheating(gen_toks, truth_toks, body_toks, 'bt'),
            'c_r2': ref.cheating(gen_toks, truth_toks, body_toks, 'r2'),
            'c_rl': ref.cheating(gen_toks, truth_toks, body_toks, 'rl'),
        })
    with open(os.path.join(OUT_DIR, 'cheating_reference.json'), 'w') as f:
        json.dump({'cases': cheat_cases}, f, indent=1, ensure_ascii=False)
    print('cheating cases:', len(cheat_cases))


if __name__ == '__main__':
    main()
