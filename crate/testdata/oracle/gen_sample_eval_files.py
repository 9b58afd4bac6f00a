"""Generate small aligned eval files used by CLI smoke tests.

Run from the repository root:

    python3 testdata/oracle/gen_sample_eval_files.py
"""

import json
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))
from snippets import SNIPPETS

OUT_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), '..')

REFS = SNIPPETS[:18] + ["print 'hello world'", "f(x"]

BODY_TEXTS = [
    "I tried %s but it does not work, any idea why" % s.replace('\n', ' ')
    for s in REFS[:10]
] + [
    "How can this be done in pure python without extra imports",
    "The data frame has a column of strings that must become integers",
    "Getting a TypeError when calling the function with a list",
    "What is the idiomatic way to express this",
    "The loop below is too slow for large inputs",
    "Is there a one liner for this",
    "I keep getting an IndexError on the last element",
    "The output should be sorted by value not by key",
    "My print statement from python 2 stopped working",
    "The parenthesis in the expression confuse me",
]


def main():
    with open(os.path.join(OUT_DIR, 'sample_refs.jsonl'), 'w') as f:
        for i, s in enumerate(REFS):
            f.write(json.dumps({'example_id': 'ex-%03d' % i, 'text': s},
                               ensure_ascii=False) + '\n')

    with open(os.path.join(OUT_DIR, 'sample_bodies.jsonl'), 'w') as f:
        for i, s in enumerate(BODY_TEXTS):
            f.write(json.dumps({'example_id': 'ex-%03d' % i, 'text': s},
                               ensure_ascii=False) + '\n')

    # Candidate lists: first candidate imperfect, a later one exact.
    with open(os.path.join(OUT_DIR, 'sample_candidates.jsonl'), 'w') as f:
        for i, s in enumerate(REFS):
            cands = [s + ' ', 'pass', s, s[: max(1, len(s) // 2)]]
            f.write(json.dumps({'example_id': 'ex-%03d' % i, 'text': cands},
                               ensure_ascii=False) + '\n')
    print('wrote sample_refs.jsonl, sample_bodies.jsonl, '
          'sample_candidates.jsonl (%d records each)' % len(REFS))


if __name__ == '__main__':
    main()
