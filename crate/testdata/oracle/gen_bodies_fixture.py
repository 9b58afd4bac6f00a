"""Generate 500 StackOverflow-style HTML bodies with reference stripped text.

The stripped text is produced by an independent stdlib HTMLParser walk that
decodes character references and drops tags (including the HTML5 rule that
one newline immediately after a <pre> start tag is ignored). The Rust
segmenter's full-coverage property is checked against these strings.

Run from the repository root:

    python3 testdata/oracle/gen_bodies_fixture.py
"""

import json
import os
import random
from html.parser import HTMLParser

OUT = os.path.join(os.path.dirname(os.path.abspath(__file__)), '..',
                   'bodies_reference.json')

WORDS = (
    "I have a list of values and want to convert them into something "
    "usable but the function keeps returning None when called with the "
    "wrong arguments so how can this be done without importing another "
    "library here is what was tried so far any help would be great also "
    "note that performance matters because the data frame has millions "
    "of rows thanks in advance edit this works now").split()

INLINE_CODE = [
    "np.newaxis", "df.groupby('id')", "list(map(int, s))", "x[::-1]",
    "dict.items()", "os.path.join", "lambda x: x + 1", "a &amp; b",
    "s.split(',')", "None", "_to_col", "print", "range(10)",
    "collections.Counter", "&lt;module&gt;",
]

BLOCK_CODE = [
    "for i in range(10):\n    print(i)\n",
    "import numpy as np\na = np.ones((3, 4))\nb = a[:, np.newaxis]\n",
    "def f(x):\n    return x * 2\n\nresult = f(21)\n",
    "&gt;&gt;&gt; sorted(data, key=lambda p: p[1])\n[(1, 'a'), (2, 'b')]\n",
    "Traceback (most recent call last):\n  File \"t.py\", line 1\nValueError: bad\n",
    "df = pd.DataFrame({'a': [1, 2]})\ndf['b'] = df['a'] ** 2\n",
    "x = 1\ny = 2\nprint(x + y)\n",
    "while queue:\n    item = queue.pop()\n    handle(item)\n",
]

ENTITIES = ["&amp;", "&lt;", "&gt;", "&quot;", "&#39;", "&#x27;", "&nbsp;",
            "&middot;", "&rarr;"]

HAND_WRITTEN = [
    # Typical numpy question with an unmarked identifier in running text.
    "<p>I want to add a new axis to array <code>a</code> so that "
    "broadcasting works. The helper _to_col below is what I use today "
    "but it feels clumsy:</p>\n\n"
    "<pre><code>import numpy as np\na = np.ones(5)\nb = a.reshape(-1, 1)\n"
    "</code></pre>\n\n<p>Is there a cleaner way, maybe with "
    "<code>np.newaxis</code>?</p>\n",
    "<p>How do I join a list with a colon <code>:</code>?</p>\n"
    "<pre><code>b = [1, 2, 3]\nprint ':'.join(str(x) for x in b)\n"
    "</code></pre>\n<p>The above is Python 2 &mdash; what changed?</p>\n",
    "<p>Duplicate of <a href=\"https://example.com/q/1\">this question</a>."
    "</p>\n<blockquote>\n  <p>closed as duplicate</p>\n</blockquote>\n",
    "<pre><code>$ pip install requests\nCollecting requests ...\n"
    "</code></pre>\n<p>fails with <code>PermissionError</code> "
    "&mdash; why?</p>\n",
    "<p></p>\n<p>Empty paragraph above, image below.</p>\n"
    "<p><img src=\"https://i.example.com/x.png\" alt=\"plot\"></p>\n",
]


class StripExtractor(HTMLParser):
    """Reference tag stripper aligned with HTML5 text extraction."""

    def __init__(self):
        super().__init__(convert_charrefs=True)
        self.parts = []
        self.pending_pre = False

    def handle_starttag(self, tag, attrs):
        if tag == 'pre':
            self.pending_pre = True
        else:
            self.pending_pre = False

    def handle_endtag(self, tag):
        self.pending_pre = False

    def handle_data(self, data):
        if self.pending_pre:
            if data.startswith('\n'):
                data = data[1:]
            self.pending_pre = False
        if data:
            self.parts.append(data)


def strip_tags(html):
    p = StripExtractor()
    p.feed(html)
    p.close()
    return ''.join(p.parts)


def sentence(rng, low=4, high=18):
    n = rng.randint(low, high)
    words = [rng.choice(WORDS) for _ in range(n)]
    if rng.random() < 0.4:
        words.insert(rng.randrange(len(words)), rng.choice(ENTITIES))
    return ' '.join(words)


def paragraph(rng):
    parts = [sentence(rng)]
    for _ in range(rng.randint(0, 3)):
        parts.append('<code>%s</code>' % rng.choice(INLINE_CODE))
        parts.append(sentence(rng, 2, 10))
    open_b = rng.random() < 0.05
    body = ' '.join(parts)
    if open_b:
        body = '<b>' + body  # left unclosed on purpose
    return '<p>%s</p>' % body


def code_block(rng):
    code = rng.choice(BLOCK_CODE)
    lead = '\n' if rng.random() < 0.5 else ''
    return '<pre><code>%s%s</code></pre>' % (lead, code)


def list_block(rng):
    items = ''.join('<li>%s</li>\n' % sentence(rng, 2, 8)
                    for _ in range(rng.randint(2, 4)))
    tag = rng.choice(['ul', 'ol'])
    return '<%s>\n%s</%s>' % (tag, items, tag)


def quote_block(rng):
    return '<blockquote>\n<p>%s</p>\n</blockquote>' % sentence(rng)


def element_block(rng):
    roll = rng.random()
    if roll < 0.5:
        return paragraph(rng)
    if roll < 0.8:
        return code_block(rng)
    if roll < 0.9:
        return list_block(rng)
    return quote_block(rng)


def gen_body(rng):
    # The HTML5 parser discards whitespace that appears before the first
    # element (comments do not end the pre-body insertion modes), so a
    # body always opens with an element, as rendered markdown does.
    blocks = [element_block(rng)]
    for _ in range(rng.randint(0, 5)):
        if rng.random() < 0.12:
            blocks.append('<!-- %s -->' % sentence(rng, 1, 3))
        else:
            blocks.append(element_block(rng))
    if rng.random() < 0.1:
        blocks.append('<hr>')
    if rng.random() < 0.15:
        blocks.append('<p>see <a href="https://example.com/%d">this</a> '
                      'and <em>%s</em></p>'
                      % (rng.randint(1, 999), sentence(rng, 1, 4)))
    return '\n\n'.join(blocks) + '\n'


def main():
    rng = random.Random(20210817)
    bodies = list(HAND_WRITTEN)
    while len(bodies) < 500:
        bodies.append(gen_body(rng))
    cases = [{'html': b, 'stripped': strip_tags(b)} for b in bodies]
    with open(OUT, 'w') as f:
        json.dump({'cases': cases}, f, indent=1, ensure_ascii=False)
    print('bodies:', len(cases))


if __name__ == '__main__':
    main()
