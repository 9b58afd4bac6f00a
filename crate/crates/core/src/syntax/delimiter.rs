//! Delimiter scan used to categorize parse failures.
//!
//! Tracks (), [], {} nesting and quote state outside strings, skipping
//! comments and escaped characters. A mismatched closer fails at its own
//! position; at end of input the earliest unclosed opener (an open string
//! counts, with its opening quote position) decides. Categorization must
//! work without an AST, since it only ever runs on unparseable snippets.

/// What a failed scan points at.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum DelimiterKind {
    Paren,
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum ScanOutcome {
    Balanced,
    Failure {
        kind: DelimiterKind,
        position: usize,
    },
}

fn closer_for(open: char) -> char {
    match open {
        '(' => ')',
        '[' => ']',
        _ => '}',
    }
}

pub(crate) fn scan_delimiters(source: &str) -> ScanOutcome {
    let chars: Vec<(usize, char)> = source.char_indices().collect();
    let mut stack: Vec<(char, usize)> = Vec::new();
    // (quote char, triple?, position)
    let mut string: Option<(char, bool, usize)> = None;

    let mut i = 0;
    while i < chars.len() {
        let (pos, ch) = chars[i];

        if let Some((quote, triple, start)) = string {
            if ch == '\\' {
                i += 2;
                continue;
            }
            if triple {
                if ch == quote
                    && chars.get(i + 1).map(|c| c.1) == Some(quote)
                    && chars.get(i + 2).map(|c| c.1) == Some(quote)
                {
                    string = None;
                    i += 3;
                    continue;
                }
            } else {
                if ch == quote {
                    string = None;
                    i += 1;
                    continue;
                }
                if ch == '\n' {
                    // Single-quoted strings cannot span lines.
                    return ScanOutcome::Failure {
                        kind: DelimiterKind::Other,
                        position: start,
                    };
                }
            }
            i += 1;
            continue;
        }

        match ch {
            '#' => {
                while i < chars.len() && chars[i].1 != '\n' {
                    i += 1;
                }
                continue;
            }
            '\'' | '"' => {
                let triple = chars.get(i + 1).map(|c| c.1) == Some(ch)
                    && chars.get(i + 2).map(|c| c.1) == Some(ch);
                string = Some((ch, triple, pos));
                i += if triple { 3 } else { 1 };
                continue;
            }
            '(' | '[' | '{' => stack.push((ch, pos)),
            ')' | ']' | '}' => match stack.pop() {
                Some((open, _)) if closer_for(open) == ch => {}
                Some((open, _)) => {
                    let kind = if ch == ')' || open == '(' {
                        DelimiterKind::Paren
                    } else {
                        DelimiterKind::Other
                    };
                    return ScanOutcome::Failure {
                        kind,
                        position: pos,
                    };
                }
                None => {
                    let kind = if ch == ')' {
                        DelimiterKind::Paren
                    } else {
                        DelimiterKind::Other
                    };
                    return ScanOutcome::Failure {
                        kind,
                        position: pos,
                    };
                }
            },
            _ => {}
        }
        i += 1;
    }

    // End of input: whichever unclosed construct opened first wins.
    let mut earliest: Option<(usize, DelimiterKind)> = None;
    if let Some((_, _, pos)) = string {
        earliest = Some((pos, DelimiterKind::Other));
    }
    if let Some(&(open, pos)) = stack.first() {
        let kind = if open == '(' {
            DelimiterKind::Paren
        } else {
            DelimiterKind::Other
        };
        if earliest.is_none_or(|(e, _)| pos < e) {
            earliest = Some((pos, kind));
        }
    }
    match earliest {
        Some((position, kind)) => ScanOutcome::Failure { kind, position },
        None => ScanOutcome::Balanced,
    }
}
