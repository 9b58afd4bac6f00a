//! The code tokenizer shared by every metric in this crate.
//!
//! Rules, in order: every character that is not ASCII-alphanumeric or an
//! underscore is padded with spaces; a lowercase-to-uppercase boundary is
//! split; both quote characters map to a backtick; the result is split on
//! whitespace with empty tokens dropped. This mirrors the tokenizer used
//! by the CoNaLa challenge evaluation, so BLEU numbers are comparable.

use super::TokenSeq;

pub fn tokenize_code(snippet: &str) -> TokenSeq {
    let mut padded = String::with_capacity(snippet.len() * 2);
    for ch in snippet.chars() {
        if ch.is_ascii_alphanumeric() || ch == '_' {
            padded.push(ch);
        } else {
            padded.push(' ');
            padded.push(match ch {
                '"' | '\'' => '`',
                other => other,
            });
            padded.push(' ');
        }
    }

    let chars: Vec<char> = padded.chars().collect();
    let mut spaced = String::with_capacity(padded.len() + 8);
    for (i, &c) in chars.iter().enumerate() {
        spaced.push(c);
        if c.is_ascii_lowercase()
            && chars
                .get(i + 1)
                .is_some_and(|next| next.is_ascii_uppercase())
        {
            spaced.push(' ');
        }
    }

    TokenSeq::new(spaced.split_whitespace().map(str::to_owned).collect())
}
