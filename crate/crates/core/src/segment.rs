//! Modality segmentation of StackOverflow question bodies.
//!
//! A body is parsed with a lenient HTML5 parser and flattened into an
//! ordered list of segments, each tagged as a code block (a `code`
//! element with a `pre` ancestor), inline code (a `code` element without
//! one), or natural language (everything else). Entities are decoded and
//! tags dropped by the parser, so segment text is plain text.

use std::rc::Rc;
use std::str::FromStr;

use html5ever::parse_document;
use html5ever::tendril::TendrilSink;
use markup5ever_rcdom::{Handle, NodeData, RcDom};
use serde::{Deserialize, Serialize};

use crate::tokens::StatsTokenizer;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Modality {
    CodeBlock,
    InlineCode,
    NaturalLanguage,
}

impl Modality {
    pub fn is_code(self) -> bool {
        matches!(self, Modality::CodeBlock | Modality::InlineCode)
    }
}

/// A contiguous span of body text under one modality. `text` is raw
/// (tag-free, entity-decoded) text; whitespace is normalized at render
/// time, not here, so the segments cover the body exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    pub modality: Modality,
    pub text: String,
    pub order: usize,
}

/// Body renderings with chosen modalities removed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AblationVariant {
    Full,
    NoNl,
    NoCode,
    NoBlocks,
    NoInline,
    NoBody,
}

impl AblationVariant {
    pub fn all() -> [AblationVariant; 6] {
        [
            AblationVariant::Full,
            AblationVariant::NoNl,
            AblationVariant::NoCode,
            AblationVariant::NoBlocks,
            AblationVariant::NoInline,
            AblationVariant::NoBody,
        ]
    }

    pub fn name(self) -> &'static str {
        match self {
            AblationVariant::Full => "full",
            AblationVariant::NoNl => "no-nl",
            AblationVariant::NoCode => "no-code",
            AblationVariant::NoBlocks => "no-blocks",
            AblationVariant::NoInline => "no-inline",
            AblationVariant::NoBody => "no-body",
        }
    }

    pub fn keeps(self, modality: Modality) -> bool {
        match self {
            AblationVariant::Full => true,
            AblationVariant::NoBody => false,
            AblationVariant::NoNl => modality != Modality::NaturalLanguage,
            AblationVariant::NoCode => !modality.is_code(),
            AblationVariant::NoBlocks => modality != Modality::CodeBlock,
            AblationVariant::NoInline => modality != Modality::InlineCode,
        }
    }
}

impl FromStr for AblationVariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "full" => Ok(AblationVariant::Full),
            "no-nl" | "no_nl" => Ok(AblationVariant::NoNl),
            "no-code" | "no_code" => Ok(AblationVariant::NoCode),
            "no-blocks" | "no_blocks" => Ok(AblationVariant::NoBlocks),
            "no-inline" | "no_inline" => Ok(AblationVariant::NoInline),
            "no-body" | "no_body" => Ok(AblationVariant::NoBody),
            other => Err(format!(
                "unknown variant '{other}' (expected full, no-nl, no-code, no-blocks, no-inline, no-body)"
            )),
        }
    }
}

impl std::fmt::Display for AblationVariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Per-body modality statistics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ModalityStats {
    pub inline_count: usize,
    pub block_count: usize,
    pub code_tokens: usize,
    pub nl_tokens: usize,
    pub has_code: bool,
}

// Natural-language runs merge across element boundaries; code text merges
// only within one code element, so adjacent code elements stay distinct.
const NL_KEY: usize = usize::MAX;

struct Collector {
    segments: Vec<Segment>,
    last_key: usize,
}

impl Collector {
    fn push(&mut self, modality: Modality, key: usize, text: &str) {
        if text.is_empty() {
            return;
        }
        if let Some(last) = self.segments.last_mut() {
            if last.modality == modality && self.last_key == key {
                last.text.push_str(text);
                return;
            }
        }
        let order = self.segments.len();
        self.segments.push(Segment {
            modality,
            text: text.to_owned(),
            order,
        });
        self.last_key = key;
    }
}

fn walk(node: &Handle, in_pre: bool, code_ctx: Option<(usize, bool)>, out: &mut Collector) {
    match &node.data {
        NodeData::Text { contents } => {
            let text = contents.borrow();
            let (modality, key) = match code_ctx {
                Some((key, true)) => (Modality::CodeBlock, key),
                Some((key, false)) => (Modality::InlineCode, key),
                None => (Modality::NaturalLanguage, NL_KEY),
            };
            out.push(modality, key, &text);
        }
        NodeData::Element { name, .. } => {
            let tag = name.local.as_ref();
            let in_pre = in_pre || tag.eq_ignore_ascii_case("pre");
            let code_ctx = if tag.eq_ignore_ascii_case("code") {
                // Block iff the code element itself sits under a pre.
                Some((Rc::as_ptr(node) as usize, in_pre))
            } else {
                code_ctx
            };
            for child in node.children.borrow().iter() {
                walk(child, in_pre, code_ctx, out);
            }
        }
        NodeData::Document => {
            for child in node.children.borrow().iter() {
                walk(child, in_pre, code_ctx, out);
            }
        }
        _ => {}
    }
}

/// Parses a question body into ordered modality segments. Lenient: any
/// input yields a best-effort result, and an empty body yields no
/// segments.
pub fn segment_body(body_html: &str) -> Vec<Segment> {
    if body_html.is_empty() {
        return Vec::new();
    }
    let dom = parse_document(RcDom::default(), Default::default()).one(body_html);
    let mut collector = Collector {
        segments: Vec::new(),
        last_key: NL_KEY,
    };
    walk(&dom.document, false, None, &mut collector);
    collector.segments
}

fn normalize_inline(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for word in text.split_whitespace() {
        if !out.is_empty() {
            out.push(' ');
        }
        out.push_str(word);
    }
    out
}

// Code blocks keep their line structure: a whitespace run containing a
// newline becomes one newline, any other run one space.
fn normalize_block(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    let mut in_run = false;
    let mut run_has_newline = false;
    for ch in text.chars() {
        if ch.is_whitespace() {
            in_run = true;
            run_has_newline |= ch == '\n';
        } else {
            if in_run && !out.is_empty() {
                out.push(if run_has_newline { '\n' } else { ' ' });
            }
            in_run = false;
            run_has_newline = false;
            out.push(ch);
        }
    }
    out
}

/// Joins the segments kept by `variant` with single spaces, collapsing
/// whitespace runs (newlines survive inside code blocks). `NoBody` yields
/// an empty string.
pub fn render(segments: &[Segment], variant: AblationVariant) -> String {
    if variant == AblationVariant::NoBody {
        return String::new();
    }
    let mut parts: Vec<String> = Vec::new();
    for segment in segments {
        if !variant.keeps(segment.modality) {
            continue;
        }
        let normalized = match segment.modality {
            Modality::CodeBlock => normalize_block(&segment.text),
            _ => normalize_inline(&segment.text),
        };
        if !normalized.is_empty() {
            parts.push(normalized);
        }
    }
    parts.join(" ")
}

/// Counts segments and tokens per modality.
pub fn body_stats(segments: &[Segment], tokenizer: &dyn StatsTokenizer) -> ModalityStats {
    let mut stats = ModalityStats {
        inline_count: 0,
        block_count: 0,
        code_tokens: 0,
        nl_tokens: 0,
        has_code: false,
    };
    for segment in segments {
        match segment.modality {
            Modality::CodeBlock => {
                stats.block_count += 1;
                stats.code_tokens += tokenizer.count(&segment.text);
            }
            Modality::InlineCode => {
                stats.inline_count += 1;
                stats.code_tokens += tokenizer.count(&segment.text);
            }
            Modality::NaturalLanguage => {
                stats.nl_tokens += tokenizer.count(&segment.text);
            }
        }
    }
    stats.has_code = stats.inline_count + stats.block_count > 0;
    stats
}
