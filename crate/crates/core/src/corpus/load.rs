//! Loaders for the published CoNaLa files: the annotated JSON arrays and
//! the mined JSONL. Individual bad records are dropped with a warning and
//! counted; unreadable files are fatal.

use std::fs;
use std::path::Path;

use serde_json::Value;

use super::{CorpusError, Example, Source};

/// Loaded examples plus the number of records dropped as unusable.
#[derive(Debug, Clone)]
pub struct LoadOutcome {
    pub examples: Vec<Example>,
    pub dropped: usize,
}

fn read_lossy(path: &Path) -> Result<String, CorpusError> {
    let bytes = fs::read(path).map_err(|source| CorpusError::Io {
        path: path.to_owned(),
        source,
    })?;
    Ok(String::from_utf8_lossy(&bytes).into_owned())
}

fn text_field(record: &Value, key: &str) -> Option<String> {
    let text = record.get(key)?.as_str()?.to_owned();
    // Replacement characters mark text that did not survive decoding.
    if text.contains('\u{FFFD}') {
        return None;
    }
    Some(text)
}

fn optional_text_field(record: &Value, key: &str) -> Option<String> {
    text_field(record, key).filter(|t| !t.is_empty())
}

fn question_id_field(record: &Value) -> Option<u64> {
    let value = record.get("question_id")?;
    value
        .as_u64()
        .or_else(|| value.as_str().and_then(|s| s.parse().ok()))
}

fn example_from_record(record: &Value, id: String, source: Source) -> Option<Example> {
    let question_id = question_id_field(record)?;
    let intent = text_field(record, "intent")?;
    let snippet = text_field(record, "snippet").filter(|s| !s.is_empty())?;
    let prob = match source {
        Source::Mined => {
            let prob = record.get("prob")?.as_f64()?;
            if !(0.0..=1.0).contains(&prob) {
                return None;
            }
            Some(prob)
        }
        Source::Annotated => None,
    };
    Some(Example {
        id,
        question_id,
        intent,
        rewritten_intent: optional_text_field(record, "rewritten_intent"),
        snippet,
        prob,
        source,
    })
}

/// Loads an annotated CoNaLa JSON file (fields `intent`,
/// `rewritten_intent`, `snippet`, `question_id`).
pub fn load_annotated(path: &Path) -> Result<LoadOutcome, CorpusError> {
    let text = read_lossy(path)?;
    let records: Vec<Value> = serde_json::from_str(&text).map_err(|e| CorpusError::Format {
        path: path.to_owned(),
        detail: e.to_string(),
    })?;

    let mut examples = Vec::with_capacity(records.len());
    let mut dropped = 0;
    for (index, record) in records.iter().enumerate() {
        let id = format!("anno-{index:05}");
        match example_from_record(record, id, Source::Annotated) {
            Some(example) => examples.push(example),
            None => {
                dropped += 1;
                log::warn!(
                    "{}: dropping unusable annotated record at index {index}",
                    path.display()
                );
            }
        }
    }
    Ok(LoadOutcome { examples, dropped })
}

/// Loads the mined CoNaLa JSONL file (fields `intent`, `snippet`,
/// `question_id`, `prob`).
pub fn load_mined(path: &Path) -> Result<LoadOutcome, CorpusError> {
    let text = read_lossy(path)?;
    let mut examples = Vec::new();
    let mut dropped = 0;
    for (index, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let id = format!("mined-{index:06}");
        let example = serde_json::from_str::<Value>(line)
            .ok()
            .and_then(|record| example_from_record(&record, id, Source::Mined));
        match example {
            Some(example) => examples.push(example),
            None => {
                dropped += 1;
                log::warn!(
                    "{}: dropping unusable mined record at line {}",
                    path.display(),
                    index + 1
                );
            }
        }
    }
    Ok(LoadOutcome { examples, dropped })
}

/// The `k` highest-probability mined examples, sorted by descending
/// probability with ties broken by ascending question id and then file
/// order.
pub fn select_top_mined(mined: &[Example], k: usize) -> Vec<Example> {
    let mut order: Vec<usize> = (0..mined.len()).collect();
    order.sort_by(|&a, &b| {
        let pa = mined[a].prob.unwrap_or(0.0);
        let pb = mined[b].prob.unwrap_or(0.0);
        pb.total_cmp(&pa)
            .then_with(|| mined[a].question_id.cmp(&mined[b].question_id))
            .then_with(|| a.cmp(&b))
    });
    order
        .into_iter()
        .take(k)
        .map(|i| mined[i].clone())
        .collect()
}
