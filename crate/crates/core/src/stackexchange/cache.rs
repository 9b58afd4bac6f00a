//! One pretty-printed JSON file per question id, written atomically
//! (temp file then rename) so concurrent writers never expose partial
//! records.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};

use super::{FetchError, RawQuestion};

// Distinguishes temp files of concurrent writers within one process.
static WRITE_SEQ: AtomicU64 = AtomicU64::new(0);

pub fn cache_path(cache_dir: &Path, question_id: u64) -> PathBuf {
    cache_dir.join(format!("{question_id}.json"))
}

/// Reads a cached question. Unreadable or corrupt entries are treated as
/// misses with a warning so the caller re-fetches them.
pub fn read_cached(cache_dir: &Path, question_id: u64) -> Option<RawQuestion> {
    let path = cache_path(cache_dir, question_id);
    let text = match fs::read_to_string(&path) {
        Ok(text) => text,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return None,
        Err(e) => {
            log::warn!("ignoring unreadable cache entry {}: {e}", path.display());
            return None;
        }
    };
    match serde_json::from_str::<RawQuestion>(&text) {
        Ok(question) if question.question_id == question_id && !question.body_html.is_empty() => {
            Some(question)
        }
        Ok(_) => {
            log::warn!("ignoring inconsistent cache entry {}", path.display());
            None
        }
        Err(e) => {
            log::warn!("ignoring corrupt cache entry {}: {e}", path.display());
            None
        }
    }
}

pub fn write_cached(cache_dir: &Path, question: &RawQuestion) -> Result<(), FetchError> {
    fs::create_dir_all(cache_dir).map_err(|source| FetchError::CacheIo {
        path: cache_dir.to_owned(),
        source,
    })?;
    let path = cache_path(cache_dir, question.question_id);
    let tmp = cache_dir.join(format!(
        "{}.json.tmp-{}-{}",
        question.question_id,
        std::process::id(),
        WRITE_SEQ.fetch_add(1, Ordering::Relaxed)
    ));
    let text = serde_json::to_string_pretty(question).expect("question serializes");
    fs::write(&tmp, text).map_err(|source| FetchError::CacheIo {
        path: tmp.clone(),
        source,
    })?;
    fs::rename(&tmp, &path).map_err(|source| FetchError::CacheIo { path, source })
}
