//! StackExchange API client with local caching, batching, rate limiting,
//! and bounded retries.

mod cache;
mod client;

pub use cache::{cache_path, read_cached, write_cached};
pub use client::{ClientConfig, HttpTransport, StackExchangeClient, Transport, TransportResponse};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// One StackOverflow question as fetched: the body HTML is stored exactly
/// as returned by the API so segmentation stays reproducible.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawQuestion {
    pub question_id: u64,
    pub title: String,
    pub body_html: String,
    pub tags: Vec<String>,
    pub is_answered: bool,
    pub has_accepted_answer: bool,
    /// UTC seconds at fetch time.
    pub retrieved_at: u64,
}

/// Outcome of a fetch: `fetched + missing.len() == requested`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FetchReport {
    pub requested: usize,
    pub fetched: usize,
    /// Ids that no longer exist on the site, in ascending order.
    pub missing: Vec<u64>,
    /// Remaining API quota, or -1 when no request was made.
    pub quota_remaining: i64,
}

#[derive(Debug, Error)]
pub enum FetchError {
    #[error("no question ids supplied")]
    EmptyIds,

    #[error("API quota exhausted; retry after {backoff_secs}s")]
    QuotaExhausted { backoff_secs: u64 },

    #[error("request for batch [{batch}] failed after {attempts} attempts: {detail}")]
    Transport {
        batch: String,
        attempts: u32,
        detail: String,
    },

    #[error("API error {error_id} ({name}): {message}")]
    Api {
        error_id: u64,
        name: String,
        message: String,
    },

    #[error("malformed API payload: {excerpt}")]
    MalformedPayload { excerpt: String },

    #[error("cache I/O at {path}: {source}")]
    CacheIo {
        path: std::path::PathBuf,
        #[source]
        source: std::io::Error,
    },
}
