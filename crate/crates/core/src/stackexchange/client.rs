//! The questions client: batches ids (at most 100 per request), honors
//! the API backoff field through a token-bucket limiter, bounds in-flight
//! requests, retries transport failures, and never fabricates questions.

use std::collections::{HashMap, HashSet};
use std::path::Path;
use std::sync::{Condvar, Mutex};
use std::time::{Duration, Instant, SystemTime, UNIX_EPOCH};

use serde::Deserialize;

use super::{cache, FetchError, FetchReport, RawQuestion};

/// Maximum ids per API request (API page cap).
pub const MAX_BATCH: usize = 100;

#[derive(Debug, Clone)]
pub struct ClientConfig {
    pub api_base: String,
    pub site: String,
    /// Token-bucket rate, requests per minute.
    pub requests_per_minute: f64,
    /// Concurrent request bound.
    pub max_in_flight: usize,
    /// Retries per batch after the first attempt.
    pub max_retries: u32,
}

impl Default for ClientConfig {
    fn default() -> Self {
        Self {
            api_base: "https://api.stackexchange.com/2.3".to_owned(),
            site: "stackoverflow".to_owned(),
            requests_per_minute: 25.0,
            max_in_flight: 4,
            max_retries: 3,
        }
    }
}

#[derive(Debug)]
pub struct TransportResponse {
    pub status: u16,
    pub body: String,
}

/// HTTP layer behind the client, injectable for tests.
pub trait Transport: Send + Sync {
    fn get(&self, url: &str) -> Result<TransportResponse, String>;
}

impl<T: Transport + ?Sized> Transport for std::sync::Arc<T> {
    fn get(&self, url: &str) -> Result<TransportResponse, String> {
        (**self).get(url)
    }
}

/// Real transport over reqwest; gzip responses are decompressed by the
/// client stack.
pub struct HttpTransport {
    client: reqwest::blocking::Client,
}

impl HttpTransport {
    pub fn new() -> Self {
        let client = reqwest::blocking::Client::builder()
            .timeout(Duration::from_secs(60))
            .gzip(true)
            .user_agent(concat!("conala-bodies/", env!("CARGO_PKG_VERSION")))
            .build()
            .expect("reqwest client builds");
        Self { client }
    }
}

impl Default for HttpTransport {
    fn default() -> Self {
        Self::new()
    }
}

impl Transport for HttpTransport {
    fn get(&self, url: &str) -> Result<TransportResponse, String> {
        let response = self.client.get(url).send().map_err(|e| e.to_string());
        match response {
            Ok(response) => {
                let status = response.status().as_u16();
                let body = response.text().map_err(|e| e.to_string())?;
                Ok(TransportResponse { status, body })
            }
            Err(e) => Err(e),
        }
    }
}

struct Limiter {
    tokens: f64,
    capacity: f64,
    refill_per_sec: f64,
    last_refill: Instant,
    not_before: Instant,
}

impl Limiter {
    fn new(requests_per_minute: f64) -> Self {
        let capacity = requests_per_minute.max(1.0);
        Self {
            tokens: capacity,
            capacity,
            refill_per_sec: requests_per_minute / 60.0,
            last_refill: Instant::now(),
            not_before: Instant::now(),
        }
    }

    fn wait_duration(&mut self) -> Option<Duration> {
        let now = Instant::now();
        if now < self.not_before {
            return Some(self.not_before - now);
        }
        let elapsed = now.duration_since(self.last_refill).as_secs_f64();
        self.tokens = (self.tokens + elapsed * self.refill_per_sec).min(self.capacity);
        self.last_refill = now;
        if self.tokens >= 1.0 {
            self.tokens -= 1.0;
            None
        } else {
            let deficit = 1.0 - self.tokens;
            Some(Duration::from_secs_f64(deficit / self.refill_per_sec))
        }
    }

    fn backoff(&mut self, secs: u64) {
        self.not_before = Instant::now() + Duration::from_secs(secs);
    }
}

struct Gate {
    active: Mutex<usize>,
    freed: Condvar,
}

impl Gate {
    fn acquire(&self, limit: usize) -> GateGuard<'_> {
        let mut active = self.active.lock().expect("gate lock");
        while *active >= limit {
            active = self.freed.wait(active).expect("gate wait");
        }
        *active += 1;
        GateGuard { gate: self }
    }
}

struct GateGuard<'a> {
    gate: &'a Gate,
}

impl Drop for GateGuard<'_> {
    fn drop(&mut self) {
        let mut active = self.gate.active.lock().expect("gate lock");
        *active -= 1;
        self.gate.freed.notify_one();
    }
}

#[derive(Deserialize)]
struct ApiItem {
    question_id: u64,
    #[serde(default)]
    title: String,
    #[serde(default)]
    body: Option<String>,
    #[serde(default)]
    tags: Vec<String>,
    #[serde(default)]
    is_answered: Option<bool>,
    #[serde(default)]
    accepted_answer_id: Option<u64>,
}

#[derive(Deserialize)]
struct ApiEnvelope {
    #[serde(default)]
    items: Vec<ApiItem>,
    #[serde(default)]
    backoff: Option<u64>,
    #[serde(default)]
    quota_remaining: Option<i64>,
    #[serde(default)]
    error_id: Option<u64>,
    #[serde(default)]
    error_name: Option<String>,
    #[serde(default)]
    error_message: Option<String>,
}

const THROTTLE_ERROR_ID: u64 = 502;
const DEFAULT_THROTTLE_BACKOFF: u64 = 60;

/// Safe for concurrent callers: the limiter and in-flight gate are shared
/// and cache writes are atomic.
pub struct StackExchangeClient {
    transport: Box<dyn Transport>,
    config: ClientConfig,
    limiter: Mutex<Limiter>,
    gate: Gate,
}

impl StackExchangeClient {
    pub fn new(config: ClientConfig) -> Self {
        Self::with_transport(Box::new(HttpTransport::new()), config)
    }

    pub fn with_transport(transport: Box<dyn Transport>, config: ClientConfig) -> Self {
        let limiter = Mutex::new(Limiter::new(config.requests_per_minute));
        Self {
            transport,
            config,
            limiter,
            gate: Gate {
                active: Mutex::new(0),
                freed: Condvar::new(),
            },
        }
    }

    fn throttle(&self) {
        loop {
            let wait = self.limiter.lock().expect("limiter lock").wait_duration();
            match wait {
                None => return,
                Some(duration) => std::thread::sleep(duration),
            }
        }
    }

    fn batch_url(&self, batch: &[u64], api_key: Option<&str>) -> String {
        let ids = batch
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(";");
        let mut url = format!(
            "{}/questions/{}?site={}&filter=withbody&pagesize={}",
            self.config.api_base, ids, self.config.site, MAX_BATCH
        );
        if let Some(key) = api_key {
            url.push_str("&key=");
            url.push_str(key);
        }
        url
    }

    fn request_batch(
        &self,
        batch: &[u64],
        api_key: Option<&str>,
    ) -> Result<ApiEnvelope, FetchError> {
        let url = self.batch_url(batch, api_key);
        let describe = || {
            format!(
                "{}..{} ({} ids)",
                batch.first().copied().unwrap_or(0),
                batch.last().copied().unwrap_or(0),
                batch.len()
            )
        };

        let mut last_error = String::new();
        let attempts = self.config.max_retries + 1;
        for attempt in 0..attempts {
            if attempt > 0 {
                let delay = Duration::from_millis(500 * (1 << attempt.min(6)));
                std::thread::sleep(delay);
            }
            self.throttle();
            let _slot = self.gate.acquire(self.config.max_in_flight);
            match self.transport.get(&url) {
                Ok(response) if response.status >= 500 => {
                    last_error = format!("HTTP {}", response.status);
                }
                Ok(response) => {
                    let envelope: ApiEnvelope =
                        serde_json::from_str(&response.body).map_err(|_| {
                            FetchError::MalformedPayload {
                                excerpt: response.body.chars().take(200).collect(),
                            }
                        })?;
                    if let Some(secs) = envelope.backoff {
                        log::warn!("API asked for a {secs}s backoff");
                        self.limiter.lock().expect("limiter lock").backoff(secs);
                    }
                    if let Some(error_id) = envelope.error_id {
                        if error_id == THROTTLE_ERROR_ID {
                            return Err(FetchError::QuotaExhausted {
                                backoff_secs: envelope.backoff.unwrap_or(DEFAULT_THROTTLE_BACKOFF),
                            });
                        }
                        return Err(FetchError::Api {
                            error_id,
                            name: envelope.error_name.unwrap_or_default(),
                            message: envelope.error_message.unwrap_or_default(),
                        });
                    }
                    return Ok(envelope);
                }
                Err(detail) => last_error = detail,
            }
        }
        Err(FetchError::Transport {
            batch: describe(),
            attempts,
            detail: last_error,
        })
    }

    fn fetch_batches(
        &self,
        ids: &[u64],
        api_key: Option<&str>,
        mut on_batch: impl FnMut(&[RawQuestion]) -> Result<(), FetchError>,
    ) -> Result<(Vec<RawQuestion>, i64), FetchError> {
        let now = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        let mut questions = Vec::with_capacity(ids.len());
        let mut quota = -1i64;
        for batch in ids.chunks(MAX_BATCH) {
            let envelope = self.request_batch(batch, api_key)?;
            if let Some(q) = envelope.quota_remaining {
                quota = q;
            }
            let mut fetched = Vec::with_capacity(envelope.items.len());
            for item in envelope.items {
                let Some(body) = item.body.filter(|b| !b.is_empty()) else {
                    log::warn!(
                        "question {} came back without a body; treating as missing",
                        item.question_id
                    );
                    continue;
                };
                fetched.push(RawQuestion {
                    question_id: item.question_id,
                    title: item.title,
                    body_html: body,
                    tags: item.tags,
                    is_answered: item.is_answered.unwrap_or(false),
                    has_accepted_answer: item.accepted_answer_id.is_some(),
                    retrieved_at: now,
                });
            }
            on_batch(&fetched)?;
            questions.extend(fetched);
        }
        Ok((questions, quota))
    }

    /// Fetches the given question ids from the API. Deleted ids are
    /// reported in `missing`, never fabricated.
    pub fn fetch_questions(
        &self,
        ids: &[u64],
        api_key: Option<&str>,
    ) -> Result<(Vec<RawQuestion>, FetchReport), FetchError> {
        if ids.is_empty() {
            return Err(FetchError::EmptyIds);
        }
        let unique = dedupe(ids);
        let (questions, quota) = self.fetch_batches(&unique, api_key, |_| Ok(()))?;
        Ok(assemble(&unique, questions, quota))
    }

    /// As [`fetch_questions`], but hits served from `cache_dir` skip the
    /// network and fetched questions are persisted batch by batch, so an
    /// interrupted run resumes where it stopped.
    pub fn cached_fetch(
        &self,
        ids: &[u64],
        cache_dir: &Path,
        api_key: Option<&str>,
    ) -> Result<(Vec<RawQuestion>, FetchReport), FetchError> {
        if ids.is_empty() {
            return Err(FetchError::EmptyIds);
        }
        let unique = dedupe(ids);

        let mut hits: Vec<RawQuestion> = Vec::new();
        let mut misses: Vec<u64> = Vec::new();
        for &id in &unique {
            match cache::read_cached(cache_dir, id) {
                Some(question) => hits.push(question),
                None => misses.push(id),
            }
        }

        let (fetched, quota) = if misses.is_empty() {
            (Vec::new(), -1)
        } else {
            self.fetch_batches(&misses, api_key, |batch| {
                for question in batch {
                    cache::write_cached(cache_dir, question)?;
                }
                Ok(())
            })?
        };

        hits.extend(fetched);
        Ok(assemble(&unique, hits, quota))
    }
}

fn dedupe(ids: &[u64]) -> Vec<u64> {
    let mut seen = HashSet::with_capacity(ids.len());
    ids.iter().copied().filter(|id| seen.insert(*id)).collect()
}

fn assemble(
    requested: &[u64],
    questions: Vec<RawQuestion>,
    quota: i64,
) -> (Vec<RawQuestion>, FetchReport) {
    let mut by_id: HashMap<u64, RawQuestion> =
        questions.into_iter().map(|q| (q.question_id, q)).collect();
    let mut ordered = Vec::with_capacity(by_id.len());
    let mut missing = Vec::new();
    for &id in requested {
        match by_id.remove(&id) {
            Some(question) => ordered.push(question),
            None => missing.push(id),
        }
    }
    missing.sort_unstable();
    let report = FetchReport {
        requested: requested.len(),
        fetched: ordered.len(),
        missing,
        quota_remaining: quota,
    };
    (ordered, report)
}
