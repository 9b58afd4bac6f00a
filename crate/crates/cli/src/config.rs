//! Run configuration: defaults, overlaid by an optional TOML file,
//! overlaid by command-line flags (highest precedence).

use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use serde::Deserialize;

/// Minimum mined pool when mined data is enabled: the validation
/// carve-out must fit.
pub const MIN_MINED_K: usize = 1000;

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub annotated_train: Option<PathBuf>,
    pub annotated_test: Option<PathBuf>,
    pub mined: Option<PathBuf>,
    pub cache_dir: PathBuf,
    pub out_dir: PathBuf,
    pub mined_k: usize,
    pub seed: u64,
    pub variant: String,
    pub with_mined: bool,
    pub requests_per_minute: f64,
    pub max_in_flight: usize,
    pub max_retries: u32,
    pub site: String,
    pub stats_tokenizer: String,
    pub full_mined: bool,
    pub smoothing: String,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            annotated_train: None,
            annotated_test: None,
            mined: None,
            cache_dir: PathBuf::from("cache"),
            out_dir: PathBuf::from("out"),
            mined_k: 10_000,
            seed: 0,
            variant: "full".to_owned(),
            with_mined: true,
            requests_per_minute: 25.0,
            max_in_flight: 4,
            max_retries: 3,
            site: "stackoverflow".to_owned(),
            stats_tokenizer: "whitespace".to_owned(),
            full_mined: false,
            smoothing: "add-one".to_owned(),
        }
    }
}

#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
struct FileConfig {
    data: DataSection,
    build: BuildSection,
    fetch: FetchSection,
    stats: StatsSection,
    eval: EvalSection,
}

#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
struct DataSection {
    annotated_train: Option<PathBuf>,
    annotated_test: Option<PathBuf>,
    mined: Option<PathBuf>,
    cache_dir: Option<PathBuf>,
    out_dir: Option<PathBuf>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
struct BuildSection {
    mined_k: Option<usize>,
    seed: Option<u64>,
    variant: Option<String>,
    with_mined: Option<bool>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
struct FetchSection {
    requests_per_minute: Option<f64>,
    max_in_flight: Option<usize>,
    max_retries: Option<u32>,
    site: Option<String>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
struct StatsSection {
    tokenizer: Option<String>,
    full_mined: Option<bool>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
struct EvalSection {
    smoothing: Option<String>,
}

impl RunConfig {
    /// Defaults overlaid with the TOML file when given.
    pub fn load(config_path: Option<&Path>) -> Result<Self> {
        let mut config = RunConfig::default();
        if let Some(path) = config_path {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("cannot read config {}", path.display()))?;
            let file: FileConfig = toml::from_str(&text)
                .with_context(|| format!("cannot parse config {}", path.display()))?;
            config.apply(file);
        }
        Ok(config)
    }

    fn apply(&mut self, file: FileConfig) {
        let FileConfig {
            data,
            build,
            fetch,
            stats,
            eval,
        } = file;
        set(&mut self.annotated_train, data.annotated_train.map(Some));
        set(&mut self.annotated_test, data.annotated_test.map(Some));
        set(&mut self.mined, data.mined.map(Some));
        set(&mut self.cache_dir, data.cache_dir);
        set(&mut self.out_dir, data.out_dir);
        set(&mut self.mined_k, build.mined_k);
        set(&mut self.seed, build.seed);
        set(&mut self.variant, build.variant);
        set(&mut self.with_mined, build.with_mined);
        set(&mut self.requests_per_minute, fetch.requests_per_minute);
        set(&mut self.max_in_flight, fetch.max_in_flight);
        set(&mut self.max_retries, fetch.max_retries);
        set(&mut self.site, fetch.site);
        set(&mut self.stats_tokenizer, stats.tokenizer);
        set(&mut self.full_mined, stats.full_mined);
        set(&mut self.smoothing, eval.smoothing);
    }

    /// Checks cross-field invariants after all overrides are applied.
    pub fn validate(&self) -> Result<()> {
        if self.with_mined && self.mined_k < MIN_MINED_K {
            bail!(
                "mined_k must be at least {MIN_MINED_K} when mined data is enabled \
                 (the validation carve-out must fit), got {}",
                self.mined_k
            );
        }
        Ok(())
    }

    pub fn client_config(&self) -> conala_bodies::stackexchange::ClientConfig {
        conala_bodies::stackexchange::ClientConfig {
            site: self.site.clone(),
            requests_per_minute: self.requests_per_minute,
            max_in_flight: self.max_in_flight,
            max_retries: self.max_retries,
            ..Default::default()
        }
    }
}

fn set<T>(slot: &mut T, value: Option<T>) {
    if let Some(value) = value {
        *slot = value;
    }
}

/// Name of the environment variable holding the StackExchange API key.
pub const API_KEY_ENV: &str = "STACKEXCHANGE_API_KEY";

pub fn api_key_from_env() -> Option<String> {
    std::env::var(API_KEY_ENV).ok().filter(|k| !k.is_empty())
}
