pub mod build;
pub mod eval;
pub mod fetch;
pub mod stats;

use std::collections::HashMap;
use std::path::Path;

use anyhow::{bail, Result};

use conala_bodies::corpus::{load_annotated, load_mined, Example, LoadOutcome};
use conala_bodies::segment::AblationVariant;
use conala_bodies::stackexchange::{read_cached, RawQuestion};

use crate::config::RunConfig;

pub(crate) fn load_annotated_logged(path: &Path, what: &str) -> Result<LoadOutcome> {
    let outcome = load_annotated(path)?;
    if outcome.dropped > 0 {
        log::warn!(
            "{what}: dropped {} unusable records from {}",
            outcome.dropped,
            path.display()
        );
    }
    log::info!("{what}: {} examples loaded", outcome.examples.len());
    Ok(outcome)
}

pub(crate) fn load_mined_logged(path: &Path) -> Result<LoadOutcome> {
    let outcome = load_mined(path)?;
    if outcome.dropped > 0 {
        log::warn!(
            "mined: dropped {} unusable records from {}",
            outcome.dropped,
            path.display()
        );
    }
    log::info!("mined: {} examples loaded", outcome.examples.len());
    Ok(outcome)
}

/// Reads cached bodies for every distinct question id in `examples`;
/// missing entries are simply absent from the map (deleted-question
/// policy is the caller's concern).
pub(crate) fn cached_bodies(cache_dir: &Path, examples: &[&Example]) -> HashMap<u64, RawQuestion> {
    let mut bodies = HashMap::new();
    for example in examples {
        let question_id = example.question_id;
        if bodies.contains_key(&question_id) {
            continue;
        }
        if let Some(question) = read_cached(cache_dir, question_id) {
            bodies.insert(question_id, question);
        }
    }
    bodies
}

pub(crate) fn parse_variants(value: &str) -> Result<Vec<AblationVariant>> {
    if value.eq_ignore_ascii_case("all") {
        return Ok(AblationVariant::all().to_vec());
    }
    let mut variants = Vec::new();
    for part in value.split(',') {
        match part.trim().parse::<AblationVariant>() {
            Ok(variant) => variants.push(variant),
            Err(e) => bail!("{e}"),
        }
    }
    if variants.is_empty() {
        bail!("no variant given");
    }
    Ok(variants)
}

pub(crate) fn data_path<'a>(
    flag: &'a Option<std::path::PathBuf>,
    config: &'a Option<std::path::PathBuf>,
    what: &str,
) -> Result<&'a Path> {
    match flag.as_deref().or(config.as_deref()) {
        Some(path) => Ok(path),
        None => bail!("no {what} file configured (flag or [data] section)"),
    }
}

pub(crate) fn resolved_config(
    config: &RunConfig,
    cache_dir: &Option<std::path::PathBuf>,
    out_dir: &Option<std::path::PathBuf>,
) -> RunConfig {
    let mut resolved = config.clone();
    if let Some(dir) = cache_dir {
        resolved.cache_dir = dir.clone();
    }
    if let Some(dir) = out_dir {
        resolved.out_dir = dir.clone();
    }
    resolved
}
