//! `fetch`: gather every question id referenced by the configured data
//! files and pull the missing bodies into the local cache.

use std::collections::BTreeSet;

use anyhow::{bail, Result};

use conala_bodies::stackexchange::{FetchReport, StackExchangeClient};

use crate::config::{api_key_from_env, RunConfig};

use super::{load_annotated_logged, load_mined_logged};

pub fn run(config: &RunConfig) -> Result<FetchReport> {
    let mut ids: BTreeSet<u64> = BTreeSet::new();
    let mut any_source = false;

    if let Some(path) = &config.annotated_train {
        any_source = true;
        for example in load_annotated_logged(path, "annotated train")?.examples {
            ids.insert(example.question_id);
        }
    }
    if let Some(path) = &config.annotated_test {
        any_source = true;
        for example in load_annotated_logged(path, "annotated test")?.examples {
            ids.insert(example.question_id);
        }
    }
    if let Some(path) = &config.mined {
        any_source = true;
        for example in load_mined_logged(path)?.examples {
            ids.insert(example.question_id);
        }
    }
    if !any_source {
        bail!("fetch needs at least one data file (annotated train/test or mined)");
    }

    let ids: Vec<u64> = ids.into_iter().collect();
    log::info!(
        "fetching {} unique questions into {}",
        ids.len(),
        config.cache_dir.display()
    );

    let client = StackExchangeClient::new(config.client_config());
    let api_key = api_key_from_env();
    let (_, report) = client.cached_fetch(&ids, &config.cache_dir, api_key.as_deref())?;

    println!(
        "requested {}  fetched {}  missing {}  quota remaining {}",
        report.requested,
        report.fetched,
        report.missing.len(),
        report.quota_remaining
    );
    if !report.missing.is_empty() {
        println!("missing question ids (deleted or bodiless):");
        for id in &report.missing {
            println!("  {id}");
        }
    }
    Ok(report)
}
