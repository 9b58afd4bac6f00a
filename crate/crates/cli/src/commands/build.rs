//! `build`: load the corpus, cut the splits, assemble model inputs for
//! the requested variants, and export JSONL plus a manifest.

use anyhow::{Context, Result};

use conala_bodies::corpus::{
    build_input, export_jsonl, make_splits, select_top_mined, Example, Manifest, ModelInput, Split,
};
use conala_bodies::segment::AblationVariant;

use crate::config::RunConfig;

use super::{cached_bodies, data_path, load_annotated_logged, load_mined_logged, parse_variants};

pub fn run(config: &RunConfig) -> Result<Manifest> {
    let variants = parse_variants(&config.variant)?;

    let train_path = data_path(&None, &config.annotated_train, "annotated train")?;
    let test_path = data_path(&None, &config.annotated_test, "annotated test")?;
    let annotated = load_annotated_logged(train_path, "annotated train")?;
    let test = load_annotated_logged(test_path, "annotated test")?;

    let mined_topk = if config.with_mined {
        let mined_path = data_path(&None, &config.mined, "mined")?;
        let mined = load_mined_logged(mined_path)?;
        select_top_mined(&mined.examples, config.mined_k)
    } else {
        Vec::new()
    };

    let splits = make_splits(
        &annotated.examples,
        &test.examples,
        &mined_topk,
        config.with_mined,
        config.seed,
    )?;
    log::info!(
        "splits: train {} / valid {} / test {}",
        splits.train.len(),
        splits.valid.len(),
        splits.test.len()
    );

    let needs_bodies = variants.iter().any(|v| *v != AblationVariant::NoBody);
    let all_examples: Vec<&Example> = splits
        .train
        .iter()
        .chain(&splits.valid)
        .chain(&splits.test)
        .collect();
    let bodies = if needs_bodies {
        cached_bodies(&config.cache_dir, &all_examples)
    } else {
        Default::default()
    };

    let mut records: Vec<ModelInput> = Vec::new();
    let mut dropped_missing = 0usize;
    for (split, examples) in [
        (Split::Train, &splits.train),
        (Split::Valid, &splits.valid),
        (Split::Test, &splits.test),
    ] {
        for &variant in &variants {
            for example in examples {
                if variant == AblationVariant::NoBody {
                    records.push(build_input(example, None, variant, split)?);
                    continue;
                }
                match bodies.get(&example.question_id) {
                    Some(question) => {
                        records.push(build_input(example, Some(question), variant, split)?);
                    }
                    None => {
                        dropped_missing += 1;
                        log::debug!(
                            "dropping {} from {}_{}: question {} not in cache",
                            example.id,
                            split.name(),
                            variant.name(),
                            example.question_id
                        );
                    }
                }
            }
        }
    }
    if dropped_missing > 0 {
        log::warn!(
            "dropped {dropped_missing} example-variant records whose question bodies are not cached"
        );
    }

    let manifest = export_jsonl(&records, &config.out_dir)
        .with_context(|| format!("exporting to {}", config.out_dir.display()))?;
    for (file, count) in &manifest.files {
        println!("{file}  {count} records");
    }
    Ok(manifest)
}
