//! `stats`: dataset statistics rows (train, test, mined-10k, and
//! optionally the full mined set) over cache-joined bodies.

use std::collections::HashMap;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};

use conala_bodies::corpus::{compute_statistics, select_top_mined, Example, SplitStats};
use conala_bodies::stackexchange::RawQuestion;
use conala_bodies::tokens::stats_tokenizer_by_id;

use crate::config::RunConfig;

use super::{cached_bodies, data_path, load_annotated_logged, load_mined_logged};

pub fn run(config: &RunConfig, json_out: Option<&PathBuf>) -> Result<Vec<(String, SplitStats)>> {
    let Some(tokenizer) = stats_tokenizer_by_id(&config.stats_tokenizer) else {
        bail!(
            "unknown statistics tokenizer '{}' (expected whitespace or code)",
            config.stats_tokenizer
        );
    };

    let mut rows: Vec<(String, Vec<Example>)> = Vec::new();
    if let Some(path) = &config.annotated_train {
        rows.push((
            "train".into(),
            load_annotated_logged(path, "annotated train")?.examples,
        ));
    }
    if let Some(path) = &config.annotated_test {
        rows.push((
            "test".into(),
            load_annotated_logged(path, "annotated test")?.examples,
        ));
    }
    if let Some(path) = &config.mined {
        let mined = load_mined_logged(path)?.examples;
        rows.push((
            format!("mined-{}k", config.mined_k / 1000),
            select_top_mined(&mined, config.mined_k),
        ));
        if config.full_mined {
            rows.push(("mined".into(), mined));
        }
    }
    if rows.is_empty() {
        let _ = data_path(&None, &None, "data")?;
    }

    let mut out = Vec::new();
    for (name, examples) in rows {
        let total = examples.len();
        let bodies = {
            let refs: Vec<&Example> = examples.iter().collect();
            cached_bodies(&config.cache_dir, &refs)
        };
        let joined: Vec<Example> = examples
            .into_iter()
            .filter(|e| bodies.contains_key(&e.question_id))
            .collect();
        let n_dropped = total - joined.len();
        if n_dropped > 0 {
            log::warn!("{name}: dropped {n_dropped} examples with no cached body");
        }
        if joined.is_empty() {
            bail!(
                "{name}: no examples with cached bodies under {} — run fetch first",
                config.cache_dir.display()
            );
        }
        let bodies: HashMap<u64, RawQuestion> = bodies;
        let stats = compute_statistics(&joined, &bodies, tokenizer)
            .with_context(|| format!("statistics for {name}"))?;
        out.push((name, stats));
    }

    print_tables(&out);

    if let Some(path) = json_out {
        let map: std::collections::BTreeMap<&str, &SplitStats> =
            out.iter().map(|(n, s)| (n.as_str(), s)).collect();
        std::fs::write(path, serde_json::to_string_pretty(&map)?)
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(out)
}

fn print_tables(rows: &[(String, SplitStats)]) {
    println!(
        "{:<10} {:>8} {:>8} {:>13} {:>15} {:>16} {:>17}",
        "split", "|E|", "|Q|", "|E|/|Q|", "intent tokens", "snippet tokens", "body tokens"
    );
    for (name, s) in rows {
        println!(
            "{:<10} {:>8} {:>8} {:>6.2}\u{b1}{:<6.2} {:>7.2}\u{b1}{:<7.2} {:>8.2}\u{b1}{:<7.2} {:>9.2}\u{b1}{:<7.2}",
            name,
            s.n_examples,
            s.n_questions,
            s.examples_per_question.mean,
            s.examples_per_question.std,
            s.intent_tokens.mean,
            s.intent_tokens.std,
            s.snippet_tokens.mean,
            s.snippet_tokens.std,
            s.body_tokens.mean,
            s.body_tokens.std
        );
    }
    println!();
    println!(
        "{:<10} {:>11} {:>9} {:>13} {:>13} {:>16} {:>15}",
        "split", "have answer", "has code", "inline", "blocks", "code tokens", "nl tokens"
    );
    for (name, s) in rows {
        let m = &s.modality_means;
        println!(
            "{:<10} {:>10.2}% {:>8.2}% {:>6.2}\u{b1}{:<6.2} {:>6.2}\u{b1}{:<6.2} {:>8.2}\u{b1}{:<7.2} {:>7.2}\u{b1}{:<7.2}",
            name,
            s.pct_has_answer,
            s.pct_has_code,
            m.inline.mean,
            m.inline.std,
            m.blocks.mean,
            m.blocks.std,
            m.code_tokens.mean,
            m.code_tokens.std,
            m.nl_tokens.mean,
            m.nl_tokens.std
        );
    }
}
