//! `eval`: corpus BLEU with per-order precisions, optional Oracle BLEU
//! (candidate lists), the cheating report when bodies are supplied, and
//! the syntax-validity analyses. Writes JSON and a text table.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};

use conala_bodies::metrics::{
    cheating_report, corpus_bleu_with, oracle_bleu_with, smoothing_by_id, tokenize_code,
    OracleAggregation, TokenSeq,
};
use conala_bodies::report::{ensure_aligned, read_candidates, read_texts, EvalReport};
use conala_bodies::syntax::{check_syntax, print_bucket_report, summarize_validity};

use crate::config::RunConfig;

pub struct EvalArgs {
    pub candidates: PathBuf,
    pub references: PathBuf,
    pub bodies: Option<PathBuf>,
    pub oracle_aggregation: String,
}

pub fn run(config: &RunConfig, args: &EvalArgs) -> Result<EvalReport> {
    let Some(smoothing) = smoothing_by_id(&config.smoothing) else {
        bail!(
            "unknown smoothing '{}' (expected add-one or floor)",
            config.smoothing
        );
    };
    let aggregation = match args.oracle_aggregation.as_str() {
        "corpus" => OracleAggregation::Corpus,
        "mean-sentence" => OracleAggregation::MeanSentence,
        other => bail!("unknown oracle aggregation '{other}' (expected corpus or mean-sentence)"),
    };

    let candidates = read_candidates(&args.candidates)?;
    let references = read_texts(&args.references)?;
    ensure_aligned(
        &args.candidates,
        candidates.lists.len(),
        &args.references,
        references.len(),
    )?;

    let generated: Vec<String> = candidates
        .lists
        .iter()
        .map(|list| list.first().cloned().unwrap_or_default())
        .collect();
    let gen_tokens: Vec<TokenSeq> = generated.iter().map(|s| tokenize_code(s)).collect();
    let ref_tokens: Vec<TokenSeq> = references.iter().map(|s| tokenize_code(s)).collect();

    let bleu = corpus_bleu_with(&gen_tokens, &ref_tokens, smoothing)?;

    let oracle_bleu = if candidates.has_lists {
        let lists: Vec<Vec<TokenSeq>> = candidates
            .lists
            .iter()
            .map(|list| list.iter().map(|s| tokenize_code(s)).collect())
            .collect();
        Some(oracle_bleu_with(&lists, &ref_tokens, aggregation)?)
    } else {
        None
    };

    let body_texts = match &args.bodies {
        Some(path) => {
            let bodies = read_texts(path)?;
            ensure_aligned(&args.candidates, generated.len(), path, bodies.len())?;
            Some(bodies)
        }
        None => None,
    };

    let cheating = match &body_texts {
        Some(bodies) => {
            let body_tokens: Vec<TokenSeq> = bodies.iter().map(|s| tokenize_code(s)).collect();
            Some(cheating_report(&gen_tokens, &ref_tokens, &body_tokens)?)
        }
        None => None,
    };

    let validity_results: Vec<_> = generated.iter().map(|s| check_syntax(s)).collect();
    let validity = summarize_validity(&validity_results)?;
    let print_buckets = match &body_texts {
        Some(bodies) => Some(print_bucket_report(&generated, bodies, &validity_results)?),
        None => None,
    };

    let report = EvalReport::new(&bleu, oracle_bleu, cheating, validity, print_buckets);
    write_reports(&config.out_dir, &report)?;
    print!("{}", report.to_text());
    Ok(report)
}

fn write_reports(out_dir: &Path, report: &EvalReport) -> Result<()> {
    std::fs::create_dir_all(out_dir).with_context(|| format!("creating {}", out_dir.display()))?;
    let json_path = out_dir.join("eval_report.json");
    std::fs::write(&json_path, report.to_json())
        .with_context(|| format!("writing {}", json_path.display()))?;
    let text_path = out_dir.join("eval_report.txt");
    std::fs::write(&text_path, report.to_text())
        .with_context(|| format!("writing {}", text_path.display()))?;
    log::info!("wrote {} and {}", json_path.display(), text_path.display());
    Ok(())
}
