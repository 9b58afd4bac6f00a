//! Aligned snippet-file input and evaluation report output.
//!
//! Candidate, reference, and body files are either JSONL
//! (`{"example_id": ..., "text": ...}` where `text` is a string or a list
//! of candidate strings) or plain text with one snippet per line; records
//! align by position.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::metrics::{BleuReport, CheatingReport};
use crate::syntax::{PrintBucketReport, ValidityReport};

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path} line {line}: {detail}")]
    Format {
        path: PathBuf,
        line: usize,
        detail: String,
    },

    #[error("aligned files disagree in length: {left} has {left_lines} records, {right} has {right_lines}")]
    Misaligned {
        left: PathBuf,
        left_lines: usize,
        right: PathBuf,
        right_lines: usize,
    },
}

#[derive(Deserialize)]
struct JsonlLine {
    #[serde(default)]
    #[allow(dead_code)]
    example_id: Option<String>,
    text: TextOrList,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum TextOrList {
    Text(String),
    List(Vec<String>),
}

/// Candidate lists read from a file, with a flag for whether the file
/// actually held lists (which enables Oracle BLEU).
#[derive(Debug, Clone)]
pub struct CandidateFile {
    pub lists: Vec<Vec<String>>,
    pub has_lists: bool,
}

fn is_jsonl(path: &Path) -> bool {
    matches!(
        path.extension().and_then(|e| e.to_str()),
        Some("jsonl") | Some("json")
    )
}

/// Reads one snippet per record, from JSONL or plain text. JSONL records
/// holding candidate lists contribute their first candidate.
pub fn read_texts(path: &Path) -> Result<Vec<String>, ReportError> {
    Ok(read_candidates(path)?
        .lists
        .into_iter()
        .map(|mut list| {
            if list.is_empty() {
                String::new()
            } else {
                list.remove(0)
            }
        })
        .collect())
}

/// Reads candidate lists. Plain-text files become singleton lists.
pub fn read_candidates(path: &Path) -> Result<CandidateFile, ReportError> {
    let contents = fs::read_to_string(path).map_err(|source| ReportError::Io {
        path: path.to_owned(),
        source,
    })?;

    if !is_jsonl(path) {
        let lists = contents.lines().map(|line| vec![line.to_owned()]).collect();
        return Ok(CandidateFile {
            lists,
            has_lists: false,
        });
    }

    let mut lists = Vec::new();
    let mut has_lists = false;
    for (index, line) in contents.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let record: JsonlLine = serde_json::from_str(line).map_err(|e| ReportError::Format {
            path: path.to_owned(),
            line: index + 1,
            detail: e.to_string(),
        })?;
        match record.text {
            TextOrList::Text(text) => lists.push(vec![text]),
            TextOrList::List(candidates) => {
                has_lists = true;
                lists.push(candidates);
            }
        }
    }
    Ok(CandidateFile { lists, has_lists })
}

/// Fails unless both files produced the same number of records.
pub fn ensure_aligned(
    left: &Path,
    left_lines: usize,
    right: &Path,
    right_lines: usize,
) -> Result<(), ReportError> {
    if left_lines != right_lines {
        return Err(ReportError::Misaligned {
            left: left.to_owned(),
            left_lines,
            right: right.to_owned(),
            right_lines,
        });
    }
    Ok(())
}

/// Validity section of the evaluation output.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValiditySection {
    #[serde(flatten)]
    pub report: ValidityReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub print_buckets: Option<PrintBucketReport>,
}

/// The full evaluation output written as JSON.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalReport {
    pub bleu: f64,
    pub precisions: [f64; 4],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_bleu: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cheating: Option<CheatingReport>,
    pub validity: ValiditySection,
}

impl EvalReport {
    pub fn new(
        bleu: &BleuReport,
        oracle_bleu: Option<f64>,
        cheating: Option<CheatingReport>,
        validity: ValidityReport,
        print_buckets: Option<PrintBucketReport>,
    ) -> Self {
        Self {
            bleu: bleu.score,
            precisions: bleu.precisions,
            oracle_bleu,
            cheating,
            validity: ValiditySection {
                report: validity,
                print_buckets,
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Plain-text tables mirroring the JSON content. Cheating values are
    /// scaled to points (x100) here and only here.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("corpus BLEU        {:>8.2}\n", self.bleu));
        out.push_str(&format!(
            "precisions (1-4)   {:>8.2} {:>8.2} {:>8.2} {:>8.2}\n",
            self.precisions[0] * 100.0,
            self.precisions[1] * 100.0,
            self.precisions[2] * 100.0,
            self.precisions[3] * 100.0
        ));
        if let Some(oracle) = self.oracle_bleu {
            out.push_str(&format!("oracle BLEU        {oracle:>8.2}\n"));
        }
        if let Some(cheating) = &self.cheating {
            out.push_str("\ncheating (points, generated-closer-to-body is positive)\n");
            out.push_str("      C_BB     C_BT     C_R2     C_RL\n");
            out.push_str(&format!(
                "  {:>8.2} {:>8.2} {:>8.2} {:>8.2}\n",
                cheating.c_bb * 100.0,
                cheating.c_bt * 100.0,
                cheating.c_r2 * 100.0,
                cheating.c_rl * 100.0
            ));
        }
        let v = &self.validity.report;
        out.push_str(&format!(
            "\nvalid python       {:>8.2}%  ({} of {})\n",
            v.pct_valid, v.n_valid, v.n
        ));
        if v.n_valid < v.n {
            out.push_str("error categories (% of invalid)\n");
            out.push_str(&format!(
                "  general invalid syntax {:>7.2}%  ({})\n",
                v.general_invalid_syntax.pct_of_invalid, v.general_invalid_syntax.count
            ));
            out.push_str(&format!(
                "  parenthesis matching   {:>7.2}%  ({})\n",
                v.parenthesis_matching.pct_of_invalid, v.parenthesis_matching.count
            ));
            out.push_str(&format!(
                "  other matching         {:>7.2}%  ({})\n",
                v.other_matching.pct_of_invalid, v.other_matching.count
            ));
        }
        if let Some(buckets) = &self.validity.print_buckets {
            out.push_str("\nvalid% by print presence\n");
            out.push_str("  bucket             count   valid   pct\n");
            for (name, stats) in [
                ("no print", buckets.no_print),
                ("print in snippet", buckets.print_in_snippet),
                ("print in body", buckets.print_in_body),
                ("print in both", buckets.print_in_both),
            ] {
                out.push_str(&format!(
                    "  {name:<18} {:>5}   {:>5}   {:>6.2}\n",
                    stats.count, stats.valid, stats.pct_valid
                ));
            }
        }
        out
    }
}
