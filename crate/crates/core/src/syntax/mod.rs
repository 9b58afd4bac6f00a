//! Syntax-validity analysis of generated snippets: does the text parse as
//! Python 3 (statements or a bare expression), and if not, which
//! delimiter problem broke it.

mod delimiter;

use serde::Serialize;
use thiserror::Error;

use crate::metrics::tokenize_code;

use delimiter::{scan_delimiters, DelimiterKind, ScanOutcome};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ErrorCategory {
    GeneralInvalidSyntax,
    ParenthesisMatching,
    OtherMatching,
}

impl ErrorCategory {
    pub fn name(self) -> &'static str {
        match self {
            ErrorCategory::GeneralInvalidSyntax => "general-invalid-syntax",
            ErrorCategory::ParenthesisMatching => "parenthesis-matching",
            ErrorCategory::OtherMatching => "other-matching",
        }
    }
}

/// Validity of one snippet; `category` is present iff `valid` is false.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidityResult {
    pub valid: bool,
    pub category: Option<ErrorCategory>,
    pub message: String,
}

#[derive(Debug, Error)]
pub enum SyntaxError {
    #[error("cannot report on an empty snippet list")]
    EmptyInput,

    #[error("aligned inputs disagree in length: snippets {snippets}, bodies {bodies}")]
    AlignmentMismatch { snippets: usize, bodies: usize },
}

/// Parses `snippet` under a Python 3 grammar. Failures are data, not
/// errors: the result carries the category from the delimiter scan.
pub fn check_syntax(snippet: &str) -> ValidityResult {
    match rustpython_parser::parse(snippet, rustpython_parser::Mode::Module, "<snippet>") {
        Ok(_) => ValidityResult {
            valid: true,
            category: None,
            message: String::new(),
        },
        Err(parse_error) => ValidityResult {
            valid: false,
            category: Some(categorize_error(snippet)),
            message: parse_error.to_string(),
        },
    }
}

/// Categorizes a parse failure from the source text alone.
pub fn categorize_error(snippet: &str) -> ErrorCategory {
    match scan_delimiters(snippet) {
        ScanOutcome::Failure {
            kind: DelimiterKind::Paren,
            ..
        } => ErrorCategory::ParenthesisMatching,
        ScanOutcome::Failure {
            kind: DelimiterKind::Other,
            ..
        } => ErrorCategory::OtherMatching,
        ScanOutcome::Balanced => ErrorCategory::GeneralInvalidSyntax,
    }
}

/// Count and share of one error category among invalid snippets.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CategoryShare {
    pub count: usize,
    /// Percentage over invalid snippets only; shares sum to 100 whenever
    /// any snippet is invalid.
    pub pct_of_invalid: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValidityReport {
    pub n: usize,
    pub n_valid: usize,
    pub pct_valid: f64,
    pub general_invalid_syntax: CategoryShare,
    pub parenthesis_matching: CategoryShare,
    pub other_matching: CategoryShare,
}

/// Summarizes already-computed validity results.
pub fn summarize_validity(results: &[ValidityResult]) -> Result<ValidityReport, SyntaxError> {
    if results.is_empty() {
        return Err(SyntaxError::EmptyInput);
    }
    let n = results.len();
    let n_valid = results.iter().filter(|r| r.valid).count();
    let n_invalid = n - n_valid;
    let count_of = |category: ErrorCategory| {
        results
            .iter()
            .filter(|r| r.category == Some(category))
            .count()
    };
    let share = |count: usize| CategoryShare {
        count,
        pct_of_invalid: if n_invalid == 0 {
            0.0
        } else {
            100.0 * count as f64 / n_invalid as f64
        },
    };
    Ok(ValidityReport {
        n,
        n_valid,
        pct_valid: 100.0 * n_valid as f64 / n as f64,
        general_invalid_syntax: share(count_of(ErrorCategory::GeneralInvalidSyntax)),
        parenthesis_matching: share(count_of(ErrorCategory::ParenthesisMatching)),
        other_matching: share(count_of(ErrorCategory::OtherMatching)),
    })
}

/// Runs [`check_syntax`] over every snippet and summarizes.
pub fn validity_report<S: AsRef<str>>(snippets: &[S]) -> Result<ValidityReport, SyntaxError> {
    let results: Vec<ValidityResult> = snippets.iter().map(|s| check_syntax(s.as_ref())).collect();
    summarize_validity(&results)
}

/// Buckets for the `print`-presence analysis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum PrintBucket {
    NoPrint,
    PrintInSnippet,
    PrintInBody,
    PrintInBoth,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Default)]
pub struct BucketStats {
    pub count: usize,
    pub valid: usize,
    pub pct_valid: f64,
}

/// Percentage of valid snippets per `print`-presence bucket. Bucket
/// counts partition the example set.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PrintBucketReport {
    pub no_print: BucketStats,
    pub print_in_snippet: BucketStats,
    pub print_in_body: BucketStats,
    pub print_in_both: BucketStats,
}

fn has_print_token(text: &str) -> bool {
    tokenize_code(text).contains("print")
}

/// Buckets each example by token-level `print` presence in its snippet
/// and body. `bodies` are Full-variant rendered body texts aligned with
/// `snippets` and `validity`.
pub fn print_bucket_report<S: AsRef<str>, B: AsRef<str>>(
    snippets: &[S],
    bodies: &[B],
    validity: &[ValidityResult],
) -> Result<PrintBucketReport, SyntaxError> {
    if snippets.len() != bodies.len() || snippets.len() != validity.len() {
        return Err(SyntaxError::AlignmentMismatch {
            snippets: snippets.len(),
            bodies: bodies.len(),
        });
    }

    let mut counts = [BucketStats::default(); 4];
    for ((snippet, body), result) in snippets.iter().zip(bodies).zip(validity) {
        let in_snippet = has_print_token(snippet.as_ref());
        let in_body = has_print_token(body.as_ref());
        let bucket = match (in_snippet, in_body) {
            (true, true) => 3,
            (false, true) => 2,
            (true, false) => 1,
            (false, false) => 0,
        };
        counts[bucket].count += 1;
        if result.valid {
            counts[bucket].valid += 1;
        }
    }
    for stats in &mut counts {
        stats.pct_valid = if stats.count == 0 {
            0.0
        } else {
            100.0 * stats.valid as f64 / stats.count as f64
        };
    }
    Ok(PrintBucketReport {
        no_print: counts[0],
        print_in_snippet: counts[1],
        print_in_body: counts[2],
        print_in_both: counts[3],
    })
}
