//! How much generated snippets lean on the question body.
//!
//! For a pair metric m, the measurement is the mean over examples of
//! `m(generated_i, body_i) - m(truth_i, body_i)`. Differences are signed,
//! not squared: positive values mean the generator sits closer to the
//! body than the ground truth does.

use serde::Serialize;

use super::pair::{pair_metric_by_id, pair_metrics, PairMetric};
use super::{MetricsError, TokenSeq};

/// All four cheating measurements, in report column order. Values are the
/// raw means in [-1, 1]; scale by 100 for point-style presentation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheatingReport {
    pub c_bb: f64,
    pub c_bt: f64,
    pub c_r2: f64,
    pub c_rl: f64,
    pub n: usize,
}

fn check_alignment(
    gen: &[TokenSeq],
    truth: &[TokenSeq],
    bodies: &[TokenSeq],
) -> Result<(), MetricsError> {
    if gen.len() != truth.len() || gen.len() != bodies.len() {
        return Err(MetricsError::AlignmentMismatch {
            gen: gen.len(),
            truth: truth.len(),
            bodies: bodies.len(),
        });
    }
    if gen.is_empty() {
        return Err(MetricsError::EmptyCorpus);
    }
    Ok(())
}

/// Mean signed body-similarity difference under one pair metric.
pub fn cheating(
    gen: &[TokenSeq],
    truth: &[TokenSeq],
    bodies: &[TokenSeq],
    metric: &dyn PairMetric,
) -> Result<f64, MetricsError> {
    check_alignment(gen, truth, bodies)?;
    let mut total = 0.0;
    for i in 0..gen.len() {
        total += metric.score(&gen[i], &bodies[i]) - metric.score(&truth[i], &bodies[i]);
    }
    Ok(total / gen.len() as f64)
}

/// As [`cheating`], with the metric selected by id or alias
/// (`bb`, `bt`, `r2`, `rl`, or the full names).
pub fn cheating_by_id(
    gen: &[TokenSeq],
    truth: &[TokenSeq],
    bodies: &[TokenSeq],
    metric_id: &str,
) -> Result<f64, MetricsError> {
    let metric = pair_metric_by_id(metric_id)
        .ok_or_else(|| MetricsError::UnknownMetric(metric_id.to_owned()))?;
    cheating(gen, truth, bodies, metric)
}

/// Runs all four registered pair metrics.
pub fn cheating_report(
    gen: &[TokenSeq],
    truth: &[TokenSeq],
    bodies: &[TokenSeq],
) -> Result<CheatingReport, MetricsError> {
    let metrics = pair_metrics();
    let mut values = [0.0; 4];
    for (slot, metric) in values.iter_mut().zip(metrics) {
        *slot = cheating(gen, truth, bodies, *metric)?;
    }
    Ok(CheatingReport {
        c_bb: values[0],
        c_bt: values[1],
        c_r2: values[2],
        c_rl: values[3],
        n: gen.len(),
    })
}
