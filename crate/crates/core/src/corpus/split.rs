//! Train/valid/test construction.
//!
//! 238 annotated training examples move to validation (a uniform draw
//! under the seed), and when mined data is enabled, 1000 of the top-k
//! mined examples follow; the mined remainder joins the training set.
//! The test set is passed through untouched and never resampled.

use std::collections::HashSet;

use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

use super::{CorpusError, Example};

pub const ANNOTATED_VALID_COUNT: usize = 238;
pub const MINED_VALID_COUNT: usize = 1000;

#[derive(Debug, Clone)]
pub struct Splits {
    pub train: Vec<Example>,
    pub valid: Vec<Example>,
    pub test: Vec<Example>,
}

fn draw(pool: &[Example], count: usize, rng: &mut ChaCha20Rng) -> (Vec<Example>, Vec<Example>) {
    let mut picked: Vec<usize> = rand::seq::index::sample(rng, pool.len(), count).into_vec();
    picked.sort_unstable();
    let picked_set: HashSet<usize> = picked.iter().copied().collect();
    let valid = picked.iter().map(|&i| pool[i].clone()).collect();
    let rest = pool
        .iter()
        .enumerate()
        .filter(|(i, _)| !picked_set.contains(i))
        .map(|(_, e)| e.clone())
        .collect();
    (valid, rest)
}

/// Builds splits with the standard carve-out sizes.
pub fn make_splits(
    annotated_train: &[Example],
    test: &[Example],
    mined_topk: &[Example],
    with_mined: bool,
    seed: u64,
) -> Result<Splits, CorpusError> {
    make_splits_with(
        annotated_train,
        test,
        mined_topk,
        with_mined,
        seed,
        ANNOTATED_VALID_COUNT,
        MINED_VALID_COUNT,
    )
}

/// As [`make_splits`] with explicit validation carve-out sizes.
pub fn make_splits_with(
    annotated_train: &[Example],
    test: &[Example],
    mined_topk: &[Example],
    with_mined: bool,
    seed: u64,
    annotated_valid: usize,
    mined_valid: usize,
) -> Result<Splits, CorpusError> {
    if annotated_train.len() < annotated_valid {
        return Err(CorpusError::TooFewExamples {
            what: "annotated training",
            need: annotated_valid,
            have: annotated_train.len(),
        });
    }
    if with_mined && mined_topk.len() < mined_valid {
        return Err(CorpusError::TooFewExamples {
            what: "top-k mined",
            need: mined_valid,
            have: mined_topk.len(),
        });
    }

    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let (mut valid, mut train) = draw(annotated_train, annotated_valid, &mut rng);
    if with_mined {
        let (mined_val, mined_train) = draw(mined_topk, mined_valid, &mut rng);
        valid.extend(mined_val);
        train.extend(mined_train);
    }

    Ok(Splits {
        train,
        valid,
        test: test.to_vec(),
    })
}
