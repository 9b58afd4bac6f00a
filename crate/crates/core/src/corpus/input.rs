//! Model-input assembly: effective intent plus the rendered body variant.

use crate::segment::{render, segment_body, AblationVariant};
use crate::stackexchange::RawQuestion;

use super::{CorpusError, Example, ModelInput, Split};

/// The separator between the effective intent and the rendered body.
pub const INTENT_BODY_SEPARATOR: char = '\n';

/// Builds the model input for one example under `variant`. Body-using
/// variants require the fetched question; `NoBody` never touches it.
pub fn build_input(
    example: &Example,
    question: Option<&RawQuestion>,
    variant: AblationVariant,
    split: Split,
) -> Result<ModelInput, CorpusError> {
    let intent = example.effective_intent();
    let input_text = if variant == AblationVariant::NoBody {
        intent.to_owned()
    } else {
        let question = question.ok_or_else(|| CorpusError::MissingQuestion {
            example_id: example.id.clone(),
            question_id: example.question_id,
        })?;
        let body = render(&segment_body(&question.body_html), variant);
        let mut text = String::with_capacity(intent.len() + body.len() + 1);
        text.push_str(intent);
        text.push(INTENT_BODY_SEPARATOR);
        text.push_str(&body);
        text
    };

    Ok(ModelInput {
        example_id: example.id.clone(),
        question_id: example.question_id,
        input_text,
        target: example.snippet.clone(),
        variant,
        split,
    })
}
