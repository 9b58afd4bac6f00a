//! JSONL export of assembled model inputs, one file per (split, variant),
//! plus a manifest mapping file names to record counts.

use std::collections::BTreeMap;
use std::fs::{self, File};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::{CorpusError, ModelInput};

/// Files written by an export, with their record counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    pub files: BTreeMap<String, usize>,
}

#[derive(Serialize, Deserialize)]
struct Record {
    example_id: String,
    question_id: u64,
    input_text: String,
    target: String,
    variant: String,
    split: String,
}

impl From<&ModelInput> for Record {
    fn from(input: &ModelInput) -> Self {
        Record {
            example_id: input.example_id.clone(),
            question_id: input.question_id,
            input_text: input.input_text.clone(),
            target: input.target.clone(),
            variant: input.variant.name().to_owned(),
            split: input.split.name().to_owned(),
        }
    }
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> CorpusError + '_ {
    move |source| CorpusError::Io {
        path: path.to_owned(),
        source,
    }
}

/// Writes one newline-terminated JSONL file per (split, variant) present
/// in `records`, plus `manifest.json`. On failure, partial files are
/// removed.
pub fn export_jsonl(records: &[ModelInput], out_dir: &Path) -> Result<Manifest, CorpusError> {
    fs::create_dir_all(out_dir).map_err(io_err(out_dir))?;

    let mut grouped: BTreeMap<String, Vec<&ModelInput>> = BTreeMap::new();
    for record in records {
        let name = format!("{}_{}.jsonl", record.split.name(), record.variant.name());
        grouped.entry(name).or_default().push(record);
    }

    let mut written: Vec<PathBuf> = Vec::new();
    let mut files = BTreeMap::new();
    let result = (|| {
        for (name, group) in &grouped {
            let path = out_dir.join(name);
            let file = File::create(&path).map_err(io_err(&path))?;
            written.push(path.clone());
            let mut writer = BufWriter::new(file);
            for record in group {
                let line = serde_json::to_string(&Record::from(*record)).map_err(|e| {
                    CorpusError::Format {
                        path: path.clone(),
                        detail: e.to_string(),
                    }
                })?;
                writer.write_all(line.as_bytes()).map_err(io_err(&path))?;
                writer.write_all(b"\n").map_err(io_err(&path))?;
            }
            writer.flush().map_err(io_err(&path))?;
            files.insert(name.clone(), group.len());
        }
        Ok(())
    })();

    if let Err(err) = result {
        for path in &written {
            let _ = fs::remove_file(path);
        }
        return Err(err);
    }

    let manifest = Manifest { files };
    let manifest_path = out_dir.join("manifest.json");
    let text = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
    fs::write(&manifest_path, text).map_err(io_err(&manifest_path))?;
    Ok(manifest)
}

/// Reads an exported JSONL file back into model inputs.
pub fn read_jsonl(path: &Path) -> Result<Vec<ModelInput>, CorpusError> {
    let file = File::open(path).map_err(io_err(path))?;
    let reader = BufReader::new(file);
    let mut records = Vec::new();
    for (index, line) in reader.lines().enumerate() {
        let line = line.map_err(io_err(path))?;
        if line.trim().is_empty() {
            continue;
        }
        let record: Record = serde_json::from_str(&line).map_err(|e| CorpusError::Format {
            path: path.to_owned(),
            detail: format!("line {}: {e}", index + 1),
        })?;
        let variant = record.variant.parse().map_err(|e| CorpusError::Format {
            path: path.to_owned(),
            detail: format!("line {}: {e}", index + 1),
        })?;
        let split = record.split.parse().map_err(|e| CorpusError::Format {
            path: path.to_owned(),
            detail: format!("line {}: {e}", index + 1),
        })?;
        records.push(ModelInput {
            example_id: record.example_id,
            question_id: record.question_id,
            input_text: record.input_text,
            target: record.target,
            variant,
            split,
        });
    }
    Ok(records)
}
