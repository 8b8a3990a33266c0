//! Evaluation record files: one JSON object per line with a record id, the
//! ordered recommendation list and the ground-truth labels.
//!
//! `{"record_id": "r1", "recommended": ["#a", "#b"], "ground_truth": ["#a"]}`
//!
//! Labels are canonicalized on parse; duplicate record ids and duplicate
//! labels (after canonicalization) are rejected with the offending line.

use std::collections::HashSet;
use std::fs::File;
use std::io::{BufRead, BufReader, Read};
use std::path::Path;

use serde::Deserialize;
use tagkit_core::{EvalPair, Label};

use crate::error::CliError;

#[derive(Debug, Deserialize)]
struct RecordLine {
    record_id: String,
    recommended: Vec<String>,
    ground_truth: Vec<String>,
}

pub fn parse_eval_records<R: Read>(name: &str, reader: R) -> Result<Vec<EvalPair>, CliError> {
    let reader = BufReader::new(reader);
    let mut pairs = Vec::new();
    let mut seen_ids = HashSet::new();
    for (index, line) in reader.lines().enumerate() {
        let line_no = index + 1;
        let line = line.map_err(|e| CliError::at_line(name, line_no, e))?;
        if line.trim().is_empty() {
            continue;
        }
        let record: RecordLine =
            serde_json::from_str(&line).map_err(|e| CliError::at_line(name, line_no, e))?;
        if !seen_ids.insert(record.record_id.clone()) {
            return Err(CliError::at_line(
                name,
                line_no,
                format!("duplicate record_id {:?}", record.record_id),
            ));
        }
        let parse_labels = |raw: &[String]| -> Result<Vec<Label>, CliError> {
            raw.iter()
                .map(|l| Label::parse(l).map_err(|e| CliError::at_line(name, line_no, e)))
                .collect()
        };
        let recommended = parse_labels(&record.recommended)?;
        let ground_truth = parse_labels(&record.ground_truth)?;
        let pair = EvalPair::new(record.record_id, recommended, ground_truth)
            .map_err(|e| CliError::at_line(name, line_no, e))?;
        pairs.push(pair);
    }
    Ok(pairs)
}

pub fn parse_eval_records_file(path: &Path) -> Result<Vec<EvalPair>, CliError> {
    let file = File::open(path)
        .map_err(|e| CliError::config(format!("cannot open records {}: {e}", path.display())))?;
    parse_eval_records(&path.display().to_string(), file)
}
