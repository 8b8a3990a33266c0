//! Hypothetical metric sweeps: hold one side's cardinality fixed, vary the
//! other from 1 upward, and score a given match schedule.
//!
//! Rows carry full-precision metric values; [`SweepRow::display_cells`]
//! produces the 2-decimal presentation cells. In the displayed table the F1
//! column is derived from the *rounded* precision and recall cells, so the
//! printed table is always self-consistent at its own precision.

use serde::{Deserialize, Serialize};
use tagkit_core::MetricScores;

use crate::error::CliError;
use crate::report::{cell, round2};

/// Which cardinality stays fixed while the other varies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepMode {
    /// `n_R` fixed, `n_G` varies from 1 to the schedule length.
    FixNr,
    /// `n_G` fixed, `n_R` varies from 1 to the schedule length.
    FixNg,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    /// The varying cardinality of this row (1-based).
    pub varying: usize,
    pub n_recommended: usize,
    pub n_ground_truth: usize,
    pub matches: usize,
    pub hit_rate: f64,
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
    pub hit_ratio: f64,
}

impl SweepRow {
    /// The six presentation cells: m, hit rate, P, R, F1, hit ratio.
    pub fn display_cells(&self) -> [f64; 6] {
        let p = round2(self.precision);
        let r = round2(self.recall);
        let f1 = if p + r == 0.0 { 0.0 } else { round2(2.0 * p * r / (p + r)) };
        [
            self.matches as f64,
            round2(self.hit_rate),
            p,
            r,
            f1,
            round2(self.hit_ratio),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub mode: SweepMode,
    pub fixed_value: usize,
    pub rows: Vec<SweepRow>,
}

/// Scores the schedule; `matches[i]` belongs to varying value `i + 1`.
pub fn sweep(mode: SweepMode, fixed_value: usize, matches: &[usize]) -> Result<SweepReport, CliError> {
    if fixed_value == 0 {
        return Err(CliError::config("fixed value must be at least 1"));
    }
    if matches.is_empty() {
        return Err(CliError::config("match schedule must not be empty"));
    }
    let mut rows = Vec::with_capacity(matches.len());
    for (index, &m) in matches.iter().enumerate() {
        let varying = index + 1;
        let (n_r, n_g) = match mode {
            SweepMode::FixNr => (fixed_value, varying),
            SweepMode::FixNg => (varying, fixed_value),
        };
        let scores = MetricScores::from_counts(n_r, n_g, m).map_err(|_| {
            CliError::config(format!(
                "row {varying}: m={m} exceeds min(n_R={n_r}, n_G={n_g})"
            ))
        })?;
        rows.push(SweepRow {
            varying,
            n_recommended: n_r,
            n_ground_truth: n_g,
            matches: m,
            hit_rate: scores.hit_rate,
            precision: scores.precision,
            recall: scores.recall,
            f1: scores.f1,
            hit_ratio: scores.hit_ratio,
        });
    }
    Ok(SweepReport {
        mode,
        fixed_value,
        rows,
    })
}

impl SweepReport {
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("sweep serializes");
        out.push('\n');
        out
    }

    pub fn to_table(&self) -> String {
        let varying_name = match self.mode {
            SweepMode::FixNr => "n_G",
            SweepMode::FixNg => "n_R",
        };
        let fixed_name = match self.mode {
            SweepMode::FixNr => "n_R",
            SweepMode::FixNg => "n_G",
        };
        let mut out = format!("{fixed_name} = {}\n", self.fixed_value);
        out.push_str(&format!(
            "{:>4}  {:>2}  {:>8}  {:>5}  {:>5}  {:>5}  {:>9}\n",
            varying_name, "m", "hit rate", "P", "R", "F1", "hit ratio"
        ));
        for row in &self.rows {
            let cells = row.display_cells();
            out.push_str(&format!(
                "{:>4}  {:>2}  {:>8}  {:>5}  {:>5}  {:>5}  {:>9}\n",
                row.varying,
                row.matches,
                cell(cells[1]),
                cell(cells[2]),
                cell(cells[3]),
                cell(cells[4]),
                cell(cells[5]),
            ));
        }
        out
    }
}
