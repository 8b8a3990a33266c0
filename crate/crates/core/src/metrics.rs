//! Per-record and corpus-level evaluation of top-k hashtag recommendations.
//!
//! A recommendation for one test tweet is scored against the hashtags its
//! author actually used (the ground truth). With `m` matching labels,
//! `n_R` recommended labels and `n_G` ground-truth labels:
//!
//! * hit rate: 1 if `m >= 1`, else 0
//! * precision: `m / n_R`
//! * recall: `m / n_G`
//! * F1: harmonic mean of precision and recall
//! * hit ratio: `m / min(n_R, n_G)` — the share of attainable matches
//!   that were actually produced
//!
//! Degenerate denominators score 0: an empty recommendation is a failed
//! recommendation, not an unscored one. Labels are compared after
//! canonicalization (lowercased, single leading `#` stripped), so `#iPhone`
//! and `iphone` are the same label.

use std::collections::BTreeSet;
use std::error::Error;
use std::fmt;

/// A hashtag label, compared and ordered by canonical form.
///
/// The canonical form is the trimmed, lowercased label with one leading `#`
/// stripped. The originally supplied spelling is kept for display.
#[derive(Debug, Clone)]
pub struct Label {
    canonical: String,
    display: String,
}

impl Label {
    /// Parses a label, canonicalizing it for comparison.
    ///
    /// Fails on labels that are empty (or only `#`) after trimming, and on
    /// labels containing whitespace.
    pub fn parse(raw: &str) -> Result<Label, MetricsError> {
        let trimmed = raw.trim();
        let stripped = trimmed.strip_prefix('#').unwrap_or(trimmed);
        if stripped.is_empty() {
            return Err(MetricsError::EmptyLabel {
                raw: raw.to_string(),
            });
        }
        if stripped.chars().any(char::is_whitespace) {
            return Err(MetricsError::InvalidLabel {
                raw: raw.to_string(),
            });
        }
        Ok(Label {
            canonical: stripped.to_lowercase(),
            display: trimmed.to_string(),
        })
    }

    /// Lowercased label without the `#` prefix; the identity used everywhere.
    pub fn canonical(&self) -> &str {
        &self.canonical
    }

    /// The label as originally written (case and `#` preserved).
    pub fn display(&self) -> &str {
        &self.display
    }
}

impl PartialEq for Label {
    fn eq(&self, other: &Self) -> bool {
        self.canonical == other.canonical
    }
}

impl Eq for Label {}

impl PartialOrd for Label {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Label {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.canonical.cmp(&other.canonical)
    }
}

impl std::hash::Hash for Label {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.canonical.hash(state);
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical)
    }
}

/// One evaluation case: an ordered recommendation list and the ground truth.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalPair {
    record_id: String,
    recommended: Vec<Label>,
    ground_truth: BTreeSet<Label>,
}

impl EvalPair {
    /// Builds a pair, rejecting duplicate labels (after canonicalization)
    /// in either list.
    pub fn new<I, J>(record_id: impl Into<String>, recommended: I, ground_truth: J) -> Result<EvalPair, MetricsError>
    where
        I: IntoIterator<Item = Label>,
        J: IntoIterator<Item = Label>,
    {
        let record_id = record_id.into();
        let mut seen = BTreeSet::new();
        let mut rec = Vec::new();
        for label in recommended {
            if !seen.insert(label.canonical.clone()) {
                return Err(MetricsError::DuplicateLabel {
                    record_id,
                    label: label.canonical,
                });
            }
            rec.push(label);
        }
        let mut truth = BTreeSet::new();
        for label in ground_truth {
            if truth.contains(&label) {
                return Err(MetricsError::DuplicateLabel {
                    record_id,
                    label: label.canonical,
                });
            }
            truth.insert(label);
        }
        Ok(EvalPair {
            record_id,
            recommended: rec,
            ground_truth: truth,
        })
    }

    pub fn record_id(&self) -> &str {
        &self.record_id
    }

    /// Ordered recommendation list (length `n_R`).
    pub fn recommended(&self) -> &[Label] {
        &self.recommended
    }

    /// Ground-truth label set (size `n_G`).
    pub fn ground_truth(&self) -> &BTreeSet<Label> {
        &self.ground_truth
    }

    pub fn n_recommended(&self) -> usize {
        self.recommended.len()
    }

    pub fn n_ground_truth(&self) -> usize {
        self.ground_truth.len()
    }
}

/// The five metric values of one record, plus the counts they came from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricScores {
    pub hit_rate: f64,
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
    pub hit_ratio: f64,
    /// Number of matching labels, `|G ∩ R|`.
    pub matches: usize,
    pub n_recommended: usize,
    pub n_ground_truth: usize,
}

impl MetricScores {
    /// Closed-form scores for a `(n_R, n_G, m)` count triple.
    ///
    /// Fails when `m > min(n_R, n_G)`, which no real label sets can produce.
    pub fn from_counts(n_recommended: usize, n_ground_truth: usize, matches: usize) -> Result<MetricScores, MetricsError> {
        if matches > n_recommended.min(n_ground_truth) {
            return Err(MetricsError::InfeasibleCounts {
                n_recommended,
                n_ground_truth,
                matches,
            });
        }
        Ok(scores(n_recommended, n_ground_truth, matches))
    }
}

fn ratio(num: usize, den: usize) -> f64 {
    if den == 0 {
        0.0
    } else {
        num as f64 / den as f64
    }
}

fn scores(n_r: usize, n_g: usize, m: usize) -> MetricScores {
    debug_assert!(m <= n_r.min(n_g));
    MetricScores {
        hit_rate: if m >= 1 { 1.0 } else { 0.0 },
        precision: ratio(m, n_r),
        recall: ratio(m, n_g),
        // Harmonic mean of precision and recall. For count-derived values
        // 2PR/(P+R) reduces to 2m/(n_R+n_G); computing it on the integers
        // keeps f1 <= hit_ratio exact in floating point.
        f1: if m == 0 { 0.0 } else { ratio(2 * m, n_r + n_g) },
        hit_ratio: ratio(m, n_r.min(n_g)),
        matches: m,
        n_recommended: n_r,
        n_ground_truth: n_g,
    }
}

/// Number of labels common to the recommendation and the ground truth.
pub fn match_count(pair: &EvalPair) -> usize {
    pair.recommended
        .iter()
        .filter(|label| pair.ground_truth.contains(label))
        .count()
}

/// `m / n_R`; 0 when nothing was recommended.
pub fn precision(pair: &EvalPair) -> f64 {
    ratio(match_count(pair), pair.n_recommended())
}

/// `m / n_G`; 0 when the ground truth is empty.
pub fn recall(pair: &EvalPair) -> f64 {
    ratio(match_count(pair), pair.n_ground_truth())
}

/// Harmonic mean of precision and recall; 0 when both are 0.
pub fn f1(pair: &EvalPair) -> f64 {
    evaluate(pair).f1
}

/// 1.0 when at least one recommended label is correct, else 0.0.
pub fn hit_rate(pair: &EvalPair) -> f64 {
    if match_count(pair) >= 1 {
        1.0
    } else {
        0.0
    }
}

/// `m / min(n_R, n_G)`; 0 when either side is empty.
pub fn hit_ratio(pair: &EvalPair) -> f64 {
    ratio(match_count(pair), pair.n_recommended().min(pair.n_ground_truth()))
}

/// All five metrics of one pair, computed from the same counts.
pub fn evaluate(pair: &EvalPair) -> MetricScores {
    scores(pair.n_recommended(), pair.n_ground_truth(), match_count(pair))
}

/// Arithmetic means of the five metrics over a set of evaluated records.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricSummary {
    pub hit_rate: f64,
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
    pub hit_ratio: f64,
    pub record_count: usize,
    /// Records with `n_R = 0`; they enter the means as zeros.
    pub no_recommendation_count: usize,
}

/// Averages per-record scores over all records, in input order.
pub fn summarize(records: &[MetricScores]) -> Result<MetricSummary, MetricsError> {
    if records.is_empty() {
        return Err(MetricsError::EmptySummary);
    }
    let n = records.len() as f64;
    let mut sums = [0.0f64; 5];
    let mut none = 0usize;
    for r in records {
        sums[0] += r.hit_rate;
        sums[1] += r.precision;
        sums[2] += r.recall;
        sums[3] += r.f1;
        sums[4] += r.hit_ratio;
        if r.n_recommended == 0 {
            none += 1;
        }
    }
    Ok(MetricSummary {
        hit_rate: sums[0] / n,
        precision: sums[1] / n,
        recall: sums[2] / n,
        f1: sums[3] / n,
        hit_ratio: sums[4] / n,
        record_count: records.len(),
        no_recommendation_count: none,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MetricsError {
    EmptyLabel { raw: String },
    InvalidLabel { raw: String },
    DuplicateLabel { record_id: String, label: String },
    InfeasibleCounts { n_recommended: usize, n_ground_truth: usize, matches: usize },
    EmptySummary,
}

impl fmt::Display for MetricsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MetricsError::EmptyLabel { raw } => {
                write!(f, "label {raw:?} is empty after canonicalization")
            }
            MetricsError::InvalidLabel { raw } => {
                write!(f, "label {raw:?} contains whitespace")
            }
            MetricsError::DuplicateLabel { record_id, label } => {
                write!(f, "record {record_id:?} has duplicate label {label:?} after canonicalization")
            }
            MetricsError::InfeasibleCounts { n_recommended, n_ground_truth, matches } => {
                write!(
                    f,
                    "match count {matches} exceeds min(n_R={n_recommended}, n_G={n_ground_truth})"
                )
            }
            MetricsError::EmptySummary => f.write_str("cannot summarize an empty record set"),
        }
    }
}

impl Error for MetricsError {}
