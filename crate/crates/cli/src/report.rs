//! Machine-readable reports and their plain-text table rendering.
//!
//! JSON carries full-precision values; tables round to two decimals
//! (half-up) at presentation time only. Reports contain no volatile fields,
//! so identical inputs always serialize to identical bytes.

use serde::{Deserialize, Serialize};
use tagkit_core::{CorpusStats, EvalPair, MetricScores, MetricSummary};

/// Rounds half-up to two decimals; presentation only.
pub fn round2(value: f64) -> f64 {
    (value * 100.0).round() / 100.0
}

/// Formats a metric cell the way the report tables print it.
pub fn cell(value: f64) -> String {
    format!("{:.2}", round2(value))
}

/// Echo of the recommender configuration a run used.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub k: usize,
    pub threshold: f64,
    pub vectorizer: String,
    pub ranking: String,
    pub split_fraction: f64,
}

/// Corpus shape of a recommend-eval run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorpusEcho {
    pub tweet_count: usize,
    pub max_hashtags_per_tweet: usize,
    pub min_hashtags_per_tweet: usize,
    pub mean_hashtags_per_tweet: f64,
    pub repository_size: usize,
    pub test_size: usize,
}

/// One evaluated record: the pair itself plus its scores.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RecordReport {
    pub record_id: String,
    pub recommended: Vec<String>,
    pub ground_truth: Vec<String>,
    pub matches: usize,
    pub n_recommended: usize,
    pub n_ground_truth: usize,
    pub hit_rate: f64,
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
    pub hit_ratio: f64,
}

impl RecordReport {
    pub fn from_pair(pair: &EvalPair, scores: &MetricScores) -> RecordReport {
        RecordReport {
            record_id: pair.record_id().to_string(),
            recommended: pair.recommended().iter().map(|l| l.canonical().to_string()).collect(),
            ground_truth: pair.ground_truth().iter().map(|l| l.canonical().to_string()).collect(),
            matches: scores.matches,
            n_recommended: scores.n_recommended,
            n_ground_truth: scores.n_ground_truth,
            hit_rate: scores.hit_rate,
            precision: scores.precision,
            recall: scores.recall,
            f1: scores.f1,
            hit_ratio: scores.hit_ratio,
        }
    }

    pub fn scores(&self) -> MetricScores {
        MetricScores {
            hit_rate: self.hit_rate,
            precision: self.precision,
            recall: self.recall,
            f1: self.f1,
            hit_ratio: self.hit_ratio,
            matches: self.matches,
            n_recommended: self.n_recommended,
            n_ground_truth: self.n_ground_truth,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryReport {
    pub record_count: usize,
    pub no_recommendation_count: usize,
    pub hit_rate: f64,
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
    pub hit_ratio: f64,
}

impl From<MetricSummary> for SummaryReport {
    fn from(s: MetricSummary) -> SummaryReport {
        SummaryReport {
            record_count: s.record_count,
            no_recommendation_count: s.no_recommendation_count,
            hit_rate: s.hit_rate,
            precision: s.precision,
            recall: s.recall,
            f1: s.f1,
            hit_ratio: s.hit_ratio,
        }
    }
}

/// The full result of an `eval` or `recommend-eval` run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub config: Option<ConfigEcho>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub corpus: Option<CorpusEcho>,
    pub records: Vec<RecordReport>,
    pub summary: SummaryReport,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    pub fn from_json(data: &str) -> Result<RunReport, serde_json::Error> {
        serde_json::from_str(data)
    }

    /// Aligned per-record table plus the summary row.
    pub fn to_table(&self) -> String {
        let id_width = self
            .records
            .iter()
            .map(|r| r.record_id.len())
            .chain(["record".len(), "mean".len()])
            .max()
            .unwrap_or(6);
        let mut out = String::new();
        if let Some(c) = &self.config {
            out.push_str(&format!(
                "k = {}  threshold = {}  vectorizer = {}  ranking = {}  split = {}\n",
                c.k, c.threshold, c.vectorizer, c.ranking, c.split_fraction
            ));
        }
        if let Some(c) = &self.corpus {
            out.push_str(&format!(
                "corpus: {} tweets (repository {}, test {}); hashtags per tweet min {} max {} avg {}\n",
                c.tweet_count,
                c.repository_size,
                c.test_size,
                c.min_hashtags_per_tweet,
                c.max_hashtags_per_tweet,
                cell(c.mean_hashtags_per_tweet),
            ));
        }
        out.push_str(&format!(
            "{:<id_width$}  {:>8}  {:>5}  {:>5}  {:>5}  {:>9}\n",
            "record", "hit rate", "P", "R", "F1", "hit ratio"
        ));
        for r in &self.records {
            out.push_str(&format!(
                "{:<id_width$}  {:>8}  {:>5}  {:>5}  {:>5}  {:>9}\n",
                r.record_id,
                cell(r.hit_rate),
                cell(r.precision),
                cell(r.recall),
                cell(r.f1),
                cell(r.hit_ratio),
            ));
        }
        let s = &self.summary;
        out.push_str(&format!(
            "{:<id_width$}  {:>8}  {:>5}  {:>5}  {:>5}  {:>9}\n",
            "mean",
            cell(s.hit_rate),
            cell(s.precision),
            cell(s.recall),
            cell(s.f1),
            cell(s.hit_ratio),
        ));
        out.push_str(&format!(
            "records: {}  without recommendations: {}\n",
            s.record_count, s.no_recommendation_count
        ));
        out
    }
}

/// Corpus statistics report (the `stats` command output).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StatsReport {
    pub tweet_count: usize,
    pub max_hashtags_per_tweet: usize,
    pub min_hashtags_per_tweet: usize,
    pub mean_hashtags_per_tweet: f64,
}

impl From<CorpusStats> for StatsReport {
    fn from(s: CorpusStats) -> StatsReport {
        StatsReport {
            tweet_count: s.tweet_count,
            max_hashtags_per_tweet: s.max_hashtags,
            min_hashtags_per_tweet: s.min_hashtags,
            mean_hashtags_per_tweet: s.mean_hashtags,
        }
    }
}

impl StatsReport {
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("stats serialize");
        out.push('\n');
        out
    }

    pub fn to_table(&self) -> String {
        format!(
            "hashtagged tweets after pre-processing  {}\n\
             max hashtags per tweet                  {}\n\
             min hashtags per tweet                  {}\n\
             avg hashtags per tweet                  {}\n",
            self.tweet_count,
            self.max_hashtags_per_tweet,
            self.min_hashtags_per_tweet,
            cell(self.mean_hashtags_per_tweet),
        )
    }
}
