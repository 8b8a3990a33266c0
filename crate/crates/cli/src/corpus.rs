//! Corpus ingestion: JSONL parsing, the preprocessing pipeline, and the
//! chronological repository/test split.
//!
//! The corpus file carries one tweet object per line:
//! `{"id": "...", "user": "...", "timestamp": 1234567890, "text": "..."}`.

use std::collections::{BTreeMap, HashSet};
use std::fs::File;
use std::io::{BufRead, BufReader, Read};
use std::path::Path;

use serde::Deserialize;
use tagkit_core::{is_retweet, normalize, CleanTweet, EligibilityPolicy, RawTweet, StopwordList};

use crate::error::CliError;

#[derive(Debug, Deserialize)]
struct TweetLine {
    id: String,
    user: String,
    timestamp: i64,
    text: String,
}

/// Parses a corpus stream, enforcing unique ids and non-negative timestamps.
pub fn parse_corpus<R: Read>(name: &str, reader: R) -> Result<Vec<RawTweet>, CliError> {
    let reader = BufReader::new(reader);
    let mut tweets = Vec::new();
    let mut seen_ids = HashSet::new();
    for (index, line) in reader.lines().enumerate() {
        let line_no = index + 1;
        let line = line.map_err(|e| CliError::at_line(name, line_no, e))?;
        if line.trim().is_empty() {
            continue;
        }
        let parsed: TweetLine =
            serde_json::from_str(&line).map_err(|e| CliError::at_line(name, line_no, e))?;
        if parsed.timestamp < 0 {
            return Err(CliError::at_line(name, line_no, "timestamp must be non-negative"));
        }
        if !seen_ids.insert(parsed.id.clone()) {
            return Err(CliError::at_line(
                name,
                line_no,
                format!("duplicate tweet id {:?}", parsed.id),
            ));
        }
        tweets.push(RawTweet {
            id: parsed.id,
            user: parsed.user,
            timestamp: parsed.timestamp,
            text: parsed.text,
        });
    }
    Ok(tweets)
}

pub fn parse_corpus_file(path: &Path) -> Result<Vec<RawTweet>, CliError> {
    let file = File::open(path)
        .map_err(|e| CliError::config(format!("cannot open corpus {}: {e}", path.display())))?;
    parse_corpus(&path.display().to_string(), file)
}

/// Knobs shared by every corpus-consuming command.
#[derive(Debug, Clone)]
pub struct IngestOptions {
    pub stopwords: StopwordList,
    /// Users contribute only when their tweets carry at least this many
    /// hashtags in total.
    pub min_user_hashtags: usize,
    pub eligibility: EligibilityPolicy,
}

impl Default for IngestOptions {
    fn default() -> Self {
        IngestOptions {
            stopwords: StopwordList::standard(),
            min_user_hashtags: 3,
            eligibility: EligibilityPolicy::default(),
        }
    }
}

/// Runs the full pipeline: drop retweets, normalize, apply the per-user
/// hashtag-count filter, keep eligible tweets. Input order is preserved.
pub fn ingest(raw: Vec<RawTweet>, options: &IngestOptions) -> Vec<CleanTweet> {
    let normalized: Vec<CleanTweet> = raw
        .iter()
        .filter(|t| !is_retweet(t))
        .map(|t| normalize(t, &options.stopwords))
        .collect();

    let mut hashtags_per_user: BTreeMap<&str, usize> = BTreeMap::new();
    for tweet in &normalized {
        *hashtags_per_user.entry(tweet.user.as_str()).or_insert(0) += tweet.hashtags.len();
    }

    normalized
        .iter()
        .filter(|t| hashtags_per_user.get(t.user.as_str()).copied().unwrap_or(0) >= options.min_user_hashtags)
        .filter(|t| options.eligibility.is_eligible(t))
        .cloned()
        .collect()
}

/// Chronological split: the most recent `ceil(fraction * n)` tweets are the
/// test set, the rest the repository. Timestamp ties break by ascending id.
pub fn chronological_split(
    mut tweets: Vec<CleanTweet>,
    fraction: f64,
) -> Result<(Vec<CleanTweet>, Vec<CleanTweet>), CliError> {
    if !(fraction > 0.0 && fraction < 1.0) {
        return Err(CliError::config(format!(
            "split fraction {fraction} must be strictly between 0 and 1"
        )));
    }
    tweets.sort_by(|a, b| a.timestamp.cmp(&b.timestamp).then_with(|| a.id.cmp(&b.id)));
    let test_size = (fraction * tweets.len() as f64).ceil() as usize;
    let split_at = tweets.len().saturating_sub(test_size);
    let test = tweets.split_off(split_at);
    Ok((tweets, test))
}
