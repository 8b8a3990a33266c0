//! The five subcommand implementations. Each returns the stdout payload;
//! diagnostics and timing stay on stderr (handled by `main`).

use std::fs::File;
use std::io::BufReader;
use std::path::{Path, PathBuf};

use serde::Serialize;
use tagkit_core::{
    corpus_stats, evaluate, summarize, CleanTweet, EligibilityPolicy, EmbeddingTable, EvalPair,
    MoweVectorizer, Ranking, RecommenderConfig, Repository, StopwordList, TfIdfModel,
    VectorizerKind,
};

use crate::corpus::{chronological_split, ingest, parse_corpus_file, IngestOptions};
use crate::error::CliError;
use crate::eval_records::parse_eval_records_file;
use crate::report::{ConfigEcho, CorpusEcho, RecordReport, RunReport, StatsReport};
use crate::sweep::{sweep, SweepMode};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Table,
}

/// Flags shared by the corpus-consuming commands.
#[derive(Debug, Clone)]
pub struct CorpusOptions {
    pub corpus: PathBuf,
    pub stopwords: Option<PathBuf>,
    pub min_user_hashtags: usize,
    pub count_hashtag_words: bool,
}

impl CorpusOptions {
    fn ingest_options(&self) -> Result<IngestOptions, CliError> {
        Ok(IngestOptions {
            stopwords: load_stopwords(self.stopwords.as_deref())?,
            min_user_hashtags: self.min_user_hashtags,
            eligibility: EligibilityPolicy {
                min_words: 3,
                count_hashtag_tokens: self.count_hashtag_words,
            },
        })
    }

    fn load(&self) -> Result<Vec<CleanTweet>, CliError> {
        let raw = parse_corpus_file(&self.corpus)?;
        Ok(ingest(raw, &self.ingest_options()?))
    }
}

fn load_stopwords(path: Option<&Path>) -> Result<StopwordList, CliError> {
    match path {
        None => Ok(StopwordList::standard()),
        Some(path) => {
            let file = File::open(path).map_err(|e| {
                CliError::config(format!("cannot open stopwords {}: {e}", path.display()))
            })?;
            StopwordList::from_reader(BufReader::new(file))
                .map_err(|e| CliError::parse(format!("{}: {e}", path.display())))
        }
    }
}

fn evaluate_pairs(pairs: &[EvalPair]) -> Result<(Vec<RecordReport>, tagkit_core::MetricSummary), CliError> {
    let records: Vec<RecordReport> = pairs
        .iter()
        .map(|pair| RecordReport::from_pair(pair, &evaluate(pair)))
        .collect();
    let scores: Vec<_> = records.iter().map(RecordReport::scores).collect();
    let summary = summarize(&scores).map_err(|_| CliError::empty("no records to evaluate"))?;
    Ok((records, summary))
}

/// `eval`: score an evaluation record file.
pub fn run_eval(records_path: &Path, format: OutputFormat) -> Result<String, CliError> {
    let pairs = parse_eval_records_file(records_path)?;
    if pairs.is_empty() {
        return Err(CliError::empty(format!(
            "{}: no evaluation records",
            records_path.display()
        )));
    }
    let (records, summary) = evaluate_pairs(&pairs)?;
    let report = RunReport {
        config: None,
        corpus: None,
        records,
        summary: summary.into(),
    };
    Ok(match format {
        OutputFormat::Json => report.to_json(),
        OutputFormat::Table => report.to_table(),
    })
}

/// `sweep`: closed-form metric table for a match schedule.
pub fn run_sweep(mode: SweepMode, fixed_value: usize, matches: &[usize], format: OutputFormat) -> Result<String, CliError> {
    let report = sweep(mode, fixed_value, matches)?;
    Ok(match format {
        OutputFormat::Json => report.to_json(),
        OutputFormat::Table => report.to_table(),
    })
}

#[derive(Debug, Clone)]
pub struct RecommendEvalOptions {
    pub corpus: CorpusOptions,
    pub embeddings: Option<PathBuf>,
    pub k: usize,
    pub threshold: f64,
    pub vectorizer: VectorizerKind,
    pub ranking: Ranking,
    pub split_fraction: f64,
}

/// `recommend-eval`: end-to-end run of the reference recommender.
///
/// Ingests the corpus, splits it chronologically (most recent fraction as
/// the test set), builds a repository from the rest, recommends for every
/// test tweet and scores against its own hashtags.
pub fn run_recommend_eval(options: &RecommendEvalOptions, format: OutputFormat) -> Result<String, CliError> {
    let clean = options.corpus.load()?;
    if clean.is_empty() {
        return Err(CliError::empty("no eligible tweets after pre-processing"));
    }
    let stats = corpus_stats(&clean).map_err(|e| CliError::empty(e.to_string()))?;
    let (repository_tweets, test_tweets) = chronological_split(clean, options.split_fraction)?;
    if test_tweets.is_empty() {
        return Err(CliError::empty("test split is empty"));
    }
    if repository_tweets.is_empty() {
        return Err(CliError::empty("repository split is empty"));
    }

    let config = RecommenderConfig {
        similarity_threshold: options.threshold,
        k: options.k,
        ranking: options.ranking,
        vectorizer: options.vectorizer,
    };
    config.validate().map_err(|e| CliError::config(e.to_string()))?;

    let repository_size = repository_tweets.len();
    let repository = match options.vectorizer {
        VectorizerKind::TfIdf => {
            let model = TfIdfModel::fit(&repository_tweets)
                .map_err(|e| CliError::empty(e.to_string()))?;
            Repository::build(repository_tweets, model)
        }
        VectorizerKind::Mowe => {
            let path = options.embeddings.as_deref().ok_or_else(|| {
                CliError::config("--embeddings is required with --vectorizer mowe")
            })?;
            let file = File::open(path).map_err(|e| {
                CliError::config(format!("cannot open embeddings {}: {e}", path.display()))
            })?;
            let table = EmbeddingTable::from_reader(BufReader::new(file))
                .map_err(|e| CliError::parse(format!("{}:{}", path.display(), e)))?;
            Repository::build(repository_tweets, MoweVectorizer::new(table))
        }
    }
    .map_err(|e| CliError::empty(e.to_string()))?;

    let mut pairs = Vec::with_capacity(test_tweets.len());
    for tweet in &test_tweets {
        let recommended = repository
            .recommend(tweet, &config)
            .map_err(|e| CliError::config(e.to_string()))?;
        let pair = EvalPair::new(tweet.id.clone(), recommended, tweet.hashtags.iter().cloned())
            .map_err(|e| CliError::parse(e.to_string()))?;
        pairs.push(pair);
    }
    let (records, summary) = evaluate_pairs(&pairs)?;

    let report = RunReport {
        config: Some(ConfigEcho {
            k: options.k,
            threshold: options.threshold,
            vectorizer: options.vectorizer.to_string(),
            ranking: options.ranking.to_string(),
            split_fraction: options.split_fraction,
        }),
        corpus: Some(CorpusEcho {
            tweet_count: stats.tweet_count,
            max_hashtags_per_tweet: stats.max_hashtags,
            min_hashtags_per_tweet: stats.min_hashtags,
            mean_hashtags_per_tweet: stats.mean_hashtags,
            repository_size,
            test_size: test_tweets.len(),
        }),
        records,
        summary: summary.into(),
    };
    Ok(match format {
        OutputFormat::Json => report.to_json(),
        OutputFormat::Table => report.to_table(),
    })
}

/// `stats`: hashtags-per-tweet statistics of the post-filter corpus.
pub fn run_stats(options: &CorpusOptions, format: OutputFormat) -> Result<String, CliError> {
    let clean = options.load()?;
    let stats = corpus_stats(&clean)
        .map_err(|_| CliError::empty("no eligible tweets after pre-processing"))?;
    let report: StatsReport = stats.into();
    Ok(match format {
        OutputFormat::Json => report.to_json(),
        OutputFormat::Table => report.to_table(),
    })
}

#[derive(Debug, Serialize)]
struct CleanRecord<'a> {
    id: &'a str,
    user: &'a str,
    timestamp: i64,
    tokens: &'a [String],
    hashtags: Vec<&'a str>,
}

/// `preprocess`: emit the post-filter corpus as JSONL, one clean tweet per
/// line, hashtags in canonical form.
pub fn run_preprocess(options: &CorpusOptions) -> Result<String, CliError> {
    let clean = options.load()?;
    if clean.is_empty() {
        return Err(CliError::empty("no eligible tweets after pre-processing"));
    }
    let mut out = String::new();
    for tweet in &clean {
        let record = CleanRecord {
            id: &tweet.id,
            user: &tweet.user,
            timestamp: tweet.timestamp,
            tokens: &tweet.tokens,
            hashtags: tweet.hashtags.iter().map(|l| l.canonical()).collect(),
        };
        out.push_str(&serde_json::to_string(&record).expect("clean record serializes"));
        out.push('\n');
    }
    Ok(out)
}
