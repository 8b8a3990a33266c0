//! Content-based hashtag recommendation over a frozen tweet repository.
//!
//! A query tweet is vectorized with the repository's backend, repository
//! tweets with cosine similarity at or above the threshold are retrieved,
//! their hashtags become candidates, candidates are ranked (by popularity or
//! by summed similarity) and up to `k` distinct labels are returned. The
//! whole pipeline is exact full-scan cosine with deterministic total orders,
//! so repeated runs are byte-identical.

use std::collections::BTreeMap;
use std::error::Error;
use std::fmt;

use crate::metrics::Label;
use crate::preprocess::CleanTweet;
use crate::vectorize::{cosine_aligned, TweetVector, Vectorizer, VectorizerKind};

/// Default cosine similarity gate for retrieval.
pub const DEFAULT_SIMILARITY_THRESHOLD: f64 = 0.5;

/// How extracted candidate hashtags are scored.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ranking {
    /// Number of similar tweets carrying the hashtag.
    Popularity,
    /// Sum of the similarities of the tweets carrying the hashtag.
    Relevance,
}

impl Ranking {
    pub fn as_str(self) -> &'static str {
        match self {
            Ranking::Popularity => "popularity",
            Ranking::Relevance => "relevance",
        }
    }
}

impl fmt::Display for Ranking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RecommenderConfig {
    /// Cosine gate in `[0, 1]`.
    pub similarity_threshold: f64,
    /// Maximum recommendation list length; at least 1.
    pub k: usize,
    pub ranking: Ranking,
    pub vectorizer: VectorizerKind,
}

impl RecommenderConfig {
    pub fn new(vectorizer: VectorizerKind, ranking: Ranking, k: usize) -> RecommenderConfig {
        RecommenderConfig {
            similarity_threshold: DEFAULT_SIMILARITY_THRESHOLD,
            k,
            ranking,
            vectorizer,
        }
    }

    pub fn validate(&self) -> Result<(), RecommendError> {
        if !(0.0..=1.0).contains(&self.similarity_threshold) {
            return Err(RecommendError::InvalidConfig(format!(
                "similarity threshold {} outside [0, 1]",
                self.similarity_threshold
            )));
        }
        if self.k == 0 {
            return Err(RecommendError::InvalidConfig("k must be at least 1".into()));
        }
        Ok(())
    }
}

/// One stored tweet with its vector.
#[derive(Debug, Clone)]
pub struct RepoEntry {
    pub tweet: CleanTweet,
    pub vector: TweetVector,
}

/// A repository tweet retrieved for a query.
#[derive(Debug, Clone, Copy)]
pub struct SimilarTweet<'a> {
    pub tweet: &'a CleanTweet,
    pub similarity: f64,
}

/// A candidate hashtag extracted from the similar set.
#[derive(Debug, Clone, PartialEq)]
pub struct Candidate {
    pub hashtag: Label,
    pub score: f64,
    /// Similar tweets carrying the hashtag; at least 1.
    pub supporting_count: usize,
}

/// Frozen, searchable index of vectorized tweets. Immutable after build;
/// queries need no synchronization.
pub struct Repository {
    entries: Vec<RepoEntry>,
    vectorizer: Box<dyn Vectorizer>,
    backend: VectorizerKind,
    dimension: usize,
}

impl Repository {
    /// Vectorizes an eligible corpus with the given backend, in input order.
    /// Zero-vector tweets are kept; they are unreachable at any positive
    /// threshold.
    pub fn build(corpus: Vec<CleanTweet>, vectorizer: impl Vectorizer + 'static) -> Result<Repository, RecommendError> {
        if corpus.is_empty() {
            return Err(RecommendError::EmptyCorpus);
        }
        debug_assert!(corpus.iter().all(crate::preprocess::is_eligible));
        let entries: Vec<RepoEntry> = corpus
            .into_iter()
            .map(|tweet| {
                let vector = vectorizer.tweet_vector(&tweet);
                RepoEntry { tweet, vector }
            })
            .collect();
        let backend = vectorizer.kind();
        let dimension = vectorizer.dimension();
        Ok(Repository {
            entries,
            vectorizer: Box::new(vectorizer),
            backend,
            dimension,
        })
    }

    pub fn entries(&self) -> &[RepoEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn backend(&self) -> VectorizerKind {
        self.backend
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Vectorizes a tweet with the repository's backend.
    pub fn vectorize(&self, tweet: &CleanTweet) -> TweetVector {
        self.vectorizer.tweet_vector(tweet)
    }

    /// Exactly the entries with `cosine >= threshold`, ordered by similarity
    /// descending, ties broken by ascending tweet id.
    pub fn retrieve_similar(&self, query: &TweetVector, threshold: f64) -> Result<Vec<SimilarTweet<'_>>, RecommendError> {
        if query.dimension() != self.dimension {
            return Err(RecommendError::DimensionMismatch {
                repository: self.dimension,
                query: query.dimension(),
            });
        }
        let mut similar: Vec<SimilarTweet<'_>> = self
            .entries
            .iter()
            .filter_map(|entry| {
                let similarity = cosine_aligned(&entry.vector, query);
                (similarity >= threshold).then_some(SimilarTweet {
                    tweet: &entry.tweet,
                    similarity,
                })
            })
            .collect();
        similar.sort_by(|a, b| {
            b.similarity
                .total_cmp(&a.similarity)
                .then_with(|| a.tweet.id.cmp(&b.tweet.id))
        });
        Ok(similar)
    }

    /// The full pipeline: vectorize, retrieve, rank, take the top `k`
    /// distinct labels. Returns fewer than `k` labels (possibly none) when
    /// the similar set does not supply enough candidates.
    pub fn recommend(&self, query: &CleanTweet, config: &RecommenderConfig) -> Result<Vec<Label>, RecommendError> {
        config.validate()?;
        if config.vectorizer != self.backend {
            return Err(RecommendError::BackendMismatch {
                repository: self.backend,
                config: config.vectorizer,
            });
        }
        let query_vector = self.vectorize(query);
        let similar = self.retrieve_similar(&query_vector, config.similarity_threshold)?;
        let candidates = match config.ranking {
            Ranking::Popularity => rank_popularity(&similar),
            Ranking::Relevance => rank_relevance(&similar),
        };
        Ok(candidates.into_iter().take(config.k).map(|c| c.hashtag).collect())
    }
}

impl fmt::Debug for Repository {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Repository")
            .field("len", &self.entries.len())
            .field("backend", &self.backend)
            .field("dimension", &self.dimension)
            .finish()
    }
}

struct Tally {
    label: Label,
    score: f64,
    count: usize,
}

fn tally<F: Fn(f64) -> f64>(similar: &[SimilarTweet<'_>], weight: F) -> Vec<Candidate> {
    let mut by_label: BTreeMap<String, Tally> = BTreeMap::new();
    for hit in similar {
        for label in &hit.tweet.hashtags {
            let entry = by_label.entry(label.canonical().to_string()).or_insert_with(|| Tally {
                label: label.clone(),
                score: 0.0,
                count: 0,
            });
            entry.score += weight(hit.similarity);
            entry.count += 1;
        }
    }
    let mut candidates: Vec<Candidate> = by_label
        .into_values()
        .map(|t| Candidate {
            hashtag: t.label,
            score: t.score,
            supporting_count: t.count,
        })
        .collect();
    // Score descending, then canonical label ascending: a deterministic
    // total order (BTreeMap already yields labels ascending, sort is stable).
    candidates.sort_by(|a, b| b.score.total_cmp(&a.score));
    candidates
}

/// Candidates scored by how many similar tweets carry them.
pub fn rank_popularity(similar: &[SimilarTweet<'_>]) -> Vec<Candidate> {
    tally(similar, |_| 1.0)
}

/// Candidates scored by the summed similarity of their supporting tweets.
pub fn rank_relevance(similar: &[SimilarTweet<'_>]) -> Vec<Candidate> {
    tally(similar, |sim| sim)
}

#[derive(Debug, PartialEq)]
pub enum RecommendError {
    EmptyCorpus,
    BackendMismatch { repository: VectorizerKind, config: VectorizerKind },
    DimensionMismatch { repository: usize, query: usize },
    InvalidConfig(String),
}

impl fmt::Display for RecommendError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RecommendError::EmptyCorpus => f.write_str("cannot build a repository from an empty corpus"),
            RecommendError::BackendMismatch { repository, config } => {
                write!(f, "repository uses {repository} vectors but config asks for {config}")
            }
            RecommendError::DimensionMismatch { repository, query } => {
                write!(f, "query vector dimension {query} does not match repository dimension {repository}")
            }
            RecommendError::InvalidConfig(msg) => write!(f, "invalid recommender config: {msg}"),
        }
    }
}

impl Error for RecommendError {}
