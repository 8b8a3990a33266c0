//! Evaluation of top-k hashtag recommendations against variable-cardinality
//! ground truth, plus a content-based reference recommender to exercise the
//! metrics end to end.
//!
//! The crate has four parts:
//!
//! * [`metrics`] — hit rate, precision, recall, F1 and hit ratio for single
//!   evaluation pairs and their corpus-level averages.
//! * [`preprocess`] — tweet text normalization, hashtag extraction,
//!   eligibility filtering and corpus statistics.
//! * [`vectorize`] — TF-IDF and mean-of-word-embeddings tweet vectors with
//!   cosine similarity.
//! * [`recommend`] — cosine-threshold retrieval over a frozen repository
//!   with popularity or relevance ranking.
//!
//! Everything is deterministic: identical inputs produce identical outputs,
//! with no hidden randomness or map-iteration-order dependence.

pub mod metrics;
pub mod preprocess;
pub mod recommend;
mod stopwords;
pub mod vectorize;

pub use metrics::{
    evaluate, f1, hit_rate, hit_ratio, match_count, precision, recall, summarize, EvalPair, Label,
    MetricScores, MetricSummary, MetricsError,
};
pub use preprocess::{
    corpus_stats, is_eligible, is_retweet, normalize, CleanTweet, CorpusStats, EligibilityPolicy,
    PreprocessError, RawTweet, StopwordList,
};
pub use recommend::{
    rank_popularity, rank_relevance, Candidate, Ranking, RecommendError, RecommenderConfig,
    RepoEntry, Repository, SimilarTweet, DEFAULT_SIMILARITY_THRESHOLD,
};
pub use vectorize::{
    cosine, EmbeddingError, EmbeddingTable, MoweVectorizer, TfIdfModel, TokenFilter, TweetVector,
    VectorizeError, Vectorizer, VectorizerKind,
};
