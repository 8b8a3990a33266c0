//! Dense tweet vectors via TF-IDF or mean-of-word-embeddings, plus cosine
//! similarity.
//!
//! Both backends implement [`Vectorizer`] and produce [`TweetVector`]s of a
//! fixed dimension: TF-IDF over the fitted vocabulary, MOWE over the loaded
//! embedding dimension. Hashtag tokens are excluded from vectors by default
//! since they are the prediction target; [`TokenFilter::IncludeHashtags`]
//! exists for ablation runs.

use std::collections::{BTreeMap, HashMap};
use std::error::Error;
use std::fmt;
use std::io::BufRead;

use crate::preprocess::CleanTweet;

/// Which tokens of a tweet participate in its vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TokenFilter {
    /// Words only; hashtags never leak into retrieval.
    #[default]
    ExcludeHashtags,
    /// Every token, hashtags included (ablation).
    IncludeHashtags,
}

impl TokenFilter {
    fn selects(self, token: &str) -> bool {
        match self {
            TokenFilter::ExcludeHashtags => !token.starts_with('#'),
            TokenFilter::IncludeHashtags => true,
        }
    }
}

/// The two vectorization backends.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VectorizerKind {
    TfIdf,
    Mowe,
}

impl VectorizerKind {
    pub fn as_str(self) -> &'static str {
        match self {
            VectorizerKind::TfIdf => "tfidf",
            VectorizerKind::Mowe => "mowe",
        }
    }
}

impl fmt::Display for VectorizerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A dense tweet vector with its Euclidean norm cached.
#[derive(Debug, Clone, PartialEq)]
pub struct TweetVector {
    values: Vec<f64>,
    norm: f64,
}

impl TweetVector {
    pub fn new(values: Vec<f64>) -> TweetVector {
        debug_assert!(values.iter().all(|v| v.is_finite()));
        let norm = values.iter().map(|v| v * v).sum::<f64>().sqrt();
        TweetVector { values, norm }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn norm(&self) -> f64 {
        self.norm
    }

    pub fn dimension(&self) -> usize {
        self.values.len()
    }

    pub fn is_zero(&self) -> bool {
        self.norm == 0.0
    }
}

/// Cosine similarity, clamped to `[-1, 1]`; 0 when either vector is zero.
pub fn cosine(a: &TweetVector, b: &TweetVector) -> Result<f64, VectorizeError> {
    if a.dimension() != b.dimension() {
        return Err(VectorizeError::DimensionMismatch {
            left: a.dimension(),
            right: b.dimension(),
        });
    }
    Ok(cosine_aligned(a, b))
}

/// Cosine for vectors already known to share a dimension.
pub(crate) fn cosine_aligned(a: &TweetVector, b: &TweetVector) -> f64 {
    debug_assert_eq!(a.dimension(), b.dimension());
    if a.norm == 0.0 || b.norm == 0.0 {
        return 0.0;
    }
    let dot: f64 = a.values.iter().zip(&b.values).map(|(x, y)| x * y).sum();
    let sim = (dot / (a.norm * b.norm)).clamp(-1.0, 1.0);
    // Normalize -0.0 so downstream total-order sorting is unsurprising.
    if sim == 0.0 {
        0.0
    } else {
        sim
    }
}

/// A vectorization backend: immutable after construction, safe to share.
pub trait Vectorizer: Send + Sync {
    fn kind(&self) -> VectorizerKind;
    fn dimension(&self) -> usize;
    fn tweet_vector(&self, tweet: &CleanTweet) -> TweetVector;
}

/// TF-IDF model fitted on a corpus.
///
/// Columns are assigned in lexicographic word order and
/// `idf(w) = ln((1 + N) / (1 + df(w))) + 1` with raw term counts as TF.
#[derive(Debug, Clone)]
pub struct TfIdfModel {
    vocabulary: BTreeMap<String, usize>,
    idf: Vec<f64>,
    document_count: usize,
    filter: TokenFilter,
}

impl TfIdfModel {
    /// Fits on a corpus with the default token filter.
    pub fn fit(corpus: &[CleanTweet]) -> Result<TfIdfModel, VectorizeError> {
        TfIdfModel::fit_filtered(corpus, TokenFilter::default())
    }

    pub fn fit_filtered(corpus: &[CleanTweet], filter: TokenFilter) -> Result<TfIdfModel, VectorizeError> {
        if corpus.is_empty() {
            return Err(VectorizeError::EmptyCorpus);
        }
        let mut document_frequency: BTreeMap<&str, usize> = BTreeMap::new();
        for tweet in corpus {
            let mut seen: Vec<&str> = tweet
                .tokens
                .iter()
                .map(String::as_str)
                .filter(|t| filter.selects(t))
                .collect();
            seen.sort_unstable();
            seen.dedup();
            for word in seen {
                *document_frequency.entry(word).or_insert(0) += 1;
            }
        }
        let n = corpus.len();
        let mut vocabulary = BTreeMap::new();
        let mut idf = Vec::with_capacity(document_frequency.len());
        for (column, (word, df)) in document_frequency.iter().enumerate() {
            vocabulary.insert((*word).to_string(), column);
            idf.push(((1.0 + n as f64) / (1.0 + *df as f64)).ln() + 1.0);
        }
        Ok(TfIdfModel {
            vocabulary,
            idf,
            document_count: n,
            filter,
        })
    }

    pub fn vocabulary_size(&self) -> usize {
        self.vocabulary.len()
    }

    pub fn document_count(&self) -> usize {
        self.document_count
    }

    /// The idf weight of a word, if it is in the vocabulary.
    pub fn idf(&self, word: &str) -> Option<f64> {
        self.vocabulary.get(word).map(|&col| self.idf[col])
    }
}

impl Vectorizer for TfIdfModel {
    fn kind(&self) -> VectorizerKind {
        VectorizerKind::TfIdf
    }

    fn dimension(&self) -> usize {
        self.vocabulary.len()
    }

    fn tweet_vector(&self, tweet: &CleanTweet) -> TweetVector {
        let mut values = vec![0.0; self.vocabulary.len()];
        for token in tweet.tokens.iter().filter(|t| self.filter.selects(t)) {
            if let Some(&col) = self.vocabulary.get(token.as_str()) {
                values[col] += 1.0;
            }
        }
        for (col, value) in values.iter_mut().enumerate() {
            if *value != 0.0 {
                *value *= self.idf[col];
            }
        }
        TweetVector::new(values)
    }
}

/// Word-embedding lookup table loaded from the common text interchange
/// format: a `<vocab_size> <dimension>` header line, then one line per word.
#[derive(Debug, Clone)]
pub struct EmbeddingTable {
    dimension: usize,
    entries: HashMap<String, Vec<f64>>,
}

impl EmbeddingTable {
    pub fn from_entries<I, S>(dimension: usize, entries: I) -> Result<EmbeddingTable, EmbeddingError>
    where
        I: IntoIterator<Item = (S, Vec<f64>)>,
        S: Into<String>,
    {
        if dimension == 0 {
            return Err(EmbeddingError::header(0, "dimension must be positive"));
        }
        let mut map = HashMap::new();
        for (word, vector) in entries {
            let word = word.into();
            if vector.len() != dimension {
                return Err(EmbeddingError::header(
                    0,
                    format!("vector for {word:?} has {} components, expected {dimension}", vector.len()),
                ));
            }
            if vector.iter().any(|v| !v.is_finite()) {
                return Err(EmbeddingError::header(0, format!("vector for {word:?} has a non-finite component")));
            }
            map.insert(word, vector);
        }
        Ok(EmbeddingTable {
            dimension,
            entries: map,
        })
    }

    /// Parses the text format, reporting the offending line on error.
    pub fn from_reader<R: BufRead>(reader: R) -> Result<EmbeddingTable, EmbeddingError> {
        let mut lines = reader.lines().enumerate();
        let (_, header) = lines.next().ok_or_else(|| EmbeddingError::header(1, "empty stream"))?;
        let header = header.map_err(|e| EmbeddingError::io(1, e))?;
        let mut parts = header.split_whitespace();
        let vocab_size: usize = parts
            .next()
            .and_then(|p| p.parse().ok())
            .ok_or_else(|| EmbeddingError::header(1, "expected \"<vocab_size> <dimension>\""))?;
        let dimension: usize = parts
            .next()
            .and_then(|p| p.parse().ok())
            .ok_or_else(|| EmbeddingError::header(1, "expected \"<vocab_size> <dimension>\""))?;
        if parts.next().is_some() {
            return Err(EmbeddingError::header(1, "trailing fields after \"<vocab_size> <dimension>\""));
        }
        if dimension == 0 {
            return Err(EmbeddingError::header(1, "dimension must be positive"));
        }

        let mut entries = HashMap::with_capacity(vocab_size);
        for (index, line) in lines {
            let line_no = index + 1;
            let line = line.map_err(|e| EmbeddingError::io(line_no, e))?;
            if line.trim().is_empty() {
                continue;
            }
            let mut fields = line.split_whitespace();
            let word = fields.next().expect("non-empty line has a first field");
            let mut vector = Vec::with_capacity(dimension);
            for field in fields {
                let value: f64 = field.parse().map_err(|_| {
                    EmbeddingError::row(line_no, format!("component {field:?} is not a number"))
                })?;
                if !value.is_finite() {
                    return Err(EmbeddingError::row(line_no, format!("component {field:?} is not finite")));
                }
                vector.push(value);
            }
            if vector.len() != dimension {
                return Err(EmbeddingError::row(
                    line_no,
                    format!("{} components, expected {dimension}", vector.len()),
                ));
            }
            entries.insert(word.to_string(), vector);
        }
        if entries.is_empty() {
            return Err(EmbeddingError::header(1, "no word vectors after header"));
        }
        Ok(EmbeddingTable { dimension, entries })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, word: &str) -> Option<&[f64]> {
        self.entries.get(word).map(Vec::as_slice)
    }

    /// Mean of the embeddings of the tweet's in-vocabulary tokens under the
    /// default filter; the zero vector when none are in vocabulary.
    pub fn mowe(&self, tweet: &CleanTweet) -> TweetVector {
        self.mowe_filtered(tweet, TokenFilter::default())
    }

    /// Token vectors are accumulated in sorted token order so the result is
    /// exactly invariant under permutation of the tweet's tokens.
    pub fn mowe_filtered(&self, tweet: &CleanTweet, filter: TokenFilter) -> TweetVector {
        let mut matched: Vec<&str> = tweet
            .tokens
            .iter()
            .map(String::as_str)
            .filter(|t| filter.selects(t) && self.entries.contains_key(*t))
            .collect();
        matched.sort_unstable();
        if matched.is_empty() {
            return TweetVector::new(vec![0.0; self.dimension]);
        }
        let mut sum = vec![0.0f64; self.dimension];
        for word in &matched {
            let vector = &self.entries[*word];
            for (acc, v) in sum.iter_mut().zip(vector) {
                *acc += v;
            }
        }
        let count = matched.len() as f64;
        for v in &mut sum {
            *v /= count;
        }
        TweetVector::new(sum)
    }
}

/// An [`EmbeddingTable`] bound to a token filter, usable as a [`Vectorizer`].
#[derive(Debug, Clone)]
pub struct MoweVectorizer {
    table: EmbeddingTable,
    filter: TokenFilter,
}

impl MoweVectorizer {
    pub fn new(table: EmbeddingTable) -> MoweVectorizer {
        MoweVectorizer {
            table,
            filter: TokenFilter::default(),
        }
    }

    pub fn with_filter(table: EmbeddingTable, filter: TokenFilter) -> MoweVectorizer {
        MoweVectorizer { table, filter }
    }

    pub fn table(&self) -> &EmbeddingTable {
        &self.table
    }
}

impl Vectorizer for MoweVectorizer {
    fn kind(&self) -> VectorizerKind {
        VectorizerKind::Mowe
    }

    fn dimension(&self) -> usize {
        self.table.dimension()
    }

    fn tweet_vector(&self, tweet: &CleanTweet) -> TweetVector {
        self.table.mowe_filtered(tweet, self.filter)
    }
}

#[derive(Debug, PartialEq, Eq)]
pub enum VectorizeError {
    EmptyCorpus,
    DimensionMismatch { left: usize, right: usize },
}

impl fmt::Display for VectorizeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VectorizeError::EmptyCorpus => f.write_str("cannot fit a model on an empty corpus"),
            VectorizeError::DimensionMismatch { left, right } => {
                write!(f, "vector dimensions differ: {left} vs {right}")
            }
        }
    }
}

impl Error for VectorizeError {}

#[derive(Debug)]
pub struct EmbeddingError {
    pub line: usize,
    pub kind: EmbeddingErrorKind,
}

#[derive(Debug)]
pub enum EmbeddingErrorKind {
    Header(String),
    Row(String),
    Io(std::io::Error),
}

impl EmbeddingError {
    fn header(line: usize, message: impl Into<String>) -> EmbeddingError {
        EmbeddingError {
            line,
            kind: EmbeddingErrorKind::Header(message.into()),
        }
    }

    fn row(line: usize, message: impl Into<String>) -> EmbeddingError {
        EmbeddingError {
            line,
            kind: EmbeddingErrorKind::Row(message.into()),
        }
    }

    fn io(line: usize, error: std::io::Error) -> EmbeddingError {
        EmbeddingError {
            line,
            kind: EmbeddingErrorKind::Io(error),
        }
    }
}

impl fmt::Display for EmbeddingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line > 0 {
            write!(f, "line {}: ", self.line)?;
        }
        match &self.kind {
            EmbeddingErrorKind::Header(msg) => write!(f, "bad header: {msg}"),
            EmbeddingErrorKind::Row(msg) => write!(f, "bad word vector: {msg}"),
            EmbeddingErrorKind::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl Error for EmbeddingError {}
