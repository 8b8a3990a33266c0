//! Tweet text normalization, hashtag extraction and corpus eligibility rules.
//!
//! `normalize` turns raw tweet text into a lowercase token sequence:
//! URLs, @-mentions and stopwords are removed, punctuation is stripped except
//! the `#` sign, consecutive duplicate tokens are collapsed, and `#`-prefixed
//! tokens are additionally collected into a canonical hashtag set. Tweets
//! whose text is a retweet (`RT @user ...`) are detected by [`is_retweet`]
//! and dropped during ingestion. After normalization, a tweet is eligible for
//! corpora when it still carries at least one hashtag and at least three
//! words.

use std::collections::BTreeSet;
use std::error::Error;
use std::fmt;
use std::io::BufRead;

use crate::metrics::Label;
use crate::stopwords;

/// A tweet as ingested: identifiers plus the raw text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawTweet {
    pub id: String,
    pub user: String,
    /// Epoch seconds; never negative.
    pub timestamp: i64,
    pub text: String,
}

/// A normalized tweet: lowercase tokens (hashtag tokens keep their `#`)
/// plus the extracted canonical hashtag set.
#[derive(Debug, Clone, PartialEq)]
pub struct CleanTweet {
    pub id: String,
    pub user: String,
    pub timestamp: i64,
    pub tokens: Vec<String>,
    pub hashtags: BTreeSet<Label>,
}

impl CleanTweet {
    /// Tokens that are not hashtags, i.e. ordinary words.
    pub fn word_tokens(&self) -> impl Iterator<Item = &str> {
        self.tokens.iter().map(String::as_str).filter(|t| !t.starts_with('#'))
    }

    pub fn word_count(&self) -> usize {
        self.word_tokens().count()
    }
}

/// Lowercase words removed from token streams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StopwordList {
    words: BTreeSet<String>,
}

impl StopwordList {
    /// The embedded standard English list.
    pub fn standard() -> StopwordList {
        StopwordList {
            words: stopwords::ENGLISH.iter().map(|w| w.to_string()).collect(),
        }
    }

    /// Builds a list from arbitrary words, lowercasing them.
    pub fn from_words<I, S>(words: I) -> Result<StopwordList, PreprocessError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let words: BTreeSet<String> = words
            .into_iter()
            .map(|w| w.as_ref().trim().to_lowercase())
            .filter(|w| !w.is_empty())
            .collect();
        if words.is_empty() {
            return Err(PreprocessError::EmptyStopwordList);
        }
        Ok(StopwordList { words })
    }

    /// Reads an override file: one word per line, `#`-prefixed comment lines
    /// and blank lines ignored.
    pub fn from_reader<R: BufRead>(reader: R) -> Result<StopwordList, PreprocessError> {
        let mut words = Vec::new();
        for line in reader.lines() {
            let line = line.map_err(PreprocessError::Io)?;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            words.push(trimmed.to_string());
        }
        StopwordList::from_words(words)
    }

    pub fn contains(&self, word: &str) -> bool {
        self.words.contains(word)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

impl Default for StopwordList {
    fn default() -> Self {
        StopwordList::standard()
    }
}

/// True when the text starts with the token `rt` (any case) followed by an
/// @-mention. Such tweets are dropped from corpora during ingestion.
pub fn is_retweet(raw: &RawTweet) -> bool {
    let mut chunks = raw.text.split_whitespace();
    match (chunks.next(), chunks.next()) {
        (Some(first), Some(second)) => first.eq_ignore_ascii_case("rt") && second.starts_with('@'),
        _ => false,
    }
}

fn is_token_char(c: char) -> bool {
    c.is_alphanumeric() || c == '#'
}

/// Normalizes raw tweet text into a [`CleanTweet`].
///
/// Per whitespace chunk: leading punctuation is trimmed, URL chunks
/// (`http://`, `https://`, `www.`) and mention chunks (`@...`) are dropped,
/// and the rest is split on every character that is neither alphanumeric nor
/// `#` (so `txt/call` yields two tokens). Pieces are lowercased; non-hashtag
/// pieces matching the stopword list are dropped; finally consecutive
/// duplicate tokens are collapsed to one. Hashtag pieces are recorded in the
/// hashtag set with their original spelling kept for display.
pub fn normalize(raw: &RawTweet, stopwords: &StopwordList) -> CleanTweet {
    let mut tokens: Vec<String> = Vec::new();
    let mut hashtags: BTreeSet<Label> = BTreeSet::new();

    let skip_marker = is_retweet(raw);
    for (i, chunk) in raw.text.split_whitespace().enumerate() {
        if i == 0 && skip_marker {
            continue;
        }
        // Keep '@' here so "(@user" is still recognized as a mention.
        let trimmed = chunk.trim_start_matches(|c: char| !(is_token_char(c) || c == '@'));
        if trimmed.starts_with('@') {
            continue;
        }
        let lower = trimmed.to_lowercase();
        if lower.starts_with("http://") || lower.starts_with("https://") || lower.starts_with("www.") {
            continue;
        }
        for piece in trimmed.split(|c: char| !is_token_char(c)) {
            if piece.is_empty() {
                continue;
            }
            let lower_piece = piece.to_lowercase();
            // Lowercasing can introduce separator characters (combining
            // marks), so split once more to keep normalization idempotent.
            for sub in lower_piece.split(|c: char| !is_token_char(c)) {
                if sub.is_empty() || sub.chars().all(|c| c == '#') {
                    continue;
                }
                if sub.starts_with('#') {
                    let display = if sub == lower_piece { piece } else { sub };
                    if let Ok(label) = Label::parse(display) {
                        hashtags.insert(label);
                    }
                    tokens.push(sub.to_string());
                } else {
                    if stopwords.contains(sub) {
                        continue;
                    }
                    tokens.push(sub.to_string());
                }
            }
        }
    }
    tokens.dedup();

    CleanTweet {
        id: raw.id.clone(),
        user: raw.user.clone(),
        timestamp: raw.timestamp,
        tokens,
        hashtags,
    }
}

/// Corpus eligibility: which tweets carry enough signal to keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EligibilityPolicy {
    /// Minimum number of words after normalization.
    pub min_words: usize,
    /// When true, hashtag tokens count toward `min_words`.
    pub count_hashtag_tokens: bool,
}

impl Default for EligibilityPolicy {
    fn default() -> Self {
        EligibilityPolicy {
            min_words: 3,
            count_hashtag_tokens: false,
        }
    }
}

impl EligibilityPolicy {
    pub fn is_eligible(&self, tweet: &CleanTweet) -> bool {
        if tweet.hashtags.is_empty() {
            return false;
        }
        let words = if self.count_hashtag_tokens {
            tweet.tokens.len()
        } else {
            tweet.word_count()
        };
        words >= self.min_words
    }
}

/// Default eligibility: at least one hashtag and at least three words
/// (hashtag tokens not counted as words).
pub fn is_eligible(tweet: &CleanTweet) -> bool {
    EligibilityPolicy::default().is_eligible(tweet)
}

/// Hashtags-per-tweet statistics of an eligible corpus.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorpusStats {
    pub tweet_count: usize,
    pub max_hashtags: usize,
    pub min_hashtags: usize,
    pub mean_hashtags: f64,
}

pub fn corpus_stats(tweets: &[CleanTweet]) -> Result<CorpusStats, PreprocessError> {
    if tweets.is_empty() {
        return Err(PreprocessError::EmptyCorpus);
    }
    debug_assert!(tweets.iter().all(|t| !t.hashtags.is_empty()));
    let mut min = usize::MAX;
    let mut max = 0usize;
    let mut total = 0usize;
    for tweet in tweets {
        let n = tweet.hashtags.len();
        min = min.min(n);
        max = max.max(n);
        total += n;
    }
    Ok(CorpusStats {
        tweet_count: tweets.len(),
        max_hashtags: max,
        min_hashtags: min,
        mean_hashtags: total as f64 / tweets.len() as f64,
    })
}

#[derive(Debug)]
pub enum PreprocessError {
    EmptyCorpus,
    EmptyStopwordList,
    Io(std::io::Error),
}

impl fmt::Display for PreprocessError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PreprocessError::EmptyCorpus => f.write_str("corpus is empty"),
            PreprocessError::EmptyStopwordList => f.write_str("stopword list is empty"),
            PreprocessError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl Error for PreprocessError {
    fn source(&self) -> Option<&(dyn Error + 'static)> {
        match self {
            PreprocessError::Io(e) => Some(e),
            _ => None,
        }
    }
}
