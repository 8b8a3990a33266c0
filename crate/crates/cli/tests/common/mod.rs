//! Shared test support: a dependency-free deterministic generator, the
//! synthetic desk corpus, and a straight-line brute-force recommender used
//! as the independent oracle.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use tagkit_core::{CleanTweet, EmbeddingTable, Ranking, VectorizerKind};

/// SplitMix64. Hand-rolled so generated fixtures never drift with
/// dependency upgrades.
pub struct Rng(pub u64);

impl Rng {
    pub fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, bound: usize) -> usize {
        (self.next() % bound as u64) as usize
    }
}

const TOPICS: [(&str, [&str; 8], [&str; 6]); 5] = [
    (
        "art",
        ["acrylic", "canvas", "gallery", "painting", "palette", "sketch", "brush", "abstract"],
        ["#art", "#acrylic", "#painting", "#gallery", "#sketch", "#creative"],
    ),
    (
        "food",
        ["recipe", "dinner", "roasted", "garlic", "pasta", "dessert", "baking", "flavors"],
        ["#food", "#recipe", "#dinner", "#baking", "#yum", "#homemade"],
    ),
    (
        "fitness",
        ["workout", "running", "marathon", "training", "stretch", "cardio", "strength", "miles"],
        ["#fitness", "#running", "#workout", "#marathon", "#health", "#training"],
    ),
    (
        "tech",
        ["startup", "coding", "release", "database", "server", "mobile", "cloud", "deploy"],
        ["#tech", "#startup", "#coding", "#cloud", "#mobile", "#dev"],
    ),
    (
        "travel",
        ["beach", "mountains", "itinerary", "passport", "sunset", "island", "hiking", "journey"],
        ["#travel", "#beach", "#hiking", "#sunset", "#island", "#wander"],
    ),
];

/// The synthetic desk corpus: 60 tweets over five crisp topic clusters,
/// round-robin timestamps so the chronological test split mixes topics.
pub fn desk_corpus_jsonl() -> String {
    let mut rng = Rng(42);
    let mut lines = String::new();
    for i in 0..60usize {
        let (_, words, tags) = TOPICS[i % TOPICS.len()];
        let target = 4 + rng.below(3);
        let mut text_words: Vec<&str> = Vec::new();
        while text_words.len() < target {
            let word = words[rng.below(words.len())];
            if !text_words.contains(&word) {
                text_words.push(word);
            }
        }
        let mut chosen = BTreeSet::new();
        let tag_count = 1 + rng.below(3);
        while chosen.len() < tag_count {
            chosen.insert(tags[rng.below(tags.len())]);
        }
        // A couple of stopwords so normalization has work to do.
        let text = format!("the {} of {}", text_words.join(" "), chosen.iter().cloned().collect::<Vec<_>>().join(" "));
        lines.push_str(&format!(
            "{{\"id\":\"d{i:03}\",\"user\":\"u{}\",\"timestamp\":{},\"text\":\"{}\"}}\n",
            i % 7,
            1000 + i,
            text,
        ));
    }
    lines
}

/// Embeddings aligned with the desk corpus topics: one basis direction per
/// topic plus a small per-word offset, so same-topic tweets are similar.
pub fn desk_embeddings_text() -> String {
    let mut rng = Rng(77);
    let mut rows = Vec::new();
    for (t, (_, words, _)) in TOPICS.iter().enumerate() {
        for word in words {
            let mut vector = [0.0f64; 8];
            vector[t] = 1.0;
            for v in vector.iter_mut() {
                *v += (rng.below(128) as f64) / 1024.0;
            }
            let cells: Vec<String> = vector.iter().map(|v| format!("{v:.10}")).collect();
            rows.push(format!("{word} {}", cells.join(" ")));
        }
    }
    format!("{} 8\n{}\n", rows.len(), rows.join("\n"))
}

/// Synthetic already-normalized corpora for oracle runs.
pub fn synth_corpus(seed: u64, size: usize) -> Vec<CleanTweet> {
    use tagkit_core::{normalize, RawTweet, StopwordList};
    let vocab: Vec<String> = (0..40).map(|i| format!("w{i:02}")).collect();
    let tags: Vec<String> = (0..15).map(|i| format!("#t{i:02}")).collect();
    let stopwords = StopwordList::standard();
    let mut rng = Rng(seed);
    (0..size)
        .map(|i| {
            let cluster = rng.below(5);
            let mut words = Vec::new();
            for _ in 0..(3 + rng.below(5)) {
                words.push(vocab[(cluster * 8 + rng.below(8)) % vocab.len()].clone());
            }
            for _ in 0..(1 + rng.below(3)) {
                words.push(tags[(cluster * 3 + rng.below(3)) % tags.len()].clone());
            }
            normalize(
                &RawTweet {
                    id: format!("t{i:04}"),
                    user: format!("u{}", i % 7),
                    timestamp: i as i64,
                    text: words.join(" "),
                },
                &stopwords,
            )
        })
        .filter(tagkit_core::is_eligible)
        .collect()
}

pub fn synth_embeddings(seed: u64) -> EmbeddingTable {
    let mut rng = Rng(seed);
    let entries: Vec<(String, Vec<f64>)> = (0..40)
        .map(|i| {
            let vector: Vec<f64> = (0..8).map(|_| rng.below(1024) as f64 / 512.0 - 1.0).collect();
            (format!("w{i:02}"), vector)
        })
        .collect();
    EmbeddingTable::from_entries(8, entries).unwrap()
}

/// The independent brute-force recommender. Reimplements the whole pipeline
/// in straight-line code: its own document frequencies, idf weights, dense
/// vectors, cosine, retrieval order, candidate scoring and truncation. It
/// shares only input data types with the library.
pub struct Oracle<'a> {
    repo: &'a [CleanTweet],
    backend: OracleBackend<'a>,
}

enum OracleBackend<'a> {
    TfIdf { vocab: Vec<String>, idf: Vec<f64> },
    Mowe { table: &'a EmbeddingTable },
}

impl<'a> Oracle<'a> {
    pub fn tfidf(repo: &'a [CleanTweet]) -> Oracle<'a> {
        // Vocabulary in lexicographic order over non-hashtag tokens.
        let mut vocab_set = BTreeSet::new();
        for tweet in repo {
            for token in &tweet.tokens {
                if !token.starts_with('#') {
                    vocab_set.insert(token.clone());
                }
            }
        }
        let vocab: Vec<String> = vocab_set.into_iter().collect();
        let n = repo.len() as f64;
        let mut idf = Vec::with_capacity(vocab.len());
        for word in &vocab {
            let df = repo
                .iter()
                .filter(|t| t.tokens.iter().any(|tok| tok == word))
                .count() as f64;
            idf.push(((1.0 + n) / (1.0 + df)).ln() + 1.0);
        }
        Oracle {
            repo,
            backend: OracleBackend::TfIdf { vocab, idf },
        }
    }

    pub fn mowe(repo: &'a [CleanTweet], table: &'a EmbeddingTable) -> Oracle<'a> {
        Oracle {
            repo,
            backend: OracleBackend::Mowe { table },
        }
    }

    fn vector(&self, tweet: &CleanTweet) -> Vec<f64> {
        match &self.backend {
            OracleBackend::TfIdf { vocab, idf } => {
                let mut values = vec![0.0f64; vocab.len()];
                for (col, word) in vocab.iter().enumerate() {
                    let count = tweet
                        .tokens
                        .iter()
                        .filter(|tok| !tok.starts_with('#') && *tok == word)
                        .count();
                    if count > 0 {
                        values[col] = count as f64 * idf[col];
                    }
                }
                values
            }
            OracleBackend::Mowe { table } => {
                let mut matched: Vec<&str> = tweet
                    .tokens
                    .iter()
                    .map(String::as_str)
                    .filter(|tok| !tok.starts_with('#') && table.get(tok).is_some())
                    .collect();
                matched.sort_unstable();
                let mut sum = vec![0.0f64; table.dimension()];
                if matched.is_empty() {
                    return sum;
                }
                for word in &matched {
                    let vector = table.get(word).unwrap();
                    for d in 0..sum.len() {
                        sum[d] += vector[d];
                    }
                }
                for v in &mut sum {
                    *v /= matched.len() as f64;
                }
                sum
            }
        }
    }

    fn cosine(a: &[f64], b: &[f64]) -> f64 {
        let mut norm_a = 0.0f64;
        for v in a {
            norm_a += v * v;
        }
        let norm_a = norm_a.sqrt();
        let mut norm_b = 0.0f64;
        for v in b {
            norm_b += v * v;
        }
        let norm_b = norm_b.sqrt();
        if norm_a == 0.0 || norm_b == 0.0 {
            return 0.0;
        }
        let mut dot = 0.0f64;
        for i in 0..a.len() {
            dot += a[i] * b[i];
        }
        let sim = (dot / (norm_a * norm_b)).clamp(-1.0, 1.0);
        if sim == 0.0 {
            0.0
        } else {
            sim
        }
    }

    pub fn recommend(&self, query: &CleanTweet, threshold: f64, k: usize, ranking: Ranking) -> Vec<String> {
        let query_vector = self.vector(query);
        let mut hits: Vec<(usize, f64)> = Vec::new();
        for (index, tweet) in self.repo.iter().enumerate() {
            let sim = Oracle::cosine(&self.vector(tweet), &query_vector);
            if sim >= threshold {
                hits.push((index, sim));
            }
        }
        hits.sort_by(|a, b| {
            b.1.total_cmp(&a.1)
                .then_with(|| self.repo[a.0].id.cmp(&self.repo[b.0].id))
        });

        let mut scores: BTreeMap<String, f64> = BTreeMap::new();
        for (index, sim) in &hits {
            for label in &self.repo[*index].hashtags {
                let entry = scores.entry(label.canonical().to_string()).or_insert(0.0);
                match ranking {
                    Ranking::Popularity => *entry += 1.0,
                    Ranking::Relevance => *entry += *sim,
                }
            }
        }
        let mut candidates: Vec<(String, f64)> = scores.into_iter().collect();
        candidates.sort_by(|a, b| b.1.total_cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
        candidates.into_iter().take(k).map(|(label, _)| label).collect()
    }
}

/// The library pipeline's answer in canonical label strings.
pub fn pipeline_recommend(
    repo: &tagkit_core::Repository,
    query: &CleanTweet,
    threshold: f64,
    k: usize,
    ranking: Ranking,
    vectorizer: VectorizerKind,
) -> Vec<String> {
    let config = tagkit_core::RecommenderConfig {
        similarity_threshold: threshold,
        k,
        ranking,
        vectorizer,
    };
    repo.recommend(query, &config)
        .unwrap()
        .iter()
        .map(|l| l.canonical().to_string())
        .collect()
}
