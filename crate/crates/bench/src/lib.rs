//! Synthetic workloads for the pipeline benchmarks.

use tagkit_core::{normalize, CleanTweet, EmbeddingTable, RawTweet, StopwordList};

/// SplitMix64; keeps benchmark inputs stable across dependency bumps.
pub struct Rng(pub u64);

impl Rng {
    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }
}

/// A clustered synthetic corpus of already-normalized tweets.
pub fn corpus(seed: u64, size: usize) -> Vec<CleanTweet> {
    let vocab: Vec<String> = (0..120).map(|i| format!("word{i:03}")).collect();
    let tags: Vec<String> = (0..40).map(|i| format!("#tag{i:02}")).collect();
    let stopwords = StopwordList::standard();
    let mut rng = Rng(seed);
    (0..size)
        .map(|i| {
            let cluster = rng.below(8);
            let mut words = Vec::new();
            for _ in 0..(4 + rng.below(6)) {
                words.push(vocab[(cluster * 15 + rng.below(15)) % vocab.len()].clone());
            }
            for _ in 0..(1 + rng.below(3)) {
                words.push(tags[(cluster * 5 + rng.below(5)) % tags.len()].clone());
            }
            normalize(
                &RawTweet {
                    id: format!("t{i:05}"),
                    user: format!("u{}", i % 23),
                    timestamp: i as i64,
                    text: words.join(" "),
                },
                &stopwords,
            )
        })
        .filter(tagkit_core::is_eligible)
        .collect()
}

/// Random word embeddings covering the benchmark vocabulary.
pub fn embeddings(seed: u64, dimension: usize) -> EmbeddingTable {
    let mut rng = Rng(seed);
    let entries: Vec<(String, Vec<f64>)> = (0..120)
        .map(|i| {
            let vector: Vec<f64> = (0..dimension)
                .map(|_| rng.below(2048) as f64 / 1024.0 - 1.0)
                .collect();
            (format!("word{i:03}"), vector)
        })
        .collect();
    EmbeddingTable::from_entries(dimension, entries).unwrap()
}
