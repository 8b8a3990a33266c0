//! Property tests for text normalization.

use proptest::prelude::*;
use tagkit_core::{is_eligible, normalize, RawTweet, StopwordList};

fn raw(text: String) -> RawTweet {
    RawTweet {
        id: "t".into(),
        user: "u".into(),
        timestamp: 0,
        text,
    }
}

/// Fragments covering the interesting normalization paths.
fn fragment() -> impl Strategy<Value = String> {
    prop_oneof![
        "[a-zA-Z]{1,8}",
        "#[a-zA-Z0-9]{1,6}",
        "@[a-zA-Z0-9]{1,6}",
        Just("RT".to_string()),
        Just("http://ex.am/ple".to_string()),
        Just("https://EX.am".to_string()),
        Just("www.site.org".to_string()),
        Just("the".to_string()),
        Just("of".to_string()),
        Just("txt/call".to_string()),
        Just("(wow!)".to_string()),
        Just("...".to_string()),
        Just("##".to_string()),
        Just("İstanbul".to_string()),
        Just("ÅNGSTRÖM".to_string()),
    ]
}

fn text() -> impl Strategy<Value = String> {
    prop::collection::vec(fragment(), 0..12).prop_map(|frags| frags.join(" "))
}

proptest! {
    #[test]
    fn normalize_is_idempotent_at_token_level(text in text()) {
        let stopwords = StopwordList::standard();
        let once = normalize(&raw(text), &stopwords);
        let again = normalize(&raw(once.tokens.join(" ")), &stopwords);
        prop_assert_eq!(&once.tokens, &again.tokens);
        prop_assert_eq!(&once.hashtags, &again.hashtags);
    }

    #[test]
    fn no_removed_pattern_survives(text in text()) {
        let stopwords = StopwordList::standard();
        let clean = normalize(&raw(text), &stopwords);
        for token in &clean.tokens {
            prop_assert!(!token.is_empty());
            prop_assert!(!token.chars().any(char::is_whitespace));
            prop_assert!(!token.contains('@'));
            prop_assert!(!token.starts_with("http://"));
            prop_assert!(!token.starts_with("https://"));
            prop_assert!(!token.starts_with("www."));
            prop_assert!(token.chars().all(|c| c.is_alphanumeric() || c == '#'));
            let lowered = token.to_lowercase();
            prop_assert_eq!(token.as_str(), lowered.as_str());
            if !token.starts_with('#') {
                prop_assert!(!stopwords.contains(token));
            }
        }
        // Hashtag labels come from '#'-prefixed tokens.
        for label in &clean.hashtags {
            prop_assert!(clean
                .tokens
                .iter()
                .any(|t| t.strip_prefix('#') == Some(label.canonical())
                    || t.trim_start_matches('#') == label.canonical().trim_start_matches('#')));
        }
    }

    #[test]
    fn eligibility_implies_hashtag(text in text()) {
        let clean = normalize(&raw(text), &StopwordList::standard());
        if is_eligible(&clean) {
            prop_assert!(!clean.hashtags.is_empty());
            prop_assert!(clean.word_count() >= 3);
        }
    }

    #[test]
    fn token_count_bounded_by_piece_count(text in text()) {
        let clean = normalize(&raw(text.clone()), &StopwordList::standard());
        // Upper bound: pieces of the lowercased text split on whitespace and
        // then on non-token characters. Normalization only removes or merges.
        let pieces = text
            .to_lowercase()
            .split_whitespace()
            .flat_map(|chunk| chunk.split(|c: char| !(c.is_alphanumeric() || c == '#')))
            .filter(|p| !p.is_empty())
            .count();
        prop_assert!(clean.tokens.len() <= pieces);
    }

    #[test]
    fn arbitrary_unicode_never_panics(text in "\\PC{0,80}") {
        let clean = normalize(&raw(text), &StopwordList::standard());
        let again = normalize(&raw(clean.tokens.join(" ")), &StopwordList::standard());
        prop_assert_eq!(&clean.tokens, &again.tokens);
    }
}
