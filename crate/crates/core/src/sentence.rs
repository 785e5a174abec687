//! Rule-based sentence splitting.
//!
//! Context-relevance scores divide by the number of context sentences, so
//! this splitter is the single source of truth for that denominator and is
//! frozen by golden tests. Rules: break on terminal punctuation (`.`, `!`,
//! `?`, plus trailing closers) when followed by whitespace and a
//! sentence-start character; never break after a listed abbreviation, a
//! single-letter initial, or a decimal point.

/// Abbreviations (lowercase, final dot stripped) that do not end a sentence.
/// Multi-dot forms are matched on their last segment-bearing token, e.g.
/// `e.g.` appears here as `e.g`.
const ABBREVIATIONS: &[&str] = &[
    "mr", "mrs", "ms", "dr", "prof", "sr", "jr", "st", "vs", "etc", "fig", "inc", "ltd", "co",
    "al", "dept", "est", "vol", "rev", "gen", "col", "mt", "ave", "approx", "e.g", "i.e", "u.s",
    "u.k", "a.m", "p.m", "ph.d",
];

/// Abbreviations that only bind when followed by a number, e.g. `No. 5`.
const NUMERIC_ABBREVIATIONS: &[&str] = &["no", "p", "pp"];

const CLOSERS: &[char] = &['"', '\'', ')', ']', '\u{201d}', '\u{2019}', '\u{00bb}'];

/// Collapse all whitespace runs to single spaces and trim.
pub fn normalize_ws(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

/// Split text into sentences. Returns trimmed, non-empty sentences in
/// document order; text without any terminal punctuation is one sentence.
pub fn split_sentences(text: &str) -> Vec<String> {
    let chars: Vec<char> = text.chars().collect();
    let mut sentences = Vec::new();
    let mut start = 0usize;

    let mut i = 0usize;
    while i < chars.len() {
        let c = chars[i];
        if c == '.' || c == '!' || c == '?' {
            // Absorb closing quotes/brackets after the terminal mark.
            let mut end = i + 1;
            while end < chars.len() && CLOSERS.contains(&chars[end]) {
                end += 1;
            }
            if is_break(&chars, i, end) {
                let sentence: String = chars[start..end].iter().collect();
                let sentence = sentence.trim();
                if !sentence.is_empty() {
                    sentences.push(sentence.to_string());
                }
                start = end;
            }
            i = end;
        } else {
            i += 1;
        }
    }

    let tail: String = chars[start..].iter().collect();
    let tail = tail.trim();
    if !tail.is_empty() {
        sentences.push(tail.to_string());
    }
    sentences
}

/// Number of sentences the splitter finds, the denominator for
/// context-relevance scoring.
pub fn count_sentences(text: &str) -> u64 {
    split_sentences(text).len() as u64
}

/// Decide whether the terminal mark at `mark` (closers absorbed up to
/// `end`) ends a sentence.
fn is_break(chars: &[char], mark: usize, end: usize) -> bool {
    // Find the first non-whitespace character after the mark.
    let mut j = end;
    let mut saw_ws = false;
    while j < chars.len() && chars[j].is_whitespace() {
        saw_ws = true;
        j += 1;
    }
    let at_end = j >= chars.len();

    if !at_end {
        // "word.Word" without whitespace is left intact.
        if !saw_ws {
            return false;
        }
        // A lowercase continuation means the mark was mid-sentence.
        if chars[j].is_lowercase() {
            return false;
        }
    }

    if chars[mark] != '.' {
        return true;
    }

    // Decimal point.
    if mark > 0
        && mark + 1 < chars.len()
        && chars[mark - 1].is_ascii_digit()
        && chars[mark + 1].is_ascii_digit()
    {
        return false;
    }

    let token = token_before(chars, mark);
    if token.chars().count() == 1 && token.chars().all(|c| c.is_alphabetic()) {
        // Single-letter initial, e.g. "J. Robert Oppenheimer".
        return false;
    }
    let lowered = token.to_lowercase();
    if ABBREVIATIONS.contains(&lowered.as_str()) {
        return false;
    }
    if NUMERIC_ABBREVIATIONS.contains(&lowered.as_str()) && !at_end && chars[j].is_ascii_digit() {
        return false;
    }
    true
}

/// The word immediately before position `mark`, with leading punctuation
/// stripped (dots kept so multi-dot abbreviations stay matchable).
fn token_before(chars: &[char], mark: usize) -> String {
    let mut begin = mark;
    while begin > 0 && !chars[begin - 1].is_whitespace() {
        begin -= 1;
    }
    let raw: String = chars[begin..mark].iter().collect();
    raw.trim_start_matches(|c: char| !c.is_alphanumeric())
        .to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_sentences() {
        let s = split_sentences("First sentence. Second sentence. Third!");
        assert_eq!(s, vec!["First sentence.", "Second sentence.", "Third!"]);
    }

    #[test]
    fn no_terminal_punctuation_is_one_sentence() {
        assert_eq!(split_sentences("a fragment"), vec!["a fragment"]);
    }

    #[test]
    fn empty_input_has_no_sentences() {
        assert!(split_sentences("   ").is_empty());
        assert_eq!(count_sentences(""), 0);
    }

    #[test]
    fn initials_do_not_break() {
        let s = split_sentences("The film chronicles the life of J. Robert Oppenheimer. It won.");
        assert_eq!(s.len(), 2);
        assert!(s[0].ends_with("Oppenheimer."));
    }

    #[test]
    fn abbreviations_do_not_break() {
        let s = split_sentences("Dr. Smith arrived at 3 p.m. on Monday. He left at once.");
        assert_eq!(s.len(), 2);
    }

    #[test]
    fn decimals_do_not_break() {
        let s = split_sentences("It cost 9.2 million in 2023. A large sum.");
        assert_eq!(s.len(), 2);
    }

    #[test]
    fn numeric_abbreviation_binds_to_number() {
        assert_eq!(count_sentences("See No. 5 for details. It helps."), 2);
    }

    #[test]
    fn missing_space_does_not_break() {
        let s = split_sentences("The date has not been provided.The mission is important.");
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn question_and_exclamation_break() {
        let s = split_sentences("Who directed it? Nolan did! Everyone agrees.");
        assert_eq!(s.len(), 3);
    }

    #[test]
    fn closing_quote_is_kept_with_sentence() {
        let s = split_sentences("She said \"stop.\" Then she left.");
        assert_eq!(s, vec!["She said \"stop.\"", "Then she left."]);
    }

    #[test]
    fn quoted_question_mid_sentence_does_not_break() {
        let s = split_sentences("\"Really?\" he asked. Nobody answered.");
        assert_eq!(s.len(), 2);
    }

    #[test]
    fn normalize_collapses_whitespace() {
        assert_eq!(normalize_ws("  a\t b\n\nc "), "a b c");
    }
}
