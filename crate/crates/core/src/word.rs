use unicode_normalization::char::is_combining_mark;
use unicode_normalization::UnicodeNormalization;

/// Normalizes a raw word: trims, folds accents to their base letters and
/// uppercases. Returns `None` unless the result is a non-empty run of A-Z.
pub fn normalize_word(raw: &str) -> Option<String> {
    let folded: String = raw
        .trim()
        .nfd()
        .filter(|&c| !is_combining_mark(c))
        .collect();
    if folded.is_empty() || !folded.bytes().all(|b| b.is_ascii_alphabetic()) {
        return None;
    }
    Some(folded.to_ascii_uppercase())
}

pub(crate) fn is_upper_word(word: &str) -> bool {
    !word.is_empty() && word.bytes().all(|b| b.is_ascii_uppercase())
}

/// Letter multiplicities of an uppercase word.
pub(crate) fn letter_counts(word: &str) -> [u32; 26] {
    let mut counts = [0; 26];
    for b in word.bytes() {
        counts[(b - b'A') as usize] += 1;
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn folds_accents_and_case() {
        assert_eq!(normalize_word("café").as_deref(), Some("CAFE"));
        assert_eq!(normalize_word("  Naïve\r").as_deref(), Some("NAIVE"));
        assert_eq!(normalize_word("Ångström").as_deref(), Some("ANGSTROM"));
    }

    #[test]
    fn drops_non_alphabetic_words() {
        assert_eq!(normalize_word("don't"), None);
        assert_eq!(normalize_word("x-ray"), None);
        assert_eq!(normalize_word("r2d2"), None);
        assert_eq!(normalize_word(""), None);
        assert_eq!(normalize_word("straße"), None);
    }
}
