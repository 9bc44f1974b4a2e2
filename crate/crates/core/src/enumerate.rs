//! Paths realizing an anagram pair.
//!
//! When a letter repeats, each occurrence in the second word can be drawn from
//! any unused occurrence in the first word, so a pair has `prod(w_r!)` paths
//! where `w_r` is the multiplicity of letter `r`. Paths are produced in
//! lexicographic order: the second word is scanned left to right and each
//! letter takes the lowest free position first.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::path::Path;
use crate::word::{is_upper_word, letter_counts, normalize_word};

/// An ordered pair of words with identical letter multisets.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AnagramPair {
    first: String,
    second: String,
}

impl AnagramPair {
    /// Both words must already be uppercase A-Z.
    pub fn new(first: impl Into<String>, second: impl Into<String>) -> Result<Self> {
        let (first, second) = (first.into(), second.into());
        for word in [&first, &second] {
            if !is_upper_word(word) {
                return Err(Error::InvalidWord { word: word.clone() });
            }
        }
        if first.len() != second.len() || letter_counts(&first) != letter_counts(&second) {
            return Err(Error::NotAnAnagram { first, second });
        }
        Ok(AnagramPair { first, second })
    }

    /// Normalizes both words the same way a word list is normalized, then validates.
    pub fn parse(first: &str, second: &str) -> Result<Self> {
        let norm = |w: &str| {
            normalize_word(w).ok_or_else(|| Error::InvalidWord {
                word: w.to_string(),
            })
        };
        AnagramPair::new(norm(first)?, norm(second)?)
    }

    pub fn first(&self) -> &str {
        &self.first
    }

    pub fn second(&self) -> &str {
        &self.second
    }

    pub fn len(&self) -> usize {
        self.first.len()
    }

    pub fn is_empty(&self) -> bool {
        self.first.is_empty()
    }

    pub fn reversed(&self) -> AnagramPair {
        AnagramPair {
            first: self.second.clone(),
            second: self.first.clone(),
        }
    }

    pub fn is_self_pair(&self) -> bool {
        self.first == self.second
    }
}

impl fmt::Display for AnagramPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.first, self.second)
    }
}

/// All paths of one pair, in enumeration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathSet {
    paths: Vec<Path>,
}

impl PathSet {
    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn count(&self) -> usize {
        self.paths.len()
    }

    pub fn into_paths(self) -> Vec<Path> {
        self.paths
    }
}

impl IntoIterator for PathSet {
    type Item = Path;
    type IntoIter = std::vec::IntoIter<Path>;

    fn into_iter(self) -> Self::IntoIter {
        self.paths.into_iter()
    }
}

/// Number of paths for `word` paired with any of its anagrams.
pub fn count_word_paths(word: &str) -> Result<u64> {
    letter_counts(word)
        .iter()
        .try_fold(1u64, |acc, &w| acc.checked_mul(factorial(w)?))
        .ok_or(Error::PathCountOverflow)
}

fn factorial(k: u32) -> Option<u64> {
    (2..=u64::from(k)).try_fold(1u64, |acc, i| acc.checked_mul(i))
}

pub fn count_paths(pair: &AnagramPair) -> Result<u64> {
    count_word_paths(&pair.first)
}

/// Checks the path count against `cap` without enumerating anything.
pub fn check_cap(pair: &AnagramPair, cap: Option<u64>) -> Result<u64> {
    let count = count_paths(pair)?;
    match cap {
        Some(cap) if count > cap => Err(Error::PathCountExceedsCap { count, cap }),
        _ => Ok(count),
    }
}

/// Calls `visit` with every path's nodes in enumeration order. The slice is
/// reused between calls.
pub fn for_each_path(pair: &AnagramPair, mut visit: impl FnMut(&[usize])) {
    let n = pair.len();
    let mut positions: Vec<Vec<usize>> = vec![Vec::new(); 26];
    for (i, b) in pair.first.bytes().enumerate() {
        positions[(b - b'A') as usize].push(i);
    }
    let targets: Vec<usize> = pair.second.bytes().map(|b| (b - b'A') as usize).collect();
    let mut used = vec![false; n];
    let mut nodes = vec![0; n];
    walk(0, &targets, &positions, &mut used, &mut nodes, &mut visit);
}

fn walk(
    depth: usize,
    targets: &[usize],
    positions: &[Vec<usize>],
    used: &mut [bool],
    nodes: &mut [usize],
    visit: &mut impl FnMut(&[usize]),
) {
    if depth == targets.len() {
        visit(nodes);
        return;
    }
    for &pos in &positions[targets[depth]] {
        if used[pos] {
            continue;
        }
        used[pos] = true;
        nodes[depth] = pos;
        walk(depth + 1, targets, positions, used, nodes, visit);
        used[pos] = false;
    }
}

pub fn enumerate_paths(pair: &AnagramPair, cap: Option<u64>) -> Result<PathSet> {
    let count = check_cap(pair, cap)?;
    let mut paths = Vec::with_capacity(usize::try_from(count).unwrap_or(0));
    for_each_path(pair, |nodes| {
        paths.push(Path::new(nodes.to_vec()).expect("enumerated path"))
    });
    Ok(PathSet { paths })
}

/// The inverse permutation: the path of the reversed pair.
pub fn reverse_path(path: &Path) -> Path {
    let mut inverse = vec![0; path.len()];
    for (n, &p) in path.nodes().iter().enumerate() {
        inverse[p] = n;
    }
    Path::new(inverse).expect("inverse of a permutation")
}

/// Paths of a word onto itself. Words without repeated letters only have the identity.
pub fn autostar_paths(word: &str, cap: u64) -> Result<PathSet> {
    let pair = AnagramPair::new(word, word)?;
    if pair.len() < 5 {
        return Err(Error::WordTooShort { len: pair.len() });
    }
    enumerate_paths(&pair, Some(cap))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(a: &str, b: &str) -> AnagramPair {
        AnagramPair::new(a, b).unwrap()
    }

    #[test]
    fn counts_from_letter_multiplicities() {
        assert_eq!(count_paths(&pair("CAREERS", "CREASER")).unwrap(), 4);
        assert_eq!(count_paths(&pair("EARTH", "HATER")).unwrap(), 1);
        let long = "SUPERCALIFRAGILISTICEXPIALIDOCIOUS";
        assert_eq!(count_paths(&pair(long, long)).unwrap(), 209_018_880);
    }

    #[test]
    fn overflow_is_reported() {
        let word = "A".repeat(21);
        assert!(matches!(
            count_word_paths(&word),
            Err(Error::PathCountOverflow)
        ));
        assert_eq!(
            count_word_paths(&"A".repeat(20)).unwrap(),
            2_432_902_008_176_640_000
        );
    }

    #[test]
    fn rejects_non_anagrams() {
        assert!(matches!(
            AnagramPair::new("EARTH", "MOON"),
            Err(Error::NotAnAnagram { .. })
        ));
        assert!(matches!(
            AnagramPair::new("EARTH", "HEARS"),
            Err(Error::NotAnAnagram { .. })
        ));
        assert!(matches!(
            AnagramPair::new("earth", "HATER"),
            Err(Error::InvalidWord { .. })
        ));
        assert_eq!(
            AnagramPair::parse("earth", " Hater ").unwrap(),
            pair("EARTH", "HATER")
        );
    }

    #[test]
    fn earth_hater_has_one_path() {
        let set = enumerate_paths(&pair("EARTH", "HATER"), None).unwrap();
        assert_eq!(set.paths(), &[Path::new(vec![4, 1, 3, 0, 2]).unwrap()]);
    }

    #[test]
    fn careers_creaser_order_is_lexicographic() {
        let set = enumerate_paths(&pair("CAREERS", "CREASER"), None).unwrap();
        let nodes: Vec<Vec<usize>> = set.paths().iter().map(|p| p.nodes().to_vec()).collect();
        assert_eq!(
            nodes,
            vec![
                vec![0, 2, 3, 1, 6, 4, 5],
                vec![0, 2, 4, 1, 6, 3, 5],
                vec![0, 5, 3, 1, 6, 4, 2],
                vec![0, 5, 4, 1, 6, 3, 2],
            ]
        );
    }

    #[test]
    fn cap_is_checked_before_enumeration() {
        // 3 A's and 2 N's: 3! * 2! = 12 paths
        let banana = pair("BANANA", "BANANA");
        assert!(matches!(
            enumerate_paths(&banana, Some(10)),
            Err(Error::PathCountExceedsCap { count: 12, cap: 10 })
        ));
        assert_eq!(enumerate_paths(&banana, Some(12)).unwrap().count(), 12);
        let long = "SUPERCALIFRAGILISTICEXPIALIDOCIOUS";
        assert!(matches!(
            autostar_paths(long, 3_000_000),
            Err(Error::PathCountExceedsCap {
                count: 209_018_880,
                ..
            })
        ));
    }

    #[test]
    fn reverse_path_examples() {
        let p = Path::new(vec![4, 1, 3, 0, 2]).unwrap();
        assert_eq!(reverse_path(&p).nodes(), &[3, 1, 4, 2, 0]);
        let id = Path::identity(6).unwrap();
        assert_eq!(reverse_path(&id), id);
        let threads = Path::new(vec![0, 4, 1, 5, 2, 6, 3]).unwrap();
        let rev = reverse_path(&threads);
        assert_eq!(rev.nodes(), &[0, 2, 4, 6, 1, 3, 5]);
        assert!(rev.steps().as_slice().iter().all(|&s| s == 2));
    }

    #[test]
    fn distinct_letter_autostar_is_identity_only() {
        let set = autostar_paths("HATER", 10).unwrap();
        assert_eq!(set.paths(), &[Path::identity(5).unwrap()]);
        assert!(matches!(
            autostar_paths("TOOT", 10),
            Err(Error::WordTooShort { len: 4 })
        ));
    }
}
