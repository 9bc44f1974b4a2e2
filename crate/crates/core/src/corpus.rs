//! Word-list scanning: anagram discovery, star census, clustering, autostars
//! and report persistence.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::io::{Read, Write};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::classify::{classify_anagram, judge, Classification, Selector, StarClass, MIN_STAR_LEN};
use crate::enumerate::{check_cap, for_each_path, reverse_path, AnagramPair};
use crate::error::{Error, Result};
use crate::numtheory::modular_inverse;
use crate::path::{EdgeMatrix, Path};
use crate::word::normalize_word;

/// Path cap used when searching for autostars.
pub const DEFAULT_CAP: u64 = 3_000_000;

/// A normalized, deduplicated set of words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordList {
    words: BTreeSet<String>,
    source: Option<String>,
}

impl WordList {
    /// Normalizes each entry, silently dropping those that are not plain words.
    pub fn from_words<I, S>(words: I, source: Option<String>) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let words: BTreeSet<String> = words
            .into_iter()
            .filter_map(|w| normalize_word(w.as_ref()))
            .collect();
        if words.is_empty() {
            return Err(Error::EmptyWordList);
        }
        Ok(WordList { words, source })
    }

    pub fn words(&self) -> &BTreeSet<String> {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn source(&self) -> Option<&str> {
        self.source.as_deref()
    }
}

/// Reads one word per line. `\n`, `\r\n` and bare `\r` all end a line.
pub fn load_wordlist<R: Read>(mut reader: R, source: Option<String>) -> Result<WordList> {
    let mut bytes = Vec::new();
    reader.read_to_end(&mut bytes)?;
    let text = String::from_utf8_lossy(&bytes);
    WordList::from_words(text.split(['\n', '\r']), source)
}

pub fn load_wordlist_file(path: impl AsRef<std::path::Path>) -> Result<WordList> {
    let path = path.as_ref();
    let file = std::fs::File::open(path)?;
    load_wordlist(file, Some(path.display().to_string()))
}

/// All ordered anagram pairs, sorted by first word then second.
pub fn find_anagrams(list: &WordList) -> Vec<AnagramPair> {
    let mut groups: BTreeMap<Vec<u8>, Vec<&str>> = BTreeMap::new();
    for word in &list.words {
        let mut key = word.as_bytes().to_vec();
        key.sort_unstable();
        groups.entry(key).or_default().push(word);
    }
    let mut pairs: Vec<AnagramPair> = groups
        .values()
        .filter(|g| g.len() > 1)
        .flat_map(|group| {
            group.iter().flat_map(move |&a| {
                group
                    .iter()
                    .filter(move |&&b| b != a)
                    .map(move |&b| AnagramPair::new(a, b).expect("same letters"))
            })
        })
        .collect();
    pairs.sort();
    pairs
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanConfig {
    /// Pairs and autostar words with more paths than this are skipped and recorded.
    pub cap: u64,
    /// Worker threads; `None` uses every core.
    pub jobs: Option<usize>,
    pub autostars: bool,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            cap: DEFAULT_CAP,
            jobs: None,
            autostars: true,
        }
    }
}

/// One star anagram with its selected path.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarRecord {
    pub first: String,
    pub second: String,
    pub path: Path,
    pub steps: Vec<i32>,
    pub o_rot: u32,
    pub o_ref: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub perfect_step: Option<i32>,
}

impl StarRecord {
    fn new(pair: &AnagramPair, c: &Classification) -> Self {
        let sym = c.symmetry.expect("stars carry symmetry orders");
        StarRecord {
            first: pair.first().to_string(),
            second: pair.second().to_string(),
            path: c.path.clone(),
            steps: c.path.steps().into_vec(),
            o_rot: sym.rotational,
            o_ref: sym.reflective,
            perfect_step: c.perfect_step,
        }
    }

    pub fn pair(&self) -> Result<AnagramPair> {
        AnagramPair::new(self.first.as_str(), self.second.as_str())
    }

    pub fn edge_length(&self) -> Option<u32> {
        self.perfect_step.map(i32::unsigned_abs)
    }
}

/// Stars whose polygons coincide up to rotation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarCluster {
    pub key: EdgeMatrix,
    pub members: Vec<StarRecord>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassBucket {
    pub count: usize,
    pub clusters: Vec<StarCluster>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LengthSummary {
    pub len: usize,
    pub anagrams: usize,
    pub non_stars: usize,
    pub excluded: usize,
    pub asymmetric: ClassBucket,
    pub symmetric: ClassBucket,
    pub perfect: ClassBucket,
}

impl LengthSummary {
    fn empty(len: usize) -> Self {
        LengthSummary {
            len,
            anagrams: 0,
            non_stars: 0,
            excluded: 0,
            asymmetric: ClassBucket::default(),
            symmetric: ClassBucket::default(),
            perfect: ClassBucket::default(),
        }
    }

    pub fn bucket(&self, class: StarClass) -> Option<&ClassBucket> {
        match class {
            StarClass::NonStar => None,
            StarClass::Asymmetric => Some(&self.asymmetric),
            StarClass::Symmetric => Some(&self.symmetric),
            StarClass::Perfect => Some(&self.perfect),
        }
    }

    fn bucket_mut(&mut self, class: StarClass) -> Option<&mut ClassBucket> {
        match class {
            StarClass::NonStar => None,
            StarClass::Asymmetric => Some(&mut self.asymmetric),
            StarClass::Symmetric => Some(&mut self.symmetric),
            StarClass::Perfect => Some(&mut self.perfect),
        }
    }

    pub fn stars(&self) -> usize {
        self.asymmetric.count + self.symmetric.count + self.perfect.count
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExcludedPair {
    pub first: String,
    pub second: String,
    /// `None` when the count overflows 64 bits.
    pub paths: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExcludedWord {
    pub word: String,
    pub paths: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryCounterexample {
    pub first: String,
    pub second: String,
    pub reversed_class: StarClass,
}

/// Checks of star-ness, perfection and symmetry under swapping the words of each pair.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReversalCheck {
    pub stars_checked: usize,
    /// Stars whose swapped pair (or reversed path) is not a star.
    pub starriness_violations: Vec<String>,
    /// Perfect stars whose reversed path is not perfect with the inverse step.
    pub perfection_violations: Vec<String>,
    pub symmetric_checked: usize,
    /// Symmetric stars whose swapped pair lost all symmetry.
    pub symmetry_counterexamples: Vec<SymmetryCounterexample>,
}

impl ReversalCheck {
    pub fn is_clean(&self) -> bool {
        self.starriness_violations.is_empty()
            && self.perfection_violations.is_empty()
            && self.symmetry_counterexamples.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutostarRecord {
    pub word: String,
    pub class: StarClass,
    pub path: Path,
    pub steps: Vec<i32>,
    pub o_rot: u32,
    pub o_ref: u32,
    /// Every `|S|` reached by some perfect path, not just the selected one.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub perfect_edge_lengths: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutostarInventory {
    pub cap: u64,
    /// Words with a repeated letter and at least five letters.
    pub examined: usize,
    pub asymmetric: usize,
    pub symmetric: usize,
    pub perfect: usize,
    pub entries: Vec<AutostarRecord>,
    pub excluded: Vec<ExcludedWord>,
}

impl AutostarInventory {
    pub fn total(&self) -> usize {
        self.asymmetric + self.symmetric + self.perfect
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusReport {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    pub words: usize,
    pub anagrams: usize,
    pub cap: u64,
    pub lengths: Vec<LengthSummary>,
    pub excluded_pairs: Vec<ExcludedPair>,
    pub reversal: ReversalCheck,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub autostars: Option<AutostarInventory>,
}

impl CorpusReport {
    pub fn class_total(&self, class: StarClass) -> usize {
        match class {
            StarClass::NonStar => self.lengths.iter().map(|l| l.non_stars).sum(),
            _ => self
                .lengths
                .iter()
                .filter_map(|l| l.bucket(class))
                .map(|b| b.count)
                .sum(),
        }
    }

    pub fn stars(&self) -> usize {
        self.lengths.iter().map(LengthSummary::stars).sum()
    }

    /// Stars as a fraction of all anagrams; zero for an empty corpus.
    pub fn star_fraction(&self) -> f64 {
        if self.anagrams == 0 {
            0.0
        } else {
            self.stars() as f64 / self.anagrams as f64
        }
    }

    /// Every cluster with its length and class, in report order.
    pub fn clusters(&self) -> impl Iterator<Item = (usize, StarClass, &StarCluster)> {
        self.lengths.iter().flat_map(|l| {
            StarClass::STARS.into_iter().flat_map(move |class| {
                l.bucket(class)
                    .into_iter()
                    .flat_map(move |b| b.clusters.iter().map(move |c| (l.len, class, c)))
            })
        })
    }

    pub fn cluster_count(&self) -> usize {
        self.clusters().count()
    }
}

fn parallel_map<T, R, F>(items: &[T], jobs: Option<usize>, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        let run = || items.par_iter().map(&f).collect();
        match jobs {
            Some(jobs) => match rayon::ThreadPoolBuilder::new()
                .num_threads(jobs.max(1))
                .build()
            {
                Ok(pool) => pool.install(run),
                Err(_) => items.iter().map(&f).collect(),
            },
            None => run(),
        }
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = jobs;
        items.iter().map(f).collect()
    }
}

enum PairOutcome {
    Short,
    Excluded(Option<u64>),
    Classified(Classification),
}

fn classify_pair(pair: &AnagramPair, cap: u64) -> PairOutcome {
    if pair.len() < MIN_STAR_LEN {
        return PairOutcome::Short;
    }
    match classify_anagram(pair, Some(cap)) {
        Ok(c) => PairOutcome::Classified(c),
        Err(Error::PathCountExceedsCap { count, .. }) => PairOutcome::Excluded(Some(count)),
        Err(Error::PathCountOverflow) => PairOutcome::Excluded(None),
        Err(e) => unreachable!("classifying a validated pair: {e}"),
    }
}

/// Classifies every anagram in the list and assembles the report.
pub fn scan(list: &WordList, config: &ScanConfig) -> CorpusReport {
    let pairs = find_anagrams(list);
    let outcomes = parallel_map(&pairs, config.jobs, |p| classify_pair(p, config.cap));

    let mut lengths: BTreeMap<usize, LengthSummary> = BTreeMap::new();
    let mut clusters: BTreeMap<(usize, StarClass, EdgeMatrix), Vec<StarRecord>> = BTreeMap::new();
    let mut excluded_pairs = Vec::new();
    let mut classified: HashMap<&AnagramPair, &Classification> = HashMap::new();

    for (pair, outcome) in pairs.iter().zip(&outcomes) {
        let summary = lengths
            .entry(pair.len())
            .or_insert_with(|| LengthSummary::empty(pair.len()));
        summary.anagrams += 1;
        match outcome {
            PairOutcome::Short => summary.non_stars += 1,
            PairOutcome::Excluded(paths) => {
                summary.excluded += 1;
                excluded_pairs.push(ExcludedPair {
                    first: pair.first().to_string(),
                    second: pair.second().to_string(),
                    paths: *paths,
                });
            }
            PairOutcome::Classified(c) => {
                classified.insert(pair, c);
                match summary.bucket_mut(c.class) {
                    None => summary.non_stars += 1,
                    Some(bucket) => {
                        bucket.count += 1;
                        let key = c.path.edge_matrix().canonical();
                        clusters
                            .entry((pair.len(), c.class, key))
                            .or_default()
                            .push(StarRecord::new(pair, c));
                    }
                }
            }
        }
    }

    for ((len, class, key), members) in clusters {
        let summary = lengths.get_mut(&len).expect("length seen");
        summary
            .bucket_mut(class)
            .expect("star class")
            .clusters
            .push(StarCluster { key, members });
    }

    let reversal = check_reversals(&pairs, &classified);
    let autostars = config
        .autostars
        .then(|| find_autostars(list, config.cap, config.jobs));

    CorpusReport {
        source: list.source().map(str::to_string),
        words: list.len(),
        anagrams: pairs.len(),
        cap: config.cap,
        lengths: lengths.into_values().collect(),
        excluded_pairs,
        reversal,
        autostars,
    }
}

fn check_reversals(
    pairs: &[AnagramPair],
    classified: &HashMap<&AnagramPair, &Classification>,
) -> ReversalCheck {
    let mut check = ReversalCheck::default();
    for pair in pairs {
        let Some(c) = classified.get(pair) else {
            continue;
        };
        if !c.class.is_star() {
            continue;
        }
        check.stars_checked += 1;
        let swapped = pair.reversed();
        let back = classified.get(&swapped).map(|b| b.class);
        let reversed = reverse_path(&c.path);
        let reversed_verdict = judge(reversed.nodes());

        if !back.is_some_and(StarClass::is_star) || !reversed_verdict.class.is_star() {
            check.starriness_violations.push(pair.to_string());
        }
        if let Some(step) = c.perfect_step {
            let inverse = modular_inverse(step, pair.len()).ok();
            if back != Some(StarClass::Perfect) || reversed_verdict.perfect_step != inverse {
                check.perfection_violations.push(pair.to_string());
            }
        }
        if c.class == StarClass::Symmetric {
            check.symmetric_checked += 1;
            let back = back.unwrap_or(StarClass::NonStar);
            if back < StarClass::Symmetric {
                check.symmetry_counterexamples.push(SymmetryCounterexample {
                    first: pair.first().to_string(),
                    second: pair.second().to_string(),
                    reversed_class: back,
                });
            }
        }
    }
    check
}

/// Result of searching one word for star paths onto itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AutostarOutcome {
    NotAutostar,
    Autostar(AutostarRecord),
    Excluded(Option<u64>),
}

/// Classifies the self-pair of `word`, collecting every perfect edge length.
pub fn analyze_autostar(word: &str, cap: u64) -> Result<AutostarOutcome> {
    let pair = AnagramPair::new(word, word)?;
    if pair.len() < MIN_STAR_LEN {
        return Err(Error::WordTooShort { len: pair.len() });
    }
    match check_cap(&pair, Some(cap)) {
        Ok(_) => {}
        Err(Error::PathCountExceedsCap { count, .. }) => {
            return Ok(AutostarOutcome::Excluded(Some(count)))
        }
        Err(Error::PathCountOverflow) => return Ok(AutostarOutcome::Excluded(None)),
        Err(e) => return Err(e),
    }
    let mut selector = Selector::default();
    let mut lengths = BTreeSet::new();
    for_each_path(&pair, |nodes| {
        let verdict = judge(nodes);
        if let Some(step) = verdict.perfect_step {
            lengths.insert(step.unsigned_abs());
        }
        selector.offer(verdict, nodes);
    });
    let best = selector.finish().expect("at least the identity path");
    let Some(sym) = best.symmetry.filter(|_| best.class.is_star()) else {
        return Ok(AutostarOutcome::NotAutostar);
    };
    Ok(AutostarOutcome::Autostar(AutostarRecord {
        word: word.to_string(),
        class: best.class,
        steps: best.path.steps().into_vec(),
        path: best.path,
        o_rot: sym.rotational,
        o_ref: sym.reflective,
        perfect_edge_lengths: lengths.into_iter().collect(),
    }))
}

fn has_repeated_letter(word: &str) -> bool {
    let mut seen = 0u32;
    word.bytes().any(|b| {
        let bit = 1 << (b - b'A');
        let repeated = seen & bit != 0;
        seen |= bit;
        repeated
    })
}

/// Searches every word with a repeated letter and at least five letters.
pub fn find_autostars(list: &WordList, cap: u64, jobs: Option<usize>) -> AutostarInventory {
    let candidates: Vec<&String> = list
        .words
        .iter()
        .filter(|w| w.len() >= MIN_STAR_LEN && has_repeated_letter(w))
        .collect();
    let outcomes = parallel_map(&candidates, jobs, |w| {
        analyze_autostar(w, cap).expect("candidate words are valid")
    });
    let mut inventory = AutostarInventory {
        cap,
        examined: candidates.len(),
        asymmetric: 0,
        symmetric: 0,
        perfect: 0,
        entries: Vec::new(),
        excluded: Vec::new(),
    };
    for (word, outcome) in candidates.into_iter().zip(outcomes) {
        match outcome {
            AutostarOutcome::NotAutostar => {}
            AutostarOutcome::Excluded(paths) => inventory.excluded.push(ExcludedWord {
                word: word.clone(),
                paths,
            }),
            AutostarOutcome::Autostar(record) => {
                match record.class {
                    StarClass::Asymmetric => inventory.asymmetric += 1,
                    StarClass::Symmetric => inventory.symmetric += 1,
                    StarClass::Perfect => inventory.perfect += 1,
                    StarClass::NonStar => unreachable!(),
                }
                inventory.entries.push(record);
            }
        }
    }
    inventory
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    /// Nested JSON: length, class, cluster, members.
    Structured,
    /// CSV, one row per star.
    Tabular,
}

impl ReportFormat {
    pub fn extension(self) -> &'static str {
        match self {
            ReportFormat::Structured => "json",
            ReportFormat::Tabular => "csv",
        }
    }
}

impl fmt::Display for ReportFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReportFormat::Structured => "structured",
            ReportFormat::Tabular => "tabular",
        })
    }
}

impl FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "structured" | "json" => Ok(ReportFormat::Structured),
            "tabular" | "csv" => Ok(ReportFormat::Tabular),
            _ => Err(format!("unknown report format {s:?}")),
        }
    }
}

#[derive(Serialize)]
struct TabularRow<'a> {
    first: &'a str,
    second: &'a str,
    n: usize,
    class: StarClass,
    o_rot: u32,
    o_ref: u32,
    edge_length: Option<u32>,
    cluster_key: String,
}

pub fn export_report<W: Write>(
    report: &CorpusReport,
    format: ReportFormat,
    mut out: W,
) -> Result<()> {
    match format {
        ReportFormat::Structured => {
            serde_json::to_writer_pretty(&mut out, report)?;
            out.write_all(b"\n")?;
        }
        ReportFormat::Tabular => {
            // header written by hand so an empty report still gets one
            let mut csv = csv::WriterBuilder::new()
                .has_headers(false)
                .from_writer(out);
            csv.write_record([
                "first",
                "second",
                "n",
                "class",
                "o_rot",
                "o_ref",
                "edge_length",
                "cluster_key",
            ])?;
            for (len, class, cluster) in report.clusters() {
                let cluster_key = cluster.key.to_key_string();
                for m in &cluster.members {
                    csv.serialize(TabularRow {
                        first: &m.first,
                        second: &m.second,
                        n: len,
                        class,
                        o_rot: m.o_rot,
                        o_ref: m.o_ref,
                        edge_length: m.edge_length(),
                        cluster_key: cluster_key.clone(),
                    })?;
                }
            }
            csv.flush()?;
        }
    }
    Ok(())
}

pub fn import_report<R: Read>(reader: R) -> Result<CorpusReport> {
    Ok(serde_json::from_reader(reader)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn list(words: &[&str]) -> WordList {
        WordList::from_words(words, None).unwrap()
    }

    #[test]
    fn load_folds_and_dedups() {
        let l = load_wordlist("café\nCafe\n".as_bytes(), None).unwrap();
        assert_eq!(l.words().iter().collect::<Vec<_>>(), ["CAFE"]);
        let l = load_wordlist("earth\r\nheart\rhater\n\n".as_bytes(), None).unwrap();
        assert_eq!(l.len(), 3);
        assert!(matches!(
            load_wordlist("don't\n123\n".as_bytes(), None),
            Err(Error::EmptyWordList)
        ));
    }

    #[test]
    fn anagram_pairs_are_ordered() {
        let pairs = find_anagrams(&list(&["EARTH", "HEART", "HATER"]));
        assert_eq!(pairs.len(), 6);
        assert_eq!(pairs[0], AnagramPair::new("EARTH", "HATER").unwrap());
        assert!(find_anagrams(&list(&["EARTH", "MOON"])).is_empty());
    }

    #[test]
    fn mini_corpus_scan() {
        // HEART->HATER is the path [0,2,4,1,3], so both HATER pairs are pentagrams
        let report = scan(&list(&["EARTH", "HEART", "HATER"]), &ScanConfig::default());
        assert_eq!(report.anagrams, 6);
        assert_eq!(report.stars(), 4);
        assert_eq!(report.class_total(StarClass::Perfect), 4);
        assert_eq!(report.class_total(StarClass::NonStar), 2);
        assert_eq!(report.cluster_count(), 1);
        let (len, class, cluster) = report.clusters().next().unwrap();
        assert_eq!((len, class), (5, StarClass::Perfect));
        let names: Vec<(&str, &str)> = cluster
            .members
            .iter()
            .map(|m| (m.first.as_str(), m.second.as_str()))
            .collect();
        assert_eq!(
            names,
            [
                ("EARTH", "HATER"),
                ("HATER", "EARTH"),
                ("HATER", "HEART"),
                ("HEART", "HATER")
            ]
        );
        assert!(report.reversal.is_clean());
        assert_eq!(report.reversal.stars_checked, 4);
    }

    #[test]
    fn short_anagrams_count_but_never_star() {
        let report = scan(
            &list(&["ACT", "CAT", "EARTH", "HATER"]),
            &ScanConfig::default(),
        );
        assert_eq!(report.anagrams, 4);
        assert_eq!(report.stars(), 2);
        assert_eq!(report.lengths[0].len, 3);
        assert_eq!(report.lengths[0].non_stars, 2);
    }

    #[test]
    fn cap_hits_are_recorded() {
        let config = ScanConfig {
            cap: 1,
            ..ScanConfig::default()
        };
        let report = scan(&list(&["CAREERS", "CREASER"]), &config);
        assert_eq!(report.excluded_pairs.len(), 2);
        assert_eq!(report.excluded_pairs[0].paths, Some(4));
        assert_eq!(report.lengths[0].excluded, 2);
        let autostars = report.autostars.unwrap();
        assert_eq!(autostars.excluded.len(), 2);
    }

    #[test]
    fn berserker_has_two_perfect_edge_lengths() {
        let AutostarOutcome::Autostar(record) = analyze_autostar("BERSERKER", DEFAULT_CAP).unwrap()
        else {
            panic!("BERSERKER is an autostar");
        };
        assert_eq!(record.class, StarClass::Perfect);
        assert!(record.perfect_edge_lengths.len() >= 2);
        assert_eq!(
            analyze_autostar("HATER", DEFAULT_CAP).unwrap(),
            AutostarOutcome::NotAutostar
        );
        assert_eq!(
            analyze_autostar("SUPERCALIFRAGILISTICEXPIALIDOCIOUS", DEFAULT_CAP).unwrap(),
            AutostarOutcome::Excluded(Some(209_018_880))
        );
    }

    #[test]
    fn empty_report_exports() {
        let report = scan(&list(&["EARTH", "MOON"]), &ScanConfig::default());
        assert_eq!(report.anagrams, 0);
        assert_eq!(report.star_fraction(), 0.0);
        let mut json = Vec::new();
        export_report(&report, ReportFormat::Structured, &mut json).unwrap();
        assert_eq!(import_report(json.as_slice()).unwrap(), report);
        let mut csv = Vec::new();
        export_report(&report, ReportFormat::Tabular, &mut csv).unwrap();
        assert_eq!(
            String::from_utf8(csv).unwrap(),
            "first,second,n,class,o_rot,o_ref,edge_length,cluster_key\n"
        );
    }

    #[test]
    fn tabular_rows() {
        let report = scan(&list(&["EARTH", "HEART", "HATER"]), &ScanConfig::default());
        let mut csv = Vec::new();
        export_report(&report, ReportFormat::Tabular, &mut csv).unwrap();
        let text = String::from_utf8(csv).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 5);
        assert_eq!(
            lines[1],
            "EARTH,HATER,5,perfect,5,5,2,-2:2|-2:2|-2:2|-2:2|-2:2"
        );
    }

    #[test]
    fn format_names() {
        assert_eq!(
            "structured".parse::<ReportFormat>().unwrap(),
            ReportFormat::Structured
        );
        assert_eq!(
            "tabular".parse::<ReportFormat>().unwrap(),
            ReportFormat::Tabular
        );
        assert!("xml".parse::<ReportFormat>().is_err());
    }
}
