//! Brute-force search for fixed points among short words.
//!
//! Every freely reduced word of length at most `L` is mapped to its Magnus
//! matrix; matrices are deduplicated (faithfulness makes the matrix a
//! canonical name for the group element) and each distinct non-identity
//! element is tested against `bar e`.

use std::cmp::Ordering;
use std::collections::hash_map::Entry;
use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::ia_endo::IAEndomorphism;
use crate::magnus::{phi, GroupWord, MagnusElement};

/// Environment variable overriding the number of search workers.
pub const WORKERS_ENV: &str = "METABELIAN_WORKERS";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub n: usize,
    pub max_len: usize,
    /// Reduced words visited, including the empty word.
    pub words_enumerated: u64,
    /// Distinct non-identity elements of `M_n` among those words.
    pub distinct_elements: u64,
    /// Shortlex-least representative of every fixed non-identity element,
    /// sorted shortlex.
    #[serde(serialize_with = "serialize_words")]
    pub fixed_points_found: Vec<GroupWord>,
}

fn serialize_words<S: serde::Serializer>(words: &[GroupWord], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(words.iter().map(ToString::to_string))
}

/// Letter order used for enumeration: `g1, g1^-1, g2, g2^-1, ...`.
fn alphabet(n: usize) -> Vec<i32> {
    (1..=n as i32).flat_map(|i| [i, -i]).collect()
}

/// All freely reduced words of length `<= max_len`, shortlex ordered.
pub fn enumerate_reduced_words(n: usize, max_len: usize) -> ReducedWords {
    ReducedWords {
        n,
        max_len,
        alphabet: alphabet(n),
        current: Vec::new(),
        started: false,
    }
}

/// Iterator behind [`enumerate_reduced_words`]; an odometer over alphabet
/// positions that skips cancelling neighbours.
pub struct ReducedWords {
    n: usize,
    max_len: usize,
    alphabet: Vec<i32>,
    /// Alphabet positions of the current word.
    current: Vec<usize>,
    started: bool,
}

impl ReducedWords {
    fn reduced_at(&self, k: usize) -> bool {
        k == 0 || self.alphabet[self.current[k]] != -self.alphabet[self.current[k - 1]]
    }

    /// Smallest valid completion of positions `from..`.
    fn fill_from(&mut self, from: usize) {
        for k in from..self.current.len() {
            self.current[k] = 0;
            if !self.reduced_at(k) {
                self.current[k] = 1;
            }
        }
    }

    fn advance(&mut self) -> bool {
        let len = self.current.len();
        let mut k = len;
        while k > 0 {
            k -= 1;
            loop {
                self.current[k] += 1;
                if self.current[k] >= self.alphabet.len() {
                    break;
                }
                if self.reduced_at(k) {
                    self.fill_from(k + 1);
                    return true;
                }
            }
        }
        // Exhausted this length.
        if len >= self.max_len || self.alphabet.is_empty() {
            return false;
        }
        self.current = vec![0; len + 1];
        self.fill_from(0);
        true
    }
}

impl Iterator for ReducedWords {
    type Item = GroupWord;

    fn next(&mut self) -> Option<GroupWord> {
        if !self.started {
            self.started = true;
        } else if !self.advance() {
            return None;
        }
        let letters: Vec<i32> = self.current.iter().map(|&p| self.alphabet[p]).collect();
        Some(GroupWord::from_letters(self.n, letters).expect("letters in range"))
    }
}

/// Number of reduced words of length exactly `k` over `2n` letters.
pub fn reduced_word_count(n: usize, k: usize) -> u64 {
    if k == 0 {
        1
    } else {
        2 * n as u64 * (2 * n as u64 - 1).pow(k as u32 - 1)
    }
}

/// Searches with the worker count from `METABELIAN_WORKERS`, or the
/// available parallelism.
pub fn search_fixed_points(e: &IAEndomorphism, max_len: usize) -> SearchReport {
    search_fixed_points_with_workers(e, max_len, default_workers())
}

pub fn default_workers() -> usize {
    std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&w: &usize| w > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |p| p.get()))
}

/// One distinct element seen by a worker.
struct Seen {
    word: GroupWord,
    fixed: bool,
}

#[derive(Default)]
struct Partial {
    words: u64,
    seen: HashMap<Vec<u8>, Seen>,
}

impl Partial {
    fn record(&mut self, key: Vec<u8>, word: &GroupWord, fixed: impl FnOnce() -> bool) {
        match self.seen.entry(key) {
            Entry::Occupied(mut o) => {
                if word.shortlex_cmp(&o.get().word) == Ordering::Less {
                    o.get_mut().word = word.clone();
                }
            }
            Entry::Vacant(v) => {
                v.insert(Seen {
                    word: word.clone(),
                    fixed: fixed(),
                });
            }
        }
    }

    /// Associative merge: counters add, representatives take the shortlex minimum.
    fn merge(mut self, other: Partial) -> Partial {
        let (mut big, small) = if self.seen.len() >= other.seen.len() {
            (std::mem::take(&mut self.seen), other.seen)
        } else {
            (other.seen, std::mem::take(&mut self.seen))
        };
        for (k, s) in small {
            match big.entry(k) {
                Entry::Occupied(mut o) => {
                    if s.word.shortlex_cmp(&o.get().word) == Ordering::Less {
                        o.get_mut().word = s.word;
                    }
                }
                Entry::Vacant(v) => {
                    v.insert(s);
                }
            }
        }
        Partial {
            words: self.words + other.words,
            seen: big,
        }
    }
}

/// Exhaustive search over reduced words of length `<= max_len`, split by
/// two-letter prefixes across `workers` threads. The report does not depend
/// on the worker count.
pub fn search_fixed_points_with_workers(
    e: &IAEndomorphism,
    max_len: usize,
    workers: usize,
) -> SearchReport {
    let n = e.rank();
    let letters = alphabet(n);
    let mut prefixes: Vec<Vec<i32>> = Vec::new();
    if max_len >= 2 {
        for &a in &letters {
            for &b in &letters {
                if b != -a {
                    prefixes.push(vec![a, b]);
                }
            }
        }
    }

    let run = || {
        // Words shorter than two letters are handled on the calling thread.
        let mut head = Partial::default();
        for w in enumerate_reduced_words(n, max_len.min(1)) {
            head.words += 1;
            let m = phi(&w);
            if !m.is_identity() {
                head.record(m.canonical_key(), &w, || e.fixes(&m));
            }
        }
        prefixes
            .par_iter()
            .map(|prefix| {
                let mut part = Partial::default();
                let word = GroupWord::from_letters(n, prefix.iter().copied()).expect("in range");
                let mut m = phi(&word);
                let mut word = word;
                explore(e, &letters, max_len, &mut word, &mut m, &mut part);
                part
            })
            .reduce(Partial::default, Partial::merge)
            .merge(head)
    };

    let total = match rayon::ThreadPoolBuilder::new().num_threads(workers.max(1)).build() {
        Ok(pool) => pool.install(run),
        Err(_) => run(),
    };

    let mut fixed: Vec<GroupWord> = total
        .seen
        .values()
        .filter(|s| s.fixed)
        .map(|s| s.word.clone())
        .collect();
    fixed.sort_by(GroupWord::shortlex_cmp);
    SearchReport {
        n,
        max_len,
        words_enumerated: total.words,
        distinct_elements: total.seen.len() as u64,
        fixed_points_found: fixed,
    }
}

/// Depth-first walk below `word`, maintaining `m = phi(word)` incrementally.
fn explore(
    e: &IAEndomorphism,
    letters: &[i32],
    max_len: usize,
    word: &mut GroupWord,
    m: &mut MagnusElement,
    part: &mut Partial,
) {
    part.words += 1;
    if !m.is_identity() {
        part.record(m.canonical_key(), word, || e.fixes(m));
    }
    if word.len() == max_len {
        return;
    }
    let last = *word.letters().last().expect("prefix is nonempty");
    for &l in letters {
        if l == -last {
            continue;
        }
        word.push(l);
        m.push_letter(l);
        explore(e, letters, max_len, word, m, part);
        m.pop_letter(l);
        word.pop();
    }
}

/// Checks `phi(e(w)) = bar e(phi(w))` on every `stride`-th reduced word of
/// length `<= max_len`; returns the words where the two routes disagree.
pub fn check_application_agreement(
    e: &IAEndomorphism,
    max_len: usize,
    stride: usize,
) -> Vec<GroupWord> {
    enumerate_reduced_words(e.rank(), max_len)
        .step_by(stride.max(1))
        .filter(|w| {
            let via_word = phi(&e.apply(w).expect("same rank"));
            let via_matrix = e.apply_bar(&phi(w)).expect("same rank");
            via_word != via_matrix
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_formula() {
        assert_eq!(enumerate_reduced_words(3, 1).count(), 7);
        assert_eq!(enumerate_reduced_words(3, 2).count(), 37);
        assert_eq!(enumerate_reduced_words(2, 0).count(), 1);
        for n in 1..=3 {
            for l in 0..=5 {
                let want: u64 = (0..=l).map(|k| reduced_word_count(n, k)).sum();
                assert_eq!(enumerate_reduced_words(n, l).count() as u64, want);
            }
        }
        // 1 + sum_{k=1..8} 6 * 5^{k-1} = 1 + 6 * (5^8 - 1) / 4
        let total: u64 = (0..=8).map(|k| reduced_word_count(3, k)).sum();
        assert_eq!(total, 585_937);
    }

    #[test]
    fn enumeration_is_shortlex_reduced_and_unique() {
        let words: Vec<_> = enumerate_reduced_words(2, 4).collect();
        for pair in words.windows(2) {
            assert_eq!(pair[0].shortlex_cmp(&pair[1]), Ordering::Less);
        }
        for w in &words {
            assert!(w.letters().windows(2).all(|p| p[0] != -p[1]));
        }
        assert_eq!(words[1].letters(), &[1]);
        assert_eq!(words[2].letters(), &[-1]);
    }

    #[test]
    fn identity_fixes_everything() {
        let r = search_fixed_points_with_workers(&IAEndomorphism::identity(3), 2, 2);
        assert_eq!(r.words_enumerated, 37);
        assert_eq!(r.distinct_elements, 36);
        assert_eq!(r.fixed_points_found.len() as u64, r.distinct_elements);
    }

    #[test]
    fn inner_automorphism_fixes_its_conjugator() {
        let g3 = GroupWord::parse(3, "g3").unwrap();
        let r = search_fixed_points_with_workers(&IAEndomorphism::inner(&g3), 3, 2);
        let found: Vec<String> = r.fixed_points_found.iter().map(ToString::to_string).collect();
        for want in ["g3", "g3^-1", "g3 g3", "g3^-1 g3^-1", "g3 g3 g3"] {
            assert!(found.iter().any(|f| f == want), "{want} missing from {found:?}");
        }
    }

    #[test]
    fn alpha_three_short_search_is_clean() {
        let r = search_fixed_points_with_workers(&IAEndomorphism::alpha_n(3).unwrap(), 4, 2);
        assert!(r.fixed_points_found.is_empty());
        assert_eq!(r.words_enumerated, 1 + 6 + 30 + 150 + 750);
    }

    #[test]
    fn report_independent_of_worker_count() {
        let e = IAEndomorphism::beta1(3).unwrap();
        let a = search_fixed_points_with_workers(&e, 4, 1);
        let b = search_fixed_points_with_workers(&e, 4, 3);
        assert_eq!(a, b);
    }

    #[test]
    fn json_uses_word_text() {
        let r = search_fixed_points_with_workers(&IAEndomorphism::identity(2), 1, 1);
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["fixed_points_found"][0], "g1");
        assert_eq!(v["words_enumerated"], 5);
    }
}
