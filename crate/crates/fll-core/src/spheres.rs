//! Deletion spheres `D_t(x)`, insertion spheres `I_t(x)`, and the composite
//! sphere reached by `t1` deletions followed by `t2` insertions.
//!
//! Spheres are *sets*: applying different edit scripts to `x` frequently
//! produces the same word, and all counting here is of distinct outcomes.
//! The composite sphere applies deletions first; tests confirm empirically
//! that the opposite order yields the same set (the operations commute on
//! every checked instance), but nothing in this crate relies on that.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::words::Word;

/// A set of words that all share one length, ordered lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordSet {
    word_len: usize,
    words: BTreeSet<Word>,
}

impl WordSet {
    pub fn new(word_len: usize) -> Self {
        WordSet {
            word_len,
            words: BTreeSet::new(),
        }
    }

    pub fn from_words<I: IntoIterator<Item = Word>>(word_len: usize, words: I) -> Result<Self> {
        let mut set = WordSet::new(word_len);
        for word in words {
            set.insert(word)?;
        }
        Ok(set)
    }

    pub fn insert(&mut self, word: Word) -> Result<bool> {
        if word.len() != self.word_len {
            return Err(Error::Length {
                expected: self.word_len,
                actual: word.len(),
            });
        }
        Ok(self.words.insert(word))
    }

    /// Common length of the members.
    pub fn word_len(&self) -> usize {
        self.word_len
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, word: &Word) -> bool {
        self.words.contains(word)
    }

    /// Members in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = &Word> {
        self.words.iter()
    }

    pub fn intersection_size(&self, other: &WordSet) -> usize {
        self.words.intersection(&other.words).count()
    }

    pub fn is_subset(&self, other: &WordSet) -> bool {
        self.words.is_subset(&other.words)
    }
}

impl IntoIterator for WordSet {
    type Item = Word;
    type IntoIter = std::collections::btree_set::IntoIter<Word>;

    fn into_iter(self) -> Self::IntoIter {
        self.words.into_iter()
    }
}

/// Budget of a composite sphere: `deletions` first, then `insertions`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SphereSpec {
    pub deletions: usize,
    pub insertions: usize,
}

fn check_budget(t: usize, n: usize) -> Result<()> {
    if t > n {
        return Err(Error::Range(format!(
            "cannot delete {t} symbols from a word of length {n}"
        )));
    }
    Ok(())
}

/// All distinct words obtained from `x` by exactly `t` deletions.
///
/// ```
/// use fll_core::{spheres::deletion_sphere, Word};
///
/// let x = Word::parse("010", 2).unwrap();
/// let sphere = deletion_sphere(&x, 1).unwrap();
/// let members: Vec<String> = sphere.iter().map(|w| w.to_string()).collect();
/// assert_eq!(members, ["00", "01", "10"]);
/// ```
pub fn deletion_sphere(x: &Word, t: usize) -> Result<WordSet> {
    check_budget(t, x.len())?;
    let mut set = WordSet::new(x.len() - t);
    for keep in deletion_symbol_sets(x.symbols(), t) {
        set.insert(Word::new(keep, x.alphabet())?)?;
    }
    Ok(set)
}

fn deletion_symbol_sets(symbols: &[u32], t: usize) -> BTreeSet<Vec<u32>> {
    let n = symbols.len();
    let mut out = BTreeSet::new();
    for dropped in (0..n).combinations(t) {
        let kept: Vec<u32> = symbols
            .iter()
            .enumerate()
            .filter(|(i, _)| !dropped.contains(i))
            .map(|(_, &s)| s)
            .collect();
        out.insert(kept);
    }
    out
}

/// All distinct words obtained from `x` by exactly `t` insertions of symbols
/// from its alphabet.
pub fn insertion_sphere(x: &Word, t: usize) -> Result<WordSet> {
    let mut layer: BTreeSet<Vec<u32>> = BTreeSet::new();
    layer.insert(x.symbols().to_vec());
    for _ in 0..t {
        layer = layer
            .iter()
            .flat_map(|sym| single_insertions(sym, x.m()))
            .collect();
    }
    WordSet::from_words(
        x.len() + t,
        layer
            .into_iter()
            .map(|sym| Word::new(sym, x.alphabet()))
            .collect::<Result<Vec<Word>>>()?,
    )
}

fn single_insertions(symbols: &[u32], m: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::with_capacity((symbols.len() + 1) * m as usize);
    for pos in 0..=symbols.len() {
        for sym in 0..m {
            let mut next = Vec::with_capacity(symbols.len() + 1);
            next.extend_from_slice(&symbols[..pos]);
            next.push(sym);
            next.extend_from_slice(&symbols[pos..]);
            out.push(next);
        }
    }
    out
}

/// The composite sphere `I_t2(D_t1(x))`: every word reachable by `t1`
/// deletions followed by `t2` insertions.  Members have length
/// `|x| - t1 + t2`.
pub fn del_ins_sphere(x: &Word, spec: SphereSpec) -> Result<WordSet> {
    check_budget(spec.deletions, x.len())?;
    let mut set = WordSet::new(x.len() - spec.deletions + spec.insertions);
    for core in deletion_symbol_sets(x.symbols(), spec.deletions) {
        let word = Word::new(core, x.alphabet())?;
        for inserted in insertion_sphere(&word, spec.insertions)? {
            set.insert(inserted)?;
        }
    }
    Ok(set)
}

/// `(|D_1(x) ∩ D_1(y)|, |I_1(x) ∩ I_1(y)|)` for same-length words.
pub fn pairwise_intersection_sizes(x: &Word, y: &Word) -> Result<(usize, usize)> {
    if x.len() != y.len() {
        return Err(Error::Length {
            expected: x.len(),
            actual: y.len(),
        });
    }
    let del = deletion_sphere(x, 1)?.intersection_size(&deletion_sphere(y, 1)?);
    let ins = insertion_sphere(x, 1)?.intersection_size(&insertion_sphere(y, 1)?);
    Ok((del, ins))
}
