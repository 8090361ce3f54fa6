//! Codebooks and synchronization-error-correcting predicates.
//!
//! A codebook is a set of distinct equal-length words over a common alphabet.
//! It corrects `t` deletions when the `t`-deletion spheres of its codewords
//! are pairwise disjoint, and likewise for insertions or mixed budgets.  All
//! of those conditions are equivalent to one another and to the minimum FLL
//! distance exceeding the total budget, so every predicate here exists in two
//! independent forms: a sphere-enumeration route that applies the definition
//! literally, and an `llcs` route that only compares codeword pairs.  The
//! test suites drive both and demand agreement; callers can pick whichever
//! fits their budget (the `llcs` route is polynomial in the codebook, the
//! sphere route is exponential in `t`).

use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::lcs::llcs;
use crate::space::WordSpace;
use crate::spheres::{del_ins_sphere, deletion_sphere, insertion_sphere, SphereSpec, WordSet};
use crate::words::Word;

/// A nonempty set of distinct words sharing one length and one alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Codebook {
    word_len: usize,
    m: u32,
    words: Vec<Word>,
}

impl Codebook {
    pub fn new<I: IntoIterator<Item = Word>>(words: I) -> Result<Self> {
        let mut sorted: Vec<Word> = words.into_iter().collect();
        sorted.sort();
        sorted.dedup();
        let first = sorted
            .first()
            .ok_or_else(|| Error::Domain("a codebook needs at least one codeword".into()))?;
        let (word_len, m) = (first.len(), first.m());
        for word in &sorted {
            if word.len() != word_len {
                return Err(Error::Length {
                    expected: word_len,
                    actual: word.len(),
                });
            }
            if word.m() != m {
                return Err(Error::AlphabetMismatch {
                    left: m,
                    right: word.m(),
                });
            }
        }
        Ok(Codebook {
            word_len,
            m,
            words: sorted,
        })
    }

    /// Parses the on-disk format: a header line `n m`, then one word per
    /// line.  Blank lines are ignored; anything else is an error that names
    /// its line number.
    pub fn from_file_str(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, line)| (i + 1, line.trim()))
            .filter(|(_, line)| !line.is_empty());
        let (header_no, header) = lines
            .next()
            .ok_or_else(|| Error::Parse("empty codebook file".into()))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        let [n_text, m_text] = fields[..] else {
            return Err(Error::Parse(format!(
                "line {header_no}: expected header `n m`, got `{header}`"
            )));
        };
        let n: usize = n_text
            .parse()
            .map_err(|_| Error::Parse(format!("line {header_no}: bad word length `{n_text}`")))?;
        let m: u32 = m_text
            .parse()
            .map_err(|_| Error::Parse(format!("line {header_no}: bad alphabet size `{m_text}`")))?;
        let mut words = Vec::new();
        for (line_no, line) in lines {
            let word = Word::parse(line, m)
                .map_err(|e| Error::Parse(format!("line {line_no}: {e}")))?;
            if word.len() != n {
                return Err(Error::Parse(format!(
                    "line {line_no}: expected length {n}, got {} symbols",
                    word.len()
                )));
            }
            words.push(word);
        }
        let count = words.len();
        let book = Codebook::new(words)?;
        if book.len() != count {
            return Err(Error::Parse("duplicate codeword in file".into()));
        }
        if book.word_len() != n || book.m() != m {
            // Only reachable for an empty body, which `new` already rejects.
            return Err(Error::Parse("header does not match the codewords".into()));
        }
        Ok(book)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn word_len(&self) -> usize {
        self.word_len
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    fn pairs(&self) -> impl Iterator<Item = (&Word, &Word)> {
        self.words
            .iter()
            .enumerate()
            .flat_map(|(i, x)| self.words[i + 1..].iter().map(move |y| (x, y)))
    }
}

impl fmt::Display for Codebook {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.word_len, self.m)?;
        for word in &self.words {
            writeln!(f, "{word}")?;
        }
        Ok(())
    }
}

/// Smallest FLL distance over distinct codeword pairs.  A one-word codebook
/// has no pairs, hence no minimum.
pub fn min_fll_distance(code: &Codebook) -> Result<usize> {
    if code.len() < 2 {
        return Err(Error::Singleton);
    }
    let mut min = usize::MAX;
    for (x, y) in code.pairs() {
        min = min.min(code.word_len() - llcs(x, y)?);
    }
    Ok(min)
}

fn check_deletion_budget(t: usize, n: usize) -> Result<()> {
    if t > n {
        return Err(Error::Range(format!(
            "cannot delete {t} symbols from words of length {n}"
        )));
    }
    Ok(())
}

/// Pairwise shortcut: no two codewords share a common subsequence long
/// enough to survive `t` deletions from both.
pub fn is_t_deletion_correcting(code: &Codebook, t: usize) -> Result<bool> {
    check_deletion_budget(t, code.word_len())?;
    for (x, y) in code.pairs() {
        if llcs(x, y)? + t >= code.word_len() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Definition route: materialize every `t`-deletion sphere and demand
/// pairwise disjointness.
pub fn is_t_deletion_correcting_by_spheres(code: &Codebook, t: usize) -> Result<bool> {
    check_deletion_budget(t, code.word_len())?;
    let spheres: Vec<WordSet> = code
        .words()
        .iter()
        .map(|x| deletion_sphere(x, t))
        .collect::<Result<_>>()?;
    Ok(disjoint(&spheres))
}

/// Definition route over insertion spheres.
pub fn is_t_insertion_correcting(code: &Codebook, t: usize) -> Result<bool> {
    let spheres: Vec<WordSet> = code
        .words()
        .iter()
        .map(|x| insertion_sphere(x, t))
        .collect::<Result<_>>()?;
    Ok(disjoint(&spheres))
}

/// Definition route for a mixed budget of `spec.deletions` then
/// `spec.insertions` applied to every codeword.
pub fn is_del_ins_correcting(code: &Codebook, spec: SphereSpec) -> Result<bool> {
    check_deletion_budget(spec.deletions, code.word_len())?;
    let spheres: Vec<WordSet> = code
        .words()
        .iter()
        .map(|x| del_ins_sphere(x, spec))
        .collect::<Result<_>>()?;
    Ok(disjoint(&spheres))
}

fn disjoint(spheres: &[WordSet]) -> bool {
    for (i, a) in spheres.iter().enumerate() {
        for b in &spheres[i + 1..] {
            if a.intersection_size(b) > 0 {
                return false;
            }
        }
    }
    true
}

/// How a codebook behaves under an adversary deleting up to `2t + 1`
/// symbols: whether every split of that budget into deletions and
/// reinsertions stays uniquely decodable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorrectionProfile {
    pub t: usize,
    pub min_distance: usize,
    /// True exactly when the minimum FLL distance is at least `2t + 2`.
    pub corrects_all_splits: bool,
}

/// Evaluates the `2t + 1` budget via the minimum-distance shortcut.  The
/// sphere-level meaning (every `(t1, t2)` split with `t1 + t2 = 2t + 1`
/// yields disjoint spheres) is re-derived independently in the test suites.
pub fn correct_and_detect_profile(code: &Codebook, t: usize) -> Result<CorrectionProfile> {
    let min_distance = min_fll_distance(code)?;
    Ok(CorrectionProfile {
        t,
        min_distance,
        corrects_all_splits: min_distance >= 2 * t + 2,
    })
}

/// `size` distinct uniform words of length `n` over `Z_m`, reproducible from
/// `seed`.  The space must fit under `cap` so indices can be drawn directly.
pub fn random_codebook(n: usize, m: u32, size: usize, seed: u64, cap: u64) -> Result<Codebook> {
    let space = WordSpace::new(n, m)?;
    let total = space.bounded_size(cap)?;
    if size == 0 || size as u128 > total as u128 {
        return Err(Error::Range(format!(
            "cannot draw {size} distinct words from a space of {total}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut picked = std::collections::BTreeSet::new();
    while picked.len() < size {
        picked.insert(rng.gen_range(0..total));
    }
    Codebook::new(picked.into_iter().map(|i| space.word_at(i)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn book(words: &[&str], m: u32) -> Codebook {
        Codebook::new(words.iter().map(|w| Word::parse(w, m).unwrap())).unwrap()
    }

    #[test]
    fn min_distance_between_complementary_words_is_the_length() {
        let code = book(&["0000", "1111"], 2);
        assert_eq!(min_fll_distance(&code).unwrap(), 4);
        assert!(matches!(
            min_fll_distance(&book(&["0000"], 2)),
            Err(Error::Singleton)
        ));
    }

    #[test]
    fn complementary_pair_corrects_up_to_three_deletions() {
        let code = book(&["0000", "1111"], 2);
        for t in 0..=3 {
            assert!(is_t_deletion_correcting(&code, t).unwrap(), "t = {t}");
            assert!(is_t_deletion_correcting_by_spheres(&code, t).unwrap());
            assert!(is_t_insertion_correcting(&code, t).unwrap());
        }
        // Deleting everything collapses both words to the empty word.
        assert!(!is_t_deletion_correcting(&code, 4).unwrap());
        assert!(!is_t_deletion_correcting_by_spheres(&code, 4).unwrap());
        assert!(is_t_deletion_correcting(&code, 5).is_err());
    }

    #[test]
    fn distance_one_pair_fails_single_deletion() {
        // llcs(0101, 0110) = 3, so one deletion from each can collide (both
        // reach 010).
        let code = book(&["0101", "0110"], 2);
        assert_eq!(min_fll_distance(&code).unwrap(), 1);
        assert!(!is_t_deletion_correcting(&code, 1).unwrap());
        assert!(!is_t_deletion_correcting_by_spheres(&code, 1).unwrap());
        assert!(!is_t_insertion_correcting(&code, 1).unwrap());
    }

    #[test]
    fn all_routes_agree_on_every_binary_pair() {
        // Exhaustive over unordered pairs in Z_2^n for small n: the llcs
        // shortcut, the deletion spheres, the insertion spheres, and every
        // mixed split must reach the same verdict.
        for n in 1..=5usize {
            let space = WordSpace::new(n, 2).unwrap();
            let words: Vec<Word> = space.iter().collect();
            for i in 0..words.len() {
                for j in i + 1..words.len() {
                    let code = Codebook::new([words[i].clone(), words[j].clone()]).unwrap();
                    for t in 0..=n.min(2) {
                        let fast = is_t_deletion_correcting(&code, t).unwrap();
                        assert_eq!(fast, is_t_deletion_correcting_by_spheres(&code, t).unwrap());
                        assert_eq!(fast, is_t_insertion_correcting(&code, t).unwrap());
                        for t1 in 0..=t {
                            let spec = SphereSpec {
                                deletions: t1,
                                insertions: t - t1,
                            };
                            assert_eq!(
                                fast,
                                is_del_ins_correcting(&code, spec).unwrap(),
                                "split {spec:?} diverged on pair {} / {}",
                                words[i],
                                words[j]
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn profile_matches_split_enumeration() {
        let code = book(&["000000", "111111"], 2);
        let profile = correct_and_detect_profile(&code, 2).unwrap();
        assert_eq!(profile.min_distance, 6);
        assert!(profile.corrects_all_splits);
        // 2t + 1 = 5: every split must check out by spheres as well.
        for t1 in 0..=5usize {
            let spec = SphereSpec {
                deletions: t1,
                insertions: 5 - t1,
            };
            assert!(is_del_ins_correcting(&code, spec).unwrap());
        }
        let close = book(&["0101", "0110"], 2);
        assert!(!correct_and_detect_profile(&close, 0).unwrap().corrects_all_splits);
    }

    #[test]
    fn file_round_trip_and_parse_errors() {
        let code = book(&["010", "101", "111"], 2);
        let text = code.to_string();
        assert_eq!(Codebook::from_file_str(&text).unwrap(), code);

        assert!(matches!(Codebook::from_file_str(""), Err(Error::Parse(_))));
        let bad_header = Codebook::from_file_str("3\n010\n");
        assert!(matches!(bad_header, Err(Error::Parse(ref msg)) if msg.contains("line 1")));
        let bad_length = Codebook::from_file_str("3 2\n0101\n");
        assert!(matches!(bad_length, Err(Error::Parse(ref msg)) if msg.contains("line 2")));
        let bad_symbol = Codebook::from_file_str("3 2\n012\n");
        assert!(matches!(bad_symbol, Err(Error::Parse(ref msg)) if msg.contains("line 2")));
        let duplicate = Codebook::from_file_str("3 2\n010\n010\n");
        assert!(matches!(duplicate, Err(Error::Parse(ref msg)) if msg.contains("duplicate")));
    }

    #[test]
    fn random_codebooks_are_reproducible_and_distinct() {
        let a = random_codebook(6, 2, 8, 42, 1 << 20).unwrap();
        let b = random_codebook(6, 2, 8, 42, 1 << 20).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 8);
        assert_eq!(a.word_len(), 6);
        let c = random_codebook(6, 2, 8, 43, 1 << 20).unwrap();
        assert_ne!(a, c);
        // Requesting more words than the space holds must fail.
        assert!(random_codebook(2, 2, 5, 1, 1 << 20).is_err());
    }
}
