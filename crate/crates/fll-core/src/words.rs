//! Words over `Z_m = {0, 1, .., m-1}` and the two statistics of a word that
//! drive everything else in the crate: its *runs* and its *maximal
//! alternating segments*.
//!
//! A run is a maximal block of equal symbols.  An alternating segment
//! `x_[i, j]` is a substring that alternates between two distinct symbols
//! (a single symbol is trivially alternating); it is *maximal* when neither
//! `x_[i-1, j]` nor `x_[i, j+1]` is alternating.  Over a binary alphabet the
//! maximal segments partition the word, and the segment count `a(x)` and run
//! count `rho(x)` satisfy `a(x) + rho(x) = n + 1`.  For `m >= 3` adjacent
//! maximal segments may overlap in exactly one position, so all of them are
//! reported: `012` has segments `[1,2]` and `[2,3]`.

use std::fmt;

use crate::error::{Error, Result};

/// The alphabet `{0, 1, .., m-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Alphabet {
    m: u32,
}

impl Alphabet {
    pub fn new(m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::Range("alphabet size must be at least 1".into()));
        }
        Ok(Alphabet { m })
    }

    pub fn size(&self) -> u32 {
        self.m
    }

    pub fn contains(&self, symbol: u32) -> bool {
        symbol < self.m
    }
}

/// A word over `Z_m`, stored as plain symbols.
///
/// Ordering is lexicographic on the symbols (words of equal length compare
/// the way the rest of the crate enumerates them), which makes `BTreeSet<Word>`
/// a set in canonical order for free.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    symbols: Vec<u32>,
    alphabet: Alphabet,
}

impl Word {
    /// Builds a word, checking every symbol against the alphabet.
    pub fn new(symbols: Vec<u32>, alphabet: Alphabet) -> Result<Self> {
        for &s in &symbols {
            if !alphabet.contains(s) {
                return Err(Error::Alphabet {
                    symbol: s,
                    m: alphabet.size(),
                });
            }
        }
        Ok(Word { symbols, alphabet })
    }

    /// Parses the textual form used throughout the CLI: for `m <= 10` a word
    /// is a string of digits (`"0120"`), for larger alphabets a
    /// comma-separated list of symbol values (`"10,3,11"`).  An empty string
    /// parses as the empty word.
    pub fn parse(text: &str, m: u32) -> Result<Self> {
        let alphabet = Alphabet::new(m)?;
        let text = text.trim();
        if text.is_empty() {
            return Ok(Word {
                symbols: Vec::new(),
                alphabet,
            });
        }
        let symbols = if m <= 10 {
            text.chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| Error::Parse(format!("invalid symbol character {c:?}")))
                })
                .collect::<Result<Vec<u32>>>()?
        } else {
            text.split(',')
                .map(|part| {
                    part.trim()
                        .parse::<u32>()
                        .map_err(|e| Error::Parse(format!("invalid symbol {part:?}: {e}")))
                })
                .collect::<Result<Vec<u32>>>()?
        };
        Word::new(symbols, alphabet)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[u32] {
        &self.symbols
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn m(&self) -> u32 {
        self.alphabet.size()
    }

    /// The word restricted to its first `k` symbols.
    pub fn prefix(&self, k: usize) -> Word {
        Word {
            symbols: self.symbols[..k].to_vec(),
            alphabet: self.alphabet,
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m() <= 10 {
            for &s in &self.symbols {
                write!(f, "{s}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.symbols.iter().map(|s| s.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

/// Number of runs `rho(x)`: maximal blocks of identical symbols.  The empty
/// word has no runs.
pub fn runs(word: &Word) -> usize {
    runs_of(word.symbols())
}

pub(crate) fn runs_of(symbols: &[u32]) -> usize {
    let mut rho = 0;
    let mut prev = None;
    for &s in symbols {
        if prev != Some(s) {
            rho += 1;
            prev = Some(s);
        }
    }
    rho
}

/// Run count plus every maximal alternating segment of a word.
///
/// `segments` holds 1-based inclusive `(start, end)` index pairs in
/// left-to-right order; `lengths` are the corresponding segment lengths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentProfile {
    pub rho: usize,
    pub segments: Vec<(usize, usize)>,
    pub lengths: Vec<usize>,
}

impl SegmentProfile {
    /// The segment count `a(x)`.
    pub fn a(&self) -> usize {
        self.segments.len()
    }

    pub fn sum_lengths(&self) -> u64 {
        self.lengths.iter().map(|&s| s as u64).sum()
    }

    pub fn sum_squared_lengths(&self) -> u64 {
        self.lengths.iter().map(|&s| (s * s) as u64).sum()
    }
}

/// Computes the full segment profile of a word.
///
/// ```
/// use fll_core::words::{alternating_segments, Word};
///
/// let x = Word::parse("00110100", 2).unwrap();
/// let profile = alternating_segments(&x);
/// assert_eq!(profile.rho, 5);
/// assert_eq!(profile.segments, vec![(1, 1), (2, 3), (4, 7), (8, 8)]);
/// assert_eq!(profile.lengths, vec![1, 2, 4, 1]);
/// ```
pub fn alternating_segments(word: &Word) -> SegmentProfile {
    profile_of(word.symbols())
}

pub(crate) fn profile_of(symbols: &[u32]) -> SegmentProfile {
    let n = symbols.len();
    let mut segments = Vec::new();
    if n == 0 {
        return SegmentProfile {
            rho: 0,
            segments,
            lengths: Vec::new(),
        };
    }

    // Grow a segment from `start` for as long as consecutive symbols differ
    // and the symbol two back repeats, i.e. the substring keeps alternating
    // between the same two symbols.  A maximal segment can only begin where
    // the previous one ended (the two overlap in one position, which needs a
    // third symbol and hence m >= 3) or after it, so the scan is linear.
    let mut start = 0;
    loop {
        let mut end = start;
        while end + 1 < n
            && symbols[end + 1] != symbols[end]
            && (end == start || symbols[end + 1] == symbols[end - 1])
        {
            end += 1;
        }
        segments.push((start + 1, end + 1));
        if end + 1 >= n {
            break;
        }
        start = if end > start && symbols[end + 1] != symbols[end] {
            end
        } else {
            end + 1
        };
    }

    let lengths = segments.iter().map(|&(s, e)| e - s + 1).collect();
    SegmentProfile {
        rho: runs_of(symbols),
        segments,
        lengths,
    }
}

/// The number of maximal alternating segments `a(x)`.
pub fn segment_count(word: &Word) -> usize {
    alternating_segments(word).a()
}
