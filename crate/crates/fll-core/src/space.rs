//! Enumeration of the full word space `Z_m^n` and the fold every sweep in the
//! crate runs through.
//!
//! Words are identified with their lexicographic index: the word `x_1 .. x_n`
//! has index `sum x_i * m^(n-i)`, so index order is lexicographic order.
//! [`fold_space`] partitions the index range into contiguous chunks, folds
//! each chunk sequentially with a reusable symbol buffer, and merges the
//! partial results.  With the `parallel` feature enabled the chunks are
//! processed by rayon; the merge operation must therefore be associative and
//! commutative, which makes the result identical to the sequential fold no
//! matter how the work is split.

use crate::error::{Error, Result};
use crate::words::{Alphabet, Word};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Number of word indices a single fold task handles.
#[cfg(feature = "parallel")]
const CHUNK: u64 = 1 << 12;

/// The space `Z_m^n`, enumerated in lexicographic order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WordSpace {
    n: usize,
    alphabet: Alphabet,
}

impl WordSpace {
    pub fn new(n: usize, m: u32) -> Result<Self> {
        Ok(WordSpace {
            n,
            alphabet: Alphabet::new(m)?,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.alphabet.size()
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    /// `m^n`, or an error if it cannot be represented.
    pub fn cardinality(&self) -> Result<u128> {
        let m = self.m() as u128;
        let mut size: u128 = 1;
        for _ in 0..self.n {
            size = size
                .checked_mul(m)
                .ok_or_else(|| Error::Range(format!("{}^{} overflows", self.m(), self.n)))?;
        }
        Ok(size)
    }

    /// `m^n` checked against an enumeration cap.
    pub fn bounded_size(&self, cap: u64) -> Result<u64> {
        let size = self.cardinality().map_err(|_| Error::Capacity {
            required: u128::MAX,
            cap,
        })?;
        if size > cap as u128 {
            return Err(Error::Capacity {
                required: size,
                cap,
            });
        }
        Ok(size as u64)
    }

    /// Writes the symbols of the word with the given lexicographic index.
    pub fn decode_into(&self, index: u64, buf: &mut Vec<u32>) {
        let m = self.m() as u64;
        buf.clear();
        buf.resize(self.n, 0);
        let mut rest = index;
        for slot in buf.iter_mut().rev() {
            *slot = (rest % m) as u32;
            rest /= m;
        }
        debug_assert_eq!(rest, 0, "index {index} out of range for {self:?}");
    }

    pub fn word_at(&self, index: u64) -> Word {
        let mut buf = Vec::new();
        self.decode_into(index, &mut buf);
        Word::new(buf, self.alphabet).expect("decoded symbols are in range")
    }

    /// Lexicographic index of a word's symbols within this space.
    pub fn index_of(&self, symbols: &[u32]) -> u64 {
        debug_assert_eq!(symbols.len(), self.n);
        let m = self.m() as u64;
        symbols.iter().fold(0, |acc, &s| acc * m + s as u64)
    }

    /// Advances `symbols` to the lexicographic successor; returns `false`
    /// when the word was the last one and has wrapped around to all zeros.
    pub fn advance(&self, symbols: &mut [u32]) -> bool {
        let top = self.m() - 1;
        for slot in symbols.iter_mut().rev() {
            if *slot < top {
                *slot += 1;
                return true;
            }
            *slot = 0;
        }
        false
    }

    /// Sequential iterator over the whole space in lexicographic order.
    /// Callers that sweep large spaces should use [`fold_space`] instead.
    pub fn iter(&self) -> impl Iterator<Item = Word> + '_ {
        let size = self
            .cardinality()
            .expect("iterated spaces must be representable");
        (0..size).map(move |i| self.word_at(i as u64))
    }
}

fn fold_chunk<T, S>(space: &WordSpace, start: u64, end: u64, acc: &mut T, step: &S)
where
    S: Fn(&mut T, u64, &[u32]),
{
    let mut symbols = Vec::new();
    space.decode_into(start, &mut symbols);
    for index in start..end {
        step(acc, index, &symbols);
        space.advance(&mut symbols);
    }
}

/// Sequential fold over the whole space; the reference implementation the
/// parallel path must agree with.
pub fn fold_space_seq<T, I, S, M>(space: &WordSpace, cap: u64, init: I, step: S, _merge: M) -> Result<T>
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    S: Fn(&mut T, u64, &[u32]) + Sync + Send,
    M: Fn(T, T) -> T + Sync + Send,
{
    let size = space.bounded_size(cap)?;
    let mut acc = init();
    fold_chunk(space, 0, size, &mut acc, &step);
    Ok(acc)
}

/// Folds `step` over every word of the space and combines the partial
/// accumulators with `merge`.
///
/// `step` receives the accumulator, the word's lexicographic index, and its
/// symbols.  `merge` must be associative and commutative with `init()` as
/// identity; under that contract the parallel and sequential builds return
/// identical values.
#[cfg(feature = "parallel")]
pub fn fold_space<T, I, S, M>(space: &WordSpace, cap: u64, init: I, step: S, merge: M) -> Result<T>
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    S: Fn(&mut T, u64, &[u32]) + Sync + Send,
    M: Fn(T, T) -> T + Sync + Send,
{
    let size = space.bounded_size(cap)?;
    let chunks = size.div_ceil(CHUNK).max(1);
    let result = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let start = c * CHUNK;
            let end = (start + CHUNK).min(size);
            let mut acc = init();
            fold_chunk(space, start, end, &mut acc, &step);
            acc
        })
        .reduce(&init, merge);
    Ok(result)
}

#[cfg(not(feature = "parallel"))]
pub fn fold_space<T, I, S, M>(space: &WordSpace, cap: u64, init: I, step: S, merge: M) -> Result<T>
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    S: Fn(&mut T, u64, &[u32]) + Sync + Send,
    M: Fn(T, T) -> T + Sync + Send,
{
    fold_space_seq(space, cap, init, step, merge)
}
