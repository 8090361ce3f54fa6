//! Diameter-bounded anticodes and their enumeration.
//!
//! A set of length-`n` words is an *anticode of diameter `t`* when every pair
//! of its members is within FLL distance `t`.  Such sets are exactly the
//! cliques of the graph on `Z_m^n` whose edges join words at distance at most
//! `t`, so the maximal anticodes are the maximal cliques, and this module
//! enumerates them with pivoted Bron–Kerbosch over bitsets.  Everything is
//! deterministic: vertices are visited in lexicographic word order and the
//! final clique list is sorted, so two runs (or a parallel and a sequential
//! run) produce identical output.
//!
//! The binary diameter-one case has known extremes — maximal anticodes have
//! at most `n + 1` and at least `4` members for `n > 2` — and the set
//! `{0^n} ∪ {e_1, .., e_n}` of words of weight at most one is a canonical
//! maximum; see the `anticodes` verification suite.

use crate::error::{Error, Result};
use crate::lcs::fll_distance;
use crate::space::WordSpace;
use crate::spheres::WordSet;
use crate::words::{Alphabet, Word};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Default cap on the number of graph vertices (`m^n`) for clique searches.
pub const DEFAULT_CLIQUE_CAP: u64 = 1 << 10;

type BitRow = Vec<u64>;

fn bit_get(row: &BitRow, i: usize) -> bool {
    row[i / 64] >> (i % 64) & 1 == 1
}

fn bit_set(row: &mut BitRow, i: usize) {
    row[i / 64] |= 1 << (i % 64);
}

fn bit_clear(row: &mut BitRow, i: usize) {
    row[i / 64] &= !(1 << (i % 64));
}

fn bit_and(a: &BitRow, b: &BitRow) -> BitRow {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

fn bit_count(row: &BitRow) -> usize {
    row.iter().map(|w| w.count_ones() as usize).sum()
}

fn bit_is_empty(row: &BitRow) -> bool {
    row.iter().all(|&w| w == 0)
}

fn bit_indices(row: &BitRow) -> Vec<usize> {
    let mut out = Vec::new();
    for (block, &bits) in row.iter().enumerate() {
        let mut rest = bits;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            out.push(block * 64 + i);
            rest &= rest - 1;
        }
    }
    out
}

/// The graph on `Z_m^n` with edges between distinct words at FLL distance at
/// most `max_distance`, held as a dense adjacency bitset.
pub struct FllGraph {
    space: WordSpace,
    max_distance: usize,
    adjacency: Vec<BitRow>,
}

impl FllGraph {
    pub fn build(n: usize, m: u32, max_distance: usize, cap: u64) -> Result<Self> {
        let space = WordSpace::new(n, m)?;
        let size = space.bounded_size(cap)? as usize;
        let words: Vec<Vec<u32>> = {
            let mut all = Vec::with_capacity(size);
            let mut symbols = vec![0u32; n];
            for _ in 0..size {
                all.push(symbols.clone());
                space.advance(&mut symbols);
            }
            all
        };
        let blocks = size.div_ceil(64).max(1);
        let row_for = |i: usize| -> BitRow {
            let mut row = vec![0u64; blocks];
            let mut scratch = Vec::new();
            for (j, other) in words.iter().enumerate() {
                if i != j {
                    let llcs = crate::lcs::llcs_symbols(&words[i], other, &mut scratch);
                    if n - llcs <= max_distance {
                        bit_set(&mut row, j);
                    }
                }
            }
            row
        };
        #[cfg(feature = "parallel")]
        let adjacency: Vec<BitRow> = (0..size).into_par_iter().map(row_for).collect();
        #[cfg(not(feature = "parallel"))]
        let adjacency: Vec<BitRow> = (0..size).map(row_for).collect();
        Ok(FllGraph {
            space,
            max_distance,
            adjacency,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn max_distance(&self) -> usize {
        self.max_distance
    }

    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        bit_get(&self.adjacency[i], j)
    }

    pub fn degree(&self, i: usize) -> usize {
        bit_count(&self.adjacency[i])
    }

    pub fn word(&self, i: usize) -> Word {
        self.space.word_at(i as u64)
    }

    /// All maximal cliques, each as a sorted list of vertex indices, the
    /// whole list sorted lexicographically.
    pub fn maximal_cliques(&self) -> Vec<Vec<usize>> {
        let size = self.vertex_count();
        let blocks = size.div_ceil(64).max(1);
        let mut p = vec![u64::MAX; blocks];
        // Mask off the bits beyond the last vertex.
        let spare = blocks * 64 - size;
        if spare > 0 {
            p[blocks - 1] >>= spare;
        }
        let x = vec![0u64; blocks];

        // Expand the root level branch by branch; each branch is independent
        // given the candidates processed before it, which makes the top level
        // trivially parallel.
        let candidates = self.pivot_candidates(&p, &x);
        let branch = |(k, &v): (usize, &usize)| -> Vec<Vec<usize>> {
            let mut p_branch = p.clone();
            let mut x_branch = x.clone();
            for &earlier in &candidates[..k] {
                bit_clear(&mut p_branch, earlier);
                bit_set(&mut x_branch, earlier);
            }
            bit_clear(&mut p_branch, v);
            let mut out = Vec::new();
            let mut r = vec![v];
            self.expand(
                &mut r,
                bit_and(&p_branch, &self.adjacency[v]),
                bit_and(&x_branch, &self.adjacency[v]),
                &mut out,
            );
            out
        };
        #[cfg(feature = "parallel")]
        let mut cliques: Vec<Vec<usize>> = candidates
            .par_iter()
            .enumerate()
            .flat_map_iter(branch)
            .collect();
        #[cfg(not(feature = "parallel"))]
        let mut cliques: Vec<Vec<usize>> = candidates.iter().enumerate().flat_map(branch).collect();
        cliques.sort();
        cliques
    }

    /// Candidates `P \ N(pivot)` where the pivot maximizes `|P ∩ N(u)|` over
    /// `P ∪ X` (ties to the smallest vertex, keeping the order fixed).
    fn pivot_candidates(&self, p: &BitRow, x: &BitRow) -> Vec<usize> {
        let mut pivot = None;
        let mut best = 0;
        for u in bit_indices(p).into_iter().chain(bit_indices(x)) {
            let reach = bit_count(&bit_and(p, &self.adjacency[u]));
            if pivot.is_none() || reach > best {
                pivot = Some(u);
                best = reach;
            }
        }
        match pivot {
            Some(u) => bit_indices(p)
                .into_iter()
                .filter(|&v| !bit_get(&self.adjacency[u], v))
                .collect(),
            None => Vec::new(),
        }
    }

    fn expand(&self, r: &mut Vec<usize>, p: BitRow, x: BitRow, out: &mut Vec<Vec<usize>>) {
        if bit_is_empty(&p) && bit_is_empty(&x) {
            let mut clique = r.clone();
            clique.sort_unstable();
            out.push(clique);
            return;
        }
        let mut p = p;
        let mut x = x;
        for v in self.pivot_candidates(&p, &x) {
            bit_clear(&mut p, v);
            r.push(v);
            self.expand(
                r,
                bit_and(&p, &self.adjacency[v]),
                bit_and(&x, &self.adjacency[v]),
                out,
            );
            r.pop();
            bit_set(&mut x, v);
        }
    }
}

/// Whether every pair of members is within distance `t`.
pub fn is_anticode(words: &WordSet, t: usize) -> Result<bool> {
    let members: Vec<&Word> = words.iter().collect();
    for (i, x) in members.iter().enumerate() {
        for y in &members[i + 1..] {
            if fll_distance(x, y)? > t {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether `words` is an anticode of diameter `t` that no word of the
/// surrounding space extends.  The whole space is scanned, so `m^n <= cap`.
pub fn is_maximal_anticode(words: &WordSet, t: usize, cap: u64) -> Result<bool> {
    if words.is_empty() {
        return Err(Error::Domain("maximality of an empty set is undefined".into()));
    }
    if !is_anticode(words, t)? {
        return Ok(false);
    }
    let first = words.iter().next().expect("nonempty");
    let space = WordSpace::new(first.len(), first.m())?;
    space.bounded_size(cap)?;
    for candidate in space.iter() {
        if words.contains(&candidate) {
            continue;
        }
        let mut extends = true;
        for member in words.iter() {
            if fll_distance(member, &candidate)? > t {
                extends = false;
                break;
            }
        }
        if extends {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every maximal anticode of diameter `t` in `Z_m^n`, in deterministic order.
pub fn enumerate_maximal_anticodes(
    n: usize,
    m: u32,
    t: usize,
    cap: u64,
) -> Result<Vec<WordSet>> {
    let graph = FllGraph::build(n, m, t, cap)?;
    graph
        .maximal_cliques()
        .into_iter()
        .map(|clique| WordSet::from_words(n, clique.into_iter().map(|i| graph.word(i))))
        .collect()
}

/// `(max, min)` cardinality over all maximal anticodes of diameter `t`.
pub fn extreme_maximal_anticode_sizes(
    n: usize,
    m: u32,
    t: usize,
    cap: u64,
) -> Result<(usize, usize)> {
    let cliques = enumerate_maximal_anticodes(n, m, t, cap)?;
    let max = cliques.iter().map(WordSet::len).max();
    let min = cliques.iter().map(WordSet::len).min();
    match (max, min) {
        (Some(max), Some(min)) => Ok((max, min)),
        _ => Err(Error::Domain("no anticodes in an empty space".into())),
    }
}

/// The binary words of Hamming weight at most one: `{0^n, e_1, .., e_n}`,
/// a diameter-one anticode of `n + 1` members (maximal for `n >= 2`).
pub fn weight_le_one_anticode(n: usize) -> Result<WordSet> {
    if n == 0 {
        return Err(Error::Range("need n >= 1".into()));
    }
    let alphabet = Alphabet::new(2)?;
    let mut set = WordSet::new(n);
    set.insert(Word::new(vec![0; n], alphabet)?)?;
    for i in 0..n {
        let mut symbols = vec![0; n];
        symbols[i] = 1;
        set.insert(Word::new(symbols, alphabet)?)?;
    }
    Ok(set)
}

/// Deletes the last coordinate of every member (set semantics: words that
/// collide after puncturing count once).
pub fn puncture(words: &WordSet) -> Result<WordSet> {
    if words.word_len() == 0 {
        return Err(Error::Range("cannot puncture length-zero words".into()));
    }
    WordSet::from_words(
        words.word_len() - 1,
        words.iter().map(|w| w.prefix(w.len() - 1)),
    )
}
