//! Longest common subsequences and the fixed-length Levenshtein distance.
//!
//! For words of equal length `n` the distance is `n - llcs(x, y)`: the
//! smallest `t` such that some word can be reached from both `x` and `y` by
//! deleting `t` symbols from each.  Symmetry and the identity axiom are
//! immediate; the triangle inequality holds because the distance is the
//! shortest-path metric of the graph whose edges join words at distance one
//! (see the `metric-axioms` verification suite for the exhaustive check).

use crate::error::{Error, Result};
use crate::words::Word;

/// Length of a longest common subsequence, via the classic dynamic program
/// kept to a single row.
///
/// ```
/// use fll_core::{lcs::llcs, Word};
///
/// let x = Word::parse("0011", 2).unwrap();
/// let y = Word::parse("0101", 2).unwrap();
/// assert_eq!(llcs(&x, &y).unwrap(), 3);
/// ```
pub fn llcs(x: &Word, y: &Word) -> Result<usize> {
    check_alphabets(x, y)?;
    let mut row = Vec::new();
    Ok(llcs_symbols(x.symbols(), y.symbols(), &mut row))
}

/// Row-reusing kernel behind [`llcs`]; the sweeps call this directly to avoid
/// re-allocating the DP row for every pair.
pub(crate) fn llcs_symbols(x: &[u32], y: &[u32], row: &mut Vec<usize>) -> usize {
    row.clear();
    row.resize(y.len() + 1, 0);
    for &xs in x {
        let mut diag = 0;
        for (j, &ys) in y.iter().enumerate() {
            let above = row[j + 1];
            row[j + 1] = if xs == ys {
                diag + 1
            } else {
                above.max(row[j])
            };
            diag = above;
        }
    }
    row[y.len()]
}

/// The fixed-length Levenshtein distance `n - llcs(x, y)`.
///
/// Errors if the words have different lengths or different alphabets.
pub fn fll_distance(x: &Word, y: &Word) -> Result<usize> {
    check_alphabets(x, y)?;
    if x.len() != y.len() {
        return Err(Error::Length {
            expected: x.len(),
            actual: y.len(),
        });
    }
    let mut row = Vec::new();
    Ok(x.len() - llcs_symbols(x.symbols(), y.symbols(), &mut row))
}

/// Whether `y` can be obtained from `x` by deleting `|x| - |y|` symbols.
pub fn is_subsequence(y: &Word, x: &Word) -> bool {
    is_subsequence_symbols(y.symbols(), x.symbols())
}

pub(crate) fn is_subsequence_symbols(y: &[u32], x: &[u32]) -> bool {
    let mut rest = y.iter();
    let mut next = rest.next();
    for &s in x {
        match next {
            Some(&want) if want == s => next = rest.next(),
            Some(_) => {}
            None => return true,
        }
    }
    next.is_none()
}

fn check_alphabets(x: &Word, y: &Word) -> Result<()> {
    if x.m() != y.m() {
        return Err(Error::AlphabetMismatch {
            left: x.m(),
            right: y.m(),
        });
    }
    Ok(())
}
