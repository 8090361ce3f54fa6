//! Hamming balls and fixed-length Levenshtein balls.
//!
//! The FLL ball `L_t(x)` is the set of length-`n` words within FLL distance
//! `t` of `x`.  Two independent enumeration routes are provided: filtering
//! the whole space by `llcs(x, y) >= n - t` (the default) and breadth-first
//! search in the graph whose edges join words at distance one, where the
//! neighbor step is generated from deletion/insertion spheres and never
//! consults an LCS.  The two must agree, and the verification suites exploit
//! that redundancy.
//!
//! For radius one the ball size has a closed form in terms of the center's
//! run count `rho` and maximal alternating segment lengths `s_1, .., s_a`:
//!
//! ```text
//! |L_1(x)| = rho(x) * (n(m - 1) - 1) + 2 - sum_i (s_i - 1)(s_i - 2) / 2
//! ```
//!
//! which collapses to the Hamming-ball size `1 + n(m-1)` exactly when `x` is
//! constant, and is what the `ball-formula` suite checks against brute force.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::lcs::llcs_symbols;
use crate::space::{fold_space, WordSpace};
use crate::spheres::{del_ins_sphere, SphereSpec, WordSet};
use crate::words::{alternating_segments, Word};

/// `sum_{i=0}^{t} C(n, i) (m-1)^i`, the number of words within Hamming
/// distance `t` of any fixed word of length `n` over `Z_m`.
pub fn hamming_ball_size(n: usize, m: u32, t: usize) -> Result<u64> {
    if m == 0 {
        return Err(Error::Range("alphabet size must be at least 1".into()));
    }
    if t > n {
        return Err(Error::Range(format!(
            "radius {t} exceeds the word length {n}"
        )));
    }
    let overflow = || Error::Range(format!("Hamming ball size for n = {n} overflows"));
    let mut total: u128 = 0;
    let mut binom: u128 = 1; // C(n, i), updated incrementally
    let mut power: u128 = 1; // (m - 1)^i
    for i in 0..=t {
        if i > 0 {
            binom = binom
                .checked_mul((n - i + 1) as u128)
                .ok_or_else(overflow)?
                / i as u128;
            power = power.checked_mul((m - 1) as u128).ok_or_else(overflow)?;
        }
        total = total
            .checked_add(binom.checked_mul(power).ok_or_else(overflow)?)
            .ok_or_else(overflow)?;
    }
    u64::try_from(total).map_err(|_| overflow())
}

/// Enumerates the Hamming ball `B_t(x)` by substituting up to `t` positions.
pub fn hamming_ball(x: &Word, t: usize) -> Result<WordSet> {
    if t > x.len() {
        return Err(Error::Range(format!(
            "radius {t} exceeds the word length {}",
            x.len()
        )));
    }
    let m = x.m();
    let mut set = WordSet::new(x.len());
    set.insert(x.clone())?;
    for i in 1..=t {
        for positions in (0..x.len()).combinations(i) {
            let substitutions = positions
                .iter()
                .map(|&p| (0..m).filter(move |&s| s != x.symbols()[p]))
                .multi_cartesian_product();
            for combo in substitutions {
                let mut symbols = x.symbols().to_vec();
                for (&p, &s) in positions.iter().zip(combo.iter()) {
                    symbols[p] = s;
                }
                set.insert(Word::new(symbols, x.alphabet())?)?;
            }
        }
    }
    Ok(set)
}

/// Enumerates `L_t(x)` by filtering `Z_m^n` on `llcs(x, y) >= n - t`.
///
/// The whole space is visited, so `m^n` must stay within `cap`.
pub fn fll_ball(x: &Word, t: usize, cap: u64) -> Result<WordSet> {
    let n = x.len();
    if t > n {
        return Err(Error::Range(format!(
            "radius {t} exceeds the word length {n}"
        )));
    }
    let space = WordSpace::new(n, x.m())?;
    let threshold = n - t;
    let center = x.symbols().to_vec();
    let members = fold_space(
        &space,
        cap,
        BTreeSet::<Word>::new,
        |acc, _, symbols| {
            let mut row = Vec::new();
            if llcs_symbols(&center, symbols, &mut row) >= threshold {
                acc.insert(Word::new(symbols.to_vec(), x.alphabet()).expect("space symbols"));
            }
        },
        |mut a, mut b| {
            a.append(&mut b);
            a
        },
    )?;
    WordSet::from_words(n, members)
}

/// Enumerates `L_t(x)` by BFS over the distance-one graph.
///
/// The neighbors of a word are the other length-`n` words reachable by one
/// deletion followed by one insertion, so this route is built entirely from
/// sphere enumeration and cross-checks the LCS filter of [`fll_ball`].
pub fn fll_ball_bfs(x: &Word, t: usize, cap: u64) -> Result<WordSet> {
    let n = x.len();
    if t > n {
        return Err(Error::Range(format!(
            "radius {t} exceeds the word length {n}"
        )));
    }
    WordSpace::new(n, x.m())?.bounded_size(cap)?;
    let mut visited = WordSet::new(n);
    visited.insert(x.clone())?;
    let mut frontier = vec![x.clone()];
    for _ in 0..t {
        let mut next = Vec::new();
        for word in frontier {
            let neighbors = del_ins_sphere(
                &word,
                SphereSpec {
                    deletions: 1,
                    insertions: 1,
                },
            )?;
            for neighbor in neighbors {
                if visited.insert(neighbor.clone())? {
                    next.push(neighbor);
                }
            }
        }
        frontier = next;
    }
    Ok(visited)
}

/// Allocation-light `|L_1(center)|` by scanning the space with the LCS
/// filter; the caller is responsible for having capped the space already.
pub(crate) fn ball1_size_by_filter(space: &WordSpace, center: &[u32]) -> u64 {
    let n = center.len();
    debug_assert_eq!(n, space.n());
    let size = space
        .cardinality()
        .expect("caller capped the space") as u64;
    let mut y = vec![0u32; n];
    let mut row = Vec::new();
    let mut count = 0;
    for _ in 0..size {
        if llcs_symbols(center, &y, &mut row) + 1 >= n {
            count += 1;
        }
        space.advance(&mut y);
    }
    count
}

/// Closed form for `|L_1(x)|`; see the module docs.  Requires `n >= 1`.
///
/// ```
/// use fll_core::{balls::fll_ball1_size_closed_form, Word};
///
/// let x = Word::parse("00110100", 2).unwrap();
/// assert_eq!(fll_ball1_size_closed_form(&x).unwrap(), 34);
/// ```
pub fn fll_ball1_size_closed_form(x: &Word) -> Result<u64> {
    if x.is_empty() {
        return Err(Error::Range(
            "the radius-one ball formula needs a nonempty word".into(),
        ));
    }
    let profile = alternating_segments(x);
    let n = x.len() as i128;
    let m = x.m() as i128;
    let rho = profile.rho as i128;
    let penalty: i128 = profile
        .lengths
        .iter()
        .map(|&s| {
            let s = s as i128;
            (s - 1) * (s - 2) / 2
        })
        .sum();
    let value = rho * (n * (m - 1) - 1) + 2 - penalty;
    u64::try_from(value).map_err(|_| Error::Domain(format!("ball size {value} is not a count")))
}

/// A ball description as produced for the CLI: the size always, the members
/// only when enumeration was requested.
#[derive(Debug, Clone)]
pub struct BallResult {
    pub center: Word,
    pub radius: usize,
    pub size: u64,
    pub members: Option<WordSet>,
}

/// Computes `|L_t(x)|`, taking the closed form for radius one and falling
/// back to enumeration otherwise; `enumerate` forces the member list.
pub fn fll_ball_result(x: &Word, t: usize, enumerate: bool, cap: u64) -> Result<BallResult> {
    let members = if enumerate || t != 1 {
        Some(fll_ball(x, t, cap)?)
    } else {
        None
    };
    let size = match &members {
        Some(set) => set.len() as u64,
        None => fll_ball1_size_closed_form(x)?,
    };
    Ok(BallResult {
        center: x.clone(),
        radius: t,
        size,
        members,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_MAX_SPACE;

    fn w(text: &str, m: u32) -> Word {
        Word::parse(text, m).unwrap()
    }

    #[test]
    fn hamming_ball_size_examples() {
        assert_eq!(hamming_ball_size(4, 2, 1).unwrap(), 5);
        assert_eq!(hamming_ball_size(4, 2, 0).unwrap(), 1);
        assert_eq!(hamming_ball_size(3, 2, 3).unwrap(), 8);
        assert_eq!(hamming_ball_size(5, 3, 1).unwrap(), 11);
        assert!(hamming_ball_size(3, 2, 4).is_err());
    }

    #[test]
    fn hamming_ball_matches_its_size_formula() {
        for (n, m, t) in [(4usize, 2u32, 1usize), (4, 2, 2), (3, 3, 2), (5, 2, 3)] {
            let space = WordSpace::new(n, m).unwrap();
            for x in space.iter() {
                let ball = hamming_ball(&x, t).unwrap();
                assert_eq!(ball.len() as u64, hamming_ball_size(n, m, t).unwrap());
                assert!(ball.contains(&x));
            }
        }
        // Over a unary alphabet nothing can be substituted.
        assert_eq!(hamming_ball(&w("000", 1), 2).unwrap().len(), 1);
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(fll_ball1_size_closed_form(&w("00110100", 2)).unwrap(), 34);
        assert_eq!(fll_ball1_size_closed_form(&w("0101", 2)).unwrap(), 11);
        assert_eq!(fll_ball1_size_closed_form(&w("0000", 2)).unwrap(), 5);
        assert_eq!(fll_ball1_size_closed_form(&w("010", 2)).unwrap(), 7);
        assert_eq!(fll_ball1_size_closed_form(&w("0120", 3)).unwrap(), 30);
        assert_eq!(fll_ball1_size_closed_form(&w("0", 1)).unwrap(), 1);
        assert!(fll_ball1_size_closed_form(&w("", 2)).is_err());
    }

    #[test]
    fn filtered_ball_of_a_short_alternating_word_is_the_whole_space() {
        let ball = fll_ball(&w("01", 2), 1, DEFAULT_MAX_SPACE).unwrap();
        assert_eq!(ball.len(), 4);
    }

    #[test]
    fn closed_form_matches_enumeration_exhaustively() {
        for (n_max, m) in [(8usize, 2u32), (5, 3)] {
            for n in 1..=n_max {
                let space = WordSpace::new(n, m).unwrap();
                for x in space.iter() {
                    let enumerated = fll_ball(&x, 1, DEFAULT_MAX_SPACE).unwrap().len() as u64;
                    assert_eq!(
                        fll_ball1_size_closed_form(&x).unwrap(),
                        enumerated,
                        "closed form disagrees at {x}"
                    );
                }
            }
        }
    }

    #[test]
    fn bfs_and_filter_agree() {
        for (n_max, m, t_max) in [(6usize, 2u32, 2usize), (4, 3, 2)] {
            for n in 1..=n_max {
                let space = WordSpace::new(n, m).unwrap();
                for t in 0..=t_max.min(n) {
                    for x in space.iter() {
                        let filtered = fll_ball(&x, t, DEFAULT_MAX_SPACE).unwrap();
                        let walked = fll_ball_bfs(&x, t, DEFAULT_MAX_SPACE).unwrap();
                        assert_eq!(filtered, walked, "ball routes disagree at {x}, t = {t}");
                    }
                }
            }
        }
    }

    #[test]
    fn hamming_ball_is_contained_and_equality_marks_constant_centers() {
        for (n_max, m, t_max) in [(5usize, 2u32, 2usize), (4, 3, 1)] {
            for n in 2..=n_max {
                for t in 1..=t_max.min(n - 1) {
                    let space = WordSpace::new(n, m).unwrap();
                    for x in space.iter() {
                        let hamming = hamming_ball(&x, t).unwrap();
                        let fll = fll_ball(&x, t, DEFAULT_MAX_SPACE).unwrap();
                        assert!(hamming.is_subset(&fll));
                        let constant = crate::words::runs(&x) <= 1;
                        assert_eq!(
                            hamming == fll,
                            constant,
                            "containment should be strict exactly for non-constant centers ({x})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn filtered_ball_respects_the_cap() {
        let x = w("0000000000000", 2);
        match fll_ball(&x, 1, 1 << 10) {
            Err(Error::Capacity { required, cap }) => {
                assert_eq!(required, 1 << 13);
                assert_eq!(cap, 1 << 10);
            }
            other => panic!("expected capacity error, got {other:?}"),
        }
    }

    #[test]
    fn ball_result_uses_closed_form_only_for_radius_one() {
        let res = fll_ball_result(&w("0101", 2), 1, false, DEFAULT_MAX_SPACE).unwrap();
        assert_eq!(res.size, 11);
        assert!(res.members.is_none());
        let res = fll_ball_result(&w("0101", 2), 2, false, DEFAULT_MAX_SPACE).unwrap();
        assert_eq!(res.members.as_ref().unwrap().len() as u64, res.size);
    }
}
