//! Extremes of the radius-one ball size `|L_1(x)|` over all centers.
//!
//! The minimum is easy: every ball contains the Hamming ball of its center,
//! and the two coincide exactly for constant words, so the minimum is the
//! Hamming-ball size and is attained only at the `m` constant words.
//!
//! The maximum depends on the alphabet.  For `m >= 3` it is
//! `n^2 (m-1) - n + 2`, attained by the words with `n` runs in which symbols
//! two apart always differ (canonically `0120120..`).  Over the binary
//! alphabet the maximizers are the *balanced* words: all maximal alternating
//! segments as close to equal length as possible for the best segment count
//! `alpha`, which in turn is the integer (or tied pair of integers) nearest
//! `sqrt(1 + 2n) / 2`.  All selector arithmetic is exact — candidates are
//! compared by squaring, never through floating point.

use std::collections::BTreeSet;

use crate::balls::hamming_ball_size;
use crate::error::{Error, Result};
use crate::spheres::WordSet;
use crate::words::{alternating_segments, Alphabet, Word};

/// Minimal `|L_t(x)|` over all centers `x` of length `n > t`; equals the
/// Hamming-ball size and is attained only by constant words.
pub fn min_ball_size(n: usize, m: u32, t: usize) -> Result<u64> {
    if m < 2 {
        return Err(Error::Range("minimal ball sizes need m >= 2".into()));
    }
    if t >= n {
        return Err(Error::Range(format!(
            "minimal ball sizes need n > t, got n = {n}, t = {t}"
        )));
    }
    hamming_ball_size(n, m, t)
}

/// Maximal `|L_1(x)|` for `m >= 3`: `n^2 (m-1) - n + 2`.
pub fn max_ball_size_nonbinary(n: usize, m: u32) -> Result<u64> {
    if m < 3 {
        return Err(Error::Domain(format!(
            "the non-binary maximum formula needs m >= 3, got {m}"
        )));
    }
    if n == 0 {
        return Err(Error::Range("the maximum needs n >= 1".into()));
    }
    let n = n as u64;
    Ok(n * n * (m as u64 - 1) - n + 2)
}

/// A canonical maximizing center for `m >= 3`: the word `0120120..`, which
/// has `n` runs and never repeats a symbol two positions apart.
pub fn max_center_nonbinary(n: usize, m: u32) -> Result<Word> {
    if m < 3 {
        return Err(Error::Domain(format!(
            "the non-binary maximizer needs m >= 3, got {m}"
        )));
    }
    let symbols = (0..n).map(|i| (i % 3) as u32).collect();
    Word::new(symbols, Alphabet::new(m)?)
}

/// Whether every maximal alternating segment of `x` has one of the two
/// lengths `ceil(n/alpha)` or `ceil(n/alpha) - 1` and there are exactly
/// `alpha` of them.
pub fn is_balanced(x: &Word, alpha: usize) -> bool {
    let n = x.len();
    if alpha == 0 || alpha > n {
        return false;
    }
    let c = n.div_ceil(alpha);
    let profile = alternating_segments(x);
    profile.a() == alpha
        && profile
            .lengths
            .iter()
            .all(|&s| s == c || s + 1 == c)
}

/// Segment-length layout of the balanced binary words with `alpha` segments:
/// `k` segments of length `c = ceil(n/alpha)` followed by `alpha - k` of
/// length `c - 1`, where `k = n mod alpha` mapped into `1..=alpha`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BalancedProfile {
    pub n: usize,
    pub alpha: usize,
    pub c: usize,
    pub k: usize,
}

pub fn balanced_profile(n: usize, alpha: usize) -> Result<BalancedProfile> {
    if alpha == 0 || alpha > n {
        return Err(Error::Range(format!(
            "segment count must satisfy 1 <= alpha <= n, got alpha = {alpha}, n = {n}"
        )));
    }
    let c = n.div_ceil(alpha);
    let k = match n % alpha {
        0 => alpha,
        r => r,
    };
    debug_assert_eq!(k * c + (alpha - k) * (c - 1), n);
    Ok(BalancedProfile { n, alpha, c, k })
}

/// The canonical balanced binary word: long segments first, each segment
/// starting with the final symbol of the previous one, the first starting
/// with `0`.  For `alpha = n` this degenerates to the constant word `0^n`.
pub fn balanced_word(n: usize, alpha: usize) -> Result<Word> {
    let profile = balanced_profile(n, alpha)?;
    let mut symbols: Vec<u32> = Vec::with_capacity(n);
    let mut start = 0u32;
    for seg in 0..profile.alpha {
        let len = if seg < profile.k {
            profile.c
        } else {
            profile.c - 1
        };
        for offset in 0..len {
            symbols.push(start ^ (offset as u32 & 1));
        }
        start = *symbols.last().expect("segments are nonempty");
    }
    Word::new(symbols, Alphabet::new(2)?)
}

/// `|L_1|` of a balanced binary word with `alpha` segments:
///
/// ```text
/// (n + 1 - alpha)(n - 1) + 2 - k(c-1)(c-2)/2 - (alpha-k)(c-2)(c-3)/2
/// ```
pub fn balanced_ball_size(n: usize, alpha: usize) -> Result<u64> {
    let BalancedProfile { n, alpha, c, k } = balanced_profile(n, alpha)?;
    let (n, alpha, c, k) = (n as i128, alpha as i128, c as i128, k as i128);
    let value = (n + 1 - alpha) * (n - 1) + 2
        - k * (c - 1) * (c - 2) / 2
        - (alpha - k) * (c - 2) * (c - 3) / 2;
    u64::try_from(value).map_err(|_| Error::Domain(format!("ball size {value} is not a count")))
}

/// The segment counts nearest `sqrt(1 + 2n) / 2`; one value, or two on an
/// exact tie (which happens precisely at `n = 2 alpha (alpha + 1)`).
///
/// Comparisons are exact: for candidates `a < b`, `|a - s| < |b - s|` with
/// `s = sqrt(d)` iff `(a + b)^2 > 4 d`, so only integer squares are compared.
pub fn t_selector(n: usize) -> Result<BTreeSet<usize>> {
    if n == 0 {
        return Err(Error::Range("the selector needs n >= 1".into()));
    }
    let d = 1 + 2 * n as u128;
    // |2 alpha - sqrt(d)| is unimodal in alpha, so only candidates around
    // isqrt(d) / 2 can win; scan a safe window, comparing exactly.
    let center = (d.isqrt() / 2).max(1) as usize;
    let lo = center.saturating_sub(2).max(1);
    let hi = center + 2;
    let mut best: BTreeSet<usize> = BTreeSet::new();
    for alpha in lo..=hi {
        if best.is_empty() {
            best.insert(alpha);
            continue;
        }
        let incumbent = *best.iter().next().expect("nonempty");
        let (a, b) = (2 * incumbent.min(alpha) as u128, 2 * incumbent.max(alpha) as u128);
        let lhs = (a + b) * (a + b);
        let rhs = 4 * d;
        // f(smaller) < f(larger) iff lhs > rhs; tie iff equal.
        let smaller_wins = lhs > rhs;
        let tie = lhs == rhs;
        let newcomer_is_smaller = alpha < incumbent;
        if tie {
            best.insert(alpha);
        } else if smaller_wins == newcomer_is_smaller {
            best.clear();
            best.insert(alpha);
        }
    }
    Ok(best)
}

/// Whether `|L_1|` strictly grows when the balanced segment count steps from
/// `alpha - 1` to `alpha`; holds iff `n > 2 (alpha - 1) alpha`.
pub fn crossover_predicate(n: usize, alpha: usize) -> Result<bool> {
    if alpha < 2 || alpha > n {
        return Err(Error::Range(format!(
            "the crossover comparison needs 2 <= alpha <= n, got alpha = {alpha}, n = {n}"
        )));
    }
    Ok(n > 2 * (alpha - 1) * alpha)
}

/// Value and canonical centers of the binary maximum of `|L_1|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalResult {
    pub value: u64,
    /// The selected segment counts (one, or two on a tie).
    pub alpha_set: BTreeSet<usize>,
    /// Canonical balanced centers, one per selected `alpha`.  The complete
    /// maximizer set is every balanced word for these `alpha`; the `extremal`
    /// verification suite recovers it exhaustively.
    pub argmax_set: WordSet,
}

/// Maximal `|L_1(x)|` over binary centers of length `n`, via the balanced
/// closed form at the selected segment counts.
pub fn max_ball_size_binary(n: usize) -> Result<ExtremalResult> {
    let alpha_set = t_selector(n)?;
    let mut value = None;
    let mut argmax_set = WordSet::new(n);
    for &alpha in &alpha_set {
        let size = balanced_ball_size(n, alpha)?;
        match value {
            None => value = Some(size),
            // A tied selector means tied sizes; anything else is a bug.
            Some(prev) => assert_eq!(prev, size, "tied selectors must give equal sizes"),
        }
        argmax_set.insert(balanced_word(n, alpha)?)?;
    }
    Ok(ExtremalResult {
        value: value.expect("selector is nonempty"),
        alpha_set,
        argmax_set,
    })
}

/// Leading-order approximation `n^2 - sqrt(2) n^(3/2)` of the binary
/// maximum; the true value exceeds it by `O(n)`.
pub fn max_ball_asymptotic(n: usize) -> f64 {
    let n = n as f64;
    n * n - (2.0f64).sqrt() * n.powf(1.5)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::balls::fll_ball1_size_closed_form;
    use crate::words::runs;

    #[test]
    fn balanced_profiles_tile_the_word() {
        let p = balanced_profile(8, 3).unwrap();
        assert_eq!((p.c, p.k), (3, 2));
        let p = balanced_profile(8, 2).unwrap();
        assert_eq!((p.c, p.k), (4, 2));
        let p = balanced_profile(8, 8).unwrap();
        assert_eq!((p.c, p.k), (1, 8));
        assert!(balanced_profile(4, 5).is_err());
        assert!(balanced_profile(4, 0).is_err());
    }

    #[test]
    fn canonical_balanced_words() {
        assert_eq!(balanced_word(8, 2).unwrap().to_string(), "01011010");
        assert_eq!(balanced_word(4, 1).unwrap().to_string(), "0101");
        assert_eq!(balanced_word(5, 5).unwrap().to_string(), "00000");
        assert_eq!(balanced_word(8, 3).unwrap().to_string(), "01001001");
        // The construction must actually be balanced.
        for n in 1..=16 {
            for alpha in 1..=n {
                let word = balanced_word(n, alpha).unwrap();
                assert!(is_balanced(&word, alpha), "{word} is not {alpha}-balanced");
            }
        }
    }

    #[test]
    fn balanced_sizes_match_the_closed_form_of_the_canonical_word() {
        assert_eq!(balanced_ball_size(8, 2).unwrap(), 45);
        assert_eq!(balanced_ball_size(8, 1).unwrap(), 37);
        assert_eq!(balanced_ball_size(8, 3).unwrap(), 42);
        for n in 1..=12 {
            for alpha in 1..=n {
                assert_eq!(
                    balanced_ball_size(n, alpha).unwrap(),
                    fll_ball1_size_closed_form(&balanced_word(n, alpha).unwrap()).unwrap(),
                    "balanced size disagrees with the per-word closed form at (n, alpha) = ({n}, {alpha})"
                );
            }
        }
    }

    #[test]
    fn selector_examples_and_tie_points() {
        assert_eq!(t_selector(8).unwrap(), BTreeSet::from([2]));
        assert_eq!(t_selector(4).unwrap(), BTreeSet::from([1, 2]));
        assert_eq!(t_selector(1).unwrap(), BTreeSet::from([1]));
        assert_eq!(t_selector(12).unwrap(), BTreeSet::from([2, 3]));
        for n in 1..=2000 {
            let selected = t_selector(n).unwrap();
            assert!((1..=2).contains(&selected.len()));
            if selected.len() == 2 {
                let alpha = *selected.iter().next().unwrap();
                assert_eq!(n, 2 * alpha * (alpha + 1), "tie at unexpected n = {n}");
                assert_eq!(selected, BTreeSet::from([alpha, alpha + 1]));
            }
        }
    }

    #[test]
    fn selector_agrees_with_a_direct_scan_of_balanced_sizes() {
        for n in 1..=200 {
            let mut best = 0;
            let mut argmax = BTreeSet::new();
            for alpha in 1..=n {
                let size = balanced_ball_size(n, alpha).unwrap();
                if size > best {
                    best = size;
                    argmax = BTreeSet::from([alpha]);
                } else if size == best {
                    argmax.insert(alpha);
                }
            }
            assert_eq!(t_selector(n).unwrap(), argmax, "selector mismatch at n = {n}");
            assert_eq!(max_ball_size_binary(n).unwrap().value, best);
        }
    }

    #[test]
    fn crossover_matches_the_size_comparison() {
        assert!(crossover_predicate(5, 2).unwrap());
        assert!(!crossover_predicate(4, 2).unwrap()); // boundary: both 11
        assert_eq!(balanced_ball_size(4, 2).unwrap(), 11);
        assert_eq!(balanced_ball_size(4, 1).unwrap(), 11);
        assert!(!crossover_predicate(3, 2).unwrap());
        assert!(crossover_predicate(2, 3).is_err());
    }

    #[test]
    fn nonbinary_maximum_examples() {
        assert_eq!(max_ball_size_nonbinary(4, 3).unwrap(), 30);
        assert_eq!(max_ball_size_nonbinary(5, 4).unwrap(), 72);
        // 36 * 2 - 6 + 2; cross-checked by exhaustive enumeration over Z_3^6.
        assert_eq!(max_ball_size_nonbinary(6, 3).unwrap(), 68);
        assert!(max_ball_size_nonbinary(4, 2).is_err());
        let center = max_center_nonbinary(6, 3).unwrap();
        assert_eq!(center.to_string(), "012012");
        assert_eq!(runs(&center), 6);
        assert_eq!(fll_ball1_size_closed_form(&center).unwrap(), 68);
    }

    #[test]
    fn minimum_is_the_hamming_ball_size() {
        assert_eq!(min_ball_size(5, 3, 1).unwrap(), 11);
        assert_eq!(min_ball_size(8, 2, 1).unwrap(), 9);
        assert!(min_ball_size(3, 2, 3).is_err());
        assert!(min_ball_size(3, 1, 1).is_err());
    }

    #[test]
    fn asymptotic_residual_stays_linear() {
        // The O(n) residual hovers near 1.5 n; pin it into a generous band.
        for n in [16usize, 64, 256, 1024] {
            let exact = max_ball_size_binary(n).unwrap().value as f64;
            let ratio = (exact - max_ball_asymptotic(n)) / n as f64;
            assert!(
                (1.0..2.0).contains(&ratio),
                "residual ratio {ratio} out of band at n = {n}"
            );
        }
    }

    #[test]
    fn binary_maximum_carries_canonical_centers() {
        let res = max_ball_size_binary(8).unwrap();
        assert_eq!(res.value, 45);
        assert_eq!(res.alpha_set, BTreeSet::from([2]));
        let centers: Vec<String> = res.argmax_set.iter().map(|w| w.to_string()).collect();
        assert_eq!(centers, ["01011010"]);
        let res = max_ball_size_binary(4).unwrap();
        assert_eq!(res.value, 11);
        assert_eq!(res.argmax_set.len(), 2); // one canonical word per tied alpha
    }
}
