//! `extremal`: extreme radius-one ball sizes against the exhaustive sweep —
//! the minimum with its argument set, the maximum with its argument set, and
//! the formula-level behaviour of the balanced-word machinery.

use std::collections::BTreeSet;

use super::{ball_sweep, set_check, zero_violations, SuiteParams};
use crate::error::Result;
use crate::extremal::{
    balanced_ball_size, crossover_predicate, is_balanced, max_ball_size_binary,
    max_ball_size_nonbinary, max_center_nonbinary, min_ball_size, t_selector,
};
use crate::report::{Check, VerificationReport};
use crate::space::WordSpace;
use crate::words::runs;

pub(super) fn run(params: &SuiteParams) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("extremal");
    let m = params.m;
    let n_max = params.n_ceiling("extremal");
    report.set_parameter("m", m);
    report.set_parameter("n_max", n_max);
    report.set_parameter("max_space", params.max_space);

    for n in 2..=n_max {
        let space = WordSpace::new(n, m)?;
        let sweep = ball_sweep(n, m, params.max_space)?;

        report.push(Check::compare(
            format!("minimum-ball-size(n={n})"),
            min_ball_size(n, m, 1)?,
            sweep.min_size,
        ));
        let constant_words: BTreeSet<u64> = (0..m)
            .map(|s| space.index_of(&vec![s; n]))
            .collect();
        report.push(set_check(
            format!("minimum-argument-set(n={n})"),
            "the constant words",
            &constant_words,
            &sweep.argmin,
        ));

        if m == 2 {
            let result = max_ball_size_binary(n)?;
            report.push(Check::compare(
                format!("maximum-ball-size(n={n})"),
                result.value,
                sweep.max_size,
            ));
            let mut balanced: BTreeSet<u64> = BTreeSet::new();
            for word in space.iter() {
                if result.alpha_set.iter().any(|&alpha| is_balanced(&word, alpha)) {
                    balanced.insert(space.index_of(word.symbols()));
                }
            }
            report.push(set_check(
                format!("maximum-argument-set(n={n})"),
                "the balanced words at the selected segment counts",
                &balanced,
                &sweep.argmax,
            ));
            let canonical_covered = result
                .argmax_set
                .iter()
                .all(|w| sweep.argmax.contains(&space.index_of(w.symbols())));
            report.push(Check::compare(
                format!("canonical-centers-maximize(n={n})"),
                true,
                canonical_covered,
            ));
        } else {
            report.push(Check::compare(
                format!("maximum-ball-size(n={n})"),
                max_ball_size_nonbinary(n, m)?,
                sweep.max_size,
            ));
            // Maximizers: n runs and no symbol repeated two positions apart.
            let mut predicted: BTreeSet<u64> = BTreeSet::new();
            for word in space.iter() {
                let symbols = word.symbols();
                let spread = (0..n.saturating_sub(2)).all(|i| symbols[i] != symbols[i + 2]);
                if runs(&word) == n && spread {
                    predicted.insert(space.index_of(symbols));
                }
            }
            report.push(set_check(
                format!("maximum-argument-set(n={n})"),
                "words with n runs and no repeat two apart",
                &predicted,
                &sweep.argmax,
            ));
            let canonical = max_center_nonbinary(n, m)?;
            report.push(Check::compare(
                format!("canonical-center-maximizes(n={n})"),
                true,
                sweep.argmax.contains(&space.index_of(canonical.symbols())),
            ));
        }
    }

    if m == 2 {
        // Formula-level checks, no enumeration: the closed form for balanced
        // words must rise, tie, and fall around the predicted boundaries, and
        // the selected segment counts must be exactly the argmax over alpha.
        let formula_n_max = 200;
        report.set_parameter("formula_n_max", formula_n_max);
        let mut trichotomy_violations = 0u64;
        let mut boundary_ties = 0u64;
        for n in 2..=formula_n_max {
            for alpha in 2..=n {
                let prev = balanced_ball_size(n, alpha - 1)?;
                let next = balanced_ball_size(n, alpha)?;
                let grows = crossover_predicate(n, alpha)?;
                let boundary = n == 2 * (alpha - 1) * alpha;
                let consistent = if grows {
                    next > prev
                } else if boundary {
                    next == prev
                } else {
                    next < prev
                };
                if !consistent {
                    trichotomy_violations += 1;
                }
                if boundary && next == prev {
                    boundary_ties += 1;
                }
            }
        }
        report.push(zero_violations(
            "segment-count-crossover-trichotomy".into(),
            trichotomy_violations,
            &format!("2 <= alpha <= n <= {formula_n_max}"),
        ));
        report.push(Check::compare(
            "crossover-boundaries-tie-exactly",
            (2..=formula_n_max)
                .filter(|&n| (2..=n).any(|alpha| n == 2 * (alpha - 1) * alpha))
                .count() as u64,
            boundary_ties,
        ));

        let mut selector_mismatches = 0u64;
        for n in 1..=formula_n_max {
            let mut best = 0u64;
            let mut argmax: BTreeSet<usize> = BTreeSet::new();
            for alpha in 1..=n {
                let size = balanced_ball_size(n, alpha)?;
                if size > best {
                    best = size;
                    argmax.clear();
                }
                if size >= best {
                    argmax.insert(alpha);
                }
            }
            if t_selector(n)? != argmax {
                selector_mismatches += 1;
            }
        }
        report.push(zero_violations(
            "selector-matches-argmax-over-alpha".into(),
            selector_mismatches,
            &format!("1 <= n <= {formula_n_max}"),
        ));
    }

    Ok(report)
}
