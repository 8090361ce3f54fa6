//! `anticodes`: maximal diameter-one sets of binary words — extreme sizes,
//! the weight-at-most-one construction, per-clique prefix structure, and the
//! deletion-sphere characterization of distance one.

use super::{bounded_n, zero_violations, SuiteParams};
use crate::anticodes::{
    enumerate_maximal_anticodes, is_maximal_anticode, weight_le_one_anticode,
};
use crate::error::Result;
use crate::lcs::fll_distance;
use crate::report::{Check, VerificationReport};
use crate::space::WordSpace;
use crate::spheres::{deletion_sphere, WordSet};

pub(super) fn run(params: &SuiteParams) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("anticodes");
    let n_max = params.n_ceiling("anticodes");
    report.set_parameter("m", 2);
    report.set_parameter("n_max", n_max);
    let clique_cap = params.max_space.min(1 << 12);

    // n = 2 sits below the general bounds: the distance-one graph on four
    // vertices is a square plus one diagonal, so both extremes are 3.
    if n_max >= 2 {
        let cliques = enumerate_maximal_anticodes(2, 2, 1, clique_cap)?;
        let sizes: Vec<usize> = cliques.iter().map(WordSet::len).collect();
        report.push(Check::compare(
            "degenerate-length-two-extremes".to_string(),
            "[3, 3]".to_string(),
            format!("{sizes:?}"),
        ));
    }

    for n in 3..=n_max {
        let cliques = enumerate_maximal_anticodes(n, 2, 1, clique_cap)?;
        let max = cliques.iter().map(WordSet::len).max().unwrap_or(0);
        let min = cliques.iter().map(WordSet::len).min().unwrap_or(0);
        report.push(Check::compare(
            format!("largest-maximal-anticode(n={n})"),
            n + 1,
            max,
        ));
        report.push(Check::compare(format!("smallest-maximal-anticode(n={n})"), 4, min));

        let low_weight = weight_le_one_anticode(n)?;
        report.push(Check::compare(
            format!("weight-le-one-set-is-maximal(n={n})"),
            true,
            is_maximal_anticode(&low_weight, 1, params.max_space)?
                && cliques.contains(&low_weight),
        ));

        // Within any maximal diameter-one anticode, split the members by
        // their last bit and drop it: the two prefix sets share at most one
        // word.
        let mut prefix_violations = 0u64;
        for clique in &cliques {
            let mut ends_zero = WordSet::new(n - 1);
            let mut ends_one = WordSet::new(n - 1);
            for word in clique.iter() {
                let target = if word.symbols()[n - 1] == 0 {
                    &mut ends_zero
                } else {
                    &mut ends_one
                };
                target.insert(word.prefix(n - 1))?;
            }
            if ends_zero.intersection_size(&ends_one) > 1 {
                prefix_violations += 1;
            }
        }
        report.push(zero_violations(
            format!("last-bit-prefix-overlap-at-most-one(n={n})"),
            prefix_violations,
            &format!("{} maximal anticodes", cliques.len()),
        ));
    }

    // Distance at most one is the same thing as the single-deletion spheres
    // meeting; this is the graph the cliques above live in, re-derived from
    // sphere enumeration instead of llcs.
    let duality_n_max = bounded_n(2, n_max, 64).max(2);
    report.set_parameter("duality_n_max", duality_n_max);
    let mut duality_violations = 0u64;
    let mut pairs_checked = 0u64;
    for n in 2..=duality_n_max {
        let space = WordSpace::new(n, 2)?;
        let words: Vec<_> = space.iter().collect();
        let spheres: Vec<WordSet> = words
            .iter()
            .map(|w| deletion_sphere(w, 1))
            .collect::<Result<_>>()?;
        for i in 0..words.len() {
            for j in i + 1..words.len() {
                pairs_checked += 1;
                let close = fll_distance(&words[i], &words[j])? <= 1;
                let meet = spheres[i].intersection_size(&spheres[j]) > 0;
                if close != meet {
                    duality_violations += 1;
                }
            }
        }
    }
    report.push(zero_violations(
        "distance-one-iff-deletion-spheres-meet".into(),
        duality_violations,
        &format!("{pairs_checked} pairs"),
    ));

    Ok(report)
}
