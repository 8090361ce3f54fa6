//! `codes`: agreement of every route to the correcting predicates —
//! exhaustive over small codeword pairs, then seeded random codebooks.

use super::{bounded_n, zero_violations, SuiteParams};
use crate::codes::{
    correct_and_detect_profile, is_del_ins_correcting, is_t_deletion_correcting,
    is_t_deletion_correcting_by_spheres, is_t_insertion_correcting, min_fll_distance,
    random_codebook, Codebook,
};
use crate::error::Result;
use crate::report::VerificationReport;
use crate::space::WordSpace;
use crate::spheres::SphereSpec;
use crate::words::Word;

pub(super) fn run(params: &SuiteParams) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("codes");
    let m = params.m;
    let n_max = params.n_ceiling("codes");
    // Pair sweeps cost |space|^2 sphere enumerations; keep the space small.
    let n_pairs = bounded_n(m, n_max, 128).max(2);
    report.set_parameter("m", m);
    report.set_parameter("n_max", n_max);
    report.set_parameter("pair_n_max", n_pairs);
    report.set_parameter("trials", params.trials);
    report.seed = Some(params.seed);

    // Every two-word codebook, every budget: the llcs shortcut must agree
    // with deletion spheres (all budgets), and with insertion spheres and
    // every mixed split (budgets up to 2, where enumeration stays cheap).
    for n in 2..=n_pairs {
        let space = WordSpace::new(n, m)?;
        let words: Vec<Word> = space.iter().collect();
        let mut disagreements = 0u64;
        let mut comparisons = 0u64;
        for i in 0..words.len() {
            for j in i + 1..words.len() {
                let code = Codebook::new([words[i].clone(), words[j].clone()])?;
                for t in 1..=n.min(3) {
                    let fast = is_t_deletion_correcting(&code, t)?;
                    comparisons += 1;
                    if fast != is_t_deletion_correcting_by_spheres(&code, t)? {
                        disagreements += 1;
                    }
                    if t <= 2 {
                        comparisons += 1;
                        if fast != is_t_insertion_correcting(&code, t)? {
                            disagreements += 1;
                        }
                        for deletions in 0..=t {
                            let spec = SphereSpec {
                                deletions,
                                insertions: t - deletions,
                            };
                            comparisons += 1;
                            if fast != is_del_ins_correcting(&code, spec)? {
                                disagreements += 1;
                            }
                        }
                    }
                }
            }
        }
        report.push(zero_violations(
            format!("pairwise-route-agreement(n={n})"),
            disagreements,
            &format!("{comparisons} comparisons"),
        ));
    }

    // Random codebooks: same agreement checks on multi-word codes, plus the
    // correct-and-detect budget split equivalence.
    let n_random_max = n_pairs.max(4);
    let mut route_violations = 0u64;
    let mut profile_violations = 0u64;
    let mut route_checks = 0u64;
    let mut profile_checks = 0u64;
    for trial in 0..params.trials {
        let n = 4 + trial % (n_random_max - 3);
        let size = 2 + trial % 4;
        let code = random_codebook(n, m, size, params.seed.wrapping_add(trial as u64), params.max_space)?;
        for t in 1..=2.min(n) {
            let fast = is_t_deletion_correcting(&code, t)?;
            route_checks += 1;
            if fast != is_t_deletion_correcting_by_spheres(&code, t)?
                || fast != is_t_insertion_correcting(&code, t)?
            {
                route_violations += 1;
            }
        }
        // Budget 2t + 1 = 3: the profile bit must equal "every split of the
        // budget keeps the spheres disjoint".
        let profile = correct_and_detect_profile(&code, 1)?;
        let mut all_splits = true;
        for deletions in 0..=3.min(n) {
            let spec = SphereSpec {
                deletions,
                insertions: 3 - deletions,
            };
            if !is_del_ins_correcting(&code, spec)? {
                all_splits = false;
            }
        }
        profile_checks += 1;
        if profile.corrects_all_splits != all_splits {
            profile_violations += 1;
        }
        debug_assert_eq!(profile.min_distance, min_fll_distance(&code)?);
    }
    report.push(zero_violations(
        "random-codebook-route-agreement".into(),
        route_violations,
        &format!("{route_checks} checks"),
    ));
    report.push(zero_violations(
        "random-codebook-profile-biconditional".into(),
        profile_violations,
        &format!("{profile_checks} codebooks"),
    ));

    Ok(report)
}
