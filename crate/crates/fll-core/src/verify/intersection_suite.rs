//! `intersections`: how single-deletion and single-insertion spheres of
//! distinct words can meet — never in more than two points, with the bound
//! attained — and the input-independent size of insertion spheres.

use super::{zero_violations, SuiteParams};
use crate::error::Result;
use crate::report::{Check, CheckStatus, VerificationReport};
use crate::space::WordSpace;
use crate::spheres::{deletion_sphere, insertion_sphere, WordSet};
use crate::words::Word;

struct PairScan {
    max: usize,
    witness: Option<(usize, usize)>,
    over_bound: u64,
}

fn scan_pairs(spheres: &[WordSet], bound: usize) -> PairScan {
    let mut scan = PairScan {
        max: 0,
        witness: None,
        over_bound: 0,
    };
    for i in 0..spheres.len() {
        for j in i + 1..spheres.len() {
            let shared = spheres[i].intersection_size(&spheres[j]);
            if shared > scan.max {
                scan.max = shared;
                scan.witness = Some((i, j));
            }
            if shared > bound {
                scan.over_bound += 1;
            }
        }
    }
    scan
}

fn push_pair_checks(
    report: &mut VerificationReport,
    label: &str,
    n: usize,
    words: &[Word],
    scan: PairScan,
) {
    let witness = scan
        .witness
        .map(|(i, j)| format!("{}|{}", words[i], words[j]))
        .unwrap_or_else(|| "none".into());
    let status = if scan.max == 2 && scan.over_bound == 0 {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail
    };
    report.push(Check::new(
        format!("{label}-pairwise-overlap-max(n={n})"),
        "2, attained",
        format!("{} (witness {witness}, {} pairs over bound)", scan.max, scan.over_bound),
        status,
    ));
}

pub(super) fn run(params: &SuiteParams) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("intersections");
    let m = params.m;
    let n_max = params.n_ceiling("intersections");
    report.set_parameter("m", m);
    report.set_parameter("n_max", n_max);

    for n in 2..=n_max {
        let space = WordSpace::new(n, m)?;
        space.bounded_size(params.max_space)?;
        let words: Vec<Word> = space.iter().collect();

        let deletions: Vec<WordSet> = words
            .iter()
            .map(|w| deletion_sphere(w, 1))
            .collect::<Result<_>>()?;
        push_pair_checks(&mut report, "deletion-spheres", n, &words, scan_pairs(&deletions, 2));

        let insertions: Vec<WordSet> = words
            .iter()
            .map(|w| insertion_sphere(w, 1))
            .collect::<Result<_>>()?;
        push_pair_checks(&mut report, "insertion-spheres", n, &words, scan_pairs(&insertions, 2));

        // |I_1(x)| = (n + 1)(m - 1) + 1 no matter what x is.
        let expected = (n as u64 + 1) * (m as u64 - 1) + 1;
        let off = insertions
            .iter()
            .filter(|sphere| sphere.len() as u64 != expected)
            .count() as u64;
        report.push(zero_violations(
            format!("insertion-sphere-size-is-constant(n={n})"),
            off,
            &format!("{} words, expected size {expected}", words.len()),
        ));
    }

    Ok(report)
}
