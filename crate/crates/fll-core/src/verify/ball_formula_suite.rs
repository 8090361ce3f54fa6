//! `ball-formula`: the radius-one ball-size closed form against exhaustive
//! enumeration, every center, every length up to the ceiling.

use super::{ball_sweep, SuiteParams};
use crate::error::Result;
use crate::report::{Check, CheckStatus, VerificationReport};
use crate::space::WordSpace;

pub(super) fn run(params: &SuiteParams) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("ball-formula");
    let n_max = params.n_ceiling("ball-formula");
    report.set_parameter("m", params.m);
    report.set_parameter("n_max", n_max);
    report.set_parameter("max_space", params.max_space);

    for n in 1..=n_max {
        let sweep = ball_sweep(n, params.m, params.max_space)?;
        let name = format!("closed-form-matches-enumeration(n={n})");
        if sweep.mismatches == 0 {
            report.push(Check::new(
                name,
                format!("0 mismatches over {} centers", sweep.total),
                format!("0 mismatches over {} centers", sweep.total),
                CheckStatus::Pass,
            ));
        } else {
            let space = WordSpace::new(n, params.m)?;
            let witness = sweep
                .first_mismatch
                .map(|i| space.word_at(i).to_string())
                .unwrap_or_default();
            report.push(Check::new(
                name,
                format!("0 mismatches over {} centers", sweep.total),
                format!(
                    "{} mismatches over {} centers (first at {witness})",
                    sweep.mismatches, sweep.total
                ),
                CheckStatus::Fail,
            ));
        }
    }
    Ok(report)
}
