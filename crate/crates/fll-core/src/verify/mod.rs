//! Named verification suites.
//!
//! Each suite sweeps a bounded slice of `Z_m^n`, compares closed forms or
//! shortcut predicates against definition-level enumeration, and returns a
//! [`VerificationReport`].  Suites never sample silently: anything random is
//! seeded from [`SuiteParams::seed`] and the seed lands in the report.  Runs
//! with the same parameters produce byte-identical reports (modulo
//! `runtime_ms`) regardless of worker count, because every sweep is built on
//! order-independent merges.

mod anticode_suite;
mod average_suite;
mod ball_formula_suite;
mod code_suite;
mod extremal_suite;
mod intersection_suite;
mod metric_suite;

use std::collections::BTreeSet;
use std::time::Instant;

use crate::balls::{ball1_size_by_filter, fll_ball1_size_closed_form};
use crate::error::{Error, Result};
use crate::report::{Check, CheckStatus, VerificationReport};
use crate::space::{fold_space, WordSpace};
use crate::words::Word;
use crate::DEFAULT_MAX_SPACE;

/// Every suite name accepted by [`run_suite`], in the order `run_all` uses.
pub const SUITES: [&str; 7] = [
    "ball-formula",
    "extremal",
    "average",
    "anticodes",
    "codes",
    "metric-axioms",
    "intersections",
];

/// Knobs shared by all suites.  `n_max` of `None` picks a per-suite default
/// sized so the exhaustive sweeps stay in the seconds range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteParams {
    pub m: u32,
    pub n_max: Option<usize>,
    pub seed: u64,
    pub trials: usize,
    pub max_space: u64,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            m: 2,
            n_max: None,
            seed: 0x5eed,
            trials: 500,
            max_space: DEFAULT_MAX_SPACE,
        }
    }
}

impl SuiteParams {
    /// Sweep ceiling for a suite: the explicit override or the default table.
    pub fn n_ceiling(&self, suite: &str) -> usize {
        if let Some(n) = self.n_max {
            return n;
        }
        match suite {
            "ball-formula" | "extremal" => match self.m {
                0..=2 => 12,
                3 => 7,
                _ => 5,
            },
            "average" => match self.m {
                0..=2 => 10,
                3 => 6,
                _ => 4,
            },
            "anticodes" => 8,
            "codes" => 7,
            "metric-axioms" => match self.m {
                0..=2 => 8,
                3 => 5,
                _ => 4,
            },
            "intersections" => match self.m {
                0..=2 => 10,
                3 => 5,
                _ => 4,
            },
            _ => 6,
        }
    }
}

pub fn run_suite(name: &str, params: &SuiteParams) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = match name {
        "ball-formula" => ball_formula_suite::run(params)?,
        "extremal" => extremal_suite::run(params)?,
        "average" => average_suite::run(params)?,
        "anticodes" => anticode_suite::run(params)?,
        "codes" => code_suite::run(params)?,
        "metric-axioms" => metric_suite::run(params)?,
        "intersections" => intersection_suite::run(params)?,
        other => {
            return Err(Error::Usage(format!(
                "unknown suite `{other}` (expected one of {})",
                SUITES.join(", ")
            )))
        }
    };
    report.runtime_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

pub fn run_all(params: &SuiteParams) -> Result<Vec<VerificationReport>> {
    SUITES.iter().map(|name| run_suite(name, params)).collect()
}

/// Largest `k <= requested` with `m^k <= budget`; bounds the quadratic and
/// cubic parts of suites independently of the headline `n_max`.
pub(crate) fn bounded_n(m: u32, requested: usize, budget: u64) -> usize {
    let mut n = 0;
    let mut size: u64 = 1;
    while n < requested {
        match size.checked_mul(m as u64) {
            Some(next) if next <= budget => {
                size = next;
                n += 1;
            }
            _ => break,
        }
    }
    n
}

/// Outcome of sweeping every center of `Z_m^n`: how often the radius-one
/// closed form disagreed with enumeration, and the extreme enumerated sizes
/// with their complete argument sets (as word indices).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BallSweep {
    pub total: u64,
    pub mismatches: u64,
    pub first_mismatch: Option<u64>,
    pub min_size: u64,
    pub max_size: u64,
    pub argmin: BTreeSet<u64>,
    pub argmax: BTreeSet<u64>,
}

impl BallSweep {
    fn empty() -> Self {
        BallSweep {
            total: 0,
            mismatches: 0,
            first_mismatch: None,
            min_size: u64::MAX,
            max_size: 0,
            argmin: BTreeSet::new(),
            argmax: BTreeSet::new(),
        }
    }

    fn absorb(&mut self, index: u64, size: u64, formula_agrees: bool) {
        self.total += 1;
        if !formula_agrees {
            self.mismatches += 1;
            self.first_mismatch = Some(self.first_mismatch.map_or(index, |f| f.min(index)));
        }
        if size < self.min_size {
            self.min_size = size;
            self.argmin.clear();
        }
        if size <= self.min_size {
            self.argmin.insert(index);
        }
        if size > self.max_size {
            self.max_size = size;
            self.argmax.clear();
        }
        if size >= self.max_size {
            self.argmax.insert(index);
        }
    }

    fn merge(mut self, mut other: Self) -> Self {
        self.total += other.total;
        self.mismatches += other.mismatches;
        self.first_mismatch = match (self.first_mismatch, other.first_mismatch) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        match other.min_size.cmp(&self.min_size) {
            std::cmp::Ordering::Less => {
                self.min_size = other.min_size;
                self.argmin = other.argmin;
            }
            std::cmp::Ordering::Equal => self.argmin.append(&mut other.argmin),
            std::cmp::Ordering::Greater => {}
        }
        match other.max_size.cmp(&self.max_size) {
            std::cmp::Ordering::Greater => {
                self.max_size = other.max_size;
                self.argmax = other.argmax;
            }
            std::cmp::Ordering::Equal => self.argmax.append(&mut other.argmax),
            std::cmp::Ordering::Less => {}
        }
        self
    }
}

/// Enumerates `|L_1(x)|` for every `x` (a full inner scan per center, so the
/// cost is quadratic in `m^n`) and folds sizes and formula agreement into a
/// [`BallSweep`].  The merge is associative and commutative, so the result
/// does not depend on how the fold is chunked.
pub fn ball_sweep(n: usize, m: u32, cap: u64) -> Result<BallSweep> {
    if n == 0 {
        return Err(Error::Range("ball sweeps need n >= 1".into()));
    }
    let space = WordSpace::new(n, m)?;
    space.bounded_size(cap)?;
    fold_space(
        &space,
        cap,
        BallSweep::empty,
        |acc, index, symbols| {
            let enumerated = ball1_size_by_filter(&space, symbols);
            let word = Word::new(symbols.to_vec(), space.alphabet())
                .expect("space symbols are alphabet-valid");
            let closed = fll_ball1_size_closed_form(&word)
                .expect("closed form is total for nonempty words");
            acc.absorb(index, enumerated, enumerated == closed);
        },
        BallSweep::merge,
    )
}

/// A check that compares two index sets, rendering small sets inline and
/// summarizing the diff when they disagree.
pub(crate) fn set_check(
    name: String,
    description: &str,
    expected: &BTreeSet<u64>,
    actual: &BTreeSet<u64>,
) -> Check {
    if expected == actual {
        let detail = format!("{} ({description})", expected.len());
        Check::new(name, &detail, &detail, CheckStatus::Pass)
    } else {
        let missing = expected.difference(actual).count();
        let extra = actual.difference(expected).count();
        Check::new(
            name,
            format!("{} ({description})", expected.len()),
            format!("{} words: {missing} missing, {extra} unexpected", actual.len()),
            CheckStatus::Fail,
        )
    }
}

/// A check that expects a violation counter to be zero.
pub(crate) fn zero_violations(name: String, violations: u64, scope: &str) -> Check {
    let status = if violations == 0 {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail
    };
    Check::new(
        name,
        format!("0 violations over {scope}"),
        format!("{violations} violations over {scope}"),
        status,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_statistics_for_tiny_spaces() {
        // Z_2^2: sizes are |L_1(00)| = 3, |L_1(01)| = 4, |L_1(10)| = 4,
        // |L_1(11)| = 3, and the closed form matches everywhere.
        let sweep = ball_sweep(2, 2, 1 << 10).unwrap();
        assert_eq!(sweep.total, 4);
        assert_eq!(sweep.mismatches, 0);
        assert_eq!(sweep.first_mismatch, None);
        assert_eq!(sweep.min_size, 3);
        assert_eq!(sweep.max_size, 4);
        assert_eq!(sweep.argmin, BTreeSet::from([0, 3]));
        assert_eq!(sweep.argmax, BTreeSet::from([1, 2]));
    }

    #[test]
    fn sweep_merge_is_order_independent() {
        let mut left = BallSweep::empty();
        let mut right = BallSweep::empty();
        left.absorb(0, 3, true);
        left.absorb(1, 4, true);
        right.absorb(2, 4, false);
        right.absorb(3, 3, true);
        let ab = left.clone().merge(right.clone());
        let ba = right.merge(left);
        assert_eq!(ab, ba);
        assert_eq!(ab.mismatches, 1);
        assert_eq!(ab.first_mismatch, Some(2));
        assert_eq!(ab.argmin, BTreeSet::from([0, 3]));
        assert_eq!(ab.argmax, BTreeSet::from([1, 2]));
    }

    #[test]
    fn ceiling_table_respects_overrides() {
        let mut params = SuiteParams::default();
        assert_eq!(params.n_ceiling("ball-formula"), 12);
        assert_eq!(params.n_ceiling("average"), 10);
        params.m = 3;
        assert_eq!(params.n_ceiling("ball-formula"), 7);
        params.n_max = Some(4);
        assert_eq!(params.n_ceiling("ball-formula"), 4);
        assert_eq!(params.n_ceiling("anticodes"), 4);
    }

    #[test]
    fn bounded_n_caps_by_space_size() {
        assert_eq!(bounded_n(2, 10, 128), 7);
        assert_eq!(bounded_n(3, 10, 128), 4);
        assert_eq!(bounded_n(2, 3, 1 << 20), 3);
        assert_eq!(bounded_n(2, 10, 1), 0);
    }

    #[test]
    fn unknown_suites_are_usage_errors() {
        let err = run_suite("nonsense", &SuiteParams::default());
        assert!(matches!(err, Err(Error::Usage(_))));
    }
}
