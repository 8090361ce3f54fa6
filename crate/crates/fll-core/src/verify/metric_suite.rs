//! `metric-axioms`: the distance really is a graphic metric — symmetry,
//! identity, triangle inequality, agreement between the llcs formula and
//! breadth-first graph distance, sphere/subsequence duality, and the
//! substitution-ball containment.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{bounded_n, zero_violations, SuiteParams};
use crate::balls::{fll_ball, fll_ball_bfs, hamming_ball};
use crate::error::Result;
use crate::lcs::{fll_distance, is_subsequence};
use crate::report::VerificationReport;
use crate::space::WordSpace;
use crate::spheres::{deletion_sphere, insertion_sphere, WordSet};
use crate::words::Word;

pub(super) fn run(params: &SuiteParams) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("metric-axioms");
    let m = params.m;
    let n_max = params.n_ceiling("metric-axioms");
    report.set_parameter("m", m);
    report.set_parameter("n_max", n_max);
    report.seed = Some(params.seed);

    // Axioms need the full distance table; the triangle pass is cubic in the
    // space, so its range is bounded separately.
    let triangle_n_max = bounded_n(m, n_max, 400).max(1);
    report.set_parameter("triangle_n_max", triangle_n_max);
    for n in 1..=triangle_n_max {
        let space = WordSpace::new(n, m)?;
        let words: Vec<Word> = space.iter().collect();
        let v = words.len();
        let mut table = vec![vec![0usize; v]; v];
        for i in 0..v {
            for j in 0..v {
                table[i][j] = fll_distance(&words[i], &words[j])?;
            }
        }
        let mut symmetry = 0u64;
        let mut identity = 0u64;
        for i in 0..v {
            for j in 0..v {
                if table[i][j] != table[j][i] {
                    symmetry += 1;
                }
                if (table[i][j] == 0) != (i == j) {
                    identity += 1;
                }
            }
        }
        let mut triangle = 0u64;
        for i in 0..v {
            for j in 0..v {
                for k in 0..v {
                    if table[i][k] > table[i][j] + table[j][k] {
                        triangle += 1;
                    }
                }
            }
        }
        let scope = format!("{v} words");
        report.push(zero_violations(format!("symmetry(n={n})"), symmetry, &scope));
        report.push(zero_violations(
            format!("zero-distance-iff-equal(n={n})"),
            identity,
            &scope,
        ));
        report.push(zero_violations(
            format!("triangle-inequality(n={n})"),
            triangle,
            &format!("{v}^3 triples"),
        ));
    }

    // The llcs-based ball must equal the ball grown edge by edge in the
    // distance-one graph.  Small spaces exhaustively, larger ones on a seeded
    // sample of centers.
    let bfs_n_max = bounded_n(m, n_max, 256).max(1);
    report.set_parameter("bfs_n_max", bfs_n_max);
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut bfs_violations = 0u64;
    let mut bfs_checks = 0u64;
    for n in 1..=bfs_n_max {
        let space = WordSpace::new(n, m)?;
        let size = space.bounded_size(params.max_space)?;
        let centers: Vec<u64> = if size <= 64 {
            (0..size).collect()
        } else {
            (0..32).map(|_| rng.gen_range(0..size)).collect()
        };
        for index in centers {
            let center = space.word_at(index);
            for t in 1..=n.min(2) {
                bfs_checks += 1;
                if fll_ball(&center, t, params.max_space)?
                    != fll_ball_bfs(&center, t, params.max_space)?
                {
                    bfs_violations += 1;
                }
            }
        }
    }
    report.push(zero_violations(
        "filter-ball-equals-bfs-ball".into(),
        bfs_violations,
        &format!("{bfs_checks} balls"),
    ));

    // Enumerated spheres against the subsequence relation they encode:
    // D_t(x) is exactly the length-(n-t) subsequences of x, and I_t(y) is
    // exactly the length-(|y|+t) supersequences of y.
    let duality_n_max = bounded_n(m, n_max, 128).max(1);
    report.set_parameter("duality_n_max", duality_n_max);
    let mut deletion_violations = 0u64;
    let mut insertion_violations = 0u64;
    for n in 1..=duality_n_max {
        let space = WordSpace::new(n, m)?;
        for t in 1..=n {
            let small = WordSpace::new(n - t, m)?;
            for x in space.iter() {
                let sphere = deletion_sphere(&x, t)?;
                let expected = WordSet::from_words(
                    n - t,
                    small.iter().filter(|y| is_subsequence(y, &x)),
                )?;
                if sphere != expected {
                    deletion_violations += 1;
                }
            }
            for y in small.iter() {
                let sphere = insertion_sphere(&y, t)?;
                let expected =
                    WordSet::from_words(n, space.iter().filter(|x| is_subsequence(&y, x)))?;
                if sphere != expected {
                    insertion_violations += 1;
                }
            }
        }
    }
    report.push(zero_violations(
        "deletion-spheres-are-subsequence-sets".into(),
        deletion_violations,
        &format!("n <= {duality_n_max}, all budgets"),
    ));
    report.push(zero_violations(
        "insertion-spheres-are-supersequence-sets".into(),
        insertion_violations,
        &format!("n <= {duality_n_max}, all budgets"),
    ));

    // Substituting at most t positions never leaves the distance-t ball, and
    // only constant words have no other way to stay inside it.
    let containment_n_max = bounded_n(m, n_max, 128).max(1);
    report.set_parameter("containment_n_max", containment_n_max);
    let mut containment_violations = 0u64;
    let mut equality_violations = 0u64;
    for n in 1..=containment_n_max {
        let space = WordSpace::new(n, m)?;
        for x in space.iter() {
            let constant = x.symbols().iter().all(|&s| s == x.symbols()[0]);
            for t in 1..=n.saturating_sub(1).min(2) {
                let hamming = hamming_ball(&x, t)?;
                let fll = fll_ball(&x, t, params.max_space)?;
                if !hamming.is_subset(&fll) {
                    containment_violations += 1;
                }
                if (hamming == fll) != constant {
                    equality_violations += 1;
                }
            }
        }
    }
    report.push(zero_violations(
        "substitution-ball-inside-fll-ball".into(),
        containment_violations,
        &format!("n <= {containment_n_max}, t <= 2"),
    ));
    report.push(zero_violations(
        "containment-strict-except-constant-centers".into(),
        equality_violations,
        &format!("n <= {containment_n_max}, t <= 2"),
    ));

    Ok(report)
}
