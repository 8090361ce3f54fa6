//! `fll` — explore the fixed-length Levenshtein metric from the shell:
//! distances, spheres, balls, extremal centers, expectations, anticodes,
//! codebook checks, and the self-verification suites.
//!
//! Exit codes: 0 when everything asked for holds, 1 when a checked property
//! fails, 2 for usage or input errors.

use std::collections::BTreeSet;
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};

use fll_core::anticodes::enumerate_maximal_anticodes;
use fll_core::average::{documented_delta, rational_str, ExpectationReport};
use fll_core::balls::fll_ball_result;
use fll_core::codes::{
    is_del_ins_correcting, is_t_deletion_correcting, is_t_deletion_correcting_by_spheres,
    is_t_insertion_correcting, min_fll_distance, Codebook,
};
use fll_core::extremal::{
    max_ball_size_binary, max_ball_size_nonbinary, max_center_nonbinary, min_ball_size,
};
use fll_core::lcs::fll_distance;
use fll_core::report::{Check, CheckStatus, ReportFormat, VerificationReport};
use fll_core::spheres::{del_ins_sphere, SphereSpec};
use fll_core::verify::{ball_sweep, run_all, run_suite, SuiteParams, SUITES};
use fll_core::words::Word;

#[derive(Parser)]
#[command(name = "fll", version, about = "Fixed-length Levenshtein metric toolkit")]
struct Cli {
    /// Alphabet size; words are over {0, .., m-1}.
    #[arg(long, global = true, default_value_t = 2)]
    m: u32,

    /// Word length, for commands that work on a whole space.
    #[arg(long, global = true)]
    n: Option<usize>,

    /// Seed for anything randomized (recorded in reports).
    #[arg(long, global = true, default_value_t = 0x5eed)]
    seed: u64,

    /// Worker threads for parallel sweeps (defaults to one per CPU).
    #[arg(long, global = true)]
    workers: Option<usize>,

    /// Cap on how many words any single enumeration may visit.
    #[arg(long, global = true, default_value_t = fll_core::DEFAULT_MAX_SPACE)]
    max_space: u64,

    /// Output format: text, json, or csv.  Defaults to text, except
    /// `average`, which defaults to json.
    #[arg(long, global = true)]
    format: Option<String>,

    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Distance between two equal-length words.
    Dist { x: String, y: String },

    /// Size (and optionally members) of the ball around a center.
    Ball {
        center: String,
        #[arg(long, default_value_t = 1)]
        radius: usize,
        /// List the members instead of only counting them.
        #[arg(long)]
        enumerate: bool,
    },

    /// Members of a deletion / insertion / composite sphere.
    Sphere {
        #[arg(long)]
        center: String,
        /// Symbols to delete first.
        #[arg(long, default_value_t = 0)]
        del: usize,
        /// Symbols to insert afterwards.
        #[arg(long, default_value_t = 0)]
        ins: usize,
    },

    /// Extreme radius-one ball sizes over Z_m^n (requires --n).
    Extremes {
        /// Also sweep the whole space and cross-check the formulas.
        #[arg(long)]
        exhaustive: bool,
    },

    /// Expected segment statistics and ball size over Z_m^n (requires --n).
    Average,

    /// Maximal anticodes of diameter t over Z_m^n (requires --n).
    Anticodes {
        #[arg(long, default_value_t = 1)]
        t: usize,
        /// List every maximal anticode, not just the extreme sizes.
        #[arg(long)]
        list: bool,
    },

    /// Check correcting properties of a codebook file ("n m" header, one
    /// word per line).  Exits 1 if a requested property fails.
    CheckCode {
        #[arg(long)]
        file: PathBuf,
        /// Deletions the code must correct.
        #[arg(long)]
        t_del: Option<usize>,
        /// Insertions the code must correct.
        #[arg(long)]
        t_ins: Option<usize>,
    },

    /// Run a verification suite (or `all`).  Exits 1 if any check fails.
    Verify {
        /// One of: ball-formula, extremal, average, anticodes, codes,
        /// metric-axioms, intersections, all.
        #[arg(default_value = "all")]
        suite: String,
        /// Random codebooks to draw in the codes suite.
        #[arg(long, default_value_t = 500)]
        trials: usize,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            std::process::exit(2);
        }
    }
}

fn run(cli: Cli) -> Result<i32> {
    if let Some(workers) = cli.workers {
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global()
            .context("could not configure the worker pool")?;
    }
    match &cli.command {
        Command::Dist { x, y } => dist(&cli, x, y),
        Command::Ball {
            center,
            radius,
            enumerate,
        } => ball(&cli, center, *radius, *enumerate),
        Command::Sphere { center, del, ins } => sphere(&cli, center, *del, *ins),
        Command::Extremes { exhaustive } => extremes(&cli, *exhaustive),
        Command::Average => average(&cli),
        Command::Anticodes { t, list } => anticodes(&cli, *t, *list),
        Command::CheckCode { file, t_del, t_ins } => check_code(&cli, file, *t_del, *t_ins),
        Command::Verify { suite, trials } => verify(&cli, suite, *trials),
    }
}

fn format_for(cli: &Cli, default: ReportFormat) -> Result<ReportFormat> {
    match &cli.format {
        None => Ok(default),
        Some(text) => Ok(text.parse()?),
    }
}

fn parse_word(text: &str, m: u32) -> Result<Word> {
    Word::parse(text, m).with_context(|| format!("could not read `{text}` over an alphabet of {m}"))
}

fn emit(cli: &Cli, payload: String) -> Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, payload)
            .with_context(|| format!("could not write {}", path.display())),
        None => {
            print!("{payload}");
            Ok(())
        }
    }
}

fn require_n(cli: &Cli) -> Result<usize> {
    cli.n.ok_or_else(|| anyhow!("this command needs --n"))
}

fn no_csv(format: ReportFormat, command: &str) -> Result<ReportFormat> {
    if format == ReportFormat::Csv {
        bail!("csv output is only defined for check reports; `{command}` supports text or json");
    }
    Ok(format)
}

fn dist(cli: &Cli, x: &str, y: &str) -> Result<i32> {
    let format = no_csv(format_for(cli, ReportFormat::Text)?, "dist")?;
    let x = parse_word(x, cli.m)?;
    let y = parse_word(y, cli.m)?;
    let d = fll_distance(&x, &y)?;
    let payload = match format {
        ReportFormat::Json => pretty(serde_json::json!({
            "m": cli.m, "x": x.to_string(), "y": y.to_string(), "distance": d,
        })),
        _ => format!("{d}\n"),
    };
    emit(cli, payload)?;
    Ok(0)
}

fn ball(cli: &Cli, center: &str, radius: usize, enumerate: bool) -> Result<i32> {
    let format = no_csv(format_for(cli, ReportFormat::Text)?, "ball")?;
    let center = parse_word(center, cli.m)?;
    let result = fll_ball_result(&center, radius, enumerate, cli.max_space)?;
    let payload = match format {
        ReportFormat::Json => pretty(serde_json::json!({
            "m": cli.m,
            "center": result.center.to_string(),
            "radius": result.radius,
            "size": result.size,
            "members": result.members.as_ref().map(|set| {
                set.iter().map(Word::to_string).collect::<Vec<_>>()
            }),
        })),
        _ => {
            let mut text = String::new();
            if let Some(members) = &result.members {
                for word in members.iter() {
                    text.push_str(&format!("{word}\n"));
                }
            }
            text.push_str(&format!("size {}\n", result.size));
            text
        }
    };
    emit(cli, payload)?;
    Ok(0)
}

fn sphere(cli: &Cli, center: &str, del: usize, ins: usize) -> Result<i32> {
    let format = no_csv(format_for(cli, ReportFormat::Text)?, "sphere")?;
    let center = parse_word(center, cli.m)?;
    let spec = SphereSpec {
        deletions: del,
        insertions: ins,
    };
    let members = del_ins_sphere(&center, spec)?;
    let payload = match format {
        ReportFormat::Json => pretty(serde_json::json!({
            "m": cli.m,
            "center": center.to_string(),
            "deletions": del,
            "insertions": ins,
            "size": members.len(),
            "members": members.iter().map(Word::to_string).collect::<Vec<_>>(),
        })),
        _ => {
            let mut text = String::new();
            for word in members.iter() {
                text.push_str(&format!("{word}\n"));
            }
            text.push_str(&format!("size {}\n", members.len()));
            text
        }
    };
    emit(cli, payload)?;
    Ok(0)
}

fn extremes(cli: &Cli, exhaustive: bool) -> Result<i32> {
    let format = no_csv(format_for(cli, ReportFormat::Text)?, "extremes")?;
    let n = require_n(cli)?;
    let m = cli.m;
    let minimum = min_ball_size(n, m, 1)?;
    let (maximum, centers): (u64, Vec<String>) = if m == 2 {
        let result = max_ball_size_binary(n)?;
        (
            result.value,
            result.argmax_set.iter().map(Word::to_string).collect(),
        )
    } else {
        (
            max_ball_size_nonbinary(n, m)?,
            vec![max_center_nonbinary(n, m)?.to_string()],
        )
    };

    let sweep = if exhaustive {
        Some(ball_sweep(n, m, cli.max_space)?)
    } else {
        None
    };
    let consistent = sweep.as_ref().map_or(true, |s| {
        s.mismatches == 0 && s.min_size == minimum && s.max_size == maximum
    });

    let payload = match format {
        ReportFormat::Json => pretty(serde_json::json!({
            "n": n,
            "m": m,
            "min_size": minimum,
            "max_size": maximum,
            "max_centers": centers,
            "sweep": sweep.as_ref().map(|s| serde_json::json!({
                "centers": s.total,
                "formula_mismatches": s.mismatches,
                "min_size": s.min_size,
                "max_size": s.max_size,
                "minimizers": s.argmin.len(),
                "maximizers": s.argmax.len(),
            })),
            "consistent": consistent,
        })),
        _ => {
            let mut text = format!(
                "n {n}, m {m}\nmin |L_1| {minimum} (constant words)\nmax |L_1| {maximum} (e.g. {})\n",
                centers.join(", ")
            );
            if let Some(s) = &sweep {
                text.push_str(&format!(
                    "sweep over {} centers: min {} at {} words, max {} at {} words, {} formula mismatches\n",
                    s.total, s.min_size, s.argmin.len(), s.max_size, s.argmax.len(), s.mismatches
                ));
                text.push_str(if consistent {
                    "formulas agree with the sweep\n"
                } else {
                    "FORMULAS DISAGREE WITH THE SWEEP\n"
                });
            }
            text
        }
    };
    emit(cli, payload)?;
    Ok(if consistent { 0 } else { 1 })
}

fn average_as_report(expectations: &ExpectationReport) -> VerificationReport {
    let mut report = VerificationReport::new("average");
    report.set_parameter("n", expectations.n);
    report.set_parameter("m", expectations.m);
    for row in &expectations.rows {
        let predicted = documented_delta(row.quantity, expectations.n, expectations.m);
        let status = if rational_str(&row.delta) == "0" {
            CheckStatus::Pass
        } else if row.delta == predicted {
            CheckStatus::DocumentedDelta
        } else {
            CheckStatus::Fail
        };
        report.push(Check::new(
            row.quantity.label(),
            rational_str(&row.closed_form),
            rational_str(&row.oracle),
            status,
        ));
    }
    report
}

fn average(cli: &Cli) -> Result<i32> {
    let format = format_for(cli, ReportFormat::Json)?;
    let n = require_n(cli)?;
    let expectations = ExpectationReport::compute(n, cli.m, cli.max_space)?;
    let payload = match format {
        ReportFormat::Json => pretty(expectations.to_json()),
        ReportFormat::Text => expectations.to_text(),
        ReportFormat::Csv => average_as_report(&expectations).to_csv(),
    };
    emit(cli, payload)?;
    Ok(0)
}

fn anticodes(cli: &Cli, t: usize, list: bool) -> Result<i32> {
    let format = no_csv(format_for(cli, ReportFormat::Text)?, "anticodes")?;
    let n = require_n(cli)?;
    let cap = cli.max_space.min(1 << 12);
    let cliques = enumerate_maximal_anticodes(n, cli.m, t, cap)?;
    let largest = cliques.iter().map(|c| c.len()).max().unwrap_or(0);
    let smallest = cliques.iter().map(|c| c.len()).min().unwrap_or(0);
    let sizes: BTreeSet<usize> = cliques.iter().map(|c| c.len()).collect();
    let payload = match format {
        ReportFormat::Json => pretty(serde_json::json!({
            "n": n,
            "m": cli.m,
            "t": t,
            "count": cliques.len(),
            "largest": largest,
            "smallest": smallest,
            "sizes": sizes,
            "anticodes": if list {
                Some(cliques.iter().map(|c| {
                    c.iter().map(Word::to_string).collect::<Vec<_>>()
                }).collect::<Vec<_>>())
            } else {
                None
            },
        })),
        _ => {
            let mut text = format!(
                "{} maximal anticodes of diameter {t} over Z_{}^{n}; sizes {} to {}\n",
                cliques.len(),
                cli.m,
                smallest,
                largest
            );
            if list {
                for clique in &cliques {
                    let words: Vec<String> = clique.iter().map(Word::to_string).collect();
                    text.push_str(&format!("{}\n", words.join(" ")));
                }
            }
            text
        }
    };
    emit(cli, payload)?;
    Ok(0)
}

fn bool_check(name: String, actual: bool) -> Check {
    Check::new(
        name,
        "true",
        if actual { "true" } else { "false" },
        if actual {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        },
    )
}

fn check_code(cli: &Cli, file: &PathBuf, t_del: Option<usize>, t_ins: Option<usize>) -> Result<i32> {
    let format = format_for(cli, ReportFormat::Text)?;
    let text = std::fs::read_to_string(file)
        .with_context(|| format!("could not read {}", file.display()))?;
    let code = Codebook::from_file_str(&text)?;

    let mut report = VerificationReport::new("check-code");
    report.set_parameter("file", file.display());
    report.set_parameter("n", code.word_len());
    report.set_parameter("m", code.m());
    report.set_parameter("codewords", code.len());

    if code.len() >= 2 {
        let d = min_fll_distance(&code)?;
        report.push(Check::new("min-distance", d, d, CheckStatus::Pass));
    }
    if let Some(t) = t_del {
        report.push(bool_check(
            format!("corrects-{t}-deletions(pairwise)"),
            is_t_deletion_correcting(&code, t)?,
        ));
        report.push(bool_check(
            format!("corrects-{t}-deletions(spheres)"),
            is_t_deletion_correcting_by_spheres(&code, t)?,
        ));
    }
    if let Some(t) = t_ins {
        report.push(bool_check(
            format!("corrects-{t}-insertions(spheres)"),
            is_t_insertion_correcting(&code, t)?,
        ));
    }
    if let (Some(del), Some(ins)) = (t_del, t_ins) {
        let spec = SphereSpec {
            deletions: del,
            insertions: ins,
        };
        report.push(bool_check(
            format!("corrects-{del}-deletions-then-{ins}-insertions(spheres)"),
            is_del_ins_correcting(&code, spec)?,
        ));
    }

    let passed = report.passed();
    let mut payload = report.emit(format);
    if !payload.ends_with('\n') {
        payload.push('\n');
    }
    emit(cli, payload)?;
    Ok(if passed { 0 } else { 1 })
}

fn verify(cli: &Cli, suite: &str, trials: usize) -> Result<i32> {
    let format = format_for(cli, ReportFormat::Text)?;
    let params = SuiteParams {
        m: cli.m,
        n_max: cli.n,
        seed: cli.seed,
        trials,
        max_space: cli.max_space,
    };
    let reports = if suite == "all" {
        run_all(&params)?
    } else {
        if !SUITES.contains(&suite) {
            bail!(
                "unknown suite `{suite}` (expected one of {}, or all)",
                SUITES.join(", ")
            );
        }
        vec![run_suite(suite, &params)?]
    };
    let passed = reports.iter().all(VerificationReport::passed);
    let payload = match format {
        ReportFormat::Json if reports.len() == 1 => {
            let mut json = reports[0].to_json();
            json.push('\n');
            json
        }
        ReportFormat::Json => {
            let mut json =
                serde_json::to_string_pretty(&reports).expect("reports always serialize");
            json.push('\n');
            json
        }
        ReportFormat::Text => reports
            .iter()
            .map(VerificationReport::to_text)
            .collect::<Vec<_>>()
            .join("\n"),
        ReportFormat::Csv => {
            let mut out = String::new();
            for (i, report) in reports.iter().enumerate() {
                let csv = report.to_csv();
                if i == 0 {
                    out.push_str(&csv);
                } else if let Some((_, rows)) = csv.split_once('\n') {
                    out.push_str(rows);
                }
            }
            out
        }
    };
    emit(cli, payload)?;
    Ok(if passed { 0 } else { 1 })
}

fn pretty(value: serde_json::Value) -> String {
    let mut text = serde_json::to_string_pretty(&value).expect("json values always serialize");
    text.push('\n');
    text
}
