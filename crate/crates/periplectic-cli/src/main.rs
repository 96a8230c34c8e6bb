//! `peri`: batch front end over the exact periplectic Brauer kernel.
//!
//! Exit codes are a stable contract: 0 success, 1 usage error, 2 verification
//! failure.

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use periplectic::algebra::{derived_identity_set, relation_set};
use periplectic::analysis::{
    center_action_check, check_calibrated_constraints, closed_form_eigenvalue_check, is_calibrated,
    is_irreducible, radical_probe, restriction_filtration, spectrum, theta_tilde_action,
    RestrictionOutcome, Spectrum, SymmetricPolynomial,
};
use periplectic::bratteli::{bratteli, spectrum_from_paths, BratteliGraph};
use periplectic::json::{emit, rep_to_json};
use periplectic::linalg::{format_rational, parse_rational, rat, ri, Rational};
use periplectic::rep::{
    build_a4_fixture, build_exterior, build_standard, restrict, verify_relations, A4Fixture,
    Representation, VerificationReport,
};
use std::fmt::Write as _;
use std::path::PathBuf;

const EXIT_USAGE: i32 = 1;
const EXIT_VERIFICATION: i32 = 2;

/// Environment variable naming the default directory for `--output` paths.
const OUTPUT_DIR_ENV: &str = "PERI_OUTPUT_DIR";

#[derive(Parser)]
#[command(
    name = "peri",
    version,
    about = "Exact computations with periplectic Brauer algebra representations"
)]
struct Cli {
    /// Write the emitted artifact to this file instead of standard output.
    /// Relative paths resolve against $PERI_OUTPUT_DIR when it is set.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build representations or verify the relation grid against them.
    Rep {
        #[command(subcommand)]
        action: RepAction,
    },
    /// Joint y-eigenvalue tuples of an exterior-power module.
    Spectrum(SpectrumArgs),
    /// Emit the branching graph.
    Bratteli(BratteliArgs),
    /// Restrict an exterior-power module by one strand.
    Restrict(RestrictArgs),
    /// Run structural checks on one module.
    Analyze(AnalyzeArgs),
    /// Built-in fixture matrix sets.
    Fixtures {
        #[command(subcommand)]
        family: FixtureFamily,
    },
}

#[derive(Subcommand)]
enum RepAction {
    /// Emit a representation as canonical JSON.
    Build(RepBuildArgs),
    /// Verify the defining relations over an alpha grid.
    Verify(RepVerifyArgs),
}

#[derive(Args)]
struct RepBuildArgs {
    #[arg(long)]
    n: usize,
    /// Exterior degree; omit together with --standard.
    #[arg(long, conflicts_with = "standard")]
    k: Option<usize>,
    /// Build the reflection representation instead of an exterior power.
    #[arg(long)]
    standard: bool,
    /// y_1 scalar, as `p/q` or an integer.
    #[arg(long, default_value = "0")]
    alpha: String,
}

#[derive(Args)]
struct RepVerifyArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    /// Comma-separated alpha sample grid.
    #[arg(long, default_value = "0,1,-2,7/3")]
    alpha_grid: String,
    /// Also check the derived identity set.
    #[arg(long)]
    derived: bool,
    /// Bead exponent cap for the derived identities.
    #[arg(long, default_value_t = 3)]
    bead_bound: usize,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum SpectrumFormat {
    Csv,
    Json,
}

#[derive(Args)]
struct SpectrumArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    /// Generate from branching-graph paths instead of reading matrices.
    #[arg(long)]
    from_paths: bool,
    #[arg(long, value_enum, default_value_t = SpectrumFormat::Csv)]
    format: SpectrumFormat,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum BratteliLabels {
    Partitions,
    Dims,
    Contents,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum BratteliFormat {
    Dot,
    Text,
}

#[derive(Args)]
struct BratteliArgs {
    #[arg(long)]
    levels: usize,
    #[arg(long, value_enum, default_value_t = BratteliLabels::Partitions)]
    labels: BratteliLabels,
    #[arg(long, value_enum, default_value_t = BratteliFormat::Dot)]
    format: BratteliFormat,
}

#[derive(Args)]
struct RestrictArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    /// Report the filtration structure instead of emitting matrices.
    #[arg(long)]
    analyze: bool,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value = "0")]
    alpha: String,
    /// Comma-separated subset of:
    /// calibrated,constraints,irreducible,center,radical,closed-form.
    #[arg(
        long,
        default_value = "calibrated,constraints,irreducible,center,radical,closed-form"
    )]
    checks: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Word-length cap for radical probes.
    #[arg(long, default_value_t = 6)]
    word_cap: usize,
    /// Random word count for the even-strand radical probe.
    #[arg(long, default_value_t = 200)]
    samples: usize,
}

#[derive(Subcommand)]
enum FixtureFamily {
    /// The three 4-strand fixtures.
    A4(FixtureArgs),
}

#[derive(Args)]
struct FixtureArgs {
    /// One of std31, wedge212, candidate22.
    #[arg(long)]
    label: String,
    /// Verify the defining relations instead of emitting matrices.
    #[arg(long)]
    verify: bool,
}

enum AppError {
    Usage(String),
    Verification(String),
    Io(String),
}

impl From<periplectic::Error> for AppError {
    fn from(e: periplectic::Error) -> Self {
        AppError::Usage(e.to_string())
    }
}

type AppResult<T> = Result<T, AppError>;

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return 0;
            }
            eprint!("{e}");
            return EXIT_USAGE;
        }
    };
    let out = cli.output;
    let result = match cli.command {
        Command::Rep { action } => match action {
            RepAction::Build(args) => rep_build(args),
            RepAction::Verify(args) => rep_verify(args),
        },
        Command::Spectrum(args) => spectrum_cmd(args),
        Command::Bratteli(args) => bratteli_cmd(args),
        Command::Restrict(args) => restrict_cmd(args),
        Command::Analyze(args) => analyze_cmd(args),
        Command::Fixtures { family } => match family {
            FixtureFamily::A4(args) => fixtures_a4(args),
        },
    };
    match result {
        Ok(text) => match write_out(out, &text) {
            Ok(()) => 0,
            Err(AppError::Io(msg)) => {
                eprintln!("error: {msg}");
                EXIT_USAGE
            }
            Err(_) => unreachable!(),
        },
        Err(AppError::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(AppError::Verification(msg)) => {
            // The report still goes to standard output; the message explains
            // the nonzero exit.
            print!("{msg}");
            eprintln!("verification failed");
            EXIT_VERIFICATION
        }
        Err(AppError::Io(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
    }
}

fn write_out(path: Option<PathBuf>, text: &str) -> AppResult<()> {
    match path {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(p) => {
            let resolved = if p.is_relative() {
                match std::env::var_os(OUTPUT_DIR_ENV) {
                    Some(dir) => PathBuf::from(dir).join(p),
                    None => p,
                }
            } else {
                p
            };
            std::fs::write(&resolved, text)
                .map_err(|e| AppError::Io(format!("cannot write {}: {e}", resolved.display())))
        }
    }
}

fn parse_alpha(s: &str) -> AppResult<Rational> {
    parse_rational(s).map_err(|e| AppError::Usage(format!("bad alpha {s:?}: {e}")))
}

fn rep_build(args: RepBuildArgs) -> AppResult<String> {
    let alpha = parse_alpha(&args.alpha)?;
    let rep = if args.standard {
        build_standard(args.n, alpha)?
    } else {
        let k = args
            .k
            .ok_or_else(|| AppError::Usage("either --k or --standard is required".into()))?;
        build_exterior(args.n, k, alpha)?
    };
    Ok(emit(&rep_to_json(&rep)))
}

fn report_lines(header: &str, report: &VerificationReport, out: &mut String) {
    let failures = report.failed_tags();
    if failures.is_empty() {
        let _ = writeln!(
            out,
            "{header}: {} checks, all passed",
            report.entries().len()
        );
    } else {
        let _ = writeln!(
            out,
            "{header}: {} checks, {} FAILED: {}",
            report.entries().len(),
            failures.len(),
            failures.join(", ")
        );
    }
}

fn rep_verify(args: RepVerifyArgs) -> AppResult<String> {
    let relations = relation_set(args.n)?;
    let derived = if args.derived {
        Some(derived_identity_set(args.n, args.bead_bound)?)
    } else {
        None
    };
    let mut out = String::new();
    let mut ok = true;
    for alpha_text in args.alpha_grid.split(',') {
        let alpha = parse_alpha(alpha_text.trim())?;
        let rep = build_exterior(args.n, args.k, alpha.clone())?;
        let report = verify_relations(&rep, &relations)?;
        ok &= report.all_passed();
        report_lines(
            &format!(
                "relations n={} k={} alpha={}",
                args.n,
                args.k,
                format_rational(&alpha)
            ),
            &report,
            &mut out,
        );
        if let Some(derived) = &derived {
            let report = verify_relations(&rep, derived)?;
            ok &= report.all_passed();
            report_lines(
                &format!(
                    "derived   n={} k={} alpha={} (bead bound {})",
                    args.n,
                    args.k,
                    format_rational(&alpha),
                    args.bead_bound
                ),
                &report,
                &mut out,
            );
        }
    }
    if ok {
        Ok(out)
    } else {
        Err(AppError::Verification(out))
    }
}

fn spectrum_text(sp: &Spectrum, n: usize, k: usize, format: SpectrumFormat) -> String {
    let tuples = sp.sorted_tuples();
    match format {
        SpectrumFormat::Csv => {
            let mut out = String::new();
            for t in &tuples {
                let line: Vec<String> = t.iter().map(format_rational).collect();
                let _ = writeln!(out, "{}", line.join(","));
            }
            out
        }
        SpectrumFormat::Json => {
            let arr: Vec<Vec<String>> = tuples
                .iter()
                .map(|t| t.iter().map(format_rational).collect())
                .collect();
            let value = serde_json::json!({
                "n": n,
                "k": k,
                "count": arr.len(),
                "tuples": arr,
            });
            let mut s = serde_json::to_string_pretty(&value).expect("serialization cannot fail");
            s.push('\n');
            s
        }
    }
}

fn spectrum_cmd(args: SpectrumArgs) -> AppResult<String> {
    let sp = if args.from_paths {
        spectrum_from_paths(args.n, args.k)?
    } else {
        spectrum(&build_exterior(args.n, args.k, ri(0))?)?
    };
    Ok(spectrum_text(&sp, args.n, args.k, args.format))
}

fn bratteli_text(g: &BratteliGraph, labels: BratteliLabels) -> Vec<Vec<String>> {
    (1..=g.level_count())
        .map(|n| match labels {
            BratteliLabels::Partitions => g.partition_labels(n),
            BratteliLabels::Dims => g.dimension_labels(n).iter().map(u128::to_string).collect(),
            BratteliLabels::Contents => g.content_labels(n).iter().map(i64::to_string).collect(),
        })
        .collect()
}

fn bratteli_cmd(args: BratteliArgs) -> AppResult<String> {
    let g = bratteli(args.levels)?;
    let label_rows = bratteli_text(&g, args.labels);
    let mut out = String::new();
    match args.format {
        BratteliFormat::Text => {
            for row in &label_rows {
                let _ = writeln!(out, "{}", row.join(" "));
            }
        }
        BratteliFormat::Dot => {
            let _ = writeln!(out, "digraph bratteli {{");
            for (level, row) in label_rows.iter().enumerate() {
                for (idx, label) in row.iter().enumerate() {
                    let _ = writeln!(out, "  L{}_{idx} [label=\"{label}\"];", level + 1);
                }
            }
            for &(level, from, to) in g.edges() {
                let _ = writeln!(out, "  L{level}_{from} -> L{}_{to};", level + 1);
            }
            let _ = writeln!(out, "}}");
        }
    }
    Ok(out)
}

fn restrict_cmd(args: RestrictArgs) -> AppResult<String> {
    if !args.analyze {
        let rep = build_exterior(args.n, args.k, ri(0))?;
        let restricted = restrict(&rep)?;
        return Ok(emit(&rep_to_json(&restricted)));
    }
    let mut out = String::new();
    match restriction_filtration(args.n, args.k)? {
        RestrictionOutcome::Plain { iso } => {
            let _ = writeln!(
                out,
                "restriction n={} k={}: equals {iso}; no filtration",
                args.n, args.k
            );
        }
        RestrictionOutcome::Filtration(f) => {
            let _ = writeln!(
                out,
                "restriction n={} k={}: sub dim {} ({}), quotient dim {} ({}), split={}, commutant dim {}",
                args.n,
                args.k,
                f.sub_indices.len(),
                f.sub_iso,
                f.quotient_indices.len(),
                f.quotient_iso,
                f.split,
                f.commutant_dim
            );
        }
    }
    Ok(out)
}

fn known_checks() -> [&'static str; 6] {
    [
        "calibrated",
        "constraints",
        "irreducible",
        "center",
        "radical",
        "closed-form",
    ]
}

fn analyze_cmd(args: AnalyzeArgs) -> AppResult<String> {
    let alpha = parse_alpha(&args.alpha)?;
    let rep = build_exterior(args.n, args.k, alpha)?;
    let requested: Vec<&str> = args.checks.split(',').map(str::trim).collect();
    for c in &requested {
        if !known_checks().contains(c) {
            return Err(AppError::Usage(format!(
                "unknown check {c:?}; expected a subset of {}",
                known_checks().join(",")
            )));
        }
    }
    let mut out = String::new();
    let mut ok = true;
    let line = |name: &str, passed: bool, detail: String, out: &mut String| {
        let status = if passed { "PASS" } else { "FAIL" };
        if detail.is_empty() {
            let _ = writeln!(out, "check {name}: {status}");
        } else {
            let _ = writeln!(out, "check {name}: {status} ({detail})");
        }
        passed
    };
    for check in requested {
        let passed = match check {
            "calibrated" => line("calibrated", is_calibrated(&rep), String::new(), &mut out),
            "constraints" => {
                let report = check_calibrated_constraints(&rep)?;
                let detail = if report.all_passed() {
                    format!("{} entries", report.entries().len())
                } else {
                    report.failed_tags().join(", ")
                };
                line("constraints", report.all_passed(), detail, &mut out)
            }
            "irreducible" => line(
                "irreducible",
                is_irreducible(&rep)?,
                String::new(),
                &mut out,
            ),
            "center" => {
                let theta_zero = theta_tilde_action(&rep)?.is_zero();
                let mut scalar_ok = true;
                for f in [
                    SymmetricPolynomial::Elementary(1),
                    SymmetricPolynomial::Elementary(2),
                    SymmetricPolynomial::Elementary(3),
                ] {
                    for c in [ri(7), ri(0), rat(-3, 2)] {
                        scalar_ok &= center_action_check(&rep, &f, &c)?;
                    }
                }
                line(
                    "center",
                    theta_zero && scalar_ok,
                    format!("theta-action-zero={theta_zero}, scalar-action={scalar_ok}"),
                    &mut out,
                )
            }
            "radical" => {
                let report = radical_probe(&rep, args.word_cap, args.samples, args.seed)?;
                let detail = report
                    .entries()
                    .iter()
                    .map(|e| e.tag.clone())
                    .collect::<Vec<_>>()
                    .join(", ");
                line("radical", report.all_passed(), detail, &mut out)
            }
            "closed-form" => line(
                "closed-form",
                closed_form_eigenvalue_check(&rep)?,
                String::new(),
                &mut out,
            ),
            _ => unreachable!(),
        };
        ok &= passed;
    }
    if ok {
        Ok(out)
    } else {
        Err(AppError::Verification(out))
    }
}

fn fixtures_a4(args: FixtureArgs) -> AppResult<String> {
    let label: A4Fixture = args.label.parse()?;
    let rep: Representation = build_a4_fixture(label);
    if !args.verify {
        return Ok(emit(&rep_to_json(&rep)));
    }
    let report = verify_relations(&rep, &relation_set(4)?)?;
    let mut out = String::new();
    report_lines(&format!("fixture {}", label.name()), &report, &mut out);
    if report.all_passed() {
        Ok(out)
    } else {
        Err(AppError::Verification(out))
    }
}
