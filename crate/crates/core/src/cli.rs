//! The `spherinv` command line: argument parsing, report envelopes, text and
//! JSON rendering, and golden-file comparison.
//!
//! [`run`] is the whole program minus process plumbing, so it can be driven
//! in-process with any writers.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::acceptance::{run_all, CriterionOutcome};
use crate::divisors::{verify_matching, DivisorReport, MatchStatus, MatchVerdict};
use crate::fibers::{fiber_divisor_consistency, ConsistencyReport};
use crate::liealg::CaseTag;
use crate::symfun::{newton_report, newton_residual, NewtonReport, Partition};
use crate::Error;

/// Process exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitCode {
    Success = 0,
    Failure = 1,
    Usage = 2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "spherinv", version, about = "Exact checks of divisor identities for spherical varieties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Include wall-clock durations (never part of golden files).
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Debug, Args)]
struct CaseArgs {
    /// One of: diagonal, friedberg-jacquet, odd-gl, rankin-selberg, jacquet-ichino, gross-prasad.
    #[arg(long)]
    case: String,
    #[arg(long, default_value_t = 1)]
    n: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Derive both divisors for a case and compare them.
    Verify(CaseArgs),
    /// Sample base points and check orbit counts against the divisor.
    Fiber {
        #[command(flatten)]
        case: CaseArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
    /// Residual of the generalized Newton identity for a partition.
    Newton {
        /// Partition such as "(3,1)" or "()".
        #[arg(long)]
        mu: String,
        #[arg(long)]
        n: usize,
        /// Use the multiplicity-corrected identity.
        #[arg(long)]
        corrected: bool,
    },
    /// Run every acceptance criterion and compare against the golden files.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Directory holding the golden files.
        #[arg(long)]
        fixtures: Option<PathBuf>,
        /// Rewrite the golden files instead of comparing.
        #[arg(long)]
        bless: bool,
    },
}

/// A validated invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RunConfig {
    Verify { case: CaseTag },
    Fiber { case: CaseTag, seed: u64, trials: usize },
    Newton { mu: Partition, n: usize, corrected: bool },
    Selftest { seed: u64, fixtures: PathBuf, bless: bool },
}

impl RunConfig {
    /// A normalized echo of the command, independent of flag order.
    pub fn echo(&self) -> String {
        match self {
            RunConfig::Verify { case } => format!("verify --case {} --n {}", case.name(), case.n()),
            RunConfig::Fiber { case, seed, trials } => {
                format!("fiber --case {} --n {} --seed {seed} --trials {trials}", case.name(), case.n())
            }
            RunConfig::Newton { mu, n, corrected } => {
                format!("newton --mu {mu} --n {n}{}", if *corrected { " --corrected" } else { "" })
            }
            RunConfig::Selftest { seed, .. } => format!("selftest --seed {seed}"),
        }
    }
}

/// The directory of golden files shipped with the crate.
pub fn default_fixtures_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn grid_case(args: &CaseArgs) -> Result<CaseTag, String> {
    let case = CaseTag::from_name(&args.case, args.n).map_err(|e| e.to_string())?;
    if case.n() > case.max_grid_n() {
        return Err(format!("{}: n must be between 1 and {}", case.name(), case.max_grid_n()));
    }
    Ok(case)
}

fn validate(command: Command) -> Result<RunConfig, String> {
    Ok(match command {
        Command::Verify(args) => RunConfig::Verify { case: grid_case(&args)? },
        Command::Fiber { case, seed, trials } => {
            if trials == 0 {
                return Err("--trials must be positive".into());
            }
            RunConfig::Fiber { case: grid_case(&case)?, seed, trials }
        }
        Command::Newton { mu, n, corrected } => {
            let mu: Partition = mu.parse().map_err(|e: Error| e.to_string())?;
            if n == 0 || mu.length() > n - 1 {
                return Err(Error::PartitionTooLong { partition: mu.to_string(), max: n.saturating_sub(1) }.to_string());
            }
            RunConfig::Newton { mu, n, corrected }
        }
        Command::Selftest { seed, fixtures, bless } => {
            RunConfig::Selftest { seed, fixtures: fixtures.unwrap_or_else(default_fixtures_dir), bless }
        }
    })
}

/// Overall outcome of a command.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
}

/// The JSON document every command emits.
#[derive(Clone, Debug, Serialize)]
pub struct ReportEnvelope<T> {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub status: Status,
    pub results: T,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub duration_ms: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyResults {
    pub verdict: MatchVerdict,
    pub report: DivisorReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct NewtonResults {
    pub mu: String,
    pub n: usize,
    pub corrected: bool,
    pub residual: String,
    pub report: NewtonReport,
}

/// Result of comparing one regenerated report with its golden file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GoldenCheck {
    pub file: String,
    /// `match`, `mismatch`, `missing` or `blessed`.
    pub outcome: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diff: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SelftestResults {
    pub seed: u64,
    pub criteria: Vec<CriterionOutcome>,
    pub goldens: Vec<GoldenCheck>,
}

/// Serializes a report the way it is written to golden files.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn envelope<T>(config: &RunConfig, status: Status, results: T) -> ReportEnvelope<T> {
    ReportEnvelope { tool: "spherinv", version: env!("CARGO_PKG_VERSION"), command: config.echo(), status, results, duration_ms: None }
}

fn status_of(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

/// The verify report for a case, as it appears in a golden file.
pub fn verify_envelope(case: CaseTag) -> crate::Result<ReportEnvelope<VerifyResults>> {
    let (verdict, report) = verify_matching(case)?;
    let ok = verdict.status != MatchStatus::Mismatch;
    Ok(envelope(&RunConfig::Verify { case }, status_of(ok), VerifyResults { verdict, report }))
}

/// The fiber report for a case, as it appears in a golden file.
pub fn fiber_envelope(case: CaseTag, seed: u64, trials: usize) -> crate::Result<ReportEnvelope<ConsistencyReport>> {
    let report = fiber_divisor_consistency(case, seed, trials)?;
    Ok(envelope(&RunConfig::Fiber { case, seed, trials }, status_of(report.passed()), report))
}

fn newton_envelope(mu: &Partition, n: usize, corrected: bool) -> crate::Result<ReportEnvelope<NewtonResults>> {
    let residual = newton_residual(mu, n, corrected)?;
    let results = NewtonResults {
        mu: mu.to_string(),
        n,
        corrected,
        residual: residual.to_string(),
        report: newton_report(mu, n)?,
    };
    Ok(envelope(&RunConfig::Newton { mu: mu.clone(), n, corrected }, status_of(residual.is_zero()), results))
}

/// Golden file name for a command on a case.
pub fn golden_name(command: &str, case: CaseTag) -> String {
    format!("{command}_{}_n{}.json", case.name(), case.n())
}

/// Every golden file with its freshly generated content.
pub fn golden_reports() -> crate::Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    for case in CaseTag::grid() {
        out.push((golden_name("verify", case), to_json(&verify_envelope(case)?)));
        out.push((golden_name("fiber", case), to_json(&fiber_envelope(case, 0, 100)?)));
    }
    Ok(out)
}

fn unified_diff(expected: &str, actual: &str, name: &str) -> String {
    similar::TextDiff::from_lines(expected, actual)
        .unified_diff()
        .context_radius(2)
        .header(&format!("golden/{name}"), &format!("generated/{name}"))
        .to_string()
}

/// Compares (or with `bless`, rewrites) every golden file in `dir`.
pub fn check_goldens(dir: &Path, bless: bool) -> crate::Result<Vec<GoldenCheck>> {
    let io = |e: std::io::Error| Error::Unsupported(format!("{}: {e}", dir.display()));
    if bless {
        std::fs::create_dir_all(dir).map_err(io)?;
    }
    let mut checks = Vec::new();
    for (file, actual) in golden_reports()? {
        let path = dir.join(&file);
        let (outcome, diff) = if bless {
            std::fs::write(&path, &actual).map_err(io)?;
            ("blessed", None)
        } else {
            match std::fs::read_to_string(&path) {
                Ok(expected) if expected == actual => ("match", None),
                Ok(expected) => ("mismatch", Some(unified_diff(&expected, &actual, &file))),
                Err(_) => ("missing", None),
            }
        };
        checks.push(GoldenCheck { file, outcome: outcome.into(), diff });
    }
    Ok(checks)
}

struct Style {
    color: bool,
}

impl Style {
    fn status(&self, ok: bool) -> String {
        let (word, code) = if ok { ("PASS", "32") } else { ("FAIL", "31") };
        if self.color {
            format!("\x1b[{code}m{word}\x1b[0m")
        } else {
            word.to_string()
        }
    }
}

fn opt_poly(p: &Option<exactpoly::MultiPoly>) -> String {
    p.as_ref().map_or_else(|| "-".into(), ToString::to_string)
}

fn verify_text(r: &VerifyResults, style: &Style) -> String {
    let mut s = String::new();
    let rep = &r.report;
    let unit = r.verdict.unit.as_ref().map_or_else(|| "none".into(), exactpoly::render_rational);
    let _ = writeln!(s, "case:                {}", rep.case);
    let _ = writeln!(s, "coordinates:         {}", rep.coordinates.join(", "));
    let _ = writeln!(s, "aside divisor:       {}", rep.aside_groundtruth);
    let _ = writeln!(s, "aside chart:         {}", rep.aside_chart);
    let _ = writeln!(s, "aside closed form:   {}", opt_poly(&rep.aside_closed));
    let _ = writeln!(s, "bside det:           {}", rep.bside_det);
    let _ = writeln!(s, "bside det on S+:     {}", opt_poly(&rep.bside_polarized_det));
    let _ = writeln!(s, "bside pfaffian:      {}", rep.bside_pfaffian);
    let _ = writeln!(s, "bside closed form:   {}", opt_poly(&rep.bside_closed));
    for (side, res) in [("aside", &rep.aside_closed_resolution), ("bside", &rep.bside_closed_resolution)] {
        if let Some(res) = res {
            let _ = writeln!(
                s,
                "{side} closed variant: {} ({} of {} match)",
                res.matched_variant.as_deref().unwrap_or("none"),
                res.all_matching.len(),
                res.variants_tried
            );
        }
    }
    for c in &r.verdict.corrections {
        let _ = writeln!(s, "correction ({}): {}", c.target, c.description);
    }
    for note in &rep.notes {
        let _ = writeln!(s, "note: {note}");
    }
    let status = serde_json::to_value(r.verdict.status).expect("status serializes");
    let _ = writeln!(
        s,
        "{} {} (unit {unit})",
        style.status(r.verdict.status.is_match()),
        status.as_str().unwrap_or_default()
    );
    s
}

fn fiber_text(r: &ConsistencyReport, style: &Style) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "case:                 {}", r.case);
    let _ = writeln!(s, "samples:              {} ({} on the divisor)", r.trials, r.on_divisor_samples);
    let hist: Vec<String> = r.orbit_histogram.iter().map(|(k, v)| format!("{k} orbit(s): {v}")).collect();
    let _ = writeln!(s, "orbit counts:         {}", hist.join(", "));
    let _ = writeln!(s, "violations:           {}", r.violations);
    let _ = writeln!(s, "certificate failures: {}", r.certificate_failures);
    let _ = writeln!(s, "roundtrip failures:   {}", r.roundtrip_failures);
    let mut shown = std::collections::BTreeSet::new();
    for sample in r.samples.iter().filter(|x| x.diagnostic.orbit_count >= 2) {
        let coords: Vec<String> = sample.point.coords.iter().map(exactpoly::render_rational).collect();
        let line = format!("({}): {} orbits", coords.join(", "), sample.diagnostic.orbit_count);
        if shown.len() < 5 && shown.insert(line.clone()) {
            let _ = writeln!(s, "  over {line}");
        }
    }
    for note in &r.notes {
        let _ = writeln!(s, "note: {note}");
    }
    let _ = writeln!(s, "{}", style.status(r.passed()));
    s
}

fn newton_text(r: &NewtonResults, style: &Style) -> String {
    let mut s = String::new();
    let kind = if r.corrected { "corrected" } else { "literal" };
    let _ = writeln!(s, "mu = {}, n = {}, {kind} identity", r.mu, r.n);
    let _ = writeln!(s, "residual: {}", r.residual);
    for c in &r.report.nontrivial_factors {
        let _ = writeln!(
            s,
            "k = {}: multiplicity factor {} (observed {})",
            c.k,
            c.predicted_factor,
            c.observed_factor.as_deref().unwrap_or("none")
        );
    }
    let _ = writeln!(s, "{}", style.status(r.residual == "0"));
    s
}

fn selftest_text(r: &SelftestResults, style: &Style) -> String {
    let mut s = String::new();
    for c in &r.criteria {
        let time = c.elapsed_ms.map_or_else(String::new, |t| format!("{t:>7} ms / "));
        let _ = writeln!(s, "{} {:>2}  {time}{:>6} ms  {}", style.status(c.passed), c.id, c.budget_ms, c.title);
        if !c.passed {
            for d in &c.details {
                let _ = writeln!(s, "        {d}");
            }
        }
    }
    let bad: Vec<&GoldenCheck> = r.goldens.iter().filter(|g| g.outcome == "mismatch" || g.outcome == "missing").collect();
    let blessed = r.goldens.iter().filter(|g| g.outcome == "blessed").count();
    if blessed > 0 {
        let _ = writeln!(s, "blessed {blessed} golden files");
    } else {
        let _ = writeln!(s, "{} golden files: {} {}", style.status(bad.is_empty()), r.goldens.len(), if bad.is_empty() { "match" } else { "checked" });
    }
    for g in bad {
        let _ = writeln!(s, "{} {}", g.outcome, g.file);
        if let Some(d) = &g.diff {
            s.push_str(d);
        }
    }
    s
}

fn emit<T: Serialize>(
    env: &mut ReportEnvelope<T>,
    text: impl FnOnce(&T, &Style) -> String,
    format: Format,
    style: &Style,
    started: Option<Instant>,
) -> String {
    env.duration_ms = started.map(|t| t.elapsed().as_millis() as u64);
    match format {
        Format::Json => to_json(env),
        Format::Text => {
            let mut s = text(&env.results, style);
            if let Some(d) = env.duration_ms {
                let _ = writeln!(s, "duration: {d} ms");
            }
            s
        }
    }
}

fn execute(config: &RunConfig, format: Format, style: &Style, timing: bool) -> crate::Result<(String, Status)> {
    let started = timing.then(Instant::now);
    Ok(match config {
        RunConfig::Verify { case } => {
            let mut env = verify_envelope(*case)?;
            (emit(&mut env, verify_text, format, style, started), env.status)
        }
        RunConfig::Fiber { case, seed, trials } => {
            let mut env = fiber_envelope(*case, *seed, *trials)?;
            (emit(&mut env, fiber_text, format, style, started), env.status)
        }
        RunConfig::Newton { mu, n, corrected } => {
            let mut env = newton_envelope(mu, *n, *corrected)?;
            (emit(&mut env, newton_text, format, style, started), env.status)
        }
        RunConfig::Selftest { seed, fixtures, bless } => {
            let mut criteria = run_all(*seed);
            if !timing {
                criteria.iter_mut().for_each(|c| c.elapsed_ms = None);
            }
            let goldens = check_goldens(fixtures, *bless)?;
            let ok = criteria.iter().all(|c| c.passed) && goldens.iter().all(|g| g.outcome == "match" || g.outcome == "blessed");
            let mut env = envelope(config, status_of(ok), SelftestResults { seed: *seed, criteria, goldens });
            (emit(&mut env, selftest_text, format, style, started), env.status)
        }
    })
}

/// Runs the program on `args` (including the program name). `color` allows
/// ANSI colors in text output; callers decide it from the terminal and
/// `NO_COLOR`.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write, color: bool) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { ExitCode::Usage } else { ExitCode::Success };
            let target: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let config = match validate(cli.command) {
        Ok(c) => c,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            return ExitCode::Usage;
        }
    };
    let style = Style { color: color && cli.output.is_none() && cli.format == Format::Text };
    let (body, status) = match execute(&config, cli.format, &style, cli.timing) {
        Ok(x) => x,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return ExitCode::Failure;
        }
    };
    let written = match &cli.output {
        Some(path) => std::fs::write(path, body.as_bytes()),
        None => stdout.write_all(body.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: cannot write report: {e}");
        return ExitCode::Failure;
    }
    match status {
        Status::Pass => ExitCode::Success,
        Status::Fail => ExitCode::Failure,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (ExitCode, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("spherinv").chain(args.iter().copied()), &mut out, &mut err, false);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn echo_is_normalized() {
        let c = RunConfig::Fiber { case: CaseTag::GrossPrasadEven(2), seed: 3, trials: 50 };
        assert_eq!(c.echo(), "fiber --case gross-prasad --n 2 --seed 3 --trials 50");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_args(&["verify", "--case", "nope"]).0, ExitCode::Usage);
        assert_eq!(run_args(&["verify", "--case", "rankin-selberg", "--n", "9"]).0, ExitCode::Usage);
        assert_eq!(run_args(&["newton", "--mu", "(1,1,1)", "--n", "2"]).0, ExitCode::Usage);
        assert_eq!(run_args(&["newton", "--mu", "(1,x)", "--n", "4"]).0, ExitCode::Usage);
        assert_eq!(run_args(&["frobnicate"]).0, ExitCode::Usage);
        assert_eq!(run_args(&["--help"]).0, ExitCode::Success);
    }

    #[test]
    fn newton_exit_codes() {
        let (code, out, _) = run_args(&["newton", "--mu", "()", "--n", "2", "--corrected"]);
        assert_eq!(code, ExitCode::Success);
        assert!(out.contains("residual: 0"));
        assert_eq!(run_args(&["newton", "--mu", "()", "--n", "2"]).0, ExitCode::Failure);
    }

    #[test]
    fn text_has_no_color_when_disabled() {
        let (_, out, _) = run_args(&["verify", "--case", "diagonal"]);
        assert!(!out.contains('\x1b'));
        assert!(out.contains("PASS exact_match"));
    }
}
