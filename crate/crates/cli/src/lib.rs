//! Subcommands behind the `ribbonfold` binary. Everything here returns an
//! [`Outcome`] instead of printing, so tests can drive it in-process.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use ribbonfold::invariants::{alexander_from_braid, alexander_from_diagram};
use ribbonfold::report::ParamsJson;
use ribbonfold::{
    assemble_layout, bound_report, braid_equal, diagram_from_plan, normalize_params, plan_with_report, render_svg,
    torus_decomposition_identity, twisted_torus_braid, validate_layout, BoundReport, BraidError, CaseBranch,
    Rational, TwistParams,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CERTIFICATE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_LINK: i32 = 3;

/// Crossing budget above which verify skips the diagram route.
pub const ROUTE_CROSSING_CAP: usize = 60;

/// Largest number of tuples a single sweep will enumerate.
pub const SWEEP_LIMIT: u64 = 2_000_000;

#[derive(Parser, Debug)]
#[command(name = "ribbonfold", version, about = "Folded ribbon bounds and layouts for twisted torus knots")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Ribbonlength upper bound and case branch.
    Bound(Common),
    /// Weighted bands and fold assignment.
    Plan(PlanArgs),
    /// Assemble, validate and draw the folded layout.
    Render(Common),
    /// Run the certificate suite for one knot.
    Verify(Common),
    /// Bound reports over a parameter grid.
    Sweep(SweepArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Svg,
    Text,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    #[arg(short = 'p', allow_negative_numbers = true)]
    pub p: i64,
    #[arg(short = 'q', allow_negative_numbers = true)]
    pub q: i64,
    #[arg(short = 'r', allow_negative_numbers = true)]
    pub r: i64,
    #[arg(short = 's', allow_negative_numbers = true)]
    pub s: i64,
    /// Ribbon width, e.g. 1 or 3/2.
    #[arg(long, default_value = "1")]
    pub width: String,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Accept q = 1 (results are flagged as uncertified).
    #[arg(long)]
    pub permissive: bool,
}

#[derive(Args, Debug, Clone)]
pub struct PlanArgs {
    #[command(flatten)]
    pub common: Common,
    /// Use the STANDARD construction even when r <= p - q.
    #[arg(long)]
    pub standard: bool,
}

#[derive(Args, Debug, Clone)]
pub struct SweepArgs {
    #[arg(long = "range-p", allow_hyphen_values = true)]
    pub range_p: String,
    #[arg(long = "range-q", allow_hyphen_values = true)]
    pub range_q: String,
    #[arg(long = "range-r", allow_hyphen_values = true)]
    pub range_r: String,
    #[arg(long = "range-s", allow_hyphen_values = true)]
    pub range_s: String,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long)]
    pub permissive: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { code: EXIT_OK, stdout, stderr: String::new() }
    }
}

#[derive(Debug)]
struct Failure {
    code: i32,
    kind: &'static str,
    message: String,
}

impl Failure {
    fn invalid(message: impl Into<String>) -> Self {
        Self { code: EXIT_INVALID, kind: "invalid_input", message: message.into() }
    }
}

impl From<BraidError> for Failure {
    fn from(e: BraidError) -> Self {
        match e {
            BraidError::Link { .. } => Self { code: EXIT_LINK, kind: "link", message: e.to_string() },
            other => Self::invalid(other.to_string()),
        }
    }
}

type CmdResult = Result<Outcome, Failure>;

fn error_outcome(f: Failure) -> Outcome {
    let body = json!({ "error": f.kind, "message": f.message });
    Outcome { code: f.code, stdout: String::new(), stderr: format!("{body}\n") }
}

/// Parse arguments and run the chosen subcommand.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome::ok(e.to_string());
            }
            return error_outcome(Failure::invalid(e.to_string().trim_end()));
        }
    };
    let result = match &cli.command {
        Command::Bound(c) => cmd_bound(c),
        Command::Plan(a) => cmd_plan(a),
        Command::Render(c) => cmd_render(c),
        Command::Verify(c) => cmd_verify(c),
        Command::Sweep(a) => cmd_sweep(a),
    };
    result.unwrap_or_else(error_outcome)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialise");
    s.push('\n');
    s
}

fn params_of(c: &Common) -> Result<TwistParams, Failure> {
    Ok(normalize_params(c.p, c.q, c.r, c.s, c.permissive)?)
}

fn width_of(c: &Common) -> Result<Rational, Failure> {
    let w: Rational = c.width.trim().parse().map_err(|_| Failure::invalid(format!("bad width {:?}", c.width)))?;
    if w <= Rational::from_integer(0) {
        return Err(Failure::invalid("width must be positive"));
    }
    Ok(w)
}

fn text_or_json(format: Option<Format>) -> Result<bool, Failure> {
    match format.unwrap_or(Format::Json) {
        Format::Json => Ok(false),
        Format::Text => Ok(true),
        Format::Svg => Err(Failure::invalid("svg output is only available from render")),
    }
}

/// Write to `--out` when given, otherwise hand the text back for stdout.
fn emit(out: &Option<PathBuf>, body: String) -> CmdResult {
    match out {
        Some(path) => {
            std::fs::write(path, &body)
                .map_err(|e| Failure { code: EXIT_INVALID, kind: "io", message: format!("{}: {e}", path.display()) })?;
            Ok(Outcome::ok(String::new()))
        }
        None => Ok(Outcome::ok(body)),
    }
}

fn label(p: &ParamsJson) -> String {
    format!("T({},{};{},{})", p.p, p.q, p.r, p.s)
}

fn warnings_text(w: &[ribbonfold::Warning]) -> String {
    if w.is_empty() {
        String::new()
    } else {
        let items: Vec<String> = w.iter().map(|x| x.to_string()).collect();
        format!(" [{}]", items.join(", "))
    }
}

fn bound_text(b: &BoundReport) -> String {
    format!("{} {}: Rib <= {}{}\n", label(&b.params), b.case, b.rib_upper_bound, warnings_text(&b.warnings))
}

fn cmd_bound(c: &Common) -> CmdResult {
    let text = text_or_json(c.format)?;
    let params = params_of(c)?;
    let report = bound_report(&params);
    emit(&c.out, if text { bound_text(&report) } else { to_json(&report) })
}

fn cmd_plan(a: &PlanArgs) -> CmdResult {
    let c = &a.common;
    let text = text_or_json(c.format)?;
    let params = params_of(c)?;
    let w = width_of(c)?;
    let case = a.standard.then_some(CaseBranch::Standard);
    let (_, report) = plan_with_report(&params, w, case)?;
    if !text {
        return emit(&c.out, to_json(&report));
    }
    let mut s = format!("{} {}\n", label(&report.params), report.case);
    for b in &report.bands {
        let boxed = b.twist_box.map(|x| format!(" box {x}")).unwrap_or_default();
        writeln!(s, "  {:>3} {:?} {}{}", b.weight, b.region, b.fold, boxed).unwrap();
    }
    writeln!(s, "length/w = {}, bound = {}{}", report.length_over_w, report.rib_upper_bound, warnings_text(&report.warnings))
        .unwrap();
    emit(&c.out, s)
}

fn cmd_render(c: &Common) -> CmdResult {
    let params = params_of(c)?;
    let w = width_of(c)?;
    let (plan, _) = plan_with_report(&params, w, None)?;
    let layout = assemble_layout(&plan)?;
    let report = validate_layout(&layout);
    let svg = render_svg(&layout);
    let code = if report.passed() { EXIT_OK } else { EXIT_CERTIFICATE };
    let report_json = to_json(&report);
    let stdout = match (&c.out, c.format.unwrap_or(Format::Svg)) {
        (Some(path), format) => {
            std::fs::write(path, &svg)
                .map_err(|e| Failure { code: EXIT_INVALID, kind: "io", message: format!("{}: {e}", path.display()) })?;
            match format {
                Format::Text => validation_text(&report),
                _ => report_json,
            }
        }
        (None, Format::Svg) => svg,
        (None, Format::Json) => report_json,
        (None, Format::Text) => validation_text(&report),
    };
    let stderr = if code == EXIT_OK { String::new() } else { format!("{}\n", json!({"error": "validation", "report": report})) };
    Ok(Outcome { code, stdout, stderr })
}

fn validation_text(r: &ribbonfold::ValidationReport) -> String {
    let mut s = format!(
        "fold lines disjoint: {}\ncrossings consistent: {}\nmeasured length/w: {}\n",
        r.fold_lines_disjoint, r.crossings_consistent, r.measured_length_over_w
    );
    for v in &r.violations {
        writeln!(s, "violation {}: {}", v.class, v.detail).unwrap();
    }
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub status: CheckStatus,
    pub detail: String,
}

impl Check {
    fn from_bool(ok: bool, detail: String) -> Self {
        Self { status: if ok { CheckStatus::Pass } else { CheckStatus::Fail }, detail }
    }

    fn skipped(detail: impl Into<String>) -> Self {
        Self { status: CheckStatus::Skipped, detail: detail.into() }
    }

    fn failed(detail: String) -> Self {
        Self { status: CheckStatus::Fail, detail }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub params: ParamsJson,
    pub transforms: ribbonfold::Transforms,
    pub identity_check: Check,
    pub invariant_check: Check,
    pub route_check: Check,
    pub plan_length_check: Check,
    pub passed: bool,
}

pub fn certificate(params: &TwistParams) -> Certificate {
    let (p, q, r, s) = (params.p as usize, params.q as usize, params.r as usize, params.s);

    let identity_check = if q < 2 {
        Check::skipped("needs q >= 2")
    } else {
        match torus_decomposition_identity(p, q).and_then(|(a, b)| braid_equal(&a, &b)) {
            Ok(ok) => Check::from_bool(ok, format!("torus braid ({p},{q}) against its split form")),
            Err(e) => Check::failed(e.to_string()),
        }
    };

    let invariant_check = if q < 2 {
        Check::skipped("needs q >= 2")
    } else {
        let pair = twisted_torus_braid(p, q, r, s)
            .and_then(|b| alexander_from_braid(&b))
            .and_then(|a| Ok((a, alexander_from_braid(&twisted_torus_braid(q, p, r, s)?)?)));
        match pair {
            Ok((a, b)) => Check::from_bool(a == b, format!("({p},{q}): {a}; ({q},{p}): {b}")),
            Err(e) => Check::failed(e.to_string()),
        }
    };

    let plan = plan_with_report(params, Rational::from_integer(1), None);
    let route_check = match &plan {
        Err(e) => Check::failed(e.to_string()),
        Ok((plan, _)) => match diagram_from_plan(plan) {
            Err(e) => Check::failed(e.to_string()),
            Ok(d) if d.crossings().len() > ROUTE_CROSSING_CAP => {
                Check::skipped(format!("{} crossings exceeds {ROUTE_CROSSING_CAP}", d.crossings().len()))
            }
            Ok(d) => {
                let both = alexander_from_diagram(&d)
                    .and_then(|a| Ok((a, alexander_from_braid(&params.braid()?)?)));
                match both {
                    Ok((a, b)) => Check::from_bool(a == b, format!("diagram: {a}; braid: {b}")),
                    Err(e) => Check::failed(e.to_string()),
                }
            }
        },
    };

    let plan_length_check = match &plan {
        Err(e) => Check::failed(e.to_string()),
        Ok((_, report)) => Check::from_bool(
            report.length_over_w >= 0 && report.length_over_w as u64 == report.rib_upper_bound,
            format!("plan length {} against bound {}", report.length_over_w, report.rib_upper_bound),
        ),
    };

    let passed = [&identity_check, &invariant_check, &route_check, &plan_length_check]
        .iter()
        .all(|c| c.status != CheckStatus::Fail);
    Certificate {
        params: params.into(),
        transforms: params.transforms,
        identity_check,
        invariant_check,
        route_check,
        plan_length_check,
        passed,
    }
}

fn cmd_verify(c: &Common) -> CmdResult {
    let text = text_or_json(c.format)?;
    let params = params_of(c)?;
    let cert = certificate(&params);
    let body = if text {
        let mut s = format!("{}\n", label(&cert.params));
        for (name, check) in [
            ("identity", &cert.identity_check),
            ("invariant", &cert.invariant_check),
            ("route", &cert.route_check),
            ("plan length", &cert.plan_length_check),
        ] {
            writeln!(s, "  {name}: {:?} ({})", check.status, check.detail).unwrap();
        }
        s
    } else {
        to_json(&cert)
    };
    let mut outcome = emit(&c.out, body)?;
    if !cert.passed {
        outcome.code = EXIT_CERTIFICATE;
    }
    Ok(outcome)
}

fn parse_range(name: &str, spec: &str) -> Result<(i64, i64), Failure> {
    let bad = || Failure::invalid(format!("--range-{name} expects A:B, got {spec:?}"));
    let (a, b) = spec.split_once(':').ok_or_else(bad)?;
    let a: i64 = a.trim().parse().map_err(|_| bad())?;
    let b: i64 = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(Failure::invalid(format!("--range-{name} is empty: {a} > {b}")));
    }
    Ok((a, b))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct InputTuple {
    pub p: i64,
    pub q: i64,
    pub r: i64,
    pub s: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepEntry {
    pub input: InputTuple,
    #[serde(flatten)]
    pub report: BoundReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct SkippedTuple {
    pub input: InputTuple,
    pub reason: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub entries: Vec<SweepEntry>,
    pub skipped: Vec<SkippedTuple>,
}

/// Bound reports over the inclusive ranges, sorted by input tuple.
pub fn sweep(
    p: (i64, i64),
    q: (i64, i64),
    r: (i64, i64),
    s: (i64, i64),
    permissive: bool,
) -> Result<SweepReport, String> {
    let span = |(a, b): (i64, i64)| (b - a + 1) as u64;
    let total = span(p).saturating_mul(span(q)).saturating_mul(span(r)).saturating_mul(span(s));
    if total > SWEEP_LIMIT {
        return Err(format!("sweep of {total} tuples exceeds the limit of {SWEEP_LIMIT}"));
    }
    let mut tuples = Vec::with_capacity(total as usize);
    for a in p.0..=p.1 {
        for b in q.0..=q.1 {
            for c in r.0..=r.1 {
                for d in s.0..=s.1 {
                    tuples.push(InputTuple { p: a, q: b, r: c, s: d });
                }
            }
        }
    }
    let results: Vec<Result<SweepEntry, SkippedTuple>> = tuples
        .par_iter()
        .map(|&t| match normalize_params(t.p, t.q, t.r, t.s, permissive) {
            Ok(params) => Ok(SweepEntry { input: t, report: bound_report(&params) }),
            Err(e) => Err(SkippedTuple { input: t, reason: e.to_string() }),
        })
        .collect();
    let mut entries = Vec::new();
    let mut skipped = Vec::new();
    for r in results {
        match r {
            Ok(e) => entries.push(e),
            Err(s) => skipped.push(s),
        }
    }
    entries.sort_by_key(|e| e.input);
    skipped.sort_by_key(|s| s.input);
    Ok(SweepReport { entries, skipped })
}

fn cmd_sweep(a: &SweepArgs) -> CmdResult {
    let text = text_or_json(a.format)?;
    let report = sweep(
        parse_range("p", &a.range_p)?,
        parse_range("q", &a.range_q)?,
        parse_range("r", &a.range_r)?,
        parse_range("s", &a.range_s)?,
        a.permissive,
    )
    .map_err(Failure::invalid)?;
    let body = if text {
        let mut s = String::new();
        for e in &report.entries {
            let t = e.input;
            write!(s, "({},{},{},{}) -> {}", t.p, t.q, t.r, t.s, bound_text(&e.report)).unwrap();
        }
        writeln!(s, "{} entries, {} skipped", report.entries.len(), report.skipped.len()).unwrap();
        s
    } else {
        to_json(&report)
    };
    emit(&a.out, body)
}
