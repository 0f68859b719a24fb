//! Command-line front end. Every subcommand prints one JSON report (or CSV
//! for `sweep`) and maps errors to exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success (an "unbounded" verdict is a success) |
//! | 2 | invalid parameters, usage errors, infeasible certificates |
//! | 3 | divergence detected |
//! | 4 | quadrature accuracy failure or failed certificate check |
//!
//! Reports carry `schema`, the command echo, the input tuple, the result
//! fields, a `tolerances` map (one entry per numeric result field) and
//! `elapsed_ms`. Apart from `elapsed_ms`, output is deterministic.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::bergman::{
    bergman_verdict, reproduction_check, BergmanOperator, BergmanVerdictRequest, HalfPlanePoint, MixedNormSpec,
};
use crate::conditions::{parse_extended, Exponent};
use crate::error::{Error, Result};
use crate::func::ShiftedPower;
use crate::funcdsl::ExprFunc1D;
use crate::hilbert::{
    apply_h, balance_gamma, extremal_quotient, geometric_grid, growth_exponent, hilbert_verdict, sharp_norm,
    weighted_lp_norm, GrowthOptions, HImage, OperatorParams, WeightedSpaceSpec,
};
use crate::quad::{DEFAULT_TOL_1D, DEFAULT_TOL_2D};
use crate::schur::{find_certificate_with, verify_document, CertificateDocument, CertificateOptions};

pub const SCHEMA: u32 = 1;
pub const TOL_ENV: &str = "OPLAB_TOL";

/// Accuracy of the closed-form Beta values, relative.
const BETA_TOL: f64 = 1e-13;
/// Tolerance of relation checks, absolute.
const RELATION_TOL: f64 = crate::conditions::RELATION_EPS;

#[derive(Debug, Parser)]
#[command(name = "oplab", version, about = "Weighted Hilbert-type and Bergman-type operator laboratory")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Boundedness criterion with its full arithmetic.
    #[command(subcommand)]
    Verdict(VerdictCmd),
    /// Exact norm on L^p_a (or L^inf) when gamma = alpha+beta+1.
    SharpNorm(SharpArgs),
    /// Find (or check, with `verify`) a Schur-test certificate.
    Certify(CertifyCmd),
    /// Apply H to an --expr function and report norms.
    Estimate(EstimateArgs),
    /// Quotients of the truncated-power family for several xi.
    Extremal(ExtremalArgs),
    /// Growth of ‖H f_R‖/‖f_R‖ over a grid of dilations.
    Dilate(DilateArgs),
    /// Vary one parameter over a grid; CSV output.
    Sweep(SweepArgs),
    /// Half-plane checks.
    #[command(subcommand)]
    Bergman(BergmanCmd),
    /// The gamma that satisfies the balance relation.
    SolveGamma(SolveArgs),
}

#[derive(Debug, Subcommand)]
enum VerdictCmd {
    /// H from L^p_a to L^q_b on the half-line.
    Hilbert(HilbertArgs),
    /// T+, T or the projection between mixed-norm spaces on the half-plane.
    Bergman(BergmanVerdictArgs),
}

#[derive(Debug, Subcommand)]
enum BergmanCmd {
    /// Check that the projection fixes ((w + i t)/i)^-order.
    Reproduce(ReproduceArgs),
}

// Kernel exponents; the defaults give the classical kernel 1/(x+y).
#[derive(Debug, Clone, Copy, Args, Serialize)]
#[command(allow_negative_numbers = true)]
struct KernelArgs {
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    alpha: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    beta: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    gamma: f64,
}

impl KernelArgs {
    fn params(&self) -> Result<OperatorParams> {
        OperatorParams::new(self.alpha, self.beta, self.gamma)
    }
}

#[derive(Debug, Clone, Copy, Args, Serialize)]
#[command(allow_negative_numbers = true)]
struct HilbertArgs {
    /// Source exponent (`inf` allowed).
    #[arg(long)]
    p: Exponent,
    /// Target exponent (`inf` allowed).
    #[arg(long)]
    q: Exponent,
    #[arg(long, default_value_t = 0.0)]
    a: f64,
    #[arg(long, default_value_t = 0.0)]
    b: f64,
    #[command(flatten)]
    #[serde(flatten)]
    kernel: KernelArgs,
}

#[derive(Debug, Clone, Copy, Args, Serialize)]
#[command(allow_negative_numbers = true)]
struct SharpArgs {
    #[arg(long)]
    p: Exponent,
    #[arg(long, default_value_t = 0.0)]
    a: f64,
    #[command(flatten)]
    #[serde(flatten)]
    kernel: KernelArgs,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum OperatorChoice {
    Tplus,
    T,
    Projection,
}

#[derive(Debug, Clone, Copy, Args, Serialize)]
#[command(allow_negative_numbers = true)]
struct BergmanVerdictArgs {
    #[arg(long, value_enum, default_value = "tplus")]
    operator: OperatorChoice,
    /// Inner (x) exponent, shared by source and target.
    #[arg(long)]
    p: Exponent,
    /// Source outer (y) exponent.
    #[arg(long)]
    q: Exponent,
    /// Source weight exponent (omit for q = inf).
    #[arg(long)]
    nu: Option<f64>,
    /// Target outer exponent.
    #[arg(long)]
    r: Exponent,
    /// Target weight exponent (omit for r = inf).
    #[arg(long)]
    mu: Option<f64>,
    #[command(flatten)]
    #[serde(flatten)]
    kernel: KernelArgs,
}

#[derive(Debug, Args)]
#[command(args_conflicts_with_subcommands = true, subcommand_negates_reqs = true, allow_negative_numbers = true)]
struct CertifyCmd {
    #[command(subcommand)]
    verify: Option<CertifySub>,
    #[arg(long)]
    p: Option<Exponent>,
    #[arg(long)]
    q: Option<Exponent>,
    #[arg(long, default_value_t = 0.0)]
    a: f64,
    #[arg(long, default_value_t = 0.0)]
    b: f64,
    #[command(flatten)]
    kernel: KernelArgs,
    /// Use this d = r - s instead of scanning.
    #[arg(long)]
    d: Option<f64>,
    /// Also write the certificate document here.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum CertifySub {
    /// Re-check a certificate document by quadrature.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long)]
    cert: PathBuf,
    #[arg(long, default_value_t = 200)]
    samples: usize,
    /// Residual tolerance (default 1e-8).
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct EstimateArgs {
    /// Function of x, e.g. "x^-0.75 * ind(x, 1, inf)".
    #[arg(long)]
    expr: String,
    #[command(flatten)]
    tuple: HilbertArgs,
    /// Points where H f is reported.
    #[arg(long, value_delimiter = ',', default_values_t = vec![0.5, 1.0, 2.0])]
    at: Vec<f64>,
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct ExtremalArgs {
    #[command(flatten)]
    space: SharpArgs,
    #[arg(long, value_delimiter = ',', default_values_t = vec![1e-1, 1e-2, 1e-3])]
    xi: Vec<f64>,
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct DilateArgs {
    #[arg(long)]
    expr: String,
    #[command(flatten)]
    tuple: HilbertArgs,
    #[arg(long, default_value_t = 0.25)]
    r_min: f64,
    #[arg(long, default_value_t = 4.0)]
    r_max: f64,
    #[arg(long, default_value_t = 5)]
    points: usize,
    /// Integrate the image norm over (0, cutoff] only.
    #[arg(long)]
    cutoff: Option<f64>,
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Debug, Clone, Copy, ValueEnum, PartialEq, Eq)]
enum SweepParam {
    Alpha,
    Beta,
    Gamma,
    P,
    Q,
    A,
    B,
}

impl SweepParam {
    fn name(self) -> &'static str {
        match self {
            SweepParam::Alpha => "alpha",
            SweepParam::Beta => "beta",
            SweepParam::Gamma => "gamma",
            SweepParam::P => "p",
            SweepParam::Q => "q",
            SweepParam::A => "a",
            SweepParam::B => "b",
        }
    }
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct SweepArgs {
    #[arg(long, value_enum)]
    param: SweepParam,
    #[arg(long, allow_negative_numbers = true)]
    from: f64,
    #[arg(long, allow_negative_numbers = true)]
    to: f64,
    #[arg(long, default_value_t = 11)]
    steps: usize,
    /// Base tuple; the swept parameter's value here is ignored.
    #[command(flatten)]
    tuple: HilbertArgs,
    /// Also find a certificate in bounded rows with finite p, q.
    #[arg(long)]
    certify: bool,
    /// Write the CSV here instead of stdout (a JSON summary is printed).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct ReproduceArgs {
    #[arg(long, default_value_t = 0.0)]
    nu: f64,
    #[arg(long, default_value_t = 3.0)]
    order: f64,
    #[arg(long, default_value_t = 1.0)]
    t: f64,
    /// Probe points as x:y pairs.
    #[arg(long, value_delimiter = ',', default_values_t = default_probe_strings())]
    probes: Vec<String>,
    /// Largest acceptable |P f - f|.
    #[arg(long, default_value_t = 1e-4)]
    threshold: f64,
    #[arg(long)]
    tol: Option<f64>,
}

fn default_probe_strings() -> Vec<String> {
    ["0:1", "1:1", "-1:1", "0:0.5", "0.5:2"].iter().map(|s| s.to_string()).collect()
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct SolveArgs {
    #[arg(long)]
    p: Exponent,
    #[arg(long)]
    q: Exponent,
    #[arg(long, default_value_t = 0.0)]
    a: f64,
    #[arg(long, default_value_t = 0.0)]
    b: f64,
    #[arg(long)]
    alpha: f64,
    #[arg(long)]
    beta: f64,
}

// ---------------------------------------------------------------------------

/// What the process should print and return.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Divergence { .. } => 3,
        Error::Accuracy { .. } | Error::NonFinite { .. } | Error::Residual { .. } => 4,
        _ => 2,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Domain(_) => "domain",
        Error::Divergence { .. } => "divergence",
        Error::Accuracy { .. } => "accuracy",
        Error::NonFinite { .. } => "non-finite",
        Error::Syntax { .. } => "syntax",
        Error::Precondition(_) => "precondition",
        Error::Unsupported(_) => "unsupported",
        Error::Infeasible(_) => "infeasible",
        Error::Residual { .. } => "residual",
        Error::Io(_) => "io",
        Error::Json(_) => "json",
    }
}

/// Tolerance precedence: flag, then `OPLAB_TOL`, then the command default.
pub fn resolve_tol(flag: Option<f64>, default: f64) -> Result<f64> {
    let tol = match flag {
        Some(t) => t,
        None => match std::env::var(TOL_ENV) {
            Ok(s) => parse_extended(&s).map_err(|_| Error::domain(format!("{TOL_ENV}={s} is not a number")))?,
            Err(_) => default,
        },
    };
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::domain(format!("tolerance must be positive, got {tol}")));
    }
    Ok(tol)
}

struct Report {
    input: Value,
    result: Value,
    tolerances: BTreeMap<String, f64>,
}

impl Report {
    fn new(input: impl Serialize, result: impl Serialize) -> Result<Self> {
        Ok(Report {
            input: serde_json::to_value(input)?,
            result: serde_json::to_value(result)?,
            tolerances: BTreeMap::new(),
        })
    }

    fn tol(mut self, field: &str, tol: f64) -> Self {
        self.tolerances.insert(field.to_string(), tol);
        self
    }
}

enum Output {
    Json(Report),
    Csv(String),
}

/// Run with a full argument vector (program name first).
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let echo: Vec<String> = argv
        .iter()
        .skip(1)
        .map(|s| s.to_string_lossy().into_owned())
        .collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let start = Instant::now();
    match dispatch(cli.command) {
        Ok(Output::Csv(text)) => Outcome {
            code: 0,
            stdout: text,
            stderr: String::new(),
        },
        Ok(Output::Json(report)) => Outcome {
            code: 0,
            stdout: render(&echo, report, start),
            stderr: String::new(),
        },
        Err(e) => {
            let body = json!({
                "schema": SCHEMA,
                "command": echo,
                "error": { "kind": error_kind(&e), "message": e.to_string() },
            });
            Outcome {
                code: exit_code(&e),
                stdout: format!("{}\n", serde_json::to_string_pretty(&body).unwrap_or_default()),
                stderr: format!("error: {e}\n"),
            }
        }
    }
}

fn render(echo: &[String], report: Report, start: Instant) -> String {
    let mut top = serde_json::Map::new();
    top.insert("schema".into(), json!(SCHEMA));
    top.insert("command".into(), json!(echo));
    top.insert("input".into(), report.input);
    match report.result {
        Value::Object(fields) => {
            for (k, v) in fields {
                top.insert(k, v);
            }
        }
        other => {
            top.insert("result".into(), other);
        }
    }
    top.insert("tolerances".into(), json!(report.tolerances));
    top.insert("elapsed_ms".into(), json!(start.elapsed().as_secs_f64() * 1e3));
    format!("{}\n", serde_json::to_string_pretty(&Value::Object(top)).unwrap_or_default())
}

fn dispatch(cmd: Command) -> Result<Output> {
    match cmd {
        Command::Verdict(VerdictCmd::Hilbert(args)) => {
            let report = hilbert_verdict(args.p, args.q, args.a, args.b, &args.kernel.params()?)?;
            Ok(Output::Json(
                Report::new(args, report)?
                    .tol("relations", RELATION_TOL)
                    .tol("inequalities", RELATION_TOL)
                    .tol("norm", BETA_TOL),
            ))
        }
        Command::Verdict(VerdictCmd::Bergman(args)) => {
            let operator = match args.operator {
                OperatorChoice::Tplus => BergmanOperator::TPlus,
                OperatorChoice::T => BergmanOperator::T,
                OperatorChoice::Projection => BergmanOperator::Projection,
            };
            let req = BergmanVerdictRequest {
                operator,
                source: MixedNormSpec::new(args.p, args.q, args.nu)?,
                target: MixedNormSpec::new(args.p, args.r, args.mu)?,
                params: args.kernel.params()?,
            };
            let report = bergman_verdict(&req)?;
            Ok(Output::Json(
                Report::new(args, report)?
                    .tol("relations", RELATION_TOL)
                    .tol("inequalities", RELATION_TOL)
                    .tol("norm", BETA_TOL),
            ))
        }
        Command::SharpNorm(args) => {
            let space = WeightedSpaceSpec::new(args.p, args.a)?;
            let norm = sharp_norm(&space, &args.kernel.params()?)?;
            Ok(Output::Json(
                Report::new(args, json!({ "norm": norm, "space": space }))?.tol("norm", BETA_TOL),
            ))
        }
        Command::Certify(cmd) => certify(cmd),
        Command::Estimate(args) => estimate(args),
        Command::Extremal(args) => {
            let tol = resolve_tol(args.tol, 1e-9)?;
            let space = WeightedSpaceSpec::new(args.space.p, args.space.a)?;
            let params = args.space.kernel.params()?;
            let sharp = sharp_norm(&space, &params)?;
            let points = args
                .xi
                .iter()
                .map(|&xi| extremal_quotient(&space, &params, xi, tol))
                .collect::<Result<Vec<_>>>()?;
            Ok(Output::Json(
                Report::new(
                    json!({ "space": args.space, "xi": args.xi }),
                    json!({ "sharp": sharp, "points": points }),
                )?
                .tol("sharp", BETA_TOL)
                .tol("points.quotient", tol)
                .tol("points.lower_bound", BETA_TOL),
            ))
        }
        Command::Dilate(args) => {
            let tol = resolve_tol(args.tol, 1e-8)?;
            let f = ExprFunc1D::parse(&args.expr)?;
            if !(args.r_min > 0.0 && args.r_max > args.r_min && args.points >= 2) {
                return Err(Error::domain("need 0 < r-min < r-max and at least 2 points"));
            }
            let grid = geometric_grid(args.r_min, args.r_max, args.points);
            let t = args.tuple;
            let report = growth_exponent(
                t.p,
                t.q,
                t.a,
                t.b,
                &t.kernel.params()?,
                &f,
                &grid,
                &GrowthOptions { cutoff: args.cutoff, tol },
            )?;
            Ok(Output::Json(
                Report::new(json!({ "tuple": t, "expr": args.expr, "r": grid }), report)?
                    .tol("slope", tol.sqrt())
                    .tol("dilation_slope", 0.0)
                    .tol("points", tol),
            ))
        }
        Command::Sweep(args) => sweep(args),
        Command::Bergman(BergmanCmd::Reproduce(args)) => {
            let tol = resolve_tol(args.tol, DEFAULT_TOL_2D)?;
            let probes = args
                .probes
                .iter()
                .map(|s| parse_point(s))
                .collect::<Result<Vec<_>>>()?;
            if !(args.t > 0.0) {
                return Err(Error::domain("t must be positive"));
            }
            let f = ShiftedPower { order: args.order, t: args.t };
            let points = reproduction_check(args.nu, &f, &probes, tol)?;
            let max_error = points.iter().map(|p| p.error).fold(0.0, f64::max);
            Ok(Output::Json(
                Report::new(
                    json!({ "nu": args.nu, "order": args.order, "t": args.t, "probes": probes }),
                    json!({
                        "points": points,
                        "max_error": max_error,
                        "threshold": args.threshold,
                        "passed": max_error <= args.threshold,
                    }),
                )?
                .tol("points", tol)
                .tol("max_error", tol),
            ))
        }
        Command::SolveGamma(args) => {
            let (p, q) = (args.p, args.q);
            if p.is_inf() && !q.is_inf() {
                return Err(Error::Unsupported("p = inf with finite q".into()));
            }
            let gamma = balance_gamma(p, q, args.a, args.b, args.alpha, args.beta);
            let params = OperatorParams::new(args.alpha, args.beta, gamma)?;
            let verdict = hilbert_verdict(p, q, args.a, args.b, &params).ok();
            Ok(Output::Json(
                Report::new(
                    json!({ "p": p, "q": q, "a": args.a, "b": args.b, "alpha": args.alpha, "beta": args.beta }),
                    json!({ "gamma": gamma, "verdict": verdict.map(|v| v.verdict) }),
                )?
                .tol("gamma", f64::EPSILON * 8.0),
            ))
        }
    }
}

fn parse_point(s: &str) -> Result<HalfPlanePoint> {
    let (x, y) = s
        .split_once(':')
        .ok_or_else(|| Error::domain(format!("probe '{s}' is not of the form x:y")))?;
    let x: f64 = x.trim().parse().map_err(|_| Error::domain(format!("bad x in '{s}'")))?;
    let y: f64 = y.trim().parse().map_err(|_| Error::domain(format!("bad y in '{s}'")))?;
    HalfPlanePoint::new(x, y)
}

fn certify(cmd: CertifyCmd) -> Result<Output> {
    if let Some(CertifySub::Verify(v)) = cmd.verify {
        let tol = resolve_tol(v.tol, 1e-8)?;
        let text = std::fs::read_to_string(&v.cert)?;
        let doc: CertificateDocument = serde_json::from_str(&text)?;
        let report = verify_document(&doc, v.samples, tol)?;
        return Ok(Output::Json(
            Report::new(json!({ "cert": v.cert, "samples": v.samples }), report)?
                .tol("max_residual_ee1", tol)
                .tol("max_residual_ee2", tol),
        ));
    }
    let p = cmd.p.ok_or_else(|| Error::domain("--p is required"))?;
    let q = cmd.q.ok_or_else(|| Error::domain("--q is required"))?;
    let params = cmd.kernel.params()?;
    let doc = find_certificate_with(p, q, cmd.a, cmd.b, &params, &CertificateOptions { forced_d: cmd.d })?;
    if let Some(path) = &cmd.out {
        std::fs::write(path, serde_json::to_string_pretty(&doc)? + "\n")?;
    }
    Ok(Output::Json(
        Report::new(
            json!({ "p": p, "q": q, "a": cmd.a, "b": cmd.b, "params": params, "d": cmd.d }),
            doc,
        )?
        .tol("bound", BETA_TOL)
        .tol("M1", BETA_TOL)
        .tol("M2", BETA_TOL)
        .tol("ee1_closed_form", BETA_TOL)
        .tol("ee2_closed_form", BETA_TOL)
        .tol("t", 0.0)
        .tol("r", 0.0)
        .tol("s", 0.0)
        .tol("d", 0.0)
        .tol("omega", 0.0),
    ))
}

fn estimate(args: EstimateArgs) -> Result<Output> {
    let tol = resolve_tol(args.tol, DEFAULT_TOL_1D * 100.0)?;
    let t = args.tuple;
    let params = t.kernel.params()?;
    let f = ExprFunc1D::parse(&args.expr)?;
    let source = WeightedSpaceSpec::new(t.p, t.a)?;
    let target = WeightedSpaceSpec::new(t.q, t.b)?;
    let verdict = hilbert_verdict(t.p, t.q, t.a, t.b, &params)?;
    let values = args
        .at
        .iter()
        .map(|&x| Ok(json!({ "x": x, "hf": apply_h(&params, &f, x, tol)? })))
        .collect::<Result<Vec<_>>>()?;
    let f_norm = weighted_lp_norm(&f, &source, tol)?;
    let image = HImage {
        params,
        f: &f,
        tol: crate::hilbert::inner_tol(tol),
    };
    let image_norm = weighted_lp_norm(&image, &target, tol)?;
    let sharp = if t.p == t.q { sharp_norm(&source, &params).ok() } else { None };
    let certificate_bound = if verdict.is_bounded() && t.p.is_finite() && t.q.is_finite() {
        find_certificate_with(t.p, t.q, t.a, t.b, &params, &CertificateOptions::default())
            .ok()
            .map(|d| d.certificate.bound)
    } else {
        None
    };
    Ok(Output::Json(
        Report::new(
            json!({ "tuple": t, "expr": f.expr().to_string() }),
            json!({
                "verdict": verdict.verdict,
                "f_norm": f_norm,
                "image_norm": image_norm,
                "quotient": image_norm / f_norm,
                "sharp": sharp,
                "certificate_bound": certificate_bound,
                "values": values,
            }),
        )?
        .tol("f_norm", tol)
        .tol("image_norm", tol)
        .tol("quotient", 2.0 * tol)
        .tol("sharp", BETA_TOL)
        .tol("certificate_bound", BETA_TOL)
        .tol("values", tol),
    ))
}

fn sweep(args: SweepArgs) -> Result<Output> {
    if args.steps < 1 {
        return Err(Error::domain("--steps must be at least 1"));
    }
    let name = args.param.name();
    let mut w = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| Error::domain(format!("csv: {e}"));
    w.write_record([name, "bounded", "sharp", "bound", "relation_residual", "clause"])
        .map_err(csv_err)?;
    for i in 0..args.steps {
        let v = if args.steps == 1 {
            args.from
        } else {
            args.from + (args.to - args.from) * i as f64 / (args.steps - 1) as f64
        };
        let mut t = args.tuple;
        match args.param {
            SweepParam::Alpha => t.kernel.alpha = v,
            SweepParam::Beta => t.kernel.beta = v,
            SweepParam::Gamma => t.kernel.gamma = v,
            SweepParam::P => t.p = Exponent::new(v)?,
            SweepParam::Q => t.q = Exponent::new(v)?,
            SweepParam::A => t.a = v,
            SweepParam::B => t.b = v,
        }
        let params = t.kernel.params()?;
        let report = hilbert_verdict(t.p, t.q, t.a, t.b, &params)?;
        let sharp = if t.p == t.q {
            WeightedSpaceSpec::new(t.p, t.a)
                .and_then(|s| sharp_norm(&s, &params))
                .ok()
        } else {
            None
        };
        let bound = if args.certify && report.is_bounded() && t.p.is_finite() && t.q.is_finite() {
            find_certificate_with(t.p, t.q, t.a, t.b, &params, &CertificateOptions::default())
                .ok()
                .map(|d| d.certificate.bound)
        } else {
            None
        };
        let residual = report.relations.first().map(|r| r.residual);
        let cell = |x: Option<f64>| x.map(|v| format!("{v:.15e}")).unwrap_or_default();
        w.write_record([
            format!("{v}"),
            (report.is_bounded() as u8).to_string(),
            cell(sharp),
            cell(bound),
            cell(residual),
            report.clause.clone(),
        ])
        .map_err(csv_err)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::domain(format!("csv: {e}")))?;
    let text = String::from_utf8(bytes).map_err(|e| Error::domain(e.to_string()))?;
    match args.out {
        None => Ok(Output::Csv(text)),
        Some(path) => {
            std::fs::write(&path, &text)?;
            Ok(Output::Json(
                Report::new(
                    json!({ "param": name, "from": args.from, "to": args.to, "steps": args.steps, "tuple": args.tuple }),
                    json!({ "rows": args.steps, "out": path }),
                )?
                .tol("sharp", BETA_TOL)
                .tol("bound", BETA_TOL)
                .tol("relation_residual", RELATION_TOL),
            ))
        }
    }
}
