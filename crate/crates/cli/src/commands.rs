use clap::{Parser, ValueEnum};
use serde_json::json;
use thiserror::Error;
use uqsl2::exprio::{parse, NCExpr, ParseError};
use uqsl2::ncore::{normalize, AlgebraElement, NcoreError, Presentation};
use uqsl2::qexpops::{closed_form_for, omega, omega_closed_form, omega_cubed_scalar, verify_omega_closed_form, OpError, OperatorFamily};
use uqsl2::qfield::FieldError;
use uqsl2::repmod::render::{string_entries, to_csv, to_latex, MatrixRecord};
use uqsl2::repmod::{build_equitable, ModuleSpec, Rep, RepError};
use uqsl2::report::VerificationReport;

use crate::args::{Cli, Command, EvalArgs, Format, NormalizeArgs, OmegaArgs, OmegaMode, RepArgs, VerifyArgs};
use crate::suites::{self, SuiteConfig};

/// Any error here is a usage or input problem and maps to exit code 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{source}\n  {input}\n  {caret}")]
    Parse {
        input: String,
        caret: String,
        source: ParseError,
    },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Ncore(#[from] NcoreError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Op(#[from] OpError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

impl CliError {
    fn parse(input: &str, source: ParseError) -> Self {
        let caret = format!("{}^", " ".repeat(source.position.saturating_sub(1)));
        CliError::Parse { input: input.to_string(), caret, source }
    }
}

/// What a command prints to stdout and the process exit code.
#[derive(Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

/// Full result of one invocation, including clap's own errors.
#[derive(Debug, PartialEq, Eq)]
pub struct Invocation {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Parses `args` (program name first) and runs the command without touching
/// the process streams.
pub fn invoke<I, T>(args: I) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            return if code == 0 {
                Invocation { stdout: text, stderr: String::new(), code }
            } else {
                Invocation { stdout: String::new(), stderr: text, code }
            };
        }
    };
    match execute(&cli) {
        Ok(out) => Invocation { stdout: out.stdout, stderr: String::new(), code: out.code },
        Err(e) => Invocation { stdout: String::new(), stderr: format!("error: {e}\n"), code: 2 },
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let fmt = cli.format;
    if matches!(fmt, Format::Csv | Format::Latex) && !matches!(cli.command, Command::Rep(_)) {
        return Err(CliError::Usage("--format csv and latex apply to `rep` only".into()));
    }
    match &cli.command {
        Command::Normalize(a) => cmd_normalize(a, fmt),
        Command::Rep(a) => cmd_rep(a, fmt),
        Command::Omega(a) => cmd_omega(a, fmt),
        Command::Verify(a) => cmd_verify(a, fmt),
        Command::Eval(a) => cmd_eval(a, fmt),
    }
}

fn parse_expr(input: &str, p: Presentation) -> Result<NCExpr, CliError> {
    parse(input, p).map_err(|e| CliError::parse(input, e))
}

fn line(s: impl std::fmt::Display) -> String {
    format!("{s}\n")
}

fn terms_json(elem: &AlgebraElement) -> serde_json::Value {
    elem.terms()
        .map(|(m, c)| json!({"f": m.a, "k": m.b, "e": m.c, "coeff": c.to_string()}))
        .collect()
}

fn cmd_normalize(a: &NormalizeArgs, fmt: Format) -> Result<Outcome, CliError> {
    let p = a.presentation.into();
    let elem = normalize(&parse_expr(&a.expr, p)?, p)?;
    Ok(Outcome::ok(match fmt {
        Format::Json => line(json!({
            "presentation": p,
            "input": a.expr,
            "normalForm": elem.to_string(),
            "terms": terms_json(&elem),
        })),
        _ => line(&elem),
    }))
}

fn cmd_rep(a: &RepArgs, fmt: Format) -> Result<Outcome, CliError> {
    let basis = a.basis.into();
    let rep = Rep::build(&ModuleSpec::simple(a.n, a.eps)?, basis)?;
    let m = rep.matrix(a.gen);
    Ok(Outcome::ok(match fmt {
        Format::Text => line(&m),
        Format::Json => line(serde_json::to_string(&MatrixRecord::new(a.n, a.eps, basis, a.gen, &m)).expect("serializable")),
        Format::Csv => to_csv(&m),
        Format::Latex => to_latex(&m),
    }))
}

fn report_text(title: &str, report: &VerificationReport) -> String {
    let mut out = String::new();
    for e in report.entries() {
        out.push_str(&line(e));
    }
    let failed = report.failures().count();
    let status = if failed == 0 { "PASS" } else { "FAIL" };
    out.push_str(&format!("{title}: {} checks, {failed} failed: {status}\n", report.len()));
    out
}

pub fn report_code(report: &VerificationReport) -> i32 {
    if report.all_passed() {
        0
    } else {
        1
    }
}

fn cmd_omega(a: &OmegaArgs, fmt: Format) -> Result<Outcome, CliError> {
    let rep = build_equitable(a.n, a.eps)?;
    let op = match a.mode {
        OmegaMode::Compositional => omega(&rep)?,
        OmegaMode::ClosedForm => omega_closed_form(a.n)?,
        OmegaMode::Check => {
            let ops = OperatorFamily::build(&rep)?;
            let report = verify_omega_closed_form(&ops, &closed_form_for(&ops)?);
            let scalar = omega_cubed_scalar(a.n);
            let stdout = match fmt {
                Format::Json => line(json!({
                    "n": a.n,
                    "eps": a.eps,
                    "omegaCubedScalar": scalar.to_string(),
                    "status": report.status(),
                    "entries": report,
                })),
                _ => {
                    let mut s = report_text(&format!("omega check on L({},{:+})", a.n, a.eps), &report);
                    s.push_str(&format!("Omega^3 = ({scalar}) * I\n"));
                    s
                }
            };
            return Ok(Outcome { stdout, code: report_code(&report) });
        }
    };
    Ok(Outcome::ok(match fmt {
        Format::Json => line(json!({
            "n": a.n,
            "eps": a.eps,
            "provenance": op.provenance,
            "matrix": string_entries(&op.matrix),
            "inverse": string_entries(&op.inverse),
        })),
        _ => line(&op.matrix),
    }))
}

fn cmd_verify(a: &VerifyArgs, fmt: Format) -> Result<Outcome, CliError> {
    let cfg = SuiteConfig {
        n_max: a.nmax,
        window: a.window.max(1),
        q_spots: suites::random_q_spots(a.q_spot, a.seed),
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(a.jobs)
        .build()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let report = pool.install(|| suites::run(a.scope, &cfg));
    let scope = a.scope.to_possible_value().expect("named scope").get_name().to_string();
    let stdout = match fmt {
        Format::Json => line(json!({
            "scope": scope,
            "nmax": a.nmax,
            "window": cfg.window,
            "qSpots": cfg.q_spots.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "status": report.status(),
            "count": report.len(),
            "entries": report,
        })),
        _ => report_text(&format!("verify {scope}"), &report),
    };
    Ok(Outcome { stdout, code: report_code(&report) })
}

fn cmd_eval(a: &EvalArgs, fmt: Format) -> Result<Outcome, CliError> {
    let input = match (&a.expr, &a.expr_flag) {
        (Some(e), None) | (None, Some(e)) => e,
        _ => return Err(CliError::Usage("give exactly one expression".into())),
    };
    let p = a.presentation.into();
    let expr = parse_expr(input, p)?;
    let q = a.q.to_string();
    match a.rep {
        None => {
            let elem = normalize(&expr, p)?;
            let scalar = elem
                .as_scalar()
                .ok_or_else(|| CliError::Usage(format!("'{input}' is not a scalar; pass --rep n,eps to evaluate it on a module")))?;
            let v = scalar.specialize(&a.q)?;
            Ok(Outcome::ok(match fmt {
                Format::Json => line(json!({"q": q, "value": v.to_string()})),
                _ => line(v),
            }))
        }
        Some((n, eps)) => {
            let rep = Rep::build(&ModuleSpec::simple(n, eps)?, p)?.specialize(&a.q)?;
            let m = rep.evaluate_expr(&expr)?;
            Ok(Outcome::ok(match fmt {
                Format::Json => line(json!({
                    "q": q,
                    "n": n,
                    "eps": eps,
                    "basis": p,
                    "entries": string_entries(&m),
                })),
                _ => line(&m),
            }))
        }
    }
}
