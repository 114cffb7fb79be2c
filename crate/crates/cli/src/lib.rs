//! Command-line front end: tables of `G~_{n,q}`, the identity verification
//! suite, p-adic convergence experiments and the log-gamma cross-check.
//!
//! Exit statuses: 0 success, 2 invalid configuration, 3 evaluation error
//! (a pole), 4 a convergence or agreement criterion that did not hold.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde_json::json;

use qgenocchi::bernstein::bernstein_basis;
use qgenocchi::genocchi::{genocchi_number, genocchi_polynomial, integrate_polynomial};
use qgenocchi::identities::{run_suite, IdentityId, IdentityReport, SuiteRanges, Verdict};
use qgenocchi::padic::{
    is_strictly_increasing, loggamma_direct, loggamma_series, moment_convergence, Agreement, PadicContext,
    PadicNumber,
};
use qgenocchi::{BernsteinIndex, Error, QRational, Rational};

#[derive(Debug, Parser)]
#[command(name = "qgenocchi", version, about = "q-Genocchi numbers, identity checks and p-adic experiments")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// G~_{n,q} (or G~_{n,q}(x) with --poly) for n = 0..=nmax.
    Table(TableArgs),
    /// Run the identity verifiers and emit one report per line.
    Verify(VerifyArgs),
    /// Error valuations of the fermionic Riemann sums of ξ^n.
    PadicConverge(ConvergeArgs),
    /// Log-gamma series against the level-m Riemann sum.
    Loggamma(LoggammaArgs),
    /// Bernstein basis polynomials of degree n and their integrals.
    Bernstein(BernsteinArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Args)]
pub struct Output {
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write the document here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, default_value_t = 10)]
    pub nmax: usize,
    /// "symbolic", a rational such as 1/2, or an expression in p such as 1+p.
    #[arg(long, default_value = "symbolic", allow_hyphen_values = true)]
    pub q: String,
    /// Needed when --q mentions p.
    #[arg(long)]
    pub prime: Option<u64>,
    /// Emit coefficient rows of G~_{n,q}(x) instead of the numbers.
    #[arg(long)]
    pub poly: bool,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Caps every index range; default ranges otherwise.
    #[arg(long)]
    pub nmax: Option<usize>,
    /// Comma-separated identity ids or prefixes (THM4, EQ15, ...).
    #[arg(long, value_delimiter = ',')]
    pub only: Vec<String>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct ConvergeArgs {
    #[arg(long, default_value_t = 1)]
    pub n: u32,
    #[arg(long)]
    pub prime: Option<u64>,
    #[arg(long, default_value_t = 12)]
    pub precision: u32,
    #[arg(long, default_value = "1+p", allow_hyphen_values = true)]
    pub q: String,
    #[arg(long, default_value_t = 5)]
    pub mmax: u32,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct LoggammaArgs {
    #[arg(long)]
    pub prime: Option<u64>,
    #[arg(long, default_value_t = 12)]
    pub precision: u32,
    #[arg(long, default_value = "1+p", allow_hyphen_values = true)]
    pub q: String,
    #[arg(long, default_value = "1/p", allow_hyphen_values = true)]
    pub x: String,
    /// Riemann-sum level of the direct evaluation.
    #[arg(long, default_value_t = 4)]
    pub mmax: u32,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct BernsteinArgs {
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("evaluation error: {0}")]
    Eval(String),
}

impl CliError {
    pub fn status(&self) -> u8 {
        match self {
            CliError::Config(_) => 2,
            CliError::Eval(_) => 3,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Pole(_) | Error::DivisionByZero | Error::PrecisionExhausted(_) => CliError::Eval(e.to_string()),
            other => CliError::Config(other.to_string()),
        }
    }
}

/// A finished run: the document, its exit status, and an optional message
/// for stderr.
#[derive(Debug)]
pub struct Report {
    pub document: String,
    pub status: u8,
    pub message: Option<String>,
}

impl Report {
    fn ok(document: String) -> Self {
        Self { document, status: 0, message: None }
    }
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Table(a) => run_table(a),
        Command::Verify(a) => run_verify(a),
        Command::PadicConverge(a) => run_converge(a),
        Command::Loggamma(a) => run_loggamma(a),
        Command::Bernstein(a) => run_bernstein(a),
    }
}

/// Where the document goes, per the shared `--out` flag.
pub fn output_path(cli: &Cli) -> Option<&PathBuf> {
    match &cli.command {
        Command::Table(a) => a.output.out.as_ref(),
        Command::Verify(a) => a.output.out.as_ref(),
        Command::PadicConverge(a) => a.output.out.as_ref(),
        Command::Loggamma(a) => a.output.out.as_ref(),
        Command::Bernstein(a) => a.output.out.as_ref(),
    }
}

/// Evaluates `+ - * /` over integers and `p` with the usual precedence.
pub fn parse_rational_expr(s: &str, prime: Option<u64>) -> Result<Rational, CliError> {
    let tokens: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut pos = 0;
    let value = sum(&tokens, &mut pos, prime)?;
    if pos != tokens.len() || tokens.is_empty() {
        return Err(CliError::Config(format!("cannot parse {s:?} as a rational")));
    }
    Ok(value)
}

fn sum(t: &[char], pos: &mut usize, prime: Option<u64>) -> Result<Rational, CliError> {
    let mut acc = product(t, pos, prime)?;
    while let Some(&op) = t.get(*pos).filter(|c| **c == '+' || **c == '-') {
        *pos += 1;
        let rhs = product(t, pos, prime)?;
        acc = if op == '+' { acc + rhs } else { acc - rhs };
    }
    Ok(acc)
}

fn product(t: &[char], pos: &mut usize, prime: Option<u64>) -> Result<Rational, CliError> {
    let mut acc = atom(t, pos, prime)?;
    while let Some(&op) = t.get(*pos).filter(|c| **c == '*' || **c == '/') {
        *pos += 1;
        let rhs = atom(t, pos, prime)?;
        acc = if op == '*' {
            acc * rhs
        } else if rhs.is_zero() {
            return Err(CliError::Config("division by zero in a rational argument".into()));
        } else {
            acc / rhs
        };
    }
    Ok(acc)
}

fn atom(t: &[char], pos: &mut usize, prime: Option<u64>) -> Result<Rational, CliError> {
    match t.get(*pos) {
        Some('-') => {
            *pos += 1;
            Ok(-atom(t, pos, prime)?)
        }
        Some('(') => {
            *pos += 1;
            let v = sum(t, pos, prime)?;
            if t.get(*pos) != Some(&')') {
                return Err(CliError::Config("unbalanced parenthesis".into()));
            }
            *pos += 1;
            Ok(v)
        }
        Some('p') => {
            *pos += 1;
            let p = prime.ok_or_else(|| CliError::Config("--prime is required when p appears".into()))?;
            Ok(Rational::from_integer(p.into()))
        }
        Some(c) if c.is_ascii_digit() => {
            let start = *pos;
            while t.get(*pos).is_some_and(char::is_ascii_digit) {
                *pos += 1;
            }
            let digits: String = t[start..*pos].iter().collect();
            Ok(digits.parse().expect("ascii digits"))
        }
        other => Err(CliError::Config(format!("unexpected {other:?} in a rational argument"))),
    }
}

fn padic_context(prime: Option<u64>, precision: u32) -> Result<PadicContext, CliError> {
    let p = prime.ok_or_else(|| CliError::Config("--prime is required".into()))?;
    Ok(PadicContext::new(p, precision)?)
}

fn padic_q(spec: &str, ctx: PadicContext) -> Result<PadicNumber, CliError> {
    if spec == "symbolic" {
        return Err(CliError::Config("p-adic commands need a concrete --q".into()));
    }
    let q = parse_rational_expr(spec, Some(ctx.p()))?;
    Ok(PadicNumber::from_rational(&q, ctx))
}

fn text_or_json(format: Option<Format>, allow_csv: bool) -> Result<Format, CliError> {
    match format {
        Some(Format::Csv) if !allow_csv => Err(CliError::Config("CSV is not available for this command".into())),
        Some(f) => Ok(f),
        None => Ok(Format::Json),
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn run_table(a: &TableArgs) -> Result<Report, CliError> {
    let format = a.output.format.unwrap_or(Format::Text);
    let q0 = match a.q.as_str() {
        "symbolic" => None,
        s => Some(parse_rational_expr(s, a.prime)?),
    };
    let mut doc = String::new();
    if format == Format::Csv {
        doc.push_str(if a.poly { "n,k,coefficient\n" } else { "n,value\n" });
    }
    let eval = |r: &QRational| -> Result<String, CliError> {
        Ok(match &q0 {
            None => r.to_string(),
            Some(q) => r.eval(q)?.to_string(),
        })
    };
    for n in 0..=a.nmax {
        if a.poly {
            let poly = genocchi_polynomial(n);
            let coeffs = poly.coeffs().iter().map(&eval).collect::<Result<Vec<_>, _>>()?;
            match format {
                Format::Text => {
                    let shown = match &q0 {
                        None => poly.to_string(),
                        Some(_) => {
                            let terms: Vec<String> =
                                coeffs.iter().enumerate().map(|(k, c)| format!("{c}*x^{k}")).collect();
                            terms.join(" + ")
                        }
                    };
                    writeln!(doc, "G~_{n}(x) = {shown}").expect("string write");
                }
                Format::Json => {
                    writeln!(doc, "{}", json!({"n": n, "coefficients": coeffs})).expect("string write");
                }
                Format::Csv => {
                    for (k, c) in coeffs.iter().enumerate() {
                        writeln!(doc, "{n},{k},{}", csv_field(c)).expect("string write");
                    }
                }
            }
        } else {
            let g = genocchi_number(n);
            let value = eval(&g)?;
            match format {
                Format::Text => writeln!(doc, "G~_{n} = {value}"),
                Format::Json if q0.is_none() => {
                    writeln!(doc, "{}", json!({"n": n, "value": value, "latex": g.to_latex()}))
                }
                Format::Json => writeln!(doc, "{}", json!({"n": n, "value": value})),
                Format::Csv => writeln!(doc, "{n},{}", csv_field(&value)),
            }
            .expect("string write");
        }
    }
    Ok(Report::ok(doc))
}

fn report_line(r: &IdentityReport, probe: bool, format: Format) -> String {
    match format {
        Format::Text => {
            let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let verdict = match r.verdict {
                Verdict::Pass => "PASS",
                Verdict::Fail if probe => "FAIL (expected)",
                Verdict::Fail => "FAIL",
                Verdict::CorrectedPass => "CORRECTED_PASS",
            };
            let mut line = format!("{} {} {}", r.id, params.join(" "), verdict);
            if let Some(note) = &r.corrected_form {
                write!(line, " [{note}]").expect("string write");
            }
            if let (Verdict::Fail, Some(w)) = (r.verdict, &r.witness) {
                write!(line, " lhs={} rhs={}", w.lhs, w.rhs).expect("string write");
            }
            line
        }
        _ => {
            let mut v = serde_json::to_value(r).expect("report serializes");
            if probe && r.verdict == Verdict::Fail {
                v["expected"] = json!(true);
            }
            v.to_string()
        }
    }
}

pub fn run_verify(a: &VerifyArgs) -> Result<Report, CliError> {
    let format = text_or_json(a.output.format, false)?;
    let only = a
        .only
        .iter()
        .filter(|s| !s.trim().is_empty())
        .map(|s| s.parse::<IdentityId>())
        .collect::<Result<Vec<_>, _>>()?;
    let ranges = a.nmax.map_or_else(SuiteRanges::default, SuiteRanges::capped);
    let mut doc = String::new();
    let mut failures = Vec::new();
    let mut corrected = 0;
    for v in run_suite(&only, &ranges) {
        for r in &v.instances {
            writeln!(doc, "{}", report_line(r, false, format)).expect("string write");
            if r.verdict == Verdict::Fail {
                failures.push(format!("{} {:?}", r.id, r.params));
            }
            if r.verdict == Verdict::CorrectedPass {
                corrected += 1;
            }
        }
        for r in &v.probes {
            writeln!(doc, "{}", report_line(r, true, format)).expect("string write");
        }
        if v.report.id == IdentityId::Thm8 {
            // the suite-level line names the subscript reading
            writeln!(doc, "{}", report_line(&v.report, false, format)).expect("string write");
            if v.report.verdict == Verdict::Fail && failures.is_empty() {
                failures.push(format!("{} {:?}", v.report.id, v.report.params));
            }
        }
    }
    let status = if failures.is_empty() { 0 } else { 4 };
    let message = if !failures.is_empty() {
        Some(format!("identities failed: {}", failures.join(", ")))
    } else if corrected > 0 {
        Some(format!("{corrected} instance(s) pass only in corrected form"))
    } else {
        None
    };
    Ok(Report { document: doc, status, message })
}

pub fn run_converge(a: &ConvergeArgs) -> Result<Report, CliError> {
    let format = text_or_json(a.output.format, true)?;
    let ctx = padic_context(a.prime, a.precision)?;
    let q = padic_q(&a.q, ctx)?;
    if a.mmax == 0 {
        return Err(CliError::Config("--mmax must be at least 1".into()));
    }
    let points = moment_convergence(a.n, &q, a.mmax, ctx)?;
    let mut doc = String::new();
    if format == Format::Csv {
        doc.push_str("level,error_valuation,precision_limited\n");
    }
    for pt in &points {
        match format {
            Format::Json => writeln!(doc, "{}", pt.to_json()),
            Format::Text => writeln!(doc, "level {}: error valuation {}", pt.level, pt.error),
            Format::Csv => {
                let (v, limited) = match pt.error {
                    Agreement::Exact => ("exact".to_string(), false),
                    Agreement::Finite(v) => (v.to_string(), false),
                    Agreement::AtLeast(v) => (v.to_string(), true),
                };
                writeln!(doc, "{},{v},{limited}", pt.level)
            }
        }
        .expect("string write");
    }
    if is_strictly_increasing(&points) {
        return Ok(Report::ok(doc));
    }
    let offending = points
        .windows(2)
        .find(|w| !is_strictly_increasing(w))
        .map(|w| w[1].level)
        .expect("a non-increasing pair exists");
    Ok(Report {
        document: doc,
        status: 4,
        message: Some(format!(
            "error valuations not strictly increasing at level {offending} (n = {}, p = {})",
            a.n,
            ctx.p()
        )),
    })
}

pub fn run_loggamma(a: &LoggammaArgs) -> Result<Report, CliError> {
    let format = text_or_json(a.output.format, false)?;
    let ctx = padic_context(a.prime, a.precision)?;
    let q = padic_q(&a.q, ctx)?;
    let x = PadicNumber::from_rational(&parse_rational_expr(&a.x, Some(ctx.p()))?, ctx);
    if a.mmax == 0 {
        return Err(CliError::Config("--mmax must be at least 1".into()));
    }
    let series = loggamma_series(&x, &q, ctx)?;
    let direct = loggamma_direct(&x, &q, a.mmax, ctx)?;
    let agreement = series.agreement(&direct);
    let required = [series.abs_precision(), direct.abs_precision()].into_iter().flatten().min();
    let holds = required.is_none_or(|r| agreement.reaches(r));
    let agreement_json = match agreement {
        Agreement::Exact => json!("exact"),
        Agreement::Finite(v) | Agreement::AtLeast(v) => json!(v),
    };
    let doc = match format {
        Format::Text => format!(
            "series = {series}\ndirect (level {}) = {direct}\nagreement valuation = {agreement}\nrequired = {}\n",
            a.mmax,
            required.map_or("exact".into(), |r| r.to_string())
        ),
        _ => format!(
            "{}\n",
            json!({
                "prime": ctx.p(),
                "precision": ctx.precision(),
                "q": a.q,
                "x": a.x,
                "level": a.mmax,
                "series": series.to_string(),
                "direct": direct.to_string(),
                "agreement_valuation": agreement_json,
                "required_valuation": required,
            })
        ),
    };
    if holds {
        return Ok(Report::ok(doc));
    }
    Ok(Report {
        document: doc,
        status: 4,
        message: Some(format!(
            "series and level-{} sum agree to valuation {agreement}, below the joint reported precision {}",
            a.mmax,
            required.expect("inexact when failing")
        )),
    })
}

pub fn run_bernstein(a: &BernsteinArgs) -> Result<Report, CliError> {
    let format = text_or_json(a.output.format, false)?;
    let mut doc = String::new();
    for k in 0..=a.n {
        let idx = BernsteinIndex::new(k, a.n)?;
        let basis = bernstein_basis(idx);
        let integral = integrate_polynomial(&basis);
        match format {
            Format::Text => writeln!(doc, "B_{k},{}(x) = {basis}; integral = {integral}", a.n),
            _ => {
                let coeffs: Vec<String> = basis.coeffs().iter().map(ToString::to_string).collect();
                writeln!(
                    doc,
                    "{}",
                    json!({"k": k, "n": a.n, "coefficients": coeffs, "integral": integral.to_string()})
                )
            }
        }
        .expect("string write");
    }
    Ok(Report::ok(doc))
}
