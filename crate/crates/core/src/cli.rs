//! Command-line front end: `zeros`, `table`, `verify`, `limit`, `oracle`.
//!
//! Exit status is 0 when everything passed, 1 on a failed check or a root
//! isolation failure, 2 on bad usage or parameters.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::lab::suites::{run_suite, Suite, SuiteConfig};
use crate::lab::{
    jacobi_to_laguerre_study, laguerre_to_hermite_study, ExceptionalZeroTable, LimitStudy, Report,
    DEFAULT_LIMIT_CAP,
};
use crate::oracle::{cross_check_x1_jacobi, cross_check_x1_laguerre, OracleComparison};
use crate::xop::{JacobiParams, LaguerreParams, XmLaguerreParams};
use crate::zeros::{XopFamily, ZeroFinder, ZeroSet};
use crate::{Error, Result, DEFAULT_TOL};

/// Agreement required between oracle and formula zeros.
pub const ORACLE_ZERO_TOL: f64 = 1e-8;

#[derive(Debug, Parser)]
#[command(name = "xop-zeros", version, about = "Zeros of exceptional orthogonal polynomials")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Regular and exceptional zeros of one polynomial.
    Zeros(ZerosArgs),
    /// Exceptional zeros of type-I Xm-Laguerre polynomials across degrees.
    Table(TableArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Large-parameter limits of the scaled zeros.
    Limit(LimitArgs),
    /// Compare formula zeros with a Gram-Schmidt reconstruction.
    Oracle(OracleArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    X1Laguerre,
    X1Jacobi,
    XmLaguerreI,
}

impl From<FamilyArg> for XopFamily {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::X1Laguerre => XopFamily::X1Laguerre,
            FamilyArg::X1Jacobi => XopFamily::X1Jacobi,
            FamilyArg::XmLaguerreI => XopFamily::XmLaguerreI,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LimitTarget {
    /// X1-Jacobi as β → ∞, towards X1-Laguerre.
    Laguerre,
    /// X1-Laguerre as α → ∞, towards Hermite.
    Hermite,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Absolute root refinement tolerance, in [1e-15, 1e-6].
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ZerosArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    /// Degree.
    #[arg(long)]
    pub n: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<f64>,
    #[arg(long)]
    pub m: Option<usize>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, default_value_t = ExceptionalZeroTable::DEFAULT_M)]
    pub m: usize,
    #[arg(long, default_value_t = ExceptionalZeroTable::DEFAULT_ALPHA)]
    pub alpha: f64,
    /// Degrees (comma list).
    #[arg(long, value_delimiter = ',', default_values_t = ExceptionalZeroTable::DEFAULT_NS)]
    pub n: Vec<usize>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(long, conflicts_with = "alphas", allow_hyphen_values = true)]
    pub alpha: Option<f64>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub alphas: Option<Vec<f64>>,
    #[arg(long, conflicts_with = "betas", allow_hyphen_values = true)]
    pub beta: Option<f64>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub betas: Option<Vec<f64>>,
    #[arg(long)]
    pub n_max: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    /// Degree sequence (comma list).
    #[arg(long, value_delimiter = ',')]
    pub n: Option<Vec<usize>>,
    /// Restrict the conjecture suite to one family.
    #[arg(long, value_enum)]
    pub family: Option<FamilyArg>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct LimitArgs {
    #[arg(long, value_enum)]
    pub target: LimitTarget,
    #[arg(long, default_value_t = 4)]
    pub n: usize,
    /// Fixed α of the Jacobi → Laguerre limit.
    #[arg(long, default_value_t = 1.0)]
    pub alpha: f64,
    /// Increasing β values (laguerre target).
    #[arg(long, value_delimiter = ',')]
    pub betas: Option<Vec<f64>>,
    /// Increasing α values (hermite target).
    #[arg(long, value_delimiter = ',')]
    pub alphas: Option<Vec<f64>>,
    /// Regular zero indices for the hermite target (default 2..n).
    #[arg(long, value_delimiter = ',')]
    pub k: Option<Vec<usize>>,
    /// Final error must be at most cap·(1 + |target|).
    #[arg(long, default_value_t = DEFAULT_LIMIT_CAP)]
    pub cap: f64,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    #[arg(long)]
    pub n: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<f64>,
    #[command(flatten)]
    pub output: Output,
}

/// Rendered output plus whether it counts as a pass.
struct Outcome {
    body: String,
    passed: bool,
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(&cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            if let Error::Isolation { found, .. } = &e {
                for br in found {
                    eprintln!("  sign change in [{}, {}]", br.lo, br.hi);
                }
            }
            if e.is_usage() {
                2
            } else {
                1
            }
        }
    }
}

fn execute(cmd: &Command) -> Result<i32> {
    let (output, outcome) = match cmd {
        Command::Zeros(a) => (&a.output, cmd_zeros(a)?),
        Command::Table(a) => (&a.output, cmd_table(a)?),
        Command::Verify(a) => (&a.output, cmd_verify(a)?),
        Command::Limit(a) => (&a.output, cmd_limit(a)?),
        Command::Oracle(a) => (&a.output, cmd_oracle(a)?),
    };
    emit(output, &outcome.body)?;
    Ok(if outcome.passed { 0 } else { 1 })
}

fn emit(output: &Output, body: &str) -> Result<()> {
    let io = |e: std::io::Error| Error::Numeric(format!("writing output: {e}"));
    match &output.out {
        Some(path) => std::fs::write(path, body).map_err(|e| {
            Error::param(format!("cannot write {}: {e}", path.display()))
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(body.as_bytes()).map_err(io)?;
            stdout.flush().map_err(io)
        }
    }
}

fn finder(output: &Output) -> Result<ZeroFinder> {
    if !(1e-15..=1e-6).contains(&output.tol) {
        return Err(Error::param(format!("--tol must lie in [1e-15, 1e-6], got {}", output.tol)));
    }
    ZeroFinder::new(output.tol)
}

fn to_json<T: Serialize>(v: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(v).map_err(|e| Error::Numeric(format!("serializing: {e}")))?;
    s.push('\n');
    Ok(s)
}

/// Six significant digits, at most five decimals.
pub fn fmt6(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let mag = v.abs().log10().floor() as i32;
    let decimals = (5 - mag).clamp(0, 5) as usize;
    format!("{v:.decimals$}")
}

fn csv_string(rows: Vec<Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.write_record(&r).map_err(|e| Error::Numeric(format!("writing CSV: {e}")))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Numeric(format!("writing CSV: {e}")))?;
    Ok(String::from_utf8(bytes).expect("CSV output is UTF-8"))
}

fn join6(v: &[f64]) -> String {
    v.iter().map(|x| fmt6(*x)).collect::<Vec<_>>().join(", ")
}

// ---------------------------------------------------------------------------

fn cmd_zeros(a: &ZerosArgs) -> Result<Outcome> {
    let finder = finder(&a.output)?;
    let set = match a.family {
        FamilyArg::X1Laguerre => finder.x1_laguerre(a.n, &LaguerreParams::new(a.alpha)?)?,
        FamilyArg::X1Jacobi => {
            let beta = a.beta.ok_or_else(|| Error::param("x1-jacobi needs --beta"))?;
            finder.x1_jacobi(a.n, &JacobiParams::new(a.alpha, beta)?)?
        }
        FamilyArg::XmLaguerreI => {
            let m = a.m.ok_or_else(|| Error::param("xm-laguerre-i needs --m"))?;
            finder.xm_laguerre(a.n, &XmLaguerreParams::new(m, a.alpha)?)?
        }
    };
    for w in &set.warnings {
        log::warn!("{w}");
    }
    let body = match a.output.format.unwrap_or(Format::Json) {
        Format::Json => to_json(&set)?,
        Format::Csv => zeros_csv(&set)?,
        Format::Text => zeros_text(&set),
    };
    Ok(Outcome { body, passed: true })
}

fn zeros_csv(set: &ZeroSet) -> Result<String> {
    let mut rows = vec![vec!["kind".into(), "value".into(), "residual".into()]];
    for (z, r) in set.all_zeros().iter().zip(&set.residuals) {
        let kind = if set.exceptional.contains(z) { "exceptional" } else { "regular" };
        rows.push(vec![kind.into(), z.to_string(), r.to_string()]);
    }
    csv_string(rows)
}

fn zeros_text(set: &ZeroSet) -> String {
    let mut s = format!("{} n={} alpha={}", set.family, set.n, set.alpha);
    if let Some(m) = set.m {
        let _ = write!(s, " m={m}");
    }
    if let Some(b) = set.beta {
        let _ = write!(s, " beta={b}");
    }
    let _ = writeln!(s);
    let _ = writeln!(s, "regular:     [{}]", join6(&set.regular));
    let _ = writeln!(s, "exceptional: [{}]", join6(&set.exceptional));
    for w in &set.warnings {
        let _ = writeln!(s, "warning: {w}");
    }
    s
}

fn cmd_table(a: &TableArgs) -> Result<Outcome> {
    let finder = finder(&a.output)?;
    let table = ExceptionalZeroTable::compute(a.m, a.alpha, &a.n, &finder)?;
    let body = match a.output.format.unwrap_or(Format::Csv) {
        Format::Json => to_json(&table)?,
        Format::Csv => {
            let mut buf = Vec::new();
            table.write_csv(&mut buf)?;
            String::from_utf8(buf).expect("CSV output is UTF-8")
        }
        Format::Text => {
            let mut s = String::new();
            let header = table.header();
            let _ = writeln!(s, "{}", header.iter().map(|h| format!("{h:>10}")).collect::<String>());
            for row in &table.rows {
                let _ = write!(s, "{:>10}", row.k);
                for v in row.values.iter().chain([&row.limit]) {
                    let _ = write!(s, "{:>10}", fmt6(*v));
                }
                let _ = writeln!(s);
            }
            s
        }
    };
    Ok(Outcome { body, passed: true })
}

fn verify_config(a: &VerifyArgs) -> Result<SuiteConfig> {
    let mut cfg = SuiteConfig {
        tol: a.output.tol,
        ..SuiteConfig::default()
    };
    if let Some(alpha) = a.alpha {
        cfg.alphas = vec![alpha];
        cfg.limit_alpha = alpha;
    }
    if let Some(alphas) = &a.alphas {
        cfg.alphas = alphas.clone();
        cfg.hermite_alphas = alphas.clone();
    }
    if let Some(beta) = a.beta {
        cfg.betas = Some(vec![beta]);
    }
    if let Some(betas) = &a.betas {
        cfg.betas = Some(betas.clone());
        cfg.limit_betas = betas.clone();
    }
    if let Some(n_max) = a.n_max {
        cfg.n_max = n_max;
        cfg.lemma_n_max = n_max;
    }
    if let Some(ns) = &a.n {
        if ns.len() == 1 {
            cfg.limit_n = ns[0];
        }
        cfg.ns = Some(ns.clone());
    }
    cfg.m = a.m;
    cfg.family = a.family.map(Into::into);
    Ok(cfg)
}

fn cmd_verify(a: &VerifyArgs) -> Result<Outcome> {
    finder(&a.output)?;
    let suite: Suite = a.suite.parse()?;
    let report = run_suite(suite, &verify_config(a)?)?;
    for f in report.findings() {
        log::warn!("{} {}: {}", f.name, serde_json::Value::Object(f.params.clone()), f.detail);
    }
    let body = match a.output.format.unwrap_or(Format::Json) {
        Format::Json => to_json(&report)?,
        Format::Csv => report_csv(&report)?,
        Format::Text => report_text(&report),
    };
    Ok(Outcome {
        body,
        passed: report.all_passed,
    })
}

fn verdict(passed: bool, exploratory: bool) -> &'static str {
    match (passed, exploratory) {
        (true, _) => "PASS",
        (false, true) => "FINDING",
        (false, false) => "FAIL",
    }
}

fn report_csv(r: &Report) -> Result<String> {
    let mut rows = vec![["name", "params", "verdict", "exploratory", "worst_residual", "detail"]
        .map(String::from)
        .to_vec()];
    for c in &r.checks {
        rows.push(vec![
            c.name.clone(),
            serde_json::Value::Object(c.params.clone()).to_string(),
            verdict(c.passed, c.exploratory).into(),
            c.exploratory.to_string(),
            c.worst_residual.to_string(),
            c.detail.clone(),
        ]);
    }
    csv_string(rows)
}

fn report_text(r: &Report) -> String {
    let mut s = String::new();
    for c in &r.checks {
        let params = serde_json::Value::Object(c.params.clone()).to_string();
        let _ = writeln!(s, "[{}] {} {params}: {}", verdict(c.passed, c.exploratory), c.name, c.detail);
    }
    let gating = r.checks.iter().filter(|c| c.gates()).count();
    let findings = r.findings().count();
    let _ = writeln!(
        s,
        "suite {}: {} checks, {gating} failed, {findings} findings => {}",
        r.suite,
        r.checks.len(),
        if r.all_passed { "PASS" } else { "FAIL" }
    );
    s
}

#[derive(Serialize)]
struct LimitOutput<'a> {
    #[serde(flatten)]
    study: &'a LimitStudy,
    passed: bool,
}

fn cmd_limit(a: &LimitArgs) -> Result<Outcome> {
    let finder = finder(&a.output)?;
    let study = match a.target {
        LimitTarget::Laguerre => {
            let betas = a.betas.as_ref().ok_or_else(|| Error::param("--target laguerre needs --betas"))?;
            jacobi_to_laguerre_study(a.n, a.alpha, betas, a.cap, &finder)?
        }
        LimitTarget::Hermite => {
            let alphas = a.alphas.as_ref().ok_or_else(|| Error::param("--target hermite needs --alphas"))?;
            laguerre_to_hermite_study(a.n, a.k.as_deref(), alphas, a.cap, &finder)?
        }
    };
    if study.sequence.len() < 2 {
        return Err(Error::param("a limit study needs at least two sequence values"));
    }
    let passed = study.passed();
    let body = match a.output.format.unwrap_or(Format::Json) {
        Format::Json => to_json(&LimitOutput { study: &study, passed })?,
        Format::Csv => {
            let mut rows = vec![["k", "parameter", "scaled", "target", "error"].map(String::from).to_vec()];
            for r in &study.rows {
                for ((p, s), e) in study.sequence.iter().zip(&r.scaled).zip(&r.errors) {
                    rows.push(vec![r.k.to_string(), p.to_string(), s.to_string(), r.target.to_string(), e.to_string()]);
                }
            }
            csv_string(rows)?
        }
        Format::Text => {
            let mut s = String::new();
            for r in &study.rows {
                let errs: Vec<String> = r.errors.iter().map(|e| format!("{e:.3e}")).collect();
                let _ = writeln!(
                    s,
                    "k={} target={} errors=[{}] decreasing={} within_cap={}",
                    r.k,
                    fmt6(r.target),
                    errs.join(", "),
                    r.decreasing,
                    r.within_cap
                );
            }
            let _ = writeln!(s, "{}", if passed { "PASS" } else { "FAIL" });
            s
        }
    };
    Ok(Outcome { body, passed })
}

fn cmd_oracle(a: &OracleArgs) -> Result<Outcome> {
    let finder = finder(&a.output)?;
    let cmp: OracleComparison = match a.family {
        FamilyArg::X1Laguerre => cross_check_x1_laguerre(a.n, a.alpha, &finder)?,
        FamilyArg::X1Jacobi => {
            let beta = a.beta.ok_or_else(|| Error::param("x1-jacobi needs --beta"))?;
            cross_check_x1_jacobi(a.n, &JacobiParams::new(a.alpha, beta)?, &finder)?
        }
        FamilyArg::XmLaguerreI => {
            return Err(Error::Unsupported(
                "the Gram-Schmidt oracle covers x1-laguerre and x1-jacobi only".into(),
            ))
        }
    };
    let passed = cmp.max_abs_diff <= ORACLE_ZERO_TOL && cmp.orthogonality_residual <= ORACLE_ZERO_TOL;
    let body = match a.output.format.unwrap_or(Format::Json) {
        Format::Json => to_json(&cmp)?,
        Format::Csv => {
            let mut rows = vec![["oracle", "formula", "abs_diff"].map(String::from).to_vec()];
            for (o, f) in cmp.oracle_zeros.iter().zip(&cmp.formula_zeros) {
                rows.push(vec![o.to_string(), f.to_string(), (o - f).abs().to_string()]);
            }
            csv_string(rows)?
        }
        Format::Text => format!(
            "oracle:  [{}]\nformula: [{}]\nmax |diff| = {:.3e}, orthogonality = {:.3e}, rule order {}\n{}\n",
            join6(&cmp.oracle_zeros),
            join6(&cmp.formula_zeros),
            cmp.max_abs_diff,
            cmp.orthogonality_residual,
            cmp.rule_order,
            if passed { "PASS" } else { "FAIL" }
        ),
    };
    Ok(Outcome { body, passed })
}
