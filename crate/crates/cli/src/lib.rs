//! Command implementations behind the `smzv` binary.
//!
//! Every command returns a serializable output record; [`render`] turns it
//! into text, JSON or CSV.

pub mod parse;

use std::fmt::Write as _;

use anyhow::{bail, Context, Result};
use serde::Serialize;

use smzv_core::closed_forms::{conjecture_residual, ConjectureCase};
use smzv_core::exact::{trunc_smzv, Cutoff};
use smzv_core::numerics::eval_numeric;
use smzv_core::numerics::hpreal::HPReal;
use smzv_core::numerics::numeric::{smzv_numeric, NumericConfig};
use smzv_core::report::{exit_code, IdentityReport, Status};
use smzv_core::suites::{worked_examples, run_suite, status_counts, ExampleRow, SuiteConfig, SUITES};

pub use parse::{parse_expr, parse_shape_expr, ParseError, ShapeExpr};

pub const DEFAULT_DIGITS: u32 = 50;
pub const DEFAULT_NUMERIC_CUTOFF: u64 = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Exact,
    Numeric,
    Closed,
}

#[derive(Debug, Clone, Serialize)]
pub struct Config {
    pub digits: u32,
    /// Exact cutoff; `None` keeps each suite's own default.
    pub cutoff: Option<u64>,
    pub numeric_cutoff: u64,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            digits: DEFAULT_DIGITS,
            cutoff: None,
            numeric_cutoff: DEFAULT_NUMERIC_CUTOFF,
        }
    }
}

impl Config {
    pub fn validate(&self) -> Result<()> {
        if self.digits < 15 {
            bail!("precision must be at least 15 digits, got {}", self.digits);
        }
        let exact = self.exact_cutoff();
        if exact < 2 {
            bail!("exact cutoff must be at least 2, got {exact}");
        }
        if self.numeric_cutoff < exact.max(8) {
            bail!(
                "numeric cutoff {} must be at least the exact cutoff {exact} and at least 8",
                self.numeric_cutoff
            );
        }
        Ok(())
    }

    pub fn exact_cutoff(&self) -> u64 {
        self.cutoff.unwrap_or(SuiteConfig::default().exact_cutoff)
    }

    pub fn numeric(&self) -> Result<NumericConfig> {
        Ok(NumericConfig::new(self.digits, self.numeric_cutoff)?)
    }

    pub fn suite(&self) -> Result<SuiteConfig> {
        let mut cfg = SuiteConfig {
            numeric: self.numeric()?,
            ..SuiteConfig::default()
        };
        if let Some(m) = self.cutoff {
            cfg.exact_cutoff = m;
            cfg.gluing_cutoff = m;
        }
        Ok(cfg)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EvalOutput {
    pub command: &'static str,
    pub expr: String,
    pub tableau: String,
    pub method: Method,
    pub config: Config,
    /// Cutoff of an exact value, or the middle numeric cutoff.
    pub cutoff: u64,
    /// Exact rational (exact method only).
    pub exact: Option<String>,
    pub value: String,
    pub error_bound: Option<String>,
    pub closed_form: Option<String>,
    pub closed_form_terms: Option<serde_json::Value>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
}

impl Summary {
    fn of(reports: &[IdentityReport]) -> Self {
        let (pass, fail, inconclusive) = status_counts(reports);
        Self { pass, fail, inconclusive }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyOutput {
    pub command: &'static str,
    pub suite: String,
    pub config: Config,
    pub summary: Summary,
    pub reports: Vec<IdentityReport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConjectureOutput {
    pub command: &'static str,
    pub case: String,
    pub config: Config,
    pub rel_tol: f64,
    pub ratio: String,
    pub conjectured: String,
    pub error_bound: String,
    pub status: Status,
    pub report: IdentityReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportOutput {
    pub command: &'static str,
    pub config: Config,
    pub examples: Vec<ExampleRow>,
    pub summary: Option<Summary>,
    pub reports: Vec<IdentityReport>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum Output {
    Eval(EvalOutput),
    Verify(VerifyOutput),
    Conjecture(ConjectureOutput),
    Report(ReportOutput),
}

impl Output {
    /// Process exit code: 0 all pass, 1 any failure, 2 only inconclusive.
    /// A conjecture never fails the process.
    pub fn exit_code(&self) -> i32 {
        match self {
            Output::Eval(_) | Output::Conjecture(_) => 0,
            Output::Verify(v) => exit_code(&v.reports),
            Output::Report(r) => exit_code(&r.reports),
        }
    }
}

fn sig_digits(cfg: &Config) -> u32 {
    cfg.digits.min(40)
}

pub fn cmd_eval(text: &str, method: Method, cfg: &Config) -> Result<EvalOutput> {
    cfg.validate()?;
    let expr = parse_expr(text)?;
    let t = expr.tableau()?;
    let num = cfg.numeric()?;
    let mut out = EvalOutput {
        command: "eval",
        expr: expr.to_string(),
        tableau: t.to_literal(),
        method,
        config: cfg.clone(),
        cutoff: cfg.numeric_cutoff,
        exact: None,
        value: String::new(),
        error_bound: None,
        closed_form: None,
        closed_form_terms: None,
    };
    match method {
        Method::Exact => {
            let m = cfg.exact_cutoff();
            let q = trunc_smzv(&t, Cutoff::new(m)?)?;
            out.cutoff = m;
            out.value = HPReal::from_rational(&q, num.bits()).to_sci(sig_digits(cfg));
            out.exact = Some(q.to_string());
        }
        Method::Numeric => {
            let est = smzv_numeric(&t, &num)?;
            out.value = est.value.to_sci(sig_digits(cfg));
            out.error_bound = Some(est.error_bound.to_sci(3));
        }
        Method::Closed => {
            let e = expr.closed_form()?;
            let est = eval_numeric(&e, &num)?;
            out.value = est.value.to_sci(sig_digits(cfg));
            out.error_bound = Some(est.error_bound.to_sci(3));
            out.closed_form = Some(e.to_string());
            out.closed_form_terms = Some(e.to_canonical_json());
        }
    }
    Ok(out)
}

pub fn cmd_verify(suite: &str, cfg: &Config) -> Result<VerifyOutput> {
    cfg.validate()?;
    if !SUITES.contains(&suite) {
        bail!("unknown suite {suite:?}; known suites: {}", SUITES.join(", "));
    }
    let reports = run_suite(suite, &cfg.suite()?)?;
    Ok(VerifyOutput {
        command: "verify",
        suite: suite.to_string(),
        config: cfg.clone(),
        summary: Summary::of(&reports),
        reports,
    })
}

/// Default relative tolerance: tight for W8, loose for the rest.
pub fn default_rel_tol(case: ConjectureCase) -> f64 {
    if case == ConjectureCase::W8 {
        1e-6
    } else {
        1e-2
    }
}

pub fn cmd_conjecture(case: &str, rel_tol: Option<f64>, cfg: &Config) -> Result<ConjectureOutput> {
    cfg.validate()?;
    let case = ConjectureCase::parse(case).with_context(|| "cases are W8, W16, W24, W32")?;
    let rel_tol = rel_tol.unwrap_or_else(|| default_rel_tol(case));
    let r = conjecture_residual(case, &cfg.numeric()?, rel_tol)?;
    Ok(ConjectureOutput {
        command: "conjecture",
        case: case.to_string(),
        config: cfg.clone(),
        rel_tol,
        ratio: r.ratio.to_sci(sig_digits(cfg).min(25)),
        conjectured: r.conjectured.to_string(),
        error_bound: r.error_bound.to_sci(3),
        status: r.status,
        report: r.to_report(),
    })
}

/// The table of worked values; with `all`, every suite as well.
pub fn cmd_report(all: bool, cfg: &Config) -> Result<ReportOutput> {
    cfg.validate()?;
    let examples = worked_examples(&cfg.numeric()?)?;
    let mut reports = Vec::new();
    if all {
        let scfg = cfg.suite()?;
        for name in SUITES {
            reports.extend(run_suite(name, &scfg)?);
        }
    }
    Ok(ReportOutput {
        command: "report",
        config: cfg.clone(),
        examples,
        summary: all.then(|| Summary::of(&reports)),
        reports,
    })
}

// ---- rendering ----------------------------------------------------------------

fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut width: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in width.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let fmt_row = |out: &mut String, cells: Vec<&str>| {
        let line: Vec<String> = cells
            .iter()
            .zip(&width)
            .map(|(c, w)| format!("{c:<w$}", w = *w))
            .collect();
        let _ = writeln!(out, "{}", line.join("  ").trim_end());
    };
    fmt_row(&mut out, header.to_vec());
    fmt_row(&mut out, width.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>().iter().map(String::as_str).collect());
    for row in rows {
        fmt_row(&mut out, row.iter().map(String::as_str).collect());
    }
    out
}

fn report_rows(reports: &[IdentityReport]) -> Vec<Vec<String>> {
    reports
        .iter()
        .map(|r| {
            vec![
                r.status.to_string(),
                r.suite.clone(),
                r.id.clone(),
                r.error_bound.clone().unwrap_or_default(),
                r.detail.clone().unwrap_or_default(),
            ]
        })
        .collect()
}

const REPORT_HEADER: [&str; 5] = ["status", "suite", "id", "bound", "detail"];

fn summary_line(s: &Summary) -> String {
    format!("{} pass, {} fail, {} inconclusive\n", s.pass, s.fail, s.inconclusive)
}

fn text(out: &Output) -> String {
    match out {
        Output::Eval(e) => {
            let mut s = format!("{}\n{}\n", e.expr, e.tableau);
            match e.method {
                Method::Exact => {
                    let _ = writeln!(s, "exact at M={}: {}", e.cutoff, e.exact.as_deref().unwrap_or(""));
                    let _ = writeln!(s, "= {}", e.value);
                }
                Method::Numeric => {
                    let _ = writeln!(s, "numeric (M={}, 2M): {} ± {}", e.cutoff, e.value, e.error_bound.as_deref().unwrap_or(""));
                }
                Method::Closed => {
                    let _ = writeln!(s, "closed form: {}", e.closed_form.as_deref().unwrap_or(""));
                    let _ = writeln!(s, "= {} ± {}", e.value, e.error_bound.as_deref().unwrap_or(""));
                }
            }
            s
        }
        Output::Verify(v) => {
            let mut s = table(&REPORT_HEADER, &report_rows(&v.reports));
            let _ = write!(s, "{}: {}", v.suite, summary_line(&v.summary));
            s
        }
        Output::Conjecture(c) => format!(
            "{}: ratio {} ± {} (conjectured {}) {}\n",
            c.case, c.ratio, c.error_bound, c.conjectured, c.status
        ),
        Output::Report(r) => {
            let rows: Vec<Vec<String>> = r
                .examples
                .iter()
                .map(|x| {
                    vec![
                        x.label.clone(),
                        x.closed_value.clone(),
                        x.numeric_value.clone().unwrap_or_else(|| "-".into()),
                        x.error_bound.clone().unwrap_or_else(|| "-".into()),
                        x.closed_form.clone(),
                    ]
                })
                .collect();
            let mut s = table(&["example", "closed value", "numeric", "bound", "closed form"], &rows);
            if let Some(sum) = &r.summary {
                s.push('\n');
                let shown: Vec<IdentityReport> = r.reports.iter().filter(|x| x.status != Status::Pass).cloned().collect();
                if !shown.is_empty() {
                    s.push_str(&table(&REPORT_HEADER, &report_rows(&shown)));
                }
                let _ = write!(s, "all suites: {}", summary_line(sum));
            }
            s
        }
    }
}

#[derive(Serialize)]
struct CsvReport<'a> {
    suite: &'a str,
    id: &'a str,
    status: String,
    lhs: &'a str,
    rhs: &'a str,
    error_bound: Option<&'a str>,
    tolerance: Option<&'a str>,
    detail: Option<&'a str>,
}

fn csv_reports(w: &mut csv::Writer<Vec<u8>>, reports: &[IdentityReport]) -> Result<()> {
    for r in reports {
        w.serialize(CsvReport {
            suite: &r.suite,
            id: &r.id,
            status: r.status.to_string(),
            lhs: &r.lhs,
            rhs: &r.rhs,
            error_bound: r.error_bound.as_deref(),
            tolerance: r.tolerance.as_deref(),
            detail: r.detail.as_deref(),
        })?;
    }
    Ok(())
}

fn csv_out(out: &Output) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    match out {
        Output::Eval(e) => {
            w.write_record(["expr", "tableau", "method", "cutoff", "exact", "value", "error_bound", "closed_form"])?;
            w.write_record([
                e.expr.as_str(),
                &e.tableau,
                &format!("{:?}", e.method).to_lowercase(),
                &e.cutoff.to_string(),
                e.exact.as_deref().unwrap_or(""),
                &e.value,
                e.error_bound.as_deref().unwrap_or(""),
                e.closed_form.as_deref().unwrap_or(""),
            ])?;
        }
        Output::Verify(v) => csv_reports(&mut w, &v.reports)?,
        Output::Conjecture(c) => csv_reports(&mut w, std::slice::from_ref(&c.report))?,
        Output::Report(r) => {
            if r.summary.is_some() {
                csv_reports(&mut w, &r.reports)?;
            } else {
                for x in &r.examples {
                    w.serialize(x)?;
                }
            }
        }
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

pub fn render(out: &Output, format: Format) -> Result<String> {
    Ok(match format {
        Format::Text => text(out),
        Format::Json => serde_json::to_string_pretty(out)? + "\n",
        Format::Csv => csv_out(out)?,
    })
}
