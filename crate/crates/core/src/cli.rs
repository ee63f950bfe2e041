//! Command-line front end.
//!
//! [`run`] parses arguments, executes one subcommand and returns the exit code
//! together with the rendered report, so the binary is a thin wrapper.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::functors::{build_f, extract_g, roundtrip_check};
use crate::linalg::{vector, Field};
use crate::operad::{
    check_operad_axioms, check_units, dim_profile, hadamard_product, symmetrize_two_unit, tabulate, CheckMode,
    OperadExt, OperadView, TabulatedOperad, TabulatedOperadJson,
};
use crate::trident::{algebra_from_json_str, odot_product, TridentAlgebra, TridentJson};

const DEFAULT_ARITY: usize = 6;
const DEFAULT_BUDGET: usize = 6;
/// Violations echoed in text mode; the JSON report carries every stored one.
const TEXT_VIOLATION_LIMIT: usize = 20;

#[derive(Parser, Debug)]
#[command(
    name = "trident-operads",
    version,
    about = "Trident algebras and GK-3 operads in exact arithmetic"
)]
struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Reinterpret every scalar of the input files in this field (`rational` or `gf:<p>`).
    #[arg(long, global = true, value_parser = parse_field)]
    field: Option<Field>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check every trident identity.
    ValidateTrident { file: PathBuf },
    /// Tabulate F(T) up to arity N.
    Build {
        #[arg(short)]
        i: PathBuf,
        #[arg(short = 'N', default_value_t = DEFAULT_ARITY)]
        n: usize,
        #[arg(short)]
        o: PathBuf,
    },
    /// Run the operad axiom suite.
    CheckAxioms {
        #[arg(short)]
        i: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        #[arg(long, default_value = "exhaustive")]
        mode: CheckMode,
        /// Truncation used when the input is a trident.
        #[arg(short = 'N', default_value_t = DEFAULT_ARITY)]
        n: usize,
    },
    /// Dimensions, f-sequence, series coefficients and observed GK-dimension.
    Profile {
        #[arg(short)]
        i: PathBuf,
        #[arg(short = 'N', default_value_t = DEFAULT_ARITY)]
        n: usize,
    },
    /// Unit flags of the designated 0-unit and 2-unit.
    Units {
        #[arg(short)]
        i: PathBuf,
        #[arg(long)]
        symmetrize: bool,
        #[arg(short = 'N', default_value_t = DEFAULT_ARITY)]
        n: usize,
    },
    /// Tabulate the Hadamard product of two operads.
    Hadamard {
        #[arg(short)]
        a: PathBuf,
        #[arg(short)]
        b: PathBuf,
        #[arg(short)]
        o: PathBuf,
        #[arg(short = 'N', default_value_t = DEFAULT_ARITY)]
        n: usize,
    },
    /// The trident A⊙B of two augmented algebras.
    Odot {
        #[arg(short)]
        a: PathBuf,
        #[arg(short)]
        b: PathBuf,
        #[arg(short)]
        o: PathBuf,
    },
    /// The trident G(P) of an operad with a symmetric 2a-unit.
    Extract {
        #[arg(short)]
        i: PathBuf,
        #[arg(short)]
        o: PathBuf,
        #[arg(short = 'N', default_value_t = DEFAULT_ARITY)]
        n: usize,
    },
    /// Check G(F(T)) = T and the axioms of F(T).
    Roundtrip {
        #[arg(short)]
        i: PathBuf,
        #[arg(short = 'N', default_value_t = DEFAULT_ARITY)]
        n: usize,
    },
}

fn parse_field(s: &str) -> std::result::Result<Field, String> {
    Field::parse_spec(s).map_err(|e| e.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Violations,
    Error,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DetailKind {
    Violation,
    Info,
    Error,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Detail {
    pub kind: DetailKind,
    /// Identity, axiom or check name.
    pub rule: String,
    pub message: String,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub data: Value,
}

/// Outcome of one subcommand.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CommandReport {
    pub command: String,
    pub status: Status,
    pub exit_code: i32,
    /// One-line human summary.
    pub summary: String,
    pub details: Vec<Detail>,
}

impl CommandReport {
    fn new(command: &str) -> Self {
        CommandReport {
            command: command.to_string(),
            status: Status::Ok,
            exit_code: 0,
            summary: String::new(),
            details: Vec::new(),
        }
    }

    fn info(&mut self, rule: &str, message: impl Into<String>, data: Value) {
        self.details.push(Detail {
            kind: DetailKind::Info,
            rule: rule.to_string(),
            message: message.into(),
            data,
        });
    }

    fn violation(&mut self, rule: &str, message: impl Into<String>, data: Value) {
        self.details.push(Detail {
            kind: DetailKind::Violation,
            rule: rule.to_string(),
            message: message.into(),
            data,
        });
    }

    /// Derives status and exit code from the details.
    fn finish(mut self) -> Self {
        if self.details.iter().any(|d| d.kind == DetailKind::Violation) {
            self.status = Status::Violations;
            self.exit_code = 1;
        }
        self
    }

    fn failed(command: &str, err: &Error) -> Self {
        let (code, rule) = match err {
            Error::Unsupported(_) | Error::UnsupportedCharacteristic { .. } | Error::Precondition(_) => {
                (3, "unsupported")
            }
            Error::InvalidTrident(_) | Error::Structural(_) => (1, "structure"),
            _ => (2, "input"),
        };
        let mut report = CommandReport::new(command);
        report.status = if code == 1 { Status::Violations } else { Status::Error };
        report.exit_code = code;
        report.summary = err.to_string();
        report.details.push(Detail {
            kind: if code == 1 {
                DetailKind::Violation
            } else {
                DetailKind::Error
            },
            rule: rule.to_string(),
            message: err.to_string(),
            data: Value::Null,
        });
        report
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("{}: {}\n", self.command, self.summary);
        let mut shown = 0;
        for d in &self.details {
            if d.kind == DetailKind::Violation {
                shown += 1;
                if shown > TEXT_VIOLATION_LIMIT {
                    continue;
                }
            }
            let tag = match d.kind {
                DetailKind::Violation => "violation",
                DetailKind::Info => "info",
                DetailKind::Error => "error",
            };
            out.push_str(&format!("  [{tag}] {}: {}\n", d.rule, d.message));
        }
        if shown > TEXT_VIOLATION_LIMIT {
            out.push_str(&format!("  … {} more violation(s)\n", shown - TEXT_VIOLATION_LIMIT));
        }
        out
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

/// Exit code and the text written to stdout.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub report: Option<CommandReport>,
}

/// Runs one command line; `args[0]` is the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return Outcome {
                code,
                stdout: e.render().to_string(),
                report: None,
            };
        }
    };
    let name = command_name(&cli.command);
    let report = execute(&cli).unwrap_or_else(|e| CommandReport::failed(name, &e));
    let stdout = if cli.json {
        report.render_json()
    } else {
        report.render_text()
    };
    Outcome {
        code: report.exit_code,
        stdout,
        report: Some(report),
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::ValidateTrident { .. } => "validate-trident",
        Command::Build { .. } => "build",
        Command::CheckAxioms { .. } => "check-axioms",
        Command::Profile { .. } => "profile",
        Command::Units { .. } => "units",
        Command::Hadamard { .. } => "hadamard",
        Command::Odot { .. } => "odot",
        Command::Extract { .. } => "extract",
        Command::Roundtrip { .. } => "roundtrip",
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn write(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, format!("{contents}\n")).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn located<T>(path: &Path, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Json(j) => Error::Parse(format!(
            "{}: line {} column {}: {j}",
            path.display(),
            j.line(),
            j.column()
        )),
        Error::Shape(s) => Error::Shape(format!("{}: {s}", path.display())),
        Error::Parse(s) if !s.starts_with(&path.display().to_string()) => {
            Error::Parse(format!("{}: {s}", path.display()))
        }
        other => other,
    })
}

fn load_trident(path: &Path, field: Option<Field>) -> Result<TridentAlgebra> {
    let text = read(path)?;
    located(
        path,
        serde_json::from_str::<TridentJson>(&text)
            .map_err(Error::from)
            .and_then(|j| j.to_trident(field)),
    )
}

/// Either a tabulated operad file or a trident file, which is turned into `F(T)`.
fn load_operad(path: &Path, field: Option<Field>, arity: usize) -> Result<Arc<dyn OperadView>> {
    let text = read(path)?;
    let value: Value = located(path, serde_json::from_str(&text).map_err(Error::from))?;
    if value.get("algebra").is_some() {
        let t = located(path, serde_json::from_value::<TridentJson>(value).map_err(Error::from))?;
        let t = located(path, t.to_trident(field))?;
        Ok(Arc::new(build_f(t, arity)?))
    } else {
        let mut json = located(
            path,
            serde_json::from_value::<TabulatedOperadJson>(value).map_err(Error::from),
        )?;
        if let Some(f) = field {
            json.field = f;
        }
        Ok(Arc::new(located(path, TabulatedOperad::from_json(&json))?))
    }
}

fn csv(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn execute(cli: &Cli) -> Result<CommandReport> {
    let field = cli.field;
    match &cli.command {
        Command::ValidateTrident { file } => {
            let t = load_trident(file, field)?;
            let mut r = CommandReport::new("validate-trident");
            let report = t.validate();
            for v in &report.violations {
                r.violation(
                    v.identity,
                    format!("{}: {} != {}", v.witness, v.lhs, v.rhs),
                    json!({"witness": v.witness, "lhs": v.lhs, "rhs": v.rhs}),
                );
            }
            r.summary = if report.passed() {
                format!("valid trident (d = {}, m = {}, {})", t.dim_bar(), t.dim_m(), t.field())
            } else {
                format!(
                    "{} violation(s) of {}",
                    report.violations.len(),
                    report.violated_identities().join(", ")
                )
            };
            Ok(r.finish())
        }
        Command::Build { i, n, o } => {
            let t = load_trident(i, field)?;
            let mut r = CommandReport::new("build");
            let report = t.validate();
            if !report.passed() {
                for v in &report.violations {
                    r.violation(
                        v.identity,
                        format!("{}: {} != {}", v.witness, v.lhs, v.rhs),
                        Value::Null,
                    );
                }
                r.summary = "input trident is invalid; nothing written".into();
                return Ok(r.finish());
            }
            let p = build_f(t, *n)?;
            let tab = tabulate(&p)?;
            write(o, &tab.to_json_string()?)?;
            let dims: Vec<usize> = (0..=*n).map(|k| p.dim(k)).collect();
            r.info("dims", csv(&dims), json!(dims));
            r.summary = format!("wrote F(T) up to arity {n} to {}", o.display());
            Ok(r.finish())
        }
        Command::CheckAxioms { i, budget, mode, n } => {
            let p = load_operad(i, field, *n)?;
            let report = check_operad_axioms(p.as_ref(), *mode, *budget);
            let mut r = CommandReport::new("check-axioms");
            for v in &report.violations {
                r.violation(v.axiom, v.to_string(), serde_json::to_value(v)?);
            }
            r.info(
                "coverage",
                format!("{} bucket(s)", report.coverage.len()),
                json!(report.coverage),
            );
            r.summary = format!(
                "{} instance(s), {} violation(s) ({mode}, budget {budget})",
                report.instances, report.violation_count
            );
            if report.violation_count > report.violations.len() as u64 {
                r.info(
                    "truncated",
                    format!("only the first {} violations are listed", report.violations.len()),
                    Value::Null,
                );
            }
            Ok(r.finish())
        }
        Command::Profile { i, n } => {
            let p = load_operad(i, field, *n)?;
            let profile = dim_profile(p.as_ref())?;
            let mut r = CommandReport::new("profile");
            let series: Vec<usize> = (0..profile.dims.len())
                .map(|k| {
                    (0..=k)
                        .map(|j| profile.f[j] * crate::operad::truncation::binomial(k, j))
                        .sum()
                })
                .collect();
            r.info("dims", csv(&profile.dims), json!(profile.dims));
            r.info("f", csv(&profile.f), json!(profile.f));
            r.info("series", csv(&series), json!(series));
            r.info(
                "gk",
                profile.gk_display(),
                json!({"observed": profile.gk_observed, "exact": profile.gk_exact}),
            );
            if !profile.series_ok {
                r.violation("series", "dims differ from Σ f(k)·C(n,k)", Value::Null);
            }
            r.summary = format!(
                "dims = {}; f = {}; GK = {}",
                csv(&profile.dims),
                csv(&profile.f),
                profile.gk_display()
            );
            Ok(r.finish())
        }
        Command::Units { i, symmetrize, n } => {
            let p = load_operad(i, field, *n)?;
            let u0 = p
                .unit0()
                .ok_or_else(|| Error::Unsupported("operad has no designated 0-unit".into()))?;
            let u2 = p
                .unit2()
                .ok_or_else(|| Error::Unsupported("operad has no designated 2-unit candidate".into()))?;
            let flags = check_units(p.as_ref(), &u0, &u2)?;
            let mut r = CommandReport::new("units");
            r.info("u2", p.format(&u2), Value::Null);
            r.info("flags", format!("{flags:?}"), serde_json::to_value(flags)?);
            if !flags.is_two_unit {
                r.violation("two-unit", "u2 ∘ᵢ u0 is not the identity", Value::Null);
            }
            r.summary = format!(
                "two-unit: {}; 2a-unit: {}; symmetric: {}",
                flags.is_two_unit, flags.is_2a_unit, flags.is_symmetric
            );
            if *symmetrize {
                let sym = symmetrize_two_unit(p.as_ref(), &u2)?;
                let sflags = check_units(p.as_ref(), &u0, &sym)?;
                r.info(
                    "symmetrized",
                    p.format(&sym),
                    json!({"coeffs": vector::to_strings(sym.coeffs()), "flags": sflags}),
                );
                r.summary.push_str(&format!(
                    "; symmetrized: {} (symmetric 2a-unit: {})",
                    p.format(&sym),
                    sflags.is_symmetric
                ));
                if !sflags.is_symmetric {
                    r.violation(
                        "symmetrize",
                        "the symmetrized element is not a symmetric 2a-unit",
                        Value::Null,
                    );
                }
            }
            Ok(r.finish())
        }
        Command::Hadamard { a, b, o, n } => {
            let p = load_operad(a, field, *n)?;
            let q = load_operad(b, field, *n)?;
            let h = hadamard_product(p, q)?;
            write(o, &tabulate(&h)?.to_json_string()?)?;
            let dims: Vec<usize> = (0..=h.max_arity()).map(|k| h.dim(k)).collect();
            let mut r = CommandReport::new("hadamard");
            r.info("dims", csv(&dims), json!(dims));
            r.summary = format!("wrote the Hadamard product to {}", o.display());
            Ok(r.finish())
        }
        Command::Odot { a, b, o } => {
            let x = located(a, algebra_from_json_str(&read(a)?, field))?;
            let y = located(b, algebra_from_json_str(&read(b)?, field))?;
            let t = odot_product(&x, &y)?;
            write(o, &t.to_json_string()?)?;
            let mut r = CommandReport::new("odot");
            r.summary = format!("wrote A⊙B (d = {}, m = {}) to {}", t.dim_bar(), t.dim_m(), o.display());
            Ok(r.finish())
        }
        Command::Extract { i, o, n } => {
            let p = load_operad(i, field, *n)?;
            let u2 = p
                .unit2()
                .ok_or_else(|| Error::Unsupported("operad has no designated 2-unit candidate".into()))?;
            let e = extract_g(p.as_ref(), &u2)?;
            write(o, &e.trident.to_json_string()?)?;
            let mut r = CommandReport::new("extract");
            r.summary = format!(
                "wrote G(P) (d = {}, m = {}) to {}",
                e.trident.dim_bar(),
                e.trident.dim_m(),
                o.display()
            );
            Ok(r.finish())
        }
        Command::Roundtrip { i, n } => {
            let t = load_trident(i, field)?;
            let rt = roundtrip_check(&t, *n)?;
            let p = build_f(t, *n)?;
            let budget = (*n).min(DEFAULT_BUDGET);
            let axioms = check_operad_axioms(&p, CheckMode::Exhaustive, budget);
            let profile = dim_profile(&p)?;
            let mut r = CommandReport::new("roundtrip");
            for d in &rt.diffs {
                r.violation("gf-identity", format!("G(F(T)) differs from T in {d}"), Value::Null);
            }
            for v in &axioms.violations {
                r.violation(v.axiom, v.to_string(), serde_json::to_value(v)?);
            }
            let verdict = |ok: bool| if ok { "pass" } else { "fail" };
            r.info("f", csv(&profile.f), json!(profile.f));
            r.info("instances", axioms.instances.to_string(), json!(axioms.instances));
            r.summary = format!(
                "GF identity: {}; axioms: {}; f = {}",
                verdict(rt.passed()),
                verdict(axioms.passed()),
                csv(&profile.f)
            );
            Ok(r.finish())
        }
    }
}
