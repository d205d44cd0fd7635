//! The `tightpoly` command line: classify, verify, inspect.
//!
//! Every command builds one serializable value. `--json` prints it as JSON;
//! otherwise the same value is rendered as text, so the two never drift.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::Value;

use crate::enumeration::enumerate_cosets;
use crate::error::Error;
use crate::export::{export_map, MapLabel, MapSummary};
use crate::families::{
    classify_all, coxeter_presentation, delta_presentation, lambda_presentation, tight_existence,
};
use crate::map::{build_map, map_invariants, validate_polyhedron, MapInvariants};
use crate::oracle::{verify_range_with, SweepConfig, SweepReport, DEFAULT_BUDGET};
use crate::presentation::Presentation;
use crate::sggi::{SchlafliType, SggiReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_EMPTY: i32 = 3;
pub const EXIT_BOUND: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "tightpoly", version, about = "Tight regular polyhedra of type {p,q}")]
pub struct Cli {
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    pub json: bool,

    /// Coset bound for a single enumeration.
    #[arg(long, global = true, value_name = "N", value_parser = clap::value_parser!(u64).range(1..))]
    pub max_cosets: Option<u64>,

    /// Enumerations allowed per type in a sweep.
    #[arg(long, global = true, value_name = "N", value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: Option<u64>,

    /// Let `verify` succeed even if some types were over budget.
    #[arg(long, global = true)]
    pub allow_skips: bool,

    /// Write the inspected map as json or dot.
    #[arg(long, global = true, num_args = 2, value_names = ["FMT", "PATH"])]
    pub export: Option<Vec<String>>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every tight regular polyhedron of type {p,q}.
    Classify { p: u64, q: u64 },
    /// Compare the classification with a brute-force sweep.
    Verify {
        #[arg(long, default_value_t = 14)]
        max_p: u64,
        #[arg(long, default_value_t = 14)]
        max_q: u64,
    },
    /// Enumerate one group and report its properties.
    ///
    /// FAMILY is coxeter, lambda, delta or custom. PARAMS is a
    /// comma-separated list such as 4,4,-1,1, or a file path for custom.
    Inspect {
        family: String,
        #[arg(allow_hyphen_values = true)]
        params: String,
    },
}

#[derive(Debug, Serialize)]
struct ClassifyOutput {
    #[serde(rename = "type")]
    schlafli: [u64; 2],
    exists: bool,
    matched_cases: Vec<u8>,
    records: Vec<MapSummary>,
}

#[derive(Debug, Serialize)]
struct VerifyRow {
    #[serde(rename = "type")]
    schlafli: [u64; 2],
    orientable: usize,
    nonorientable: usize,
    enumerations: u64,
    skipped: bool,
    mismatches: Vec<String>,
}

#[derive(Debug, Serialize)]
struct VerifyOutput {
    types: usize,
    clean: bool,
    rows: Vec<VerifyRow>,
}

#[derive(Debug, Serialize)]
struct InspectOutput {
    family: String,
    parameters: std::collections::BTreeMap<String, u64>,
    order: u64,
    sggi: SggiReport,
    polyhedron: bool,
    invariants: MapInvariants,
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::BoundExceeded { .. } | Error::BudgetExceeded { .. } => EXIT_BOUND,
            Error::InvalidType { .. }
            | Error::Parse(_)
            | Error::InvalidPresentation(_)
            | Error::UnsupportedFormat(_) => EXIT_USAGE,
            _ => EXIT_FAILURE,
        };
        let mut message = e.to_string();
        if let Error::BoundExceeded { .. } = e {
            message.push_str("; the group may be infinite, or raise --max-cosets");
        }
        Failure { code, message }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

/// Runs the CLI on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    if cli.export.is_some() && !matches!(cli.command, Command::Inspect { .. }) {
        return Err(usage("--export only applies to inspect"));
    }
    match &cli.command {
        Command::Classify { p, q } => classify(cli, *p, *q, out),
        Command::Verify { max_p, max_q } => verify(cli, *max_p, *max_q, out),
        Command::Inspect { family, params } => inspect(cli, family, params, out),
    }
}

fn emit<T: Serialize>(cli: &Cli, value: &T, out: &mut dyn Write) -> Result<(), Failure> {
    let value = serde_json::to_value(value).expect("output serializes");
    let text = if cli.json {
        let mut s = serde_json::to_string_pretty(&value).expect("value serializes");
        s.push('\n');
        s
    } else {
        render_text(&value)
    };
    out.write_all(text.as_bytes())
        .map_err(|e| Failure { code: EXIT_FAILURE, message: e.to_string() })
}

fn classify(cli: &Cli, p: u64, q: u64, out: &mut dyn Write) -> Result<i32, Failure> {
    if p < 2 || q < 2 {
        return Err(Error::InvalidType { p: p as i64, q: q as i64 }.into());
    }
    let verdict = tight_existence(p, q);
    let records = classify_all(p, q)?;
    let summaries: Vec<MapSummary> = records
        .iter()
        .map(|r| MapSummary::new(&MapLabel::from_params(&r.params), &build_map(&r.group), &r.invariants))
        .collect();
    let empty = summaries.is_empty();
    emit(
        cli,
        &ClassifyOutput {
            schlafli: [p, q],
            exists: verdict.exists,
            matched_cases: verdict.matched_cases,
            records: summaries,
        },
        out,
    )?;
    Ok(if empty { EXIT_EMPTY } else { EXIT_OK })
}

fn verify(cli: &Cli, max_p: u64, max_q: u64, out: &mut dyn Write) -> Result<i32, Failure> {
    if max_p < 2 || max_q < 2 {
        return Err(usage("--max-p and --max-q must be at least 2"));
    }
    let config = SweepConfig { budget: cli.budget.unwrap_or(DEFAULT_BUDGET) };
    let reports: Vec<SweepReport> = verify_range_with(max_p, max_q, &config)?;
    let mismatched = reports.iter().any(|r| !r.mismatches.is_empty());
    let skipped = reports.iter().any(|r| r.skipped);
    let rows = reports
        .iter()
        .map(|r| VerifyRow {
            schlafli: [r.schlafli.p, r.schlafli.q],
            orientable: r.found_orientable.len(),
            nonorientable: r.found_nonorientable.len(),
            enumerations: r.enumerations_run,
            skipped: r.skipped,
            mismatches: r.mismatches.clone(),
        })
        .collect();
    let clean = !mismatched && (!skipped || cli.allow_skips);
    emit(cli, &VerifyOutput { types: reports.len(), clean, rows }, out)?;
    Ok(if mismatched {
        EXIT_FAILURE
    } else if skipped && !cli.allow_skips {
        EXIT_BOUND
    } else {
        EXIT_OK
    })
}

fn parse_params(text: &str, want: usize, family: &str) -> Result<Vec<i64>, Failure> {
    let values: Result<Vec<i64>, _> = text.split(',').map(|s| s.trim().parse::<i64>()).collect();
    match values {
        Ok(v) if v.len() == want => Ok(v),
        _ => Err(usage(format!("{family} takes {want} comma-separated integers, got `{text}`"))),
    }
}

fn presentation_for(family: &str, params: &str) -> Result<Presentation, Failure> {
    let pres = match family {
        "coxeter" => {
            let v = parse_params(params, 2, family)?;
            coxeter_presentation(v[0], v[1])?
        }
        "lambda" => {
            let v = parse_params(params, 4, family)?;
            lambda_presentation(v[0], v[1], v[2], v[3])?
        }
        "delta" => {
            let v = parse_params(params, 6, family)?;
            delta_presentation(v[0], v[1], v[2], v[3], v[4], v[5])?
        }
        "custom" => {
            let path = PathBuf::from(params);
            let text = std::fs::read_to_string(&path)
                .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
            let pres = Presentation::parse_text(&text)?;
            pres.validate()?;
            pres
        }
        other => {
            return Err(usage(format!(
                "unknown family `{other}`; expected coxeter, lambda, delta or custom"
            )))
        }
    };
    Ok(pres)
}

fn inspect(cli: &Cli, family: &str, params: &str, out: &mut dyn Write) -> Result<i32, Failure> {
    let pres = presentation_for(family, params)?;
    let bound = cli.max_cosets.map(|n| n as usize).unwrap_or_else(|| pres.default_max_cosets());
    let rep = enumerate_cosets(&pres, bound)?;
    let report = SggiReport::analyze(&rep);
    let map = build_map(&rep);
    let invariants = map_invariants(&map, &rep);
    let schlafli = if report.is_sggi { report.schlafli } else { SchlafliType::new(0, 0) };
    let label = MapLabel::from_family(pres.family(), schlafli);
    if let Some(export) = &cli.export {
        let bytes = export_map(&map, &invariants, &label, &export[0])?;
        std::fs::write(&export[1], bytes)
            .map_err(|e| Failure { code: EXIT_FAILURE, message: format!("{}: {e}", export[1]) })?;
    }
    let polyhedron = report.is_string_c_group && validate_polyhedron(&map);
    emit(
        cli,
        &InspectOutput {
            family: label.family.clone(),
            parameters: label.parameters.clone(),
            order: rep.order() as u64,
            sggi: report,
            polyhedron,
            invariants,
        },
        out,
    )?;
    Ok(EXIT_OK)
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let parts: Vec<String> = items.iter().map(scalar).collect();
            format!("[{}]", parts.join(","))
        }
        Value::Object(map) if map.values().all(|x| !x.is_object() && !x.is_array()) => {
            let parts: Vec<String> = map.iter().map(|(k, x)| format!("{k}={}", scalar(x))).collect();
            parts.join(" ")
        }
        other => other.to_string(),
    }
}

fn render_into(v: &Value, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    let Value::Object(map) = v else {
        out.push_str(&format!("{pad}{}\n", scalar(v)));
        return;
    };
    for (key, value) in map {
        match value {
            Value::Array(rows) if rows.first().is_some_and(Value::is_object) => {
                out.push_str(&format!("{pad}{key}:\n"));
                render_table(rows, indent + 2, out);
            }
            Value::Object(inner) if inner.values().any(|x| x.is_object() || x.is_array()) || inner.len() > 4 => {
                out.push_str(&format!("{pad}{key}:\n"));
                render_into(value, indent + 2, out);
            }
            _ => out.push_str(&format!("{pad}{key}: {}\n", scalar(value))),
        }
    }
}

fn render_table(rows: &[Value], indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    let headers: Vec<String> = match &rows[0] {
        Value::Object(m) => m.keys().cloned().collect(),
        _ => Vec::new(),
    };
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| headers.iter().map(|h| scalar(&r[h.as_str()])).collect())
        .collect();
    let widths: Vec<usize> = headers
        .iter()
        .enumerate()
        .map(|(c, h)| cells.iter().map(|row| row[c].chars().count()).chain([h.len()]).max().unwrap_or(0))
        .collect();
    let line = |items: &[String]| {
        let parts: Vec<String> = items
            .iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s:<w$}"))
            .collect();
        format!("{pad}{}\n", parts.join("  ").trim_end())
    };
    out.push_str(&line(&headers));
    for row in &cells {
        out.push_str(&line(row));
    }
}

/// Plain-text rendering of a JSON value: `key: value` lines, with arrays
/// of objects laid out as aligned tables.
pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    render_into(v, 0, &mut out);
    out
}
