//! The `compute`, `check` and `example` commands.
//!
//! Exit status: 0 on success, 1 on invalid input, 2 when the computed
//! report is flagged (a trace mismatch, non-integral multiplicities or a
//! nonzero closed-form delta).

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::chevalley_weil::{chi_g, closed_form_deltas};
use crate::io::{example_source, parse_scenario, render_json, render_text, LocatedError, RenderOptions};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_FLAGGED: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "ramiq", version, about = "Equivariant Euler characteristics of finite group actions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute χ_G for a scenario file and print the report.
    Compute {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Print the per-class Lefschetz trace table.
        #[arg(long)]
        trace_check: bool,
        /// Compare every applicable closed form with the engine.
        #[arg(long)]
        closed_form_compare: bool,
    },
    /// Validate a scenario file without computing.
    Check { path: PathBuf },
    /// Print a built-in scenario file.
    Example { name: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug)]
pub struct ComputeOptions {
    pub format: Format,
    pub trace_check: bool,
    pub closed_form_compare: bool,
}

impl Default for ComputeOptions {
    fn default() -> Self {
        ComputeOptions { format: Format::Text, trace_check: false, closed_form_compare: false }
    }
}

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match cli.command {
        Command::Compute { path, format, trace_check, closed_form_compare } => {
            compute(&path, ComputeOptions { format, trace_check, closed_form_compare }, out, err)
        }
        Command::Check { path } => check(&path, out, err),
        Command::Example { name } => example(&name, out, err),
    }
}

fn read(path: &Path, err: &mut dyn Write) -> Option<String> {
    match std::fs::read_to_string(path) {
        Ok(s) => Some(s),
        Err(e) => {
            let _ = writeln!(err, "error: cannot read {}: {e}", path.display());
            None
        }
    }
}

fn report_error(path: &str, e: &LocatedError, err: &mut dyn Write) -> i32 {
    let _ = match e.line {
        Some(line) => writeln!(err, "error: {path}:{line}: {}", e.error),
        None => writeln!(err, "error: {path}: {}", e.error),
    };
    if matches!(e.error, Error::CrossCheckFailed(_)) {
        EXIT_FLAGGED
    } else {
        EXIT_INVALID
    }
}

pub fn compute(path: &Path, options: ComputeOptions, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match read(path, err) {
        Some(source) => compute_source(&path.display().to_string(), &source, options, out, err),
        None => EXIT_INVALID,
    }
}

/// `compute` on a scenario held in memory; `label` names it in messages.
pub fn compute_source(
    label: &str,
    source: &str,
    options: ComputeOptions,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let scenario = match parse_scenario(source) {
        Ok(s) => s,
        Err(e) => return report_error(label, &e, err),
    };
    let outcome = chi_g(&scenario).and_then(|report| {
        let deltas = if options.closed_form_compare {
            Some(closed_form_deltas(&scenario, &report)?)
        } else {
            None
        };
        Ok((report, deltas))
    });
    let (report, deltas) = match outcome {
        Ok(x) => x,
        Err(e) => return report_error(label, &e.into(), err),
    };
    let text = match options.format {
        Format::Text => render_text(&report, deltas.as_deref(), RenderOptions { trace_table: options.trace_check }),
        Format::Json => render_json(&report, deltas.as_deref()),
    };
    let _ = write!(out, "{text}");
    if options.format == Format::Json {
        let _ = writeln!(out);
    }
    let mut flagged = false;
    if let Err(e) = report.ensure_consistent() {
        let _ = writeln!(err, "flagged: {e}");
        flagged = true;
    }
    if !report.integral {
        let _ = writeln!(err, "flagged: the multiplicities are not all integers");
        flagged = true;
    }
    for d in deltas.iter().flatten().filter(|d| !d.is_zero()) {
        let _ = writeln!(err, "flagged: the {} closed form disagrees with the engine on {}", d.form, d.subject);
        flagged = true;
    }
    if flagged {
        EXIT_FLAGGED
    } else {
        EXIT_OK
    }
}

pub fn check(path: &Path, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let Some(source) = read(path, err) else {
        return EXIT_INVALID;
    };
    match parse_scenario(&source) {
        Ok(s) => {
            let _ = writeln!(
                out,
                "ok: group of order {}, {} irreducibles, {} strata",
                s.group.order(),
                s.table.len(),
                s.strata.len()
            );
            EXIT_OK
        }
        Err(e) => report_error(&path.display().to_string(), &e, err),
    }
}

pub fn example(name: &str, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match example_source(name) {
        Ok(source) => {
            let _ = write!(out, "{source}");
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INVALID
        }
    }
}
