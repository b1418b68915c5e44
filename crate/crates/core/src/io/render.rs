//! Reports as text or JSON.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::chevalley_weil::{ClosedFormDelta, Report};
use crate::cyclotomic::{parse_rational, Cyclotomic, Rational};
use crate::repring::ClassFunction;
use crate::Result;

/// What to include besides `χ_G` and the multiplicities.
#[derive(Clone, Copy, Debug, Default)]
pub struct RenderOptions {
    pub trace_table: bool,
}

fn class_values(chi: &ClassFunction) -> String {
    chi.values().iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

/// `"trivial: 1, sign: 0"`, in character-table order.
pub fn multiplicity_line(report: &Report) -> String {
    report
        .table
        .names()
        .iter()
        .zip(&report.multiplicities)
        .map(|(name, m)| format!("{name}: {m}"))
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn render_text(report: &Report, deltas: Option<&[ClosedFormDelta]>, options: RenderOptions) -> String {
    let group = report.chi_g.group();
    let mut out = String::new();
    let classes: Vec<String> = group
        .conjugacy_classes()
        .iter()
        .map(|c| format!("{{{}}}", c.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")))
        .collect();
    let _ = writeln!(out, "group order: {}", group.order());
    let _ = writeln!(out, "classes: {}", classes.join(" "));
    let _ = writeln!(out, "χ(X, E): {}", report.global_euler);
    let _ = writeln!(out, "χ_G by class: ({})", class_values(&report.chi_g));
    let _ = writeln!(out, "multiplicities: {}", multiplicity_line(report));
    let _ = writeln!(out, "integral: {}", if report.integral { "yes" } else { "NO" });
    if !report.per_stratum_gamma.is_empty() {
        let _ = writeln!(out, "ramification modules:");
        for (id, gamma) in &report.per_stratum_gamma {
            let _ = writeln!(out, "  {id}: ({})", class_values(gamma));
        }
    }
    if options.trace_table {
        let _ = writeln!(out, "trace table:");
        for row in &report.trace_table {
            let status = if !row.matches {
                "MISMATCH"
            } else if !row.algebraic_integer {
                "NON-INTEGRAL"
            } else {
                "ok"
            };
            let _ = writeln!(
                out,
                "  class {} (g = {}): trace {} | fixed points {} | {status}",
                row.class, row.representative, row.formula, row.lefschetz
            );
            for w in &row.warnings {
                let _ = writeln!(out, "    warning: {w}");
            }
        }
    } else {
        for row in report.trace_table.iter().filter(|r| !r.ok()) {
            let _ = writeln!(out, "trace check fails at class {} (g = {})", row.class, row.representative);
        }
    }
    if let Some(deltas) = deltas {
        let _ = writeln!(out, "closed forms (closed form minus engine):");
        if deltas.is_empty() {
            let _ = writeln!(out, "  none applicable");
        }
        for d in deltas {
            let tag = if d.is_zero() { "zero" } else { "NONZERO" };
            let _ = writeln!(out, "  {} [{}]: ({}) {tag}", d.subject, d.form, class_values(&d.delta));
        }
    }
    let _ = writeln!(out, "legend: values are listed class by class; ζN^k = exp(2πik/N), exact.");
    out
}

/// The machine-readable report. Rationals are `"p/q"` strings and class
/// values are `[N, ["c0", "c1", …]]` coordinates in the power basis of `Q(ζ_N)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JsonReport {
    pub classes: Vec<Vec<usize>>,
    pub global_euler: String,
    #[serde(rename = "chi_G")]
    pub chi_g: Vec<Cyclotomic>,
    pub multiplicities: Vec<JsonMultiplicity>,
    pub integral: bool,
    pub trace_ok: bool,
    pub gammas: Vec<JsonGamma>,
    pub trace_table: Vec<JsonTraceRow>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closed_form_deltas: Option<Vec<JsonDelta>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JsonMultiplicity {
    pub irreducible: String,
    pub multiplicity: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JsonGamma {
    pub stratum: String,
    pub values: Vec<Cyclotomic>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JsonTraceRow {
    pub class: usize,
    pub representative: usize,
    pub formula: Cyclotomic,
    pub lefschetz: Cyclotomic,
    pub matches: bool,
    pub algebraic_integer: bool,
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JsonDelta {
    pub subject: String,
    pub form: String,
    pub delta: Vec<Cyclotomic>,
    pub zero: bool,
}

impl JsonReport {
    pub fn new(report: &Report, deltas: Option<&[ClosedFormDelta]>) -> Self {
        JsonReport {
            classes: report.chi_g.group().conjugacy_classes().to_vec(),
            global_euler: report.global_euler.to_string(),
            chi_g: report.chi_g.values().to_vec(),
            multiplicities: report
                .table
                .names()
                .iter()
                .zip(&report.multiplicities)
                .map(|(name, m)| JsonMultiplicity { irreducible: name.clone(), multiplicity: m.to_string() })
                .collect(),
            integral: report.integral,
            trace_ok: report.trace_ok(),
            gammas: report
                .per_stratum_gamma
                .iter()
                .map(|(id, g)| JsonGamma { stratum: id.clone(), values: g.values().to_vec() })
                .collect(),
            trace_table: report
                .trace_table
                .iter()
                .map(|r| JsonTraceRow {
                    class: r.class,
                    representative: r.representative,
                    formula: r.formula.clone(),
                    lefschetz: r.lefschetz.clone(),
                    matches: r.matches,
                    algebraic_integer: r.algebraic_integer,
                    warnings: r.warnings.clone(),
                })
                .collect(),
            closed_form_deltas: deltas.map(|ds| {
                ds.iter()
                    .map(|d| JsonDelta {
                        subject: d.subject.clone(),
                        form: d.form.to_string(),
                        delta: d.delta.values().to_vec(),
                        zero: d.is_zero(),
                    })
                    .collect()
            }),
        }
    }

    /// The multiplicities as exact rationals, in table order.
    pub fn multiplicities(&self) -> Result<Vec<(String, Rational)>> {
        self.multiplicities
            .iter()
            .map(|m| Ok((m.irreducible.clone(), parse_rational(&m.multiplicity)?)))
            .collect()
    }
}

pub fn render_json(report: &Report, deltas: Option<&[ClosedFormDelta]>) -> String {
    serde_json::to_string_pretty(&JsonReport::new(report, deltas)).expect("reports always serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley_weil::chi_g;
    use crate::io::example;

    #[test]
    fn text_report_lists_multiplicities() {
        let report = chi_g(&example("p1_antipode").unwrap()).unwrap();
        let text = render_text(&report, None, RenderOptions { trace_table: true });
        assert!(text.contains("multiplicities: trivial: 1, sign: 0"), "{text}");
        assert!(text.contains("| ok"));
    }

    #[test]
    fn json_round_trip_keeps_multiplicities() {
        let report = chi_g(&example("z4_curve").unwrap()).unwrap();
        let parsed: JsonReport = serde_json::from_str(&render_json(&report, None)).unwrap();
        let ms: Vec<Rational> = parsed.multiplicities().unwrap().into_iter().map(|(_, m)| m).collect();
        assert_eq!(ms, report.multiplicities);
        assert_eq!(parsed.chi_g, report.chi_g.values());
    }
}
