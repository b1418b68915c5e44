use crate::ramification::{gamma_curve, gamma_cyclic, gamma_point, StratumDim};
use crate::repring::ClassFunction;
use crate::{Error, Result};

use super::{preset_closed_form, z2n_surface, Report, Scenario};

/// A closed form compared with the general engine: `delta = closed − engine`.
#[derive(Clone, Debug)]
pub struct ClosedFormDelta {
    /// A stratum id, or `"χ_G"` for whole-scenario formulas.
    pub subject: String,
    pub form: &'static str,
    pub delta: ClassFunction,
}

impl ClosedFormDelta {
    pub fn is_zero(&self) -> bool {
        self.delta.is_zero()
    }
}

/// `Ok(None)` when the closed form's hypotheses do not hold.
fn applicable<T>(value: Result<T>) -> Result<Option<T>> {
    match value {
        Ok(v) => Ok(Some(v)),
        Err(Error::HypothesisViolation(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Every closed form that applies to the scenario, against the engine
/// values recorded in `report`.
pub fn closed_form_deltas(s: &Scenario, report: &Report) -> Result<Vec<ClosedFormDelta>> {
    let mut out = Vec::new();
    for z in &s.strata {
        let engine = report
            .gamma_of(&z.id)
            .ok_or_else(|| Error::invalid(format!("the report has no module for {}", z.id)))?;
        let mut forms: Vec<(&'static str, Result<ClassFunction>)> = Vec::new();
        match z.dim {
            StratumDim::Point => forms.push(("point", gamma_point(z))),
            StratumDim::Curve => forms.push(("curve", gamma_curve(z))),
            StratumDim::Ambient => {}
        }
        if z.dim != StratumDim::Ambient {
            forms.push(("cyclic", gamma_cyclic(z)));
        }
        for (form, value) in forms {
            if let Some(closed) = applicable(value)? {
                out.push(ClosedFormDelta { subject: z.id.clone(), form, delta: closed.checked_sub(engine)? });
            }
        }
    }
    let whole = [
        ("z2n", applicable(z2n_surface(s))?),
        ("preset", applicable(preset_closed_form(s))?.flatten()),
    ];
    for (form, closed) in whole {
        if let Some(closed) = closed {
            out.push(ClosedFormDelta { subject: "χ_G".into(), form, delta: closed.checked_sub(&report.chi_g)? });
        }
    }
    Ok(out)
}
