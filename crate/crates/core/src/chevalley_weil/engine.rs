use crate::cyclotomic::{rational, Cyclotomic, Rational};
use crate::ramification::{gamma, local_terms, StratumDim};
use crate::repring::{CharacterTable, ClassFunction};
use crate::{Error, Result};

use super::lefschetz::lefschetz_rhs;
use super::Scenario;

/// One conjugacy class of the trace table.
#[derive(Clone, Debug, PartialEq)]
pub struct TraceRow {
    pub class: usize,
    pub representative: usize,
    /// `Tr(g; χ_G)` from the assembled module.
    pub formula: Cyclotomic,
    /// The fixed-point side of the holomorphic Lefschetz formula.
    pub lefschetz: Cyclotomic,
    pub matches: bool,
    /// Traces of genuine virtual modules are algebraic integers; a
    /// non-integral trace means the fixed-point data is incomplete or wrong.
    pub algebraic_integer: bool,
    pub warnings: Vec<String>,
}

/// The assembled `χ_G(X, E)` with everything needed to audit it.
#[derive(Clone, Debug)]
pub struct Report {
    pub chi_g: ClassFunction,
    pub global_euler: Rational,
    pub table: CharacterTable,
    pub multiplicities: Vec<Rational>,
    pub integral: bool,
    pub per_stratum_gamma: Vec<(String, ClassFunction)>,
    pub trace_table: Vec<TraceRow>,
}

impl TraceRow {
    pub fn ok(&self) -> bool {
        self.matches && self.algebraic_integer
    }
}

impl Report {
    /// Builds a report, recomputing `χ_G = χ/|G|·C[G] + Σ_Z Γ_Z` from the
    /// parts and refusing a mismatch.
    pub fn new(
        chi_g: ClassFunction,
        global_euler: Rational,
        table: CharacterTable,
        per_stratum_gamma: Vec<(String, ClassFunction)>,
        trace_table: Vec<TraceRow>,
    ) -> Result<Self> {
        let recomputed = assemble(&chi_g, &global_euler, &per_stratum_gamma)?;
        if recomputed != chi_g {
            return Err(Error::CrossCheckFailed(format!(
                "χ_G = {chi_g} but the regular part plus the ramification modules give {recomputed}"
            )));
        }
        let decomposition = table.decompose(&chi_g)?;
        Ok(Report {
            chi_g,
            global_euler,
            table,
            multiplicities: decomposition.multiplicities,
            integral: decomposition.integral,
            per_stratum_gamma,
            trace_table,
        })
    }

    pub fn trace_ok(&self) -> bool {
        self.trace_table.iter().all(TraceRow::ok)
    }

    /// Whether the trace check or the integrality check failed.
    pub fn is_flagged(&self) -> bool {
        !self.trace_ok() || !self.integral
    }

    /// `Err(InconsistentTrace)` listing the failing classes, if any.
    pub fn ensure_consistent(&self) -> Result<()> {
        let bad: Vec<usize> = self
            .trace_table
            .iter()
            .filter(|r| !r.ok())
            .map(|r| r.class)
            .collect();
        if bad.is_empty() {
            Ok(())
        } else {
            Err(Error::InconsistentTrace(bad))
        }
    }

    pub fn gamma_of(&self, id: &str) -> Option<&ClassFunction> {
        self.per_stratum_gamma
            .iter()
            .find(|(name, _)| name == id)
            .map(|(_, g)| g)
    }
}

fn assemble(
    like: &ClassFunction,
    euler: &Rational,
    gammas: &[(String, ClassFunction)],
) -> Result<ClassFunction> {
    let group = like.group();
    let mut acc = ClassFunction::regular(group).scale(&(euler / rational(group.order() as i64, 1)));
    for (_, g) in gammas {
        acc = acc.checked_add(g)?;
    }
    Ok(acc)
}

fn gammas(s: &Scenario) -> Result<Vec<(String, ClassFunction)>> {
    s.strata
        .iter()
        .map(|z| Ok((z.id.clone(), gamma(z)?)))
        .collect()
}

/// `χ_G(X, E)` alone, without the report.
pub fn equivariant_euler(s: &Scenario) -> Result<ClassFunction> {
    s.validate()?;
    assemble(&ClassFunction::zero(&s.group), &s.global_euler, &gammas(s)?)
}

/// `(Tr(g; χ_G), fixed-point side)` for one element `g`.
pub fn lefschetz_trace_check(s: &Scenario, g: usize) -> Result<(Cyclotomic, Cyclotomic)> {
    if g >= s.group.order() {
        return Err(Error::invalid(format!("element {g} is not in a group of order {}", s.group.order())));
    }
    let chi = equivariant_euler(s)?;
    Ok((chi.at(g).clone(), lefschetz_rhs(s, g)?.0))
}

fn trace_table(s: &Scenario, chi: &ClassFunction) -> Result<Vec<TraceRow>> {
    let group = &s.group;
    (0..group.num_classes())
        .map(|class| {
            let g = group.class_representative(class);
            let formula = chi.value_of_class(class).clone();
            let (lefschetz, components) = lefschetz_rhs(s, g)?;
            let mut warnings = Vec::new();
            if g != group.identity() && components == 0 && !formula.is_zero() {
                warnings.push(format!(
                    "MissingStratum: no stratum is a component of the fixed locus of element {g}, yet the trace is {formula}"
                ));
            }
            let algebraic_integer = formula.is_algebraic_integer();
            if !algebraic_integer {
                warnings.push(format!("the trace {formula} of element {g} is not an algebraic integer"));
            }
            Ok(TraceRow {
                class,
                representative: g,
                matches: formula == lefschetz,
                algebraic_integer,
                formula,
                lefschetz,
                warnings,
            })
        })
        .collect()
}

/// Assembles `χ_G(X, E) = χ(X, E)/|G| · C[G] + Σ_Z Γ(E)_Z`, decomposes it
/// against the character table and fills the trace table.
///
/// A failed trace check does not make this an error: the report comes back
/// flagged and [`Report::ensure_consistent`] names the failing classes.
pub fn chi_g(s: &Scenario) -> Result<Report> {
    s.validate()?;
    let gammas = gammas(s)?;
    let chi = assemble(&ClassFunction::zero(&s.group), &s.global_euler, &gammas)?;
    let rows = trace_table(s, &chi)?;
    Report::new(chi, s.global_euler.clone(), s.table.clone(), gammas, rows)
}

/// Multiplicity of every irreducible `M` recomputed stratum by stratum:
/// `dim M · χ/|G| + Σ_Z Σ_{H∈H_Z} (|H|/|G|) ⟨θ_H ∫ ch td_H, Res_H M⟩_H`.
pub fn multiplicities_by_stratum(s: &Scenario) -> Result<Vec<Rational>> {
    s.validate()?;
    let group = &s.group;
    let order = rational(group.order() as i64, 1);
    let mut terms = Vec::new();
    for z in &s.strata {
        if z.dim == StratumDim::Ambient {
            terms.push(None);
        } else {
            terms.push(Some(local_terms(z)?));
        }
    }
    let mut out = Vec::with_capacity(s.table.len());
    for (name, m) in s.table.names().iter().zip(s.table.irreducibles()) {
        let dim = m.degree().to_rational()?;
        let mut acc = Cyclotomic::from_rational(dim * &s.global_euler / &order);
        for (z, local) in s.strata.iter().zip(&terms) {
            match local {
                Some(local) => {
                    for (h, term) in local {
                        let ip = term.inner_product(&m.restrict(h)?)?;
                        acc = acc.checked_add(&ip.scale(&rational(h.order() as i64, group.order() as i64)))?;
                    }
                }
                None => acc = acc.checked_add(&gamma(z)?.inner_product(m)?)?,
            }
        }
        out.push(acc.to_rational().map_err(|_| Error::NotRationalMultiplicity {
            irreducible: name.clone(),
            value: acc.to_string(),
        })?);
    }
    Ok(out)
}
